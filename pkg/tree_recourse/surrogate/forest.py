import collections
import hashlib
import json

import numpy as np

from tree_recourse import exceptions, utils
from tree_recourse.data import EmptyDataError, canonical_label
from tree_recourse.models import ModelKind

from .exceptions import SurrogateFormatError
from .growth import grow_tree
from .tree import TreeNode, route


__all__ = ('Surrogate', 'grow_forest', 'predict')


class Surrogate:
    """
    A tree or a forest of trees grown on black-box outputs.

    Parameters:
    ----------
    trees: :obj:`list`
        The T root :obj:`TreeNode`s.

    kind: :obj:`ModelKind`

    rho: :obj:`float`
        The minimum leaf fraction the trees were grown with.

    seed: :obj:`int`
    """
    def __init__(self, trees, kind, rho=None, seed=0, max_features=None,
            D=None):
        if len(trees) == 0:
            raise exceptions.InvalidParamError(
                param='trees',
                value=0,
                message="A surrogate requires at least one tree."
            )
        self._trees = list(trees)
        self._kind = ModelKind.for_slug(kind)
        self._rho = rho
        self._seed = seed
        self._max_features = max_features
        self._D = D

    def __repr__(self):
        return f"<Surrogate T={self.T} kind={self._kind.slug}>"

    @property
    def trees(self):
        return list(self._trees)

    @property
    def D(self):
        return self._D

    @property
    def T(self):
        return len(self._trees)

    @property
    def kind(self):
        return self._kind

    @property
    def rho(self):
        return self._rho

    @property
    def seed(self):
        return self._seed

    @property
    def bootstrap(self):
        return self.T > 1

    @property
    def leaf_count(self):
        return sum([tree.leaf_count for tree in self._trees])

    def predict(self, x):
        """
        The majority vote of the trees for classifiers, ties going to the
        lowest label, and the mean prediction for regressors.
        """
        x = np.asarray(x, dtype=float)
        predictions = [route(tree, x, D=self._D).prediction
            for tree in self._trees]
        if self._kind.is_classifier:
            votes = collections.Counter(
                [canonical_label(p) for p in predictions])
            most = max(votes.values())
            return sorted([y for y, c in votes.items() if c == most])[0]
        return float(np.mean(predictions))

    def to_dict(self):
        return {
            'kind': self._kind.slug,
            'D': self._D,
            'rho': self._rho,
            'seed': self._seed,
            'max_features': self._max_features,
            'bootstrap': self.bootstrap,
            'criterion': self._kind.criterion,
            'trees': [tree.to_dict() for tree in self._trees],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(
                trees=[TreeNode.from_dict(t) for t in data['trees']],
                kind=data['kind'],
                rho=data.get('rho'),
                seed=data.get('seed', 0),
                max_features=data.get('max_features'),
                D=data.get('D')
            )
        except (KeyError, TypeError, LookupError) as e:
            raise SurrogateFormatError(detail=str(e)) from e

    @property
    def fingerprint(self):
        return hashlib.sha256(json.dumps(
            self.to_dict(), sort_keys=True).encode('utf-8')).hexdigest()


def grow_forest(labeled, T, rho, kind=None, seed=0, max_features=None,
        workers=None):
    """
    Grows the surrogate.  A single tree is grown on the full dataset, while
    each tree t of a forest is grown on an N-sized bootstrap resample drawn
    with the seed `seed + t`.
    """
    if T is None or int(T) < 1:
        raise exceptions.InvalidParamError(
            param='trees',
            value=T,
            message="The surrogate requires at least one tree."
        )
    if labeled.N == 0:
        raise EmptyDataError()
    T = int(T)
    kind = labeled.kind if kind is None else ModelKind.for_slug(kind)

    def grow(t):
        sample = labeled
        if T > 1:
            rng = np.random.default_rng(seed + t)
            sample = labeled.subset(rng.integers(0, labeled.N, labeled.N))
        return grow_tree(
            sample, rho,
            kind=kind,
            seed=seed + t,
            max_features=max_features
        )

    utils.stdout.log(
        f"Growing {T} surrogate tree(s) on {labeled.N} rows (rho={rho}).")
    trees = utils.parallel_map(grow, range(T), workers=workers)
    return Surrogate(
        trees, kind, rho=rho, seed=seed, max_features=max_features,
        D=labeled.rows.shape[1])


def predict(surrogate, x):
    return surrogate.predict(x)
