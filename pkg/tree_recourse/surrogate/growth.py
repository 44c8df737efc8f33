import math

import numpy as np

from tree_recourse import exceptions
from tree_recourse.data import EmptyDataError
from tree_recourse.models import ModelKind

from .tree import Leaf, Internal


__all__ = ('MIN_GAIN', 'TreeGrower', 'grow_tree', 'min_leaf_size')


# Impurity differences at or below this value are treated as ties.
MIN_GAIN = 1e-12


def min_leaf_size(rho, N):
    return max(1, int(math.ceil(rho * N - MIN_GAIN)))


def gini(counts, n):
    p = counts / n[:, np.newaxis]
    return 1.0 - np.sum(p ** 2, axis=1)


def variance(sums, squares, n):
    mean = sums / n
    return np.maximum(squares / n - mean ** 2, 0.0)


class TreeGrower:
    """
    Greedy CART growth, Gini impurity for classifiers and variance for
    regressors.  Each node takes the split minimizing the weighted impurity
    of its children; ties go to the lowest dimension, then to the lowest
    threshold.

    A node becomes a leaf when it is pure, when every candidate split would
    leave a child with fewer than `min_leaf` rows, or when no candidate split
    reduces the impurity.  When growing to purity, splits that do not reduce
    the impurity are allowed, so that prototypes that cannot be separated
    greedily are still separated.

    Parameters:
    ----------
    rows: :obj:`numpy.ndarray`
        The (N, D) training inputs.

    targets: :obj:`numpy.ndarray`
        Integer label codes for classifiers, real outputs for regressors.

    kind: :obj:`ModelKind`

    min_leaf: :obj:`int`
        The minimum number of rows in every node.

    labels: :obj:`list` (optional)
        The labels the classifier codes refer to.  Leaf predictions are drawn
        from this list.

    threshold_whitelist: :obj:`dict` (optional)
        Maps a dimension to the only thresholds it may be split at.  When
        provided, dimensions absent from the mapping are never split.

    grow_to_purity: :obj:`bool` (optional)
        Default: False

    max_features: :obj:`int` (optional)
        When provided, each node only considers a seeded random subset of
        this many dimensions.

        Default: None
    """
    def __init__(self, rows, targets, kind, min_leaf, labels=None,
            threshold_whitelist=None, grow_to_purity=False, max_features=None,
            seed=0):
        self._rows = np.asarray(rows, dtype=float)
        self._kind = kind
        self._min_leaf = int(min_leaf)
        self._grow_to_purity = grow_to_purity
        self._max_features = max_features
        self._rng = np.random.default_rng(seed)
        self._whitelist = None
        if threshold_whitelist is not None:
            self._whitelist = {
                int(d): np.array(sorted(set([float(t) for t in ts])))
                for d, ts in threshold_whitelist.items()
            }
            for d, ts in self._whitelist.items():
                if not np.all(np.isfinite(ts)):
                    raise exceptions.InvalidParamError(
                        param='threshold_whitelist',
                        value=d,
                        message=f"The thresholds of dimension {d} must be "
                        "finite."
                    )
        if kind.is_classifier:
            self._targets = np.asarray(targets, dtype=int)
            self._labels = list(labels)
            self._onehot = np.eye(len(self._labels))[self._targets]
        else:
            self._targets = np.asarray(targets, dtype=float)
            self._labels = None

    @property
    def N(self):
        return self._rows.shape[0]

    @property
    def D(self):
        return self._rows.shape[1]

    def candidate_dims(self):
        dims = list(range(self.D))
        if self._whitelist is not None:
            dims = [d for d in dims if len(self._whitelist.get(d, [])) != 0]
        if self._max_features is not None \
                and self._max_features < len(dims):
            dims = sorted(self._rng.choice(
                dims, size=self._max_features, replace=False).tolist())
        return dims

    def thresholds(self, d, sorted_values):
        if self._whitelist is not None:
            ts = self._whitelist[d]
            return ts[(ts >= sorted_values[0]) & (ts < sorted_values[-1])]
        distinct = np.unique(sorted_values)
        return (distinct[:-1] + distinct[1:]) / 2.0

    def is_pure(self, idx):
        targets = self._targets[idx]
        return bool(np.all(targets == targets[0]))

    def impurity(self, idx):
        n = np.array([float(len(idx))])
        if self._kind.is_classifier:
            return float(gini(
                self._onehot[idx].sum(axis=0)[np.newaxis, :], n)[0])
        y = self._targets[idx]
        return float(variance(
            np.array([y.sum()]), np.array([(y ** 2).sum()]), n)[0])

    def split_scores(self, idx, order, n_left):
        n = float(len(idx))
        n_right = n - n_left
        if self._kind.is_classifier:
            onehot = self._onehot[idx][order]
            cumulative = np.vstack([
                np.zeros((1, onehot.shape[1])),
                np.cumsum(onehot, axis=0)
            ])
            left = cumulative[n_left]
            right = cumulative[-1] - left
            impurity_left = gini(left, n_left.astype(float))
            impurity_right = gini(right, n_right)
        else:
            y = self._targets[idx][order]
            sums = np.concatenate([[0.0], np.cumsum(y)])
            squares = np.concatenate([[0.0], np.cumsum(y ** 2)])
            impurity_left = variance(
                sums[n_left], squares[n_left], n_left.astype(float))
            impurity_right = variance(
                sums[-1] - sums[n_left],
                squares[-1] - squares[n_left],
                n_right
            )
        return (n_left * impurity_left + n_right * impurity_right) / n

    def best_split(self, idx):
        best = None
        for d in self.candidate_dims():
            values = self._rows[idx, d]
            order = np.argsort(values, kind='stable')
            sorted_values = values[order]
            thresholds = self.thresholds(d, sorted_values)
            if len(thresholds) == 0:
                continue
            n_left = np.searchsorted(sorted_values, thresholds, side='right')
            allowed = (n_left >= self._min_leaf) \
                & (len(idx) - n_left >= self._min_leaf)
            if not np.any(allowed):
                continue
            thresholds, n_left = thresholds[allowed], n_left[allowed]
            scores = self.split_scores(idx, order, n_left)
            i = int(np.flatnonzero(scores <= scores.min() + MIN_GAIN)[0])
            if best is None or scores[i] < best[0] - MIN_GAIN:
                best = (float(scores[i]), d, float(thresholds[i]))
        if best is None:
            return None
        gain = self.impurity(idx) - best[0]
        if gain > MIN_GAIN or (self._grow_to_purity and gain > -MIN_GAIN):
            return best
        return None

    def leaf(self, idx):
        kwargs = {'fraction': len(idx) / float(self.N), 'count': len(idx)}
        if self._kind.is_classifier:
            counts = np.bincount(
                self._targets[idx], minlength=len(self._labels))
            # The first maximum is the lowest label in sorted order.
            return Leaf(prediction=self._labels[int(np.argmax(counts))],
                **kwargs)
        return Leaf(prediction=float(np.mean(self._targets[idx])), **kwargs)

    def grow(self):
        plan = {}
        stack = [(0, np.arange(self.N))]
        next_id = 1
        while stack:
            node_id, idx = stack.pop()
            split = None
            if not self.is_pure(idx):
                split = self.best_split(idx)
            if split is None:
                plan[node_id] = (idx, None)
                continue
            _, d, threshold = split
            goes_left = self._rows[idx, d] <= threshold
            plan[node_id] = (idx, (d, threshold, next_id, next_id + 1))
            stack.append((next_id + 1, idx[~goes_left]))
            stack.append((next_id, idx[goes_left]))
            next_id += 2

        # Children always have larger ids than their parent.
        built = {}
        for node_id in sorted(plan, reverse=True):
            idx, split = plan[node_id]
            if split is None:
                built[node_id] = self.leaf(idx)
            else:
                d, threshold, left_id, right_id = split
                built[node_id] = Internal(
                    split_dim=d,
                    threshold=threshold,
                    left=built.pop(left_id),
                    right=built.pop(right_id),
                    fraction=len(idx) / float(self.N),
                    count=len(idx)
                )
        return built[0]


def grow_tree(labeled, rho, kind=None, seed=0, threshold_whitelist=None,
        grow_to_purity=False, max_features=None):
    """
    Grows a single CART tree over a :obj:`LabeledDataset`.

    Parameters:
    ----------
    rho: :obj:`float`
        Every node contains at least ceil(rho * N) rows.  Ignored when growing
        to purity.

    kind: :obj:`ModelKind` or :obj:`str` (optional)
        Defaults to the kind of the labeled dataset.

    threshold_whitelist: :obj:`dict` (optional)
        Maps a dimension to the only thresholds it may be split at.

    grow_to_purity: :obj:`bool` (optional)
        Default: False
    """
    if labeled.N == 0:
        raise EmptyDataError()
    kind = labeled.kind if kind is None else ModelKind.for_slug(kind)
    if grow_to_purity:
        min_leaf = 1
    elif rho is None or not 0.0 < rho <= 1.0:
        raise exceptions.InvalidParamError(
            param='rho',
            value=rho,
            message="The minimum leaf fraction must be in (0, 1]."
        )
    else:
        min_leaf = min_leaf_size(rho, labeled.N)
    if kind.is_classifier:
        grower = TreeGrower(
            labeled.rows, labeled.label_codes, kind, min_leaf,
            labels=labeled.labels,
            threshold_whitelist=threshold_whitelist,
            grow_to_purity=grow_to_purity,
            max_features=max_features,
            seed=seed
        )
    else:
        grower = TreeGrower(
            labeled.rows, labeled.outputs, kind, min_leaf,
            threshold_whitelist=threshold_whitelist,
            grow_to_purity=grow_to_purity,
            max_features=max_features,
            seed=seed
        )
    return grower.grow()
