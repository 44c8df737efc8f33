import numpy as np

from tree_recourse import surrogate, utils
from tree_recourse.data import Dataset, LabeledDataset, DimensionMismatchError
from tree_recourse.models import ModelKinds

from .grid import GridAxes


__all__ = ('MetaruleTree', 'grow_metarule_tree')


class MetaruleTree:
    """
    A classification tree over prototypes whose leaves each carry the index
    of a maximal rule.  The hyperrectangle of every leaf is a metarule: every
    input it contains shares the leaf's rule as its optimal rule.

    Leaves are numbered in depth first preorder.
    """
    def __init__(self, root, D):
        self._root = root
        self._D = D
        self._leaves = surrogate.leaf_rules(root, D)
        self._leaf_index = {
            id(leaf): j for j, (leaf, _) in enumerate(self._leaves)}

    def __repr__(self):
        return f"<MetaruleTree leaves={len(self._leaves)}>"

    @property
    def root(self):
        return self._root

    @property
    def D(self):
        return self._D

    @property
    def leaf_count(self):
        return len(self._leaves)

    @property
    def leaves(self):
        """
        The `(leaf, metarule)` pairs of the tree.
        """
        return list(self._leaves)

    @property
    def metarules(self):
        return [metarule for _, metarule in self._leaves]

    def leaf_rule_index(self, j):
        return int(self._leaves[j][0].prediction)

    def lookup(self, x):
        """
        Returns the index of the leaf containing the input.
        """
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self._D:
            raise DimensionMismatchError(expected=self._D, received=x.shape[-1])
        return self._leaf_index[id(surrogate.route(self._root, x))]

    def thresholds(self):
        """
        Maps every split dimension to the thresholds it is split at.
        """
        thresholds = {}
        for node in surrogate.iter_preorder(self._root):
            if not node.is_leaf:
                thresholds.setdefault(node.split_dim, set()).add(
                    node.threshold)
        return thresholds

    def to_dict(self):
        return self._root.to_dict()

    @classmethod
    def from_dict(cls, data, D):
        root = surrogate.map_predictions(
            surrogate.TreeNode.from_dict(data), int)
        return cls(root, D)


def grow_metarule_tree(cells, maximal, schema, axes=None):
    """
    Grows a tree to purity over the prototypes of the labeled cells, only
    splitting at the finite bounds of the maximal rules so that every leaf is
    a union of cells sharing one optimal rule.
    """
    axes = axes or GridAxes(maximal, schema)
    prototypes = Dataset(schema, [cell.prototype for cell in cells])
    labeled = LabeledDataset(
        prototypes,
        [cell.optimal_rule for cell in cells],
        ModelKinds.CLASSIFIER
    )
    root = surrogate.grow_tree(
        labeled,
        rho=None,
        kind=ModelKinds.CLASSIFIER,
        threshold_whitelist=axes.whitelist(),
        grow_to_purity=True
    )
    tree = MetaruleTree(surrogate.map_predictions(root, int), schema.D)
    utils.stdout.log(
        f"Aggregated {len(cells)} cells into {tree.leaf_count} metarules.")
    return tree
