import numpy as np

from tree_recourse.data import DimensionMismatchError


__all__ = (
    'TreeNode', 'Leaf', 'Internal', 'route', 'iter_preorder',
    'map_predictions'
)


class TreeNode:
    is_leaf = False

    def __init__(self, fraction, count):
        self._fraction = float(fraction)
        self._count = int(count)

    @property
    def fraction(self):
        """
        The fraction of the training rows that reach the node.
        """
        return self._fraction

    @property
    def count(self):
        return self._count

    @classmethod
    def from_dict(cls, data):
        if 'prediction' in data:
            return Leaf(
                prediction=data['prediction'],
                fraction=data.get('fraction', 0.0),
                count=data.get('count', 0)
            )
        return Internal(
            split_dim=data['split_dim'],
            threshold=data['threshold'],
            left=cls.from_dict(data['left']),
            right=cls.from_dict(data['right']),
            fraction=data.get('fraction', 0.0),
            count=data.get('count', 0)
        )


class Leaf(TreeNode):
    is_leaf = True

    def __init__(self, prediction, fraction, count):
        super().__init__(fraction, count)
        self._prediction = prediction

    def __repr__(self):
        return f"<Leaf prediction={self._prediction} fraction={self.fraction}>"

    @property
    def prediction(self):
        return self._prediction

    @property
    def depth(self):
        return 0

    @property
    def leaf_count(self):
        return 1

    def to_dict(self):
        prediction = self._prediction
        if isinstance(prediction, (np.floating, np.integer)):
            prediction = prediction.item()
        return {
            'prediction': prediction,
            'fraction': self.fraction,
            'count': self.count
        }


class Internal(TreeNode):
    """
    A split node.  Inputs with x[split_dim] <= threshold go left, the others
    go right.
    """
    def __init__(self, split_dim, threshold, left, right, fraction, count):
        super().__init__(fraction, count)
        self._split_dim = int(split_dim)
        self._threshold = float(threshold)
        self._left = left
        self._right = right

    def __repr__(self):
        return (
            f"<Internal x{self._split_dim} <= {self._threshold} "
            f"fraction={self.fraction}>"
        )

    @property
    def split_dim(self):
        return self._split_dim

    @property
    def threshold(self):
        return self._threshold

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    @property
    def depth(self):
        return 1 + max(self._left.depth, self._right.depth)

    @property
    def leaf_count(self):
        return self._left.leaf_count + self._right.leaf_count

    def child(self, x):
        if x[self._split_dim] <= self._threshold:
            return self._left
        return self._right

    def to_dict(self):
        return {
            'split_dim': self._split_dim,
            'threshold': self._threshold,
            'fraction': self.fraction,
            'count': self.count,
            'left': self._left.to_dict(),
            'right': self._right.to_dict(),
        }


def route(node, x, D=None):
    """
    Routes the input down the tree and returns the leaf it lands in.  A value
    equal to a threshold goes left.
    """
    x = np.asarray(x, dtype=float)
    if D is not None and x.shape[-1] != D:
        raise DimensionMismatchError(expected=D, received=x.shape[-1])
    while not node.is_leaf:
        node = node.child(x)
    return node


def iter_preorder(node):
    """
    Yields every node of the tree depth first, a node before its left subtree
    and its left subtree before its right one.
    """
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        if not current.is_leaf:
            stack.append(current.right)
            stack.append(current.left)


def map_predictions(node, func):
    """
    Returns a copy of the tree with `func` applied to every leaf prediction.
    """
    order = list(iter_preorder(node))
    copies = {}
    for current in reversed(order):
        if current.is_leaf:
            copies[id(current)] = Leaf(
                prediction=func(current.prediction),
                fraction=current.fraction,
                count=current.count
            )
        else:
            copies[id(current)] = Internal(
                split_dim=current.split_dim,
                threshold=current.threshold,
                left=copies[id(current.left)],
                right=copies[id(current.right)],
                fraction=current.fraction,
                count=current.count
            )
    return copies[id(node)]
