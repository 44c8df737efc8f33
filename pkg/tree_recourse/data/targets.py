import numpy as np

from tree_recourse import utils

from .dataset import canonical_label
from .exceptions import TypeMismatchError, LabelMismatchError


__all__ = (
    'TargetSpec', 'ClassSet', 'Interval', 'output_matches',
    'make_regression_target', 'target_from_dict'
)


class TargetSpec:
    """
    The set of target outputs Y*.  A target either lists class labels
    (:obj:`ClassSet`) for classifiers or is a half-line (:obj:`Interval`) for
    regressors.
    """
    variant = None

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.describe()}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(str(self.to_dict()))

    def check_kind(self, kind):
        if kind.target_variant != self.variant:
            raise LabelMismatchError(message=(
                f"A {kind.slug} model cannot be fit for a target of type "
                f"{self.variant}."
            ))

    def matches(self, y):
        raise NotImplementedError()

    def mask(self, outputs):
        """
        Returns a boolean array marking the outputs that belong to the target.
        """
        raise NotImplementedError()


class ClassSet(TargetSpec):
    variant = 'class_set'

    def __init__(self, labels):
        labels = [canonical_label(y) for y in utils.ensure_iterable(labels)]
        if len(labels) == 0:
            raise LabelMismatchError(
                message="A class target must contain at least one label.")
        self._labels = tuple(sorted(set(labels)))

    @property
    def labels(self):
        return self._labels

    def describe(self):
        return "{" + ", ".join(self._labels) + "}"

    def matches(self, y):
        if isinstance(y, (float, np.floating)) \
                and not float(y).is_integer():
            raise TypeMismatchError(value=y, target=self.describe())
        return canonical_label(y) in self._labels

    def mask(self, outputs):
        return np.isin(
            np.asarray(outputs, dtype=object),
            np.array(self._labels, dtype=object)
        )

    def to_dict(self):
        return {'variant': self.variant, 'labels': list(self._labels)}


class Interval(TargetSpec):
    """
    A half-line target: `above` is the open half-line (mu, inf) and `below`
    the closed half-line (-inf, mu].  The boundary value always belongs to the
    closed side.
    """
    variant = 'interval'
    directions = ('above', 'below')

    def __init__(self, mu, direction):
        if direction not in self.directions:
            raise LabelMismatchError(message=(
                f"The interval direction must be {' or '.join(self.directions)}"
                f", not {direction}."
            ))
        mu = float(mu)
        if not np.isfinite(mu):
            raise LabelMismatchError(
                message="The interval threshold must be finite.")
        self._mu = mu
        self._direction = direction

    @classmethod
    def above(cls, mu):
        return cls(mu, 'above')

    @classmethod
    def below(cls, mu):
        return cls(mu, 'below')

    @property
    def mu(self):
        return self._mu

    @property
    def direction(self):
        return self._direction

    @property
    def complement(self):
        return Interval(self._mu, 'below' if self._direction == 'above'
            else 'above')

    def describe(self):
        mu = utils.format_number(self._mu)
        if self._direction == 'above':
            return f"({mu}, +inf)"
        return f"(-inf, {mu}]"

    def matches(self, y):
        if isinstance(y, (bool, np.bool_)):
            raise TypeMismatchError(value=y, target=self.describe())
        try:
            y = float(y)
        except (TypeError, ValueError) as e:
            raise TypeMismatchError(value=y, target=self.describe()) from e
        if self._direction == 'above':
            return y > self._mu
        return y <= self._mu

    def mask(self, outputs):
        outputs = np.asarray(outputs, dtype=float)
        if self._direction == 'above':
            return outputs > self._mu
        return outputs <= self._mu

    def to_dict(self):
        return {
            'variant': self.variant,
            'mu': self._mu,
            'direction': self._direction
        }


def output_matches(y, target):
    """
    Returns whether or not the model output `y` belongs to the target set.

    >>> output_matches(5.0, Interval.above(5.0))
    False
    >>> output_matches(5.0, Interval.below(5.0))
    True
    """
    return target.matches(y)


def make_regression_target(labeled, x0_output):
    """
    Splits the output space at the mean model output over `labeled` and
    returns the half the instance is not in: (mu, inf) when the output is
    at most mu, (-inf, mu] otherwise.
    """
    mu = float(np.mean(np.asarray(labeled.outputs, dtype=float)))
    if float(x0_output) <= mu:
        return Interval.above(mu)
    return Interval.below(mu)


def target_from_dict(data):
    if data.get('variant') == ClassSet.variant:
        return ClassSet(data['labels'])
    elif data.get('variant') == Interval.variant:
        return Interval(data['mu'], data['direction'])
    raise LabelMismatchError(
        message=f"Unknown target variant {data.get('variant')}.")
