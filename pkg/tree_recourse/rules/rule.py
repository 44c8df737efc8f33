import numpy as np

from tree_recourse.data import DimensionMismatchError


__all__ = ('CATEGORICAL_BOUND', 'Rule', 'encode_bound', 'decode_bound')


# Every bound on a one-hot dimension is this exact value: a lower bound marks
# the category hot, an upper bound marks it cold.
CATEGORICAL_BOUND = 0.5


def encode_bound(value):
    value = float(value)
    if np.isinf(value):
        return "+inf" if value > 0 else "-inf"
    return value


def decode_bound(value):
    if isinstance(value, str):
        if value.strip() in ("+inf", "inf"):
            return np.inf
        elif value.strip() == "-inf":
            return -np.inf
    return float(value)


class Rule:
    """
    An axis-aligned hyperrectangle over the encoded input space.  An input
    x belongs to the rule when l_d < x_d <= u_d on every dimension d, lower
    bounds open and upper bounds closed.  Either bound may be infinite.

    Rules are immutable and hashable, two rules with identical bounds are
    equal.

    Parameters:
    ----------
    lower: :obj:`list` or :obj:`numpy.ndarray`
        D lower bounds in R or -inf.

    upper: :obj:`list` or :obj:`numpy.ndarray`
        D upper bounds in R or +inf.
    """
    def __init__(self, lower, upper):
        lower = np.array(lower, dtype=float)
        upper = np.array(upper, dtype=float)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise DimensionMismatchError(
                expected=lower.shape[-1] if lower.ndim else 0,
                received=upper.shape[-1] if upper.ndim else 0
            )
        if np.any(np.isnan(lower)) or np.any(np.isnan(upper)):
            raise ValueError("Rule bounds cannot be NaN.")
        if np.any(lower == np.inf) or np.any(upper == -np.inf):
            raise ValueError(
                "Lower bounds cannot be +inf and upper bounds cannot be -inf.")
        if np.any(upper < lower):
            raise ValueError(
                "Every upper bound must be greater than or equal to the "
                "corresponding lower bound."
            )
        lower.setflags(write=False)
        upper.setflags(write=False)
        self._lower = lower
        self._upper = upper

    @classmethod
    def universal(cls, D):
        return cls(np.full(D, -np.inf), np.full(D, np.inf))

    def __repr__(self):
        terms = []
        for d in self.finite_dims:
            terms.append(
                f"{encode_bound(self._lower[d])} < x{d} "
                f"<= {encode_bound(self._upper[d])}"
            )
        return f"<Rule {' & '.join(terms) or 'universal'}>"

    def __eq__(self, other):
        return isinstance(other, Rule) \
            and np.array_equal(self._lower, other.lower) \
            and np.array_equal(self._upper, other.upper)

    def __hash__(self):
        return hash((self._lower.tobytes(), self._upper.tobytes()))

    @property
    def D(self):
        return self._lower.shape[0]

    @property
    def lower(self):
        return self._lower

    @property
    def upper(self):
        return self._upper

    @property
    def finite_lower(self):
        return np.isfinite(self._lower)

    @property
    def finite_upper(self):
        return np.isfinite(self._upper)

    @property
    def finite_dims(self):
        """
        The dimensions constrained by at least one finite bound.
        """
        return [int(d) for d in np.flatnonzero(
            self.finite_lower | self.finite_upper)]

    def check_dimension(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.D:
            raise DimensionMismatchError(expected=self.D, received=x.shape[-1])
        return x

    def tighten(self, d, lower=None, upper=None):
        """
        Returns a new rule with the bounds of dimension `d` intersected with
        the provided ones.  The tighter bound always wins.
        """
        new_lower, new_upper = self._lower.copy(), self._upper.copy()
        if lower is not None:
            new_lower[d] = max(new_lower[d], lower)
        if upper is not None:
            new_upper[d] = min(new_upper[d], upper)
        return Rule(new_lower, new_upper)

    def to_dict(self):
        return {
            'lower': [encode_bound(v) for v in self._lower],
            'upper': [encode_bound(v) for v in self._upper],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            [decode_bound(v) for v in data['lower']],
            [decode_bound(v) for v in data['upper']]
        )
