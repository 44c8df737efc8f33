import itertools

import numpy as np

from tree_recourse import rules, utils
from tree_recourse.data import Numerical

from .exceptions import CellLimitExceededError, ImpossibleCellError


__all__ = (
    'AGGREGATE', 'GridCell', 'GridAxes', 'rule_bounds', 'grid_axes',
    'build_grid', 'make_prototype', 'make_prototypes',
    'worst_case_cell_count'
)


# The categorical variant meaning "hot among the unconstrained categories".
AGGREGATE = 'aggregate'


def rule_bounds(maximal, d):
    """
    The sorted unique bounds of the rules along dimension `d`, always
    including -inf and +inf.
    """
    values = set([-np.inf, np.inf])
    for rule in maximal:
        values.add(float(rule.lower[d]))
        values.add(float(rule.upper[d]))
    return sorted(values)


class GridAxes:
    """
    The per-feature axes of the grid: the bound list of every numerical
    feature and the cell variants of every categorical group.
    """
    def __init__(self, maximal, schema):
        self._schema = schema
        self._bounds = {}
        self._variants = {}
        self._unconstrained = {}
        for feature in schema.features:
            if isinstance(feature, Numerical):
                d = feature.indices[0]
                self._bounds[d] = rule_bounds(maximal, d)
                continue
            constrained = [d for d in feature.indices if any([
                np.isfinite(r.lower[d]) or np.isfinite(r.upper[d])
                for r in maximal
            ])]
            unconstrained = [d for d in feature.indices
                if d not in constrained]
            variants = list(constrained)
            if unconstrained:
                variants.append(AGGREGATE)
            self._variants[feature.name] = variants
            self._unconstrained[feature.name] = unconstrained

    @property
    def schema(self):
        return self._schema

    def bounds(self, d):
        return self._bounds[d]

    def variants(self, feature):
        return self._variants[feature.name]

    def unconstrained(self, feature):
        return self._unconstrained[feature.name]

    def constrained(self, feature):
        return [v for v in self._variants[feature.name] if v != AGGREGATE]

    def axis_length(self, feature):
        if isinstance(feature, Numerical):
            return len(self._bounds[feature.indices[0]]) - 1
        return len(self._variants[feature.name])

    @property
    def cell_count(self):
        count = 1
        for feature in self._schema.features:
            count *= self.axis_length(feature)
        return count

    def whitelist(self):
        """
        Maps every dimension to its finite rule bounds.
        """
        whitelist = {}
        for d in range(self._schema.D):
            feature = self._schema.feature_for_dim(d)
            if isinstance(feature, Numerical):
                finite = [b for b in self._bounds[d] if np.isfinite(b)]
            elif d in self.constrained(feature):
                finite = [rules.CATEGORICAL_BOUND]
            else:
                finite = []
            if finite:
                whitelist[d] = finite
        return whitelist


def grid_axes(maximal, schema):
    return GridAxes(maximal, schema)


def worst_case_cell_count(maximal, schema):
    """
    The cell count bound derived from the number of rules alone: every
    numerical dimension contributes at most 2M + 1 intervals and every
    categorical group at most D_c variants.
    """
    count = 1
    for feature in schema.features:
        if isinstance(feature, Numerical):
            count *= 2 * len(maximal) + 1
        else:
            count *= feature.width
    return count


class GridCell:
    """
    A cell of the partition induced by the bounds of the maximal rules.

    Parameters:
    ----------
    intervals: :obj:`tuple`
        One entry per feature, in schema order: the interval index into the
        bound list of a numerical feature, or the variant of a categorical
        group (a hot dimension or :obj:`AGGREGATE`).

    prototype: :obj:`numpy.ndarray` (optional)

    optimal_rule: :obj:`int` (optional)
        The index of the cell's optimal rule among the maximal rules.
    """
    def __init__(self, intervals, axes, prototype=None, optimal_rule=None):
        self._intervals = tuple(intervals)
        self._axes = axes
        self._prototype = prototype
        self._optimal_rule = optimal_rule

    def __repr__(self):
        return f"<GridCell {self._intervals}>"

    @property
    def intervals(self):
        return self._intervals

    @property
    def axes(self):
        return self._axes

    @property
    def prototype(self):
        return self._prototype

    @property
    def optimal_rule(self):
        return self._optimal_rule

    def with_prototype(self, prototype):
        return GridCell(self._intervals, self._axes, prototype=prototype,
            optimal_rule=self._optimal_rule)

    def with_optimal_rule(self, optimal_rule):
        return GridCell(self._intervals, self._axes,
            prototype=self._prototype, optimal_rule=int(optimal_rule))

    def as_rule(self):
        """
        The hyperrectangle of the cell.  An aggregate categorical variant is
        expressed as every constrained category being cold.
        """
        schema = self._axes.schema
        lower = np.full(schema.D, -np.inf)
        upper = np.full(schema.D, np.inf)
        for feature, interval in zip(schema.features, self._intervals):
            if isinstance(feature, Numerical):
                d = feature.indices[0]
                bounds = self._axes.bounds(d)
                lower[d], upper[d] = bounds[interval], bounds[interval + 1]
            elif interval == AGGREGATE:
                upper[self._axes.constrained(feature)] = \
                    rules.CATEGORICAL_BOUND
            else:
                lower[interval] = rules.CATEGORICAL_BOUND
        return rules.Rule(lower, upper)


def build_grid(maximal, schema, cell_limit, axes=None):
    """
    Enumerates the cells of the grid induced by the bounds of the maximal
    rules, skipping categorical combinations no one-hot input can reach.
    Raises :obj:`CellLimitExceededError` before enumerating when the cell
    count exceeds `cell_limit`.
    """
    axes = axes or GridAxes(maximal, schema)
    count = axes.cell_count
    if count > cell_limit:
        raise CellLimitExceededError(count=count, limit=cell_limit)
    utils.stdout.log(f"The grid has {count} cells.")
    ranges = []
    for feature in schema.features:
        if isinstance(feature, Numerical):
            ranges.append(range(axes.axis_length(feature)))
        else:
            ranges.append(axes.variants(feature))
    return [GridCell(intervals, axes)
        for intervals in itertools.product(*ranges)]


def _place(lower, upper, data_min, data_max):
    if np.isfinite(lower) and np.isfinite(upper):
        return (lower + upper) / 2.0
    elif np.isfinite(upper):
        if data_min >= upper:
            return upper - 1.0
        return ((data_min - 1.0) + upper) / 2.0
    elif np.isfinite(lower):
        if data_max <= lower:
            return lower + 1.0
        return (lower + (data_max + 1.0)) / 2.0
    return (data_min + data_max) / 2.0


def make_prototype(cell, schema, data, column_range=None):
    """
    Places a representative input strictly inside the cell: the midpoint of
    finite intervals, and a point anchored on the training range for
    half-infinite ones.  Categorical groups are hot at the cell's category,
    the lowest unconstrained category for the aggregate variant.
    """
    column_min, column_max = column_range or (data.column_min, data.column_max)
    prototype = np.zeros(schema.D)
    for feature, interval in zip(schema.features, cell.intervals):
        if isinstance(feature, Numerical):
            d = feature.indices[0]
            bounds = cell.axes.bounds(d)
            prototype[d] = _place(
                bounds[interval], bounds[interval + 1],
                column_min[d], column_max[d]
            )
        elif interval == AGGREGATE:
            prototype[cell.axes.unconstrained(feature)[0]] = 1.0
        else:
            prototype[interval] = 1.0
    if not rules.contains(cell.as_rule(), prototype):
        raise ImpossibleCellError(cell=cell.intervals)
    return prototype


def make_prototypes(cells, schema, data):
    """
    Returns the cells with their prototypes placed.
    """
    column_range = (data.column_min, data.column_max)
    return [cell.with_prototype(make_prototype(cell, schema, data, column_range))
        for cell in cells]
