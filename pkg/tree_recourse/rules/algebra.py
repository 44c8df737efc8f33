import numpy as np


__all__ = (
    'contains', 'contains_rows', 'changes', 'changes_rows', 'violated_dims',
    'feasibility', 'support', 'accuracy', 'is_valid', 'is_subset', 'cost',
    'complexity'
)


def contains_rows(rule, rows):
    """
    Returns a boolean mask over the rows of an (N, D) array marking the rows
    that belong to the rule.
    """
    rows = rule.check_dimension(np.atleast_2d(rows))
    return np.all((rows > rule.lower) & (rows <= rule.upper), axis=1)


def contains(rule, x):
    """
    Returns whether or not l_d < x_d <= u_d holds for every dimension d.
    """
    x = rule.check_dimension(x)
    return bool(np.all((x > rule.lower) & (x <= rule.upper)))


def violated_dims(x, rule):
    """
    The dimensions on which x must change to satisfy the rule, i.e. where
    x_d <= l_d or u_d < x_d.
    """
    x = rule.check_dimension(x)
    return [int(d) for d in np.flatnonzero(
        (x <= rule.lower) | (rule.upper < x))]


def changes(x, rule):
    x = rule.check_dimension(x)
    return int(np.count_nonzero((x <= rule.lower) | (rule.upper < x)))


def changes_rows(rows, rule):
    rows = rule.check_dimension(np.atleast_2d(rows))
    return np.count_nonzero(
        (rows <= rule.lower) | (rule.upper < rows), axis=1)


def support(rule, data):
    return int(np.count_nonzero(contains_rows(rule, data.rows)))


def feasibility(rule, data):
    """
    The fraction of the rows of the dataset that belong to the rule.
    """
    return float(np.mean(contains_rows(rule, data.rows)))


def accuracy(rule, labeled, target):
    """
    The fraction of the rows inside the rule whose output belongs to the
    target.  A rule containing no row falls back to the fraction of target
    outputs over the whole dataset.
    """
    in_target = target.mask(labeled.outputs)
    inside = contains_rows(rule, labeled.rows)
    if not np.any(inside):
        return float(np.mean(in_target))
    return float(np.mean(in_target[inside]))


def is_valid(rule, labeled, target, rho, tau):
    return feasibility(rule, labeled.data) >= rho \
        and accuracy(rule, labeled, target) >= tau


def _is_subset_bounds(lower_a, upper_a, lower_b, upper_b):
    if np.array_equal(lower_a, lower_b) and np.array_equal(upper_a, upper_b):
        return False
    return bool(np.all(lower_b <= lower_a) and np.all(upper_a <= upper_b))


def is_subset(a, b):
    """
    Returns whether or not the rule `a` is a strict subset of the rule `b`.
    """
    return _is_subset_bounds(a.lower, a.upper, b.lower, b.upper)


def cost(x, rule, data, rule_feasibility=None):
    """
    The number of changes needed to satisfy the rule minus its feasibility.
    Since feasibility lies in [0, 1], the number of changes always takes
    priority.
    """
    if rule_feasibility is None:
        rule_feasibility = feasibility(rule, data)
    return changes(x, rule) - rule_feasibility


def complexity(rule):
    """
    The number of finite terms among the lower and upper bounds.
    """
    return int(np.count_nonzero(rule.finite_lower)
        + np.count_nonzero(rule.finite_upper))
