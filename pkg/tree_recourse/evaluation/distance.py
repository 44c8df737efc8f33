import numpy as np

from tree_recourse import rules


__all__ = ('closest_point', 'counterfactual_distance')


def _nearest_category(current, allowed):
    # Ties go to the lower index.
    return min(allowed, key=lambda c: (abs(c - current), c))


def closest_point(x, rule, schema):
    """
    Returns the point of the rule closest to x.  Numerical values are clamped
    into the closure of (l, u], a violated open lower bound moving to the next
    representable value above l.  A violated categorical group moves to the
    hot category of the rule, or for a cold set to the nearest allowed
    category by index.
    """
    x = schema.check_dimension(x)
    point = x.copy()
    for d in schema.numerical_dims:
        if x[d] <= rule.lower[d]:
            point[d] = np.nextafter(rule.lower[d], np.inf)
        elif x[d] > rule.upper[d]:
            point[d] = rule.upper[d]
    for feature in schema.categorical_groups:
        idx = list(feature.indices)
        values = x[idx]
        inside = (values > rule.lower[idx]) & (values <= rule.upper[idx])
        if np.all(inside):
            continue
        form = rules.group_form(rule, feature)
        if form.hot is not None:
            category = form.hot - idx[0]
        else:
            cold = [d - idx[0] for d in form.cold]
            allowed = [c for c in range(feature.width) if c not in cold]
            category = _nearest_category(int(np.argmax(values)), allowed)
        point[idx] = 0.0
        point[idx[0] + category] = 1.0
    return point


def counterfactual_distance(x, rule, cdf, schema):
    """
    The total percentile shift between x and the closest point of the rule,
    summed over every dimension.  Categorical dimensions contribute the
    absolute change of their 0/1 values.

    Parameters:
    ----------
    x: :obj:`numpy.ndarray`
        The encoded input.

    rule: :obj:`Rule`

    cdf: :obj:`PercentileTable`
        The empirical CDFs the percentiles are read from.

    schema: :obj:`FeatureSchema`
    """
    x = schema.check_dimension(x)
    point = closest_point(x, rule, schema)
    return float(np.sum(np.abs(cdf.transform(point) - cdf.transform(x))))
