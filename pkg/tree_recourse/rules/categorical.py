import collections

import numpy as np

from .algebra import _is_subset_bounds
from .exceptions import MalformedRuleError, IrreparableRuleError
from .rule import CATEGORICAL_BOUND, Rule


__all__ = (
    'GroupForm', 'group_form', 'check_well_formed', 'simplify',
    'hat_upper', 'is_subset_categorical'
)


# `hot` is the hot dimension or None, `cold` the ordered cold dimensions.
GroupForm = collections.namedtuple('GroupForm', ['hot', 'cold'])


def _group_bounds(rule, feature):
    hot, cold = [], []
    for d in feature.indices:
        lower, upper = rule.lower[d], rule.upper[d]
        if lower == CATEGORICAL_BOUND and upper == np.inf:
            hot.append(d)
        elif upper == CATEGORICAL_BOUND and lower == -np.inf:
            cold.append(d)
        elif np.isfinite(lower) or np.isfinite(upper):
            raise MalformedRuleError(group=feature.name)
    return hot, cold


def group_form(rule, feature):
    """
    Returns the :obj:`GroupForm` of a well-formed rule over the categorical
    `feature`: either a single hot category or a possibly empty set of at most
    D_c - 1 cold categories.
    """
    hot, cold = _group_bounds(rule, feature)
    if len(hot) > 1 or (hot and cold) or len(cold) >= feature.width:
        raise MalformedRuleError(group=feature.name)
    return GroupForm(hot=hot[0] if hot else None, cold=cold)


def check_well_formed(rule, schema):
    for feature in schema.categorical_groups:
        group_form(rule, feature)
    return rule


def simplify(rule, schema):
    """
    Repairs the two ways a rule grown over one-hot dimensions may violate
    categorical well-formedness without changing which one-hot valid inputs
    it contains:

    (1) A hot category makes every cold bound of its group redundant, the
        cold bounds are cleared.
    (2) D_c - 1 cold categories leave a single allowed category, replaced
        by the equivalent hot bound.
    """
    lower, upper = rule.lower.copy(), rule.upper.copy()
    for feature in schema.categorical_groups:
        hot, cold = _group_bounds(rule, feature)
        if len(hot) > 1 or len(cold) == feature.width:
            raise IrreparableRuleError(group=feature.name)
        elif hot:
            upper[cold] = np.inf
        elif len(cold) == feature.width - 1:
            remaining = [d for d in feature.indices if d not in cold][0]
            upper[cold] = np.inf
            lower[remaining] = CATEGORICAL_BOUND
    if np.array_equal(lower, rule.lower) and np.array_equal(upper, rule.upper):
        return rule
    return Rule(lower, upper)


def hat_upper(rule, schema):
    """
    Returns the upper bounds of the rule where every group with a hot
    category also has its remaining categories bounded as cold.  The result
    describes the same one-hot valid inputs, in the form a multi-cold rule of
    the same group can be compared against.
    """
    upper = rule.upper.copy()
    for feature in schema.categorical_groups:
        form = group_form(rule, feature)
        if form.hot is not None:
            for d in feature.indices:
                if d != form.hot:
                    upper[d] = CATEGORICAL_BOUND
    return upper


def is_subset_categorical(a, b, schema):
    """
    Returns whether or not the rule `a` is a strict subset of the rule `b`,
    treating a hot category as excluding the other categories of its group.
    """
    return _is_subset_bounds(
        a.lower, hat_upper(a, schema), b.lower, hat_upper(b, schema))
