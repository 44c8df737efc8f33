import re

import numpy as np

from tree_recourse import rules, utils
from tree_recourse.data import Numerical

from .exceptions import UnparsableTextError


__all__ = (
    'LESS_EQUAL', 'interval_text', 'change_clause', 'keep_clause',
    'condition_clause', 'features_of', 'parse_clause'
)


LESS_EQUAL = "≤"


def interval_text(lower, upper):
    """
    Writes the interval (lower, upper] with its infinite side omitted.

    >>> interval_text(3.0, float('inf'))
    '> 3'
    >>> interval_text(40, 51)
    '(40, 51]'
    """
    if np.isfinite(lower) and np.isfinite(upper):
        return (
            f"({utils.format_number(lower)}, "
            f"{utils.format_number(upper)}]"
        )
    elif np.isfinite(lower):
        return f"> {utils.format_number(lower)}"
    elif np.isfinite(upper):
        return f"{LESS_EQUAL} {utils.format_number(upper)}"
    return "any value"


def _category_set(feature, dims):
    names = [feature.categories[d - feature.indices[0]] for d in dims]
    return "{" + ", ".join(names) + "}"


def _hot_category(feature, d):
    return feature.categories[d - feature.indices[0]]


def features_of(dims, schema):
    """
    The features owning the provided dimensions, in schema order.
    """
    dims = set(dims)
    return [f for f in schema.features
        if any([d in dims for d in f.indices])]


def change_clause(feature, rule):
    if isinstance(feature, Numerical):
        d = feature.indices[0]
        return (
            f"change {feature.name} to "
            f"{interval_text(rule.lower[d], rule.upper[d])}"
        )
    form = rules.group_form(rule, feature)
    if form.hot is not None:
        return f"change {feature.name} to {_hot_category(feature, form.hot)}"
    return (
        f"change {feature.name} away from "
        f"{_category_set(feature, form.cold)}"
    )


def keep_clause(feature, rule):
    if isinstance(feature, Numerical):
        d = feature.indices[0]
        lower, upper = rule.lower[d], rule.upper[d]
        if np.isfinite(lower) and np.isfinite(upper):
            return f"keeping {feature.name} in {interval_text(lower, upper)}"
        return f"keeping {feature.name} {interval_text(lower, upper)}"
    form = rules.group_form(rule, feature)
    if form.hot is not None:
        return f"keeping {feature.name} as {_hot_category(feature, form.hot)}"
    return (
        f"keeping {feature.name} not in "
        f"{_category_set(feature, form.cold)}"
    )


def condition_clause(feature, region):
    """
    Describes the values of a feature inside a region, e.g. a metarule.
    """
    if isinstance(feature, Numerical):
        d = feature.indices[0]
        lower, upper = region.lower[d], region.upper[d]
        if np.isfinite(lower) and np.isfinite(upper):
            return f"{feature.name} in {interval_text(lower, upper)}"
        return f"{feature.name} {interval_text(lower, upper)}"
    form = rules.group_form(region, feature)
    if form.hot is not None:
        return f"{feature.name} is {_hot_category(feature, form.hot)}"
    return f"{feature.name} not in {_category_set(feature, form.cold)}"


NUMBER = r"[+-]?(?:inf|\d[\d.eE+-]*|\.\d[\d.eE+-]*)"
INTERVAL = re.compile(rf"^\(({NUMBER}), ({NUMBER})\]$")
ABOVE = re.compile(rf"^> ({NUMBER})$")
BELOW = re.compile(rf"^(?:{LESS_EQUAL}|<=) ({NUMBER})$")
CATEGORY_SET = re.compile(r"^\{(.*)\}$")


def _parse_interval(text, clause):
    text = text.strip()
    match = INTERVAL.match(text)
    if match:
        return float(match.group(1)), float(match.group(2))
    match = ABOVE.match(text)
    if match:
        return float(match.group(1)), np.inf
    match = BELOW.match(text)
    if match:
        return -np.inf, float(match.group(1))
    raise UnparsableTextError(clause=clause)


def _parse_categories(feature, text, clause):
    match = CATEGORY_SET.match(text.strip())
    names = [text.strip()] if match is None \
        else [n.strip() for n in match.group(1).split(",")]
    dims = []
    for name in names:
        if name not in feature.categories:
            raise UnparsableTextError(clause=clause)
        dims.append(feature.indices[0] + feature.categories.index(name))
    return dims


def _split_feature(body, schema, clause):
    # The longest matching name wins, names may contain spaces.
    for name in sorted(schema.feature_names, key=len, reverse=True):
        if body.startswith(name + " "):
            return schema.feature(name), body[len(name) + 1:]
    raise UnparsableTextError(clause=clause)


def parse_clause(clause, schema, lower, upper):
    """
    Parses one change or keep clause and writes the bounds it states into the
    `lower` and `upper` arrays.
    """
    text = clause.strip()
    if text.startswith("while "):
        text = text[len("while "):]
    if text.startswith("change "):
        feature, rest = _split_feature(text[len("change "):], schema, clause)
        if isinstance(feature, Numerical):
            if not rest.startswith("to "):
                raise UnparsableTextError(clause=clause)
            d = feature.indices[0]
            lower[d], upper[d] = _parse_interval(rest[len("to "):], clause)
        elif rest.startswith("away from "):
            dims = _parse_categories(feature, rest[len("away from "):], clause)
            upper[dims] = rules.CATEGORICAL_BOUND
        elif rest.startswith("to "):
            dims = _parse_categories(feature, rest[len("to "):], clause)
            lower[dims] = rules.CATEGORICAL_BOUND
        else:
            raise UnparsableTextError(clause=clause)
    elif text.startswith("keeping "):
        feature, rest = _split_feature(text[len("keeping "):], schema, clause)
        if isinstance(feature, Numerical):
            if rest.startswith("in "):
                rest = rest[len("in "):]
            d = feature.indices[0]
            lower[d], upper[d] = _parse_interval(rest, clause)
        elif rest.startswith("not in "):
            dims = _parse_categories(feature, rest[len("not in "):], clause)
            upper[dims] = rules.CATEGORICAL_BOUND
        elif rest.startswith("as "):
            dims = _parse_categories(feature, rest[len("as "):], clause)
            lower[dims] = rules.CATEGORICAL_BOUND
        else:
            raise UnparsableTextError(clause=clause)
    else:
        raise UnparsableTextError(clause=clause)
