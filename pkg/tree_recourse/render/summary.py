import collections
import itertools

import numpy as np

from tree_recourse import rules, utils
from tree_recourse.data import Numerical, write_csv

from .clauses import change_clause, keep_clause, condition_clause
from .exceptions import UnplottableRuleError


__all__ = (
    'CAVEAT', 'worst_case_changes', 'worst_case_sparsity',
    'feature_usage_summary', 'render_global_summary', 'rule_plot_rows',
    'export_rule_plot', 'members_of', 'format_stats'
)


CAVEAT = (
    "Sparsity is the worst case over the metarule: some of its inputs may "
    "already satisfy a change clause and need fewer changes."
)


def members_of(model):
    """
    Returns `(key, model)` pairs for a model set, `[(None, model)]` for a
    single model.
    """
    if hasattr(model, 'members'):
        return sorted(model.members.items())
    return [(None, model)]


def format_stats(stats):
    return (
        f"accuracy {stats.accuracy:.2f}, "
        f"feasibility {stats.feasibility:.2f}, "
        f"complexity {stats.complexity}"
    )


def _one_hot_inside(lower, upper, c, width):
    values = np.zeros(width)
    values[c] = 1.0
    return bool(np.all((lower < values) & (values <= upper)))


def worst_case_changes(rule, metarule, schema):
    """
    Returns the features some valid input of the metarule has to change to
    satisfy the rule.  A numerical feature is included when its metarule
    interval is not inside the rule interval, a categorical feature when some
    category allowed by the metarule is not allowed by the rule.
    """
    changed = []
    for feature in schema.features:
        idx = list(feature.indices)
        if isinstance(feature, Numerical):
            d = idx[0]
            if metarule.lower[d] < rule.lower[d] \
                    or metarule.upper[d] > rule.upper[d]:
                changed.append(feature)
            continue
        allowed = [
            c for c in range(feature.width)
            if _one_hot_inside(
                metarule.lower[idx], metarule.upper[idx], c, feature.width)
        ]
        if any([not _one_hot_inside(
                rule.lower[idx], rule.upper[idx], c, feature.width)
                for c in allowed]):
            changed.append(feature)
    return changed


def worst_case_sparsity(rule, metarule, schema):
    return len(worst_case_changes(rule, metarule, schema))


def feature_usage_summary(explanations, schema):
    """
    Counts how many explanations change each feature and how many keep it.
    """
    usage = collections.OrderedDict(
        [(f.name, {'change': 0, 'keep': 0}) for f in schema.features])
    for explanation in explanations:
        change_dims = set(explanation.change_dims)
        keep_dims = set(explanation.keep_dims)
        for feature in schema.features:
            if any([d in change_dims for d in feature.indices]):
                usage[feature.name]['change'] += 1
            elif any([d in keep_dims for d in feature.indices]):
                usage[feature.name]['keep'] += 1
    return usage


def _describe_metarule(metarule, schema):
    region = rules.simplify(metarule, schema)
    bounded = set(region.finite_dims)
    conditions = [
        condition_clause(f, region) for f in schema.features
        if any([d in bounded for d in f.indices])
    ]
    if not conditions:
        return "everywhere"
    return "where " + " and ".join(conditions)


def _render_model_summary(model):
    schema = model.schema
    tree = model.metarule_tree
    by_rule = collections.defaultdict(list)
    for j, metarule in enumerate(tree.metarules):
        by_rule[tree.leaf_rule_index(j)].append((j, metarule))

    lines = []
    for i, (rule, stats) in enumerate(zip(model.rules, model.stats)):
        lines.append(f"Rule R{i} ({format_stats(stats)})")
        if not by_rule[i]:
            lines.append("  not the optimal rule of any metarule")
        for j, metarule in by_rule[i]:
            changed = worst_case_changes(rule, metarule, schema)
            bounded = set(rule.finite_dims)
            kept = [f for f in schema.features if f not in changed
                and any([d in bounded for d in f.indices])]
            lines.append(f"  M{j} {_describe_metarule(metarule, schema)}:")
            lines.extend([f"    {change_clause(f, rule)}" for f in changed])
            lines.extend(
                [f"    while {keep_clause(f, rule)}" for f in kept])
            lines.append(f"    worst-case sparsity {len(changed)}")
    return lines


def render_global_summary(model):
    """
    Lists every rule of the model with the metarules it is optimal in and the
    worst-case changes it asks of their inputs.
    """
    lines = []
    for key, member in members_of(model):
        if key is not None:
            lines.append(f"Member {key} (target {member.target.describe()})")
        elif member.target is not None:
            lines.append(f"Target {member.target.describe()}")
        lines.extend(_render_model_summary(member))
        lines.append("")
    lines.append(f"* {CAVEAT}")
    return "\n".join(lines)


def rule_plot_rows(model, rule_index, labeled):
    """
    Returns the header and rows of a scatter of the training data over the
    numerical features the rule bounds, followed by the corners of the rule
    box.  Infinite bounds are clipped to the range of the data.
    """
    rule = model.rules[rule_index]
    schema = model.schema
    bounded = set(rule.finite_dims)
    dims = [d for d in schema.numerical_dims if d in bounded]
    if not 1 <= len(dims) <= 2:
        raise UnplottableRuleError(rule=f"R{rule_index}", count=len(dims))

    names = [schema.feature_for_dim(d).name for d in dims]
    header = ['kind'] + names + ['in_rule', 'output']
    inside = rules.contains_rows(rule, labeled.rows)
    rows = [
        ['row'] + [utils.format_number(x[d]) for d in dims]
        + [int(flag), output]
        for x, flag, output in zip(labeled.rows, inside, labeled.outputs)
    ]

    corners = []
    for d in dims:
        lower = rule.lower[d] if np.isfinite(rule.lower[d]) \
            else labeled.data.column_min[d]
        upper = rule.upper[d] if np.isfinite(rule.upper[d]) \
            else labeled.data.column_max[d]
        corners.append((lower, upper))
    for point in itertools.product(*corners):
        rows.append(
            ['corner'] + [utils.format_number(v) for v in point] + ['', ''])
    return header, rows


def export_rule_plot(model, rule_index, labeled, path):
    header, rows = rule_plot_rows(model, rule_index, labeled)
    write_csv(path, header, rows)
    return path
