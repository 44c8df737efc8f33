import collections

import numpy as np

from tree_recourse import utils
from tree_recourse.data import Numerical

from .clauses import LESS_EQUAL
from .summary import CAVEAT, format_stats, members_of, worst_case_sparsity


__all__ = ('sample_counts', 'split_labels', 'render_metarule_tree')


BRANCH = "|--- "
INDENT = "|   "


def sample_counts(root, rows):
    """
    Counts the sample rows reaching every node of the tree, keyed by node id.
    """
    counts = collections.Counter()
    for x in np.atleast_2d(np.asarray(rows, dtype=float)):
        node = root
        while True:
            counts[id(node)] += 1
            if node.is_leaf:
                break
            node = node.child(x)
    return counts


def split_labels(node, schema):
    """
    Returns the conditions of the left and right branches of a split.
    """
    feature = schema.feature_for_dim(node.split_dim)
    if isinstance(feature, Numerical):
        threshold = utils.format_number(node.threshold)
        return (
            f"{feature.name} {LESS_EQUAL} {threshold}",
            f"{feature.name} > {threshold}"
        )
    category = schema.dimension_names[node.split_dim].split("=", 1)[1]
    return (
        f"{feature.name} is not {category}",
        f"{feature.name} is {category}"
    )


def _leaf_line(model, j, leaf_metarule, count):
    i = model.metarule_tree.leaf_rule_index(j)
    rule, stats = model.rules[i], model.stats[i]
    sparsity = worst_case_sparsity(rule, leaf_metarule, model.schema)
    line = (
        f"M{j}: R{i} *{format_stats(stats)}* "
        f"worst-case sparsity {sparsity}"
    )
    if count is not None:
        line += f" (n={count})"
    return line


def _render_model_tree(model, sample=None):
    tree = model.metarule_tree
    schema = model.schema
    leaf_index = {id(leaf): j for j, (leaf, _) in enumerate(tree.leaves)}
    metarules = tree.metarules
    counts = sample_counts(tree.root, sample) if sample is not None else None

    lines, hidden = [], 0
    stack = [(tree.root, 0, None)]
    while stack:
        node, depth, label = stack.pop()
        if counts is not None and counts[id(node)] == 0:
            hidden += node.leaf_count
            continue
        prefix = INDENT * max(depth - 1, 0) + BRANCH
        if label is not None:
            lines.append(prefix + label)
        if node.is_leaf:
            j = leaf_index[id(node)]
            leaf_prefix = INDENT * depth + BRANCH if label is not None \
                else BRANCH
            lines.append(leaf_prefix + _leaf_line(
                model, j, metarules[j],
                counts[id(node)] if counts is not None else None
            ))
            continue
        left, right = split_labels(node, schema)
        stack.append((node.right, depth + 1, right))
        stack.append((node.left, depth + 1, left))
    if hidden:
        lines.append(
            f"({hidden} metarule(s) without sample rows are not shown.)")
    return lines


def render_metarule_tree(model, sample=None):
    """
    Renders the metarule tree of a model, or of every member of a model set,
    as indented text.  Every leaf shows its metarule, the statistics of its
    rule between asterisks and the worst-case sparsity of the rule over the
    metarule.

    Parameters:
    ----------
    model: :obj:`RuleModel` or :obj:`RuleModelSet`

    sample: :obj:`numpy.ndarray` (optional)
        Encoded rows used to count the inputs reaching every leaf.  Parts of
        the tree no sample row reaches are left out.

        Default: None
    """
    lines = []
    members = members_of(model)
    for key, member in members:
        if key is not None:
            lines.append(f"Member {key} (target {member.target.describe()})")
        lines.extend(_render_model_tree(member, sample=sample))
        lines.append("")
    # A single leaf has no metarule to caution about.
    if all(m.metarule_tree.leaf_count == 1 for _, m in members):
        return "\n".join(lines[:-1])
    lines.append(f"* {CAVEAT}")
    return "\n".join(lines)
