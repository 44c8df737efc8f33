import numpy as np

from tree_recourse import rules, utils


__all__ = (
    'rule_feasibilities', 'rule_costs', 'cre_brute_force',
    'optimal_rule_indices', 'assign_optimal_rules'
)


def rule_feasibilities(maximal, data):
    return np.array([rules.feasibility(rule, data) for rule in maximal])


def rule_costs(x, maximal, data, feasibilities=None):
    if feasibilities is None:
        feasibilities = rule_feasibilities(maximal, data)
    return np.array([rules.changes(x, rule) for rule in maximal]) \
        - feasibilities


def cre_brute_force(x, maximal, data, feasibilities=None):
    """
    Returns the index of the rule of least cost for the input, ties going to
    the lowest index.  This is the reference every lookup must agree with.
    """
    costs = rule_costs(x, maximal, data, feasibilities=feasibilities)
    return int(np.argmin(costs))


def optimal_rule_indices(rows, maximal, feasibilities):
    """
    Vectorized :obj:`cre_brute_force` over the rows of an (n, D) array.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    costs = np.column_stack([
        rules.changes_rows(rows, rule) for rule in maximal
    ]) - feasibilities[np.newaxis, :]
    return np.argmin(costs, axis=1)


def assign_optimal_rules(cells, maximal, data, feasibilities=None,
        workers=None, chunk_size=2048):
    """
    Labels every cell with the optimal rule of its prototype.  Rule
    feasibilities are computed once, prototypes are labeled in chunks that
    may run on several worker threads.
    """
    if feasibilities is None:
        feasibilities = rule_feasibilities(maximal, data)
    if len(cells) == 0:
        return []
    prototypes = np.array([cell.prototype for cell in cells])
    chunks = [prototypes[i:i + chunk_size]
        for i in range(0, len(prototypes), chunk_size)]
    labels = np.concatenate(utils.parallel_map(
        lambda chunk: optimal_rule_indices(chunk, maximal, feasibilities),
        chunks,
        workers=workers
    ))
    return [cell.with_optimal_rule(label)
        for cell, label in zip(cells, labels)]
