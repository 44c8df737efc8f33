import numpy as np

from tree_recourse import rules, utils

from .exceptions import NoValidRulesError


__all__ = ('maximal_valid_rules', 'candidate_stats')


def candidate_stats(candidates, labeled, target):
    in_target = target.mask(labeled.outputs)
    return [rules.rule_stats(rule, labeled, target, in_target=in_target)
        for rule in candidates]


def maximal_valid_rules(candidates, labeled, config, schema, stats=None):
    """
    Filters the candidate rules down to the maximal-valid ones: rules whose
    feasibility reaches rho and accuracy reaches tau on the labeled data,
    and that are not a strict subset of another such rule.  Subsets are
    decided with the categorical-aware relation.  Equal candidates are kept
    once, at the position of the first one, and the canonical candidate order
    is preserved.

    Raises :obj:`NoValidRulesError` when no rule remains.
    """
    if stats is None:
        stats = candidate_stats(candidates, labeled, config.target)

    valid, seen = [], set()
    for rule, rule_stats in zip(candidates, stats):
        if rule_stats.feasibility >= config.rho \
                and rule_stats.accuracy >= config.tau and rule not in seen:
            seen.add(rule)
            valid.append(rule)
    utils.stdout.log(
        f"{len(valid)} of {len(candidates)} candidate rules are valid.")
    if len(valid) == 0:
        raise NoValidRulesError(tau=config.tau, rho=config.rho)

    lowers = np.array([r.lower for r in valid])
    uppers = np.array([rules.hat_upper(r, schema) for r in valid])
    maximal = []
    for i, rule in enumerate(valid):
        contains_i = np.all(lowers <= lowers[i], axis=1) \
            & np.all(uppers[i] <= uppers, axis=1)
        equal_i = np.all(lowers == lowers[i], axis=1) \
            & np.all(uppers == uppers[i], axis=1)
        if not np.any(contains_i & ~equal_i):
            maximal.append(rule)
    utils.stdout.log(f"{len(maximal)} valid rules are maximal.")
    return maximal
