import collections

import numpy as np

from .algebra import contains_rows, complexity


__all__ = ('RuleStats', 'rule_stats')


class RuleStats(collections.namedtuple(
        'RuleStats', ['feasibility', 'accuracy', 'complexity', 'support'])):
    """
    The statistics of a rule over a labeled dataset.  Feasibility is always
    `support / N`.
    """
    def to_dict(self):
        return dict(self._asdict())

    @classmethod
    def from_dict(cls, data):
        return cls(
            feasibility=float(data['feasibility']),
            accuracy=float(data['accuracy']),
            complexity=int(data['complexity']),
            support=int(data['support'])
        )


def rule_stats(rule, labeled, target, in_target=None):
    if in_target is None:
        in_target = target.mask(labeled.outputs)
    inside = contains_rows(rule, labeled.rows)
    count = int(np.count_nonzero(inside))
    if count == 0:
        rule_accuracy = float(np.mean(in_target))
    else:
        rule_accuracy = float(np.mean(in_target[inside]))
    return RuleStats(
        feasibility=count / float(labeled.N),
        accuracy=rule_accuracy,
        complexity=complexity(rule),
        support=count
    )
