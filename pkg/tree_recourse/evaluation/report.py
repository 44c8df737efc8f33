import collections
import json

import numpy as np

from tree_recourse import utils
from tree_recourse.data import write_csv


__all__ = (
    'InstanceRecord', 'DesiderataReport', 'METRICS', 'summarize',
    'write_reports'
)


METRICS = ('accuracy', 'feasibility', 'sparsity', 'complexity', 'distance')


InstanceRecord = collections.namedtuple('InstanceRecord', [
    'index', 'rule', 'metarule', 'accuracy', 'feasibility', 'sparsity',
    'complexity', 'distance', 'explain_time'
])


def _mean(values):
    if not values:
        return None
    return float(np.mean(values))


class DesiderataReport:
    """
    The desiderata of the explanations returned for a test set, one record
    per explained instance.  A report of a failed cross-validation fold has
    no records and carries the reason of the failure.
    """
    def __init__(self, records, fit_time=None, rule_count=None, fold=None,
            failure=None):
        self._records = list(records)
        self._fit_time = fit_time
        self._rule_count = rule_count
        self._fold = fold
        self._failure = failure

    def __repr__(self):
        if self.failed:
            return f"<DesiderataReport fold={self._fold} failed>"
        return (
            f"<DesiderataReport fold={self._fold} n={self.n} "
            f"consistency={self.consistency}>"
        )

    @classmethod
    def failed_fold(cls, fold, error):
        return cls([], fold=fold, failure=type(error).__name__)

    @property
    def records(self):
        return list(self._records)

    @property
    def n(self):
        return len(self._records)

    @property
    def fold(self):
        return self._fold

    @property
    def failure(self):
        return self._failure

    @property
    def failed(self):
        return self._failure is not None

    @property
    def fit_time(self):
        return self._fit_time

    @property
    def rule_count(self):
        return self._rule_count

    @property
    def unique_rules(self):
        return sorted(set([r.rule for r in self._records]))

    @property
    def consistency(self):
        """
        The number of distinct rules returned over the number of explained
        instances.
        """
        if not self._records:
            return None
        return len(self.unique_rules) / float(self.n)

    @property
    def means(self):
        return {
            metric: _mean([getattr(r, metric) for r in self._records])
            for metric in METRICS
        }

    @property
    def mean_explain_time(self):
        return _mean([r.explain_time for r in self._records])

    def aggregates(self):
        return {
            'fold': self._fold,
            'failure': self._failure,
            'instances': self.n,
            'means': self.means,
            'consistency': self.consistency,
            'unique_rules': len(self.unique_rules),
            'rule_count': self._rule_count,
            'fit_time': self._fit_time,
            'mean_explain_time': self.mean_explain_time,
        }

    def csv_rows(self):
        return [
            [
                r.index, r.rule, r.metarule,
                utils.format_number(r.accuracy),
                utils.format_number(r.feasibility),
                r.sparsity, r.complexity,
                utils.format_number(r.distance),
                utils.format_number(r.explain_time),
            ]
            for r in self._records
        ]

    def write(self, directory, name):
        directory = utils.ensure_directory(directory)
        write_csv(directory / f"{name}.csv", InstanceRecord._fields,
            self.csv_rows())
        _write_json(directory / f"{name}.json", self.aggregates())


def _write_json(path, data):
    with open(path, 'w', encoding='utf-8') as stream:
        json.dump(data, stream, sort_keys=True, indent=2)
        stream.write("\n")


def summarize(reports):
    """
    Aggregates the reports of several folds: the mean of every per-fold mean
    over the folds that did not fail, and the reasons of the failed ones.
    """
    succeeded = [r for r in reports if not r.failed]
    failures = collections.Counter([r.failure for r in reports if r.failed])
    return {
        'folds': len(reports),
        'succeeded': len(succeeded),
        'failures': dict(failures),
        'means': {
            metric: _mean([r.means[metric] for r in succeeded
                if r.means[metric] is not None])
            for metric in METRICS
        },
        'consistency': _mean([r.consistency for r in succeeded
            if r.consistency is not None]),
        'fit_time': _mean([r.fit_time for r in succeeded
            if r.fit_time is not None]),
        'mean_explain_time': _mean([r.mean_explain_time for r in succeeded
            if r.mean_explain_time is not None]),
    }


def write_reports(reports, directory):
    """
    Writes `fold-k.csv` and `fold-k.json` for every fold report and a
    `summary.json` across the folds.
    """
    directory = utils.ensure_directory(directory)
    for k, report in enumerate(reports):
        fold = k if report.fold is None else report.fold
        report.write(directory, f"fold-{fold}")
    _write_json(directory / "summary.json", summarize(reports))
    return directory
