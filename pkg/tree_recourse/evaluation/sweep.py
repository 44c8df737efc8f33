import collections
import itertools
import json

from tree_recourse import engine, utils
from tree_recourse.data import write_csv

from .evaluate import cross_validate
from .report import METRICS, summarize


__all__ = ('SweepResult', 'sweep', 'write_sweep')


SweepResult = collections.namedtuple('SweepResult', [
    'trees', 'tau', 'rho', 'summary'
])


def sweep(data, model, config, trees=(1, ), taus=(0.9, ), rhos=(0.1, ),
        folds=5, seed=0, workers=None):
    """
    Cross-validates every combination of the number of trees, tau and rho.
    Failed folds are counted per setting rather than aborting the sweep.

    Parameters:
    ----------
    config: :obj:`RecourseConfig`
        The base configuration, its `trees`, `tau` and `rho` are replaced for
        every setting.
    """
    results = []
    for T, tau, rho in itertools.product(trees, taus, rhos):
        setting = config.replace(trees=T, tau=tau, rho=rho)
        utils.stdout.log(f"Sweeping trees={T}, tau={tau}, rho={rho}.")
        reports = cross_validate(
            data, model, setting,
            folds=folds,
            seed=seed,
            tolerate_failures=True,
            workers=workers
        )
        results.append(SweepResult(
            trees=T, tau=tau, rho=rho, summary=summarize(reports)))
    return results


def _csv_row(result):
    summary = result.summary
    failures = summary['failures']
    return [
        result.trees,
        utils.format_number(result.tau),
        utils.format_number(result.rho),
        summary['succeeded'],
        failures.get(engine.NoValidRulesError.__name__, 0),
        failures.get(engine.CellLimitExceededError.__name__, 0),
    ] + [
        '' if summary['means'][m] is None
        else utils.format_number(summary['means'][m])
        for m in METRICS
    ] + [
        '' if summary['consistency'] is None
        else utils.format_number(summary['consistency']),
    ]


def write_sweep(results, directory):
    """
    Writes `sweep.csv` with one row per setting and `sweep.json` with the
    complete summaries.
    """
    directory = utils.ensure_directory(directory)
    header = [
        'trees', 'tau', 'rho', 'succeeded', 'no_valid_rules',
        'cell_limit_exceeded'
    ] + list(METRICS) + ['consistency']
    write_csv(directory / "sweep.csv", header,
        [_csv_row(r) for r in results])
    with open(directory / "sweep.json", 'w', encoding='utf-8') as stream:
        json.dump([r._asdict() for r in results], stream, sort_keys=True,
            indent=2)
        stream.write("\n")
    return directory
