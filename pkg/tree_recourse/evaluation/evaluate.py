import numpy as np

from tree_recourse import engine, rules, utils
from tree_recourse.data import (
    Interval, label_with_model, make_regression_target, percentile_transform)

from .distance import counterfactual_distance
from .exceptions import EmptyTestSetError, TooFewRowsError
from .report import DesiderataReport, InstanceRecord


__all__ = (
    'make_regression_target', 'split_threshold', 'instance_target',
    'evaluate', 'fold_indices', 'fit_fold', 'cross_validate', 'FOLD_FAILURES'
)


# Fit failures a tolerant cross-validation records instead of raising.
FOLD_FAILURES = (
    engine.NoValidRulesError,
    engine.CellLimitExceededError,
    EmptyTestSetError,
)


def split_threshold(model, test):
    """
    The threshold a `regression_split` model set is evaluated at: the mean
    model output over the test set.  None for any other model.
    """
    if isinstance(model, engine.RuleModelSet) \
            and model.policy == engine.REGRESSION_SPLIT:
        return float(np.mean(np.asarray(test.outputs, dtype=float)))
    return None


def instance_target(model, output, target=None, threshold=None):
    """
    The target an instance with the given model output is explained for: the
    target of the member answering it for a model set, otherwise `target` or
    the target the model was fit for.  A `regression_split` set evaluated at
    `threshold` explains towards the half of the output space beyond
    `threshold` rather than beyond the mean it was fit for.
    """
    if isinstance(model, engine.RuleModelSet):
        if threshold is not None:
            key = model.member_key(output, threshold=threshold)
            return Interval(threshold, key)
        return model.member_for(output).target
    return target if target is not None else model.target


def evaluate(model, test, target=None, cdf=None):
    """
    Explains every instance of the test set whose output lies outside of its
    target and scores the returned rules.  Accuracy and feasibility of the
    rules are measured on the test set itself.  A `regression_split` model set
    splits the output space at the mean output over the test set.

    Parameters:
    ----------
    model: :obj:`RuleModel` or :obj:`RuleModelSet`

    test: :obj:`LabeledDataset`

    target: :obj:`TargetSpec` (optional)
        Overrides the target of a single model.

    cdf: :obj:`PercentileTable` (optional)
        The percentiles distances are measured in, those of the test set
        when not provided.
    """
    cdf = cdf or percentile_transform(test.data)
    schema = test.schema

    threshold = split_threshold(model, test)
    explain_kwargs = {} if threshold is None else {'threshold': threshold}

    stats_cache = {}
    records = []
    for index, (x, output) in enumerate(zip(test.rows, test.outputs)):
        member_target = instance_target(
            model, output, target=target, threshold=threshold)
        if member_target.matches(output):
            continue
        with utils.Timer() as timer:
            explanation = model.explain(x, output=output, **explain_kwargs)
        rule = explanation.rule
        if explanation.rule_id not in stats_cache:
            stats_cache[explanation.rule_id] = (
                rules.accuracy(rule, test, member_target),
                rules.feasibility(rule, test.data)
            )
        accuracy, feasibility = stats_cache[explanation.rule_id]
        records.append(InstanceRecord(
            index=index,
            rule=explanation.rule_id,
            metarule=explanation.metarule_id,
            accuracy=accuracy,
            feasibility=feasibility,
            sparsity=explanation.sparsity,
            complexity=rules.complexity(rule),
            distance=counterfactual_distance(x, rule, cdf, schema),
            explain_time=timer.elapsed
        ))
    if not records:
        raise EmptyTestSetError()
    utils.stdout.log(f"Explained {len(records)} of {test.N} test rows.")
    return DesiderataReport(
        records,
        fit_time=model.fit_time,
        rule_count=_rule_count(model)
    )


def _rule_count(model):
    if isinstance(model, engine.RuleModelSet):
        return sum([len(m.rules) for m in model.members.values()])
    return len(model.rules)


def fold_indices(N, folds, seed=0):
    """
    Shuffles the row indices with the seed and splits them into `folds`
    contiguous parts whose sizes differ by at most one.
    """
    if folds < 2:
        raise TooFewRowsError(
            rows=N, folds=folds,
            message="Cross-validation requires at least 2 folds."
        )
    if N < folds:
        raise TooFewRowsError(rows=N, folds=folds)
    permutation = np.random.default_rng(seed).permutation(N)
    return [np.sort(part) for part in np.array_split(permutation, folds)]


def fit_fold(train, test, config, schema, workers=None):
    """
    Fits the model of one fold over its training partition.  Regression folds
    split the output space at the mean output of the test partition,
    classifier folds without a target fit an untargeted model set.
    """
    if not train.kind.is_classifier:
        threshold = float(np.mean(test.outputs))
        return engine.fit_regression_split(
            train, config, schema, threshold=threshold, workers=workers)
    elif config.target is None:
        return engine.fit_untargeted(train, config, schema, workers=workers)
    return engine.fit(train, config, schema, workers=workers)


def cross_validate(data, model, config, folds=10, seed=0,
        tolerate_failures=False, workers=None):
    """
    Labels the dataset with the black-box model, then for every fold fits
    over the other folds and evaluates over the held-out one.

    Returns one :obj:`DesiderataReport` per fold in fold order.  When
    `tolerate_failures` is set, a fold whose fit fails with no valid rules or
    too many cells is reported as failed instead of raising.
    """
    labeled = label_with_model(data, model, workers=workers)
    parts = fold_indices(labeled.N, folds, seed=seed)
    reports = []
    for k, test_idx in enumerate(parts):
        train_idx = np.concatenate(
            [p for j, p in enumerate(parts) if j != k])
        train, test = labeled.subset(train_idx), labeled.subset(test_idx)
        utils.stdout.log(
            f"Fold {k}: fitting on {train.N} rows, testing on {test.N}.")
        try:
            fold_model = fit_fold(train, test, config, data.schema,
                workers=workers)
            report = evaluate(
                fold_model, test,
                cdf=percentile_transform(train.data)
            )
        except FOLD_FAILURES as e:
            if not tolerate_failures:
                raise
            utils.stdout.log(f"Fold {k} failed: {type(e).__name__}.")
            reports.append(DesiderataReport.failed_fold(k, e))
            continue
        reports.append(DesiderataReport(
            report.records,
            fit_time=report.fit_time,
            rule_count=report.rule_count,
            fold=k
        ))
    return reports
