import json

import numpy as np
import pytest

from tree_recourse import engine, evaluation, rules, synth
from tree_recourse.data import (
    ClassSet, Dataset, LabeledDataset, PercentileTable, PrecomputedModel,
    make_regression_target)
from tree_recourse.models import ModelKinds


inf = np.inf
B = rules.CATEGORICAL_BOUND


def record(rule, index=0, sparsity=1, distance=0.5):
    return evaluation.InstanceRecord(
        index=index,
        rule=rule,
        metarule="M0",
        accuracy=0.9,
        feasibility=0.2,
        sparsity=sparsity,
        complexity=1,
        distance=distance,
        explain_time=0.001
    )


class TestDistance:

    def test_percentile_shift(self, line_schema):
        data = Dataset(line_schema, [[float(i)] for i in range(1, 11)])
        cdf = PercentileTable.from_dataset(data)
        rule = rules.Rule([4.0], [inf])
        assert evaluation.counterfactual_distance(
            [3.0], rule, cdf, line_schema) == pytest.approx(0.1)
        assert evaluation.counterfactual_distance(
            [7.0], rule, cdf, line_schema) == 0.0

    def test_closest_point_of_numerical_rule(self, plane_schema):
        rule = rules.Rule([4.0, -inf], [inf, 2.0])
        point = evaluation.closest_point([3.0, 5.0], rule, plane_schema)
        assert point[0] > 4.0
        assert point[0] == np.nextafter(4.0, inf)
        assert point[1] == 2.0
        assert rules.contains(rule, point)

    def test_closest_point_inside_is_unchanged(self, plane_schema):
        rule = rules.Rule([4.0, -inf], [inf, 2.0])
        x = [5.0, 1.0]
        assert evaluation.closest_point(x, rule, plane_schema).tolist() == x

    def test_closest_point_of_hot_category(self, color_schema):
        hot_green = rules.Rule([-inf, -inf, -inf, B], [inf] * 4)
        point = evaluation.closest_point(
            [1.0, 1.0, 0.0, 0.0], hot_green, color_schema)
        assert point.tolist() == [1.0, 0.0, 0.0, 1.0]

    def test_closest_point_of_cold_categories(self, color_schema):
        cold_red = rules.Rule([-inf] * 4, [inf, B, inf, inf])
        point = evaluation.closest_point(
            [1.0, 1.0, 0.0, 0.0], cold_red, color_schema)
        assert point.tolist() == [1.0, 0.0, 1.0, 0.0]

    def test_categorical_distance(self, color_schema):
        data = Dataset(color_schema, [
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 1.0, 0.0],
        ])
        cdf = PercentileTable.from_dataset(data)
        hot_blue = rules.Rule([-inf, -inf, B, -inf], [inf] * 4)
        assert evaluation.counterfactual_distance(
            [0.0, 1.0, 0.0, 0.0], hot_blue, cdf, color_schema) == 2.0


class TestReport:

    def test_consistency(self):
        report = evaluation.DesiderataReport(
            [record("R0", index=i) for i in range(100)])
        assert report.consistency == 0.01
        assert report.unique_rules == ["R0"]

    def test_means(self):
        report = evaluation.DesiderataReport([
            record("R0", sparsity=1, distance=0.2),
            record("R1", sparsity=2, distance=0.4),
        ])
        assert report.consistency == 1.0
        assert report.means['sparsity'] == 1.5
        assert report.means['distance'] == pytest.approx(0.3)

    def test_failed_fold(self):
        report = evaluation.DesiderataReport.failed_fold(
            2, engine.NoValidRulesError(tau=0.9, rho=0.1))
        assert report.failed
        assert report.fold == 2
        assert report.failure == "NoValidRulesError"
        assert report.consistency is None
        assert report.means['accuracy'] is None

    def test_summarize(self):
        reports = [
            evaluation.DesiderataReport(
                [record("R0"), record("R1")], fold=0),
            evaluation.DesiderataReport(
                [record("R0")], fold=1),
            evaluation.DesiderataReport.failed_fold(
                2, engine.CellLimitExceededError(count=5, limit=1)),
        ]
        summary = evaluation.summarize(reports)
        assert summary['folds'] == 3
        assert summary['succeeded'] == 2
        assert summary['failures'] == {'CellLimitExceededError': 1}
        assert summary['consistency'] == 1.0

    def test_write_reports(self, tmp_path):
        reports = [
            evaluation.DesiderataReport([record("R0")], fold=0),
            evaluation.DesiderataReport.failed_fold(
                1, engine.NoValidRulesError()),
        ]
        evaluation.write_reports(reports, tmp_path / "reports")
        for name in ("fold-0.csv", "fold-0.json", "fold-1.json",
                "summary.json"):
            assert (tmp_path / "reports" / name).exists()
        csv_lines = (tmp_path / "reports" / "fold-0.csv").read_text() \
            .splitlines()
        assert csv_lines[0].split(",") == \
            list(evaluation.InstanceRecord._fields)
        aggregates = json.loads(
            (tmp_path / "reports" / "fold-1.json").read_text())
        assert aggregates['failure'] == "NoValidRulesError"
        assert aggregates['instances'] == 0


class TestFolds:

    def test_fold_sizes(self):
        parts = evaluation.fold_indices(10, 3, seed=1)
        assert sorted([len(p) for p in parts]) == [3, 3, 4]
        assert sorted(np.concatenate(parts).tolist()) == list(range(10))

    def test_folds_are_deterministic(self):
        first = evaluation.fold_indices(50, 5, seed=2)
        second = evaluation.fold_indices(50, 5, seed=2)
        assert all([np.array_equal(a, b) for a, b in zip(first, second)])

    @pytest.mark.parametrize('N,folds', [(2, 3), (10, 1)])
    def test_too_few_rows(self, N, folds):
        with pytest.raises(evaluation.TooFewRowsError):
            evaluation.fold_indices(N, folds)


def test_evaluate_explains_rows_outside_the_target(cluster_model, clusters):
    test = clusters.labeled
    report = evaluation.evaluate(cluster_model, test)
    outside = [i for i, y in enumerate(test.outputs) if y != '1']
    assert [r.index for r in report.records] == outside
    assert report.rule_count == len(cluster_model.rules)
    assert report.fit_time == cluster_model.fit_time
    for r in report.records:
        assert r.distance >= 0.0
        assert r.rule in cluster_model.rule_ids
        if r.sparsity == 0:
            assert r.distance == 0.0


def test_evaluate_requires_rows_outside_the_target(cluster_model, clusters):
    test = LabeledDataset(
        clusters.labeled.data,
        ['1'] * clusters.labeled.N,
        ModelKinds.CLASSIFIER
    )
    with pytest.raises(evaluation.EmptyTestSetError):
        evaluation.evaluate(cluster_model, test)


def test_evaluate_splits_regression_at_the_test_mean():
    fixture = synth.make_regression(seed=0, n=300)
    labeled = fixture.labeled
    model_set = engine.fit_regression_split(
        labeled, engine.RecourseConfig(tau=0.8, rho=0.1), fixture.schema,
        workers=1)
    # The right half of x1 has a higher mean output than the whole set.
    test = labeled.subset(np.flatnonzero(labeled.rows[:, 0] > 5.0))
    test_mu = float(np.mean(test.outputs))
    assert test_mu != model_set.threshold
    assert evaluation.split_threshold(model_set, test) == test_mu
    assert any([
        model_set.member_key(y) != model_set.member_key(y, threshold=test_mu)
        for y in test.outputs
    ])

    report = evaluation.evaluate(model_set, test)
    assert [r.index for r in report.records] == list(range(test.N))
    for r in report.records:
        x, y = test.rows[r.index], test.outputs[r.index]
        target = make_regression_target(test, y)
        explanation = model_set.explain(x, output=y, threshold=test_mu)
        assert r.rule == explanation.rule_id
        assert r.rule.startswith(target.direction + "/")
        assert r.accuracy == rules.accuracy(explanation.rule, test, target)


def test_cross_validate(clusters, cluster_config):
    reports = evaluation.cross_validate(
        clusters.labeled.data, clusters.black_box, cluster_config,
        folds=3, seed=0, workers=1)
    assert [r.fold for r in reports] == [0, 1, 2]
    assert not any([r.failed for r in reports])
    assert sum([r.n for r in reports]) == \
        sum([1 for y in clusters.labeled.outputs if y != '1'])


def test_cross_validate_failures(noisy_labeled):
    model = PrecomputedModel(noisy_labeled)
    config = engine.RecourseConfig(
        tau=1.0, rho=0.5, target=ClassSet(['1']))
    with pytest.raises(engine.NoValidRulesError):
        evaluation.cross_validate(
            noisy_labeled.data, model, config, folds=2, workers=1)
    reports = evaluation.cross_validate(
        noisy_labeled.data, model, config, folds=2, tolerate_failures=True,
        workers=1)
    assert [r.failure for r in reports] == ["NoValidRulesError"] * 2


def test_cross_validate_regression():
    fixture = synth.make_regression(seed=2, n=200)
    reports = evaluation.cross_validate(
        fixture.labeled.data, fixture.black_box,
        engine.RecourseConfig(tau=0.8, rho=0.1),
        folds=2, tolerate_failures=True, workers=1)
    assert [r.fold for r in reports] == [0, 1]


def test_sweep(tmp_path, clusters, cluster_config):
    results = evaluation.sweep(
        clusters.labeled.data, clusters.black_box, cluster_config,
        taus=(0.8, 1.0), rhos=(0.1, ), folds=2, workers=1)
    assert [(r.trees, r.tau, r.rho) for r in results] == \
        [(1, 0.8, 0.1), (1, 1.0, 0.1)]
    assert results[0].summary['folds'] == 2

    evaluation.write_sweep(results, tmp_path)
    lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert lines[0].startswith("trees,tau,rho,succeeded")
    assert len(lines) == 3
    assert len(json.loads((tmp_path / "sweep.json").read_text())) == 2
