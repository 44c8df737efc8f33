import numpy as np
import pytest

from tree_recourse import engine, exceptions, render, rules, synth
from tree_recourse.data import (
    ClassSet, Dataset, DimensionMismatchError, FeatureSchema, Interval,
    LabeledDataset, LabelMismatchError, Numerical)
from tree_recourse.models import ModelKinds


inf = np.inf


@pytest.fixture
def line_data(line_schema):
    return Dataset(line_schema, [[float(i)] for i in range(1, 11)])


def line_rule(lower=-inf, upper=inf):
    return rules.Rule([lower], [upper])


class TestSelection:

    def test_subsets_are_dropped(self, line_schema, line_data):
        labeled = LabeledDataset(
            line_data, ['1'] * 10, ModelKinds.CLASSIFIER)
        config = engine.RecourseConfig(
            tau=1.0, rho=0.1, target=ClassSet(['1']))
        inner, outer = line_rule(upper=4.0), line_rule(upper=8.0)
        maximal = engine.maximal_valid_rules(
            [inner, outer, outer], labeled, config, line_schema)
        assert maximal == [outer]

    def test_invalid_rules_are_dropped(self, line_schema, line_data):
        # Rows 1..5 are in the target.
        labeled = LabeledDataset(
            line_data, ['1'] * 5 + ['0'] * 5, ModelKinds.CLASSIFIER)
        config = engine.RecourseConfig(
            tau=0.9, rho=0.3, target=ClassSet(['1']))
        candidates = [
            line_rule(),
            line_rule(upper=2.0),
            line_rule(upper=5.0),
            line_rule(lower=5.0),
        ]
        maximal = engine.maximal_valid_rules(
            candidates, labeled, config, line_schema)
        assert maximal == [line_rule(upper=5.0)]

    def test_no_valid_rules(self, line_schema, line_data):
        labeled = LabeledDataset(
            line_data, ['0'] * 10, ModelKinds.CLASSIFIER)
        config = engine.RecourseConfig(
            tau=0.5, rho=0.1, target=ClassSet(['1']))
        with pytest.raises(engine.NoValidRulesError):
            engine.maximal_valid_rules(
                [line_rule()], labeled, config, line_schema)


class TestGrid:

    def test_cells_of_two_rules(self, plane_schema):
        maximal = [
            rules.Rule([-inf, -inf], [3.0, inf]),
            rules.Rule([-inf, 5.0], [inf, inf]),
        ]
        cells = engine.build_grid(maximal, plane_schema, cell_limit=4)
        assert len(cells) == 4
        assert engine.GridAxes(maximal, plane_schema).cell_count == 4
        assert engine.worst_case_cell_count(maximal, plane_schema) == 25
        with pytest.raises(engine.CellLimitExceededError):
            engine.build_grid(maximal, plane_schema, cell_limit=3)

    def test_cells_of_a_bounded_interval(self, line_schema):
        maximal = [line_rule(lower=2.0, upper=4.0)]
        cells = engine.build_grid(maximal, line_schema, cell_limit=10)
        assert [cell.as_rule() for cell in cells] == [
            line_rule(upper=2.0),
            line_rule(lower=2.0, upper=4.0),
            line_rule(lower=4.0),
        ]

    def test_categorical_variants(self, color_schema):
        hot_red = rules.Rule(
            [-inf, rules.CATEGORICAL_BOUND, -inf, -inf], [inf] * 4)
        axes = engine.GridAxes([hot_red], color_schema)
        color = color_schema.feature('color')
        assert axes.variants(color) == [1, engine.AGGREGATE]
        assert axes.unconstrained(color) == [2, 3]
        assert axes.cell_count == 2
        assert axes.whitelist() == {1: [rules.CATEGORICAL_BOUND]}

    def test_whitelist_holds_finite_bounds(self, plane_schema):
        maximal = [
            rules.Rule([1.0, -inf], [3.0, inf]),
            rules.Rule([-inf, 5.0], [inf, inf]),
        ]
        assert engine.GridAxes(maximal, plane_schema).whitelist() == {
            0: [1.0, 3.0],
            1: [5.0],
        }


class TestPrototypes:

    @pytest.fixture
    def two_points(self, line_schema):
        return Dataset(line_schema, [[0.0], [10.0]])

    def prototypes(self, maximal, schema, data):
        cells = engine.build_grid(maximal, schema, cell_limit=100)
        return [cell.prototype.tolist()
            for cell in engine.make_prototypes(cells, schema, data)]

    def test_finite_interval_midpoint(self, line_schema, two_points):
        maximal = [line_rule(lower=2.0, upper=4.0)]
        assert self.prototypes(maximal, line_schema, two_points)[1] == [3.0]

    def test_half_infinite_intervals(self, line_schema, two_points):
        maximal = [line_rule(upper=5.0)]
        assert self.prototypes(maximal, line_schema, two_points) == \
            [[2.0], [8.0]]

    def test_interval_beyond_the_data(self, line_schema, two_points):
        maximal = [line_rule(upper=-3.0)]
        assert self.prototypes(maximal, line_schema, two_points)[0] == [-4.0]

    def test_aggregate_variant(self, color_schema):
        data = Dataset(color_schema, [
            [0.0, 1.0, 0.0, 0.0],
            [10.0, 0.0, 1.0, 0.0],
        ])
        hot_red = rules.Rule(
            [-inf, rules.CATEGORICAL_BOUND, -inf, -inf], [inf] * 4)
        assert self.prototypes([hot_red], color_schema, data) == [
            [5.0, 1.0, 0.0, 0.0],
            [5.0, 0.0, 1.0, 0.0],
        ]

    def test_prototypes_lie_in_their_cells(self, cluster_model, clusters):
        axes = engine.GridAxes(cluster_model.rules, clusters.schema)
        cells = engine.make_prototypes(
            engine.build_grid(
                cluster_model.rules, clusters.schema, 10000, axes=axes),
            clusters.schema,
            clusters.labeled.data
        )
        for cell in cells:
            assert rules.contains(cell.as_rule(), cell.prototype)


class TestAssignment:

    def test_most_feasible_rule_wins(self, line_data):
        # Both rules need one change, x <= 4 covers 40% of the data and
        # x > 8 covers 20%.
        low, high = line_rule(upper=4.0), line_rule(lower=8.0)
        assert engine.cre_brute_force([6.0], [low, high], line_data) == 0
        assert engine.cre_brute_force([6.0], [high, low], line_data) == 1

    def test_satisfied_rule_wins(self, line_data):
        low, high = line_rule(upper=4.0), line_rule(lower=8.0)
        assert engine.cre_brute_force([9.0], [low, high], line_data) == 1

    def test_ties_go_to_lowest_index(self, line_data):
        a, b = line_rule(upper=2.0), line_rule(lower=8.0)
        assert engine.cre_brute_force([5.0], [b, a], line_data) == 0

    def test_vectorized_assignment_agrees(self, line_data):
        maximal = [line_rule(upper=4.0), line_rule(lower=8.0)]
        feasibilities = engine.rule_feasibilities(maximal, line_data)
        rows = [[1.0], [6.0], [9.0]]
        assert engine.optimal_rule_indices(
            rows, maximal, feasibilities).tolist() == [
            engine.cre_brute_force(x, maximal, line_data) for x in rows]


class TestMetaruleTree:

    def test_lookup(self, two_rule_model):
        tree = two_rule_model.metarule_tree
        assert tree.leaf_count == 2
        assert tree.lookup([3.0, 0.0]) == 0
        assert tree.lookup([3.5, 0.0]) == 1
        assert tree.leaf_rule_index(1) == 1
        assert tree.thresholds() == {0: {3.0}}
        with pytest.raises(DimensionMismatchError):
            tree.lookup([1.0])

    def test_metarules(self, two_rule_model):
        assert two_rule_model.metarule_tree.metarules == [
            rules.Rule([-inf, -inf], [3.0, inf]),
            rules.Rule([3.0, -inf], [inf, inf]),
        ]


class TestFittedModel:

    def test_rules_are_maximal_and_valid(self, cluster_model, clusters,
            cluster_config):
        labeled = clusters.labeled
        for rule, stats in zip(cluster_model.rules, cluster_model.stats):
            assert stats.accuracy >= cluster_config.tau
            assert stats.feasibility >= cluster_config.rho
            assert stats == rules.rule_stats(
                rule, labeled, cluster_config.target)
        for a in cluster_model.rules:
            for b in cluster_model.rules:
                assert not rules.is_subset_categorical(a, b, clusters.schema)

    def test_provenance(self, cluster_model, clusters):
        provenance = cluster_model.provenance
        assert provenance['training_rows'] == clusters.labeled.N
        assert provenance['schema_fingerprint'] == clusters.schema.fingerprint
        assert not provenance['target_covers_every_output']
        assert cluster_model.cell_count >= cluster_model.metarule_count
        assert cluster_model.fit_time is not None

    def test_fit_is_deterministic(self, cluster_model, clusters,
            cluster_config):
        refit = engine.fit(
            clusters.labeled, cluster_config, clusters.schema, workers=3)
        assert refit.to_json() == cluster_model.to_json()

    def test_lookup_matches_brute_force(self, cluster_model, clusters,
            random_inputs):
        data = clusters.labeled.data
        for x in random_inputs(clusters.schema, 500, seed=11):
            assert cluster_model.explain(x).rule_index == \
                engine.cre_brute_force(x, cluster_model.rules, data)

    def test_categorical_lookup_matches_brute_force(self, colored_model,
            colored_clusters, random_inputs):
        data = colored_clusters.labeled.data
        for x in random_inputs(colored_clusters.schema, 500, seed=12):
            assert colored_model.explain(x).rule_index == \
                engine.cre_brute_force(x, colored_model.rules, data)

    def test_training_rows_match_brute_force(self, cluster_model, clusters):
        data = clusters.labeled.data
        explanations = cluster_model.explain_many(clusters.labeled.rows)
        for x, explanation in zip(clusters.labeled.rows, explanations):
            assert explanation.rule_index == \
                engine.cre_brute_force(x, cluster_model.rules, data)

    def test_inputs_inside_a_rule_need_no_change(self, cluster_model,
            clusters):
        for x in clusters.labeled.rows:
            explanation = cluster_model.explain(x)
            inside = any([rules.contains(r, x) for r in cluster_model.rules])
            assert (explanation.sparsity == 0) == inside
            assert rules.contains(explanation.metarule, x)

    def test_explanation_fields(self, two_rule_model):
        explanation = two_rule_model.explain([4.0, 1.0], output='0')
        assert explanation.rule_id == "R1"
        assert explanation.metarule_id == "M1"
        assert explanation.change_dims == (1, )
        assert explanation.keep_dims == ()
        assert explanation.sparsity == 1
        assert not explanation.already_satisfied

        explanation = two_rule_model.explain([1.0, 1.0], output='1')
        assert explanation.rule_id == "R0"
        assert explanation.change_dims == ()
        assert explanation.keep_dims == (0, )
        assert explanation.already_satisfied

    def test_explain_checks_dimension(self, two_rule_model):
        with pytest.raises(DimensionMismatchError):
            two_rule_model.explain([1.0, 2.0, 3.0])


class TestFailures:

    def test_no_valid_rules(self, noisy_labeled, plane_schema):
        config = engine.RecourseConfig(
            tau=1.0, rho=0.5, target=ClassSet(['1']))
        with pytest.raises(engine.NoValidRulesError) as info:
            engine.fit(noisy_labeled, config, plane_schema, workers=1)
        assert info.value.exit_code == 2

    def test_cell_limit(self, clusters, cluster_config):
        with pytest.raises(engine.CellLimitExceededError) as info:
            engine.fit(
                clusters.labeled,
                cluster_config.replace(cell_limit=1),
                clusters.schema,
                workers=1
            )
        assert info.value.exit_code == 3
        assert info.value.limit == 1

    def test_target_is_required(self, clusters, cluster_config):
        builder = engine.RuleModelBuilder(clusters.schema, workers=1)
        with pytest.raises(exceptions.RecourseError):
            builder.fit(clusters.labeled, cluster_config.replace(target=None))

    def test_target_must_fit_the_kind(self, clusters, cluster_config):
        with pytest.raises(LabelMismatchError):
            engine.fit(
                clusters.labeled,
                cluster_config.replace(target=Interval.above(0.5)),
                clusters.schema
            )

    def test_refit_requires_fit(self, clusters, cluster_config):
        builder = engine.RuleModelBuilder(clusters.schema)
        with pytest.raises(engine.NotFittedError):
            builder.refit_target(cluster_config)


def test_refit_reuses_candidates(clusters, cluster_config, cluster_model):
    builder = engine.RuleModelBuilder(clusters.schema, workers=1)
    builder.fit(
        clusters.labeled, cluster_config.replace(target=ClassSet(['0'])))
    candidates = builder.candidates
    refit = builder.refit_target(cluster_config)
    assert builder.candidates == candidates
    assert refit.to_json() == cluster_model.to_json()


def test_target_covering_every_output(clusters, cluster_config, capsys):
    config = cluster_config.replace(target=ClassSet(['0', '1']))
    model = engine.fit(clusters.labeled, config, clusters.schema, workers=1)
    assert model.provenance['target_covers_every_output']
    assert "contains every training output" in capsys.readouterr().out
    assert model.rules == [rules.Rule.universal(clusters.schema.D)]


def test_model_file(tmp_path, cluster_model, clusters, random_inputs):
    path = tmp_path / "model.json"
    cluster_model.dump(path)
    loaded = engine.load_model(path)
    assert isinstance(loaded, engine.RuleModel)
    assert loaded.to_json() == cluster_model.to_json()
    for x in random_inputs(clusters.schema, 50):
        assert loaded.explain(x).rule_index == \
            cluster_model.explain(x).rule_index


def test_model_file_errors(tmp_path):
    path = tmp_path / "model.json"
    path.write_text("{\"format_version\": 7}")
    with pytest.raises(engine.ModelFormatError):
        engine.load_model(path)
    path.write_text("not json")
    with pytest.raises(engine.ModelFormatError):
        engine.load_model(path)


def test_untargeted_model_set(tmp_path, clusters, cluster_config):
    model_set = engine.fit_untargeted(
        clusters.labeled, cluster_config, clusters.schema, workers=1)
    assert sorted(model_set.members) == ['0', '1']
    assert model_set.members['0'].target == ClassSet(['1'])
    assert model_set.members['1'].target == ClassSet(['0'])

    x = clusters.labeled.rows[0]
    explanation = model_set.explain(x, output='0')
    assert explanation.member == '0'
    assert explanation.rule_id.startswith("0/R")
    assert not explanation.already_satisfied

    with pytest.raises(exceptions.RequiredParamError):
        model_set.explain(x)
    with pytest.raises(LabelMismatchError):
        model_set.member_for('7')

    path = tmp_path / "model.json"
    model_set.dump(path)
    loaded = engine.load_model(path)
    assert isinstance(loaded, engine.RuleModelSet)
    assert loaded.to_json() == model_set.to_json()


def test_regression_split_model_set():
    fixture = synth.make_regression(seed=0, n=300)
    config = engine.RecourseConfig(tau=0.8, rho=0.1)
    model_set = engine.fit_regression_split(
        fixture.labeled, config, fixture.schema, workers=1)
    mu = float(np.mean(fixture.labeled.outputs))
    assert model_set.threshold == mu
    assert model_set.members['above'].target == Interval.above(mu)
    assert model_set.members['below'].target == Interval.below(mu)

    x = fixture.labeled.rows[0]
    assert model_set.explain(x, output=mu).member == 'above'
    assert model_set.explain(x, output=mu + 1.0).member == 'below'

    for member in model_set.members.values():
        for rule in member.rules:
            assert rules.accuracy(
                rule, fixture.labeled, member.target) >= config.tau
            assert rules.feasibility(rule, fixture.labeled.data) >= config.rho


@pytest.mark.slow
def test_forest_lookup_matches_brute_force(colored_clusters, random_inputs):
    config = engine.RecourseConfig(
        tau=0.75, rho=0.05, trees=5, target=ClassSet(['1']))
    model = engine.fit(
        colored_clusters.labeled, config, colored_clusters.schema)
    assert model.cell_count <= config.cell_limit
    data = colored_clusters.labeled.data
    for x in random_inputs(colored_clusters.schema, 2000, seed=13):
        assert model.explain(x).rule_index == \
            engine.cre_brute_force(x, model.rules, data)


def sample_box(rng, rule, low, high, n):
    """
    Draws inputs inside the rule, its infinite bounds clipped to
    [low, high].
    """
    lower = np.maximum(rule.lower, low)
    upper = np.minimum(rule.upper, high)
    return rng.uniform(lower, upper, (n, len(lower)))


@pytest.fixture(scope='module', params=[0, 1, 2])
def l_shape(request):
    fixture = synth.make_l_shape(seed=request.param, n=500)
    config = engine.RecourseConfig(
        tau=0.9, rho=0.1, target=ClassSet(['1']))
    model = engine.fit(fixture.labeled, config, fixture.schema, workers=1)
    return fixture, model


class TestLShape:

    def test_several_rules_and_metarules(self, l_shape):
        _, model = l_shape
        assert len(model.rules) >= 2
        assert model.metarule_count >= 2
        assert len(set([model.metarule_tree.leaf_rule_index(j)
            for j in range(model.metarule_count)])) >= 2

    def test_lookup_matches_brute_force(self, l_shape, random_inputs):
        fixture, model = l_shape
        data = fixture.labeled.data
        inputs = random_inputs(fixture.schema, 2000, low=0.0, high=10.0,
            seed=21)
        for x in inputs:
            assert model.explain(x).rule_index == \
                engine.cre_brute_force(x, model.rules, data)

    def test_inputs_near_the_origin_change_x1_alone(self, l_shape):
        fixture, model = l_shape
        rng = np.random.default_rng(22)
        inputs = np.column_stack([
            rng.uniform(0.0, 2.5, 50), rng.uniform(0.0, 4.5, 50)])
        for x in inputs:
            explanation = model.explain(x, output='0')
            assert explanation.change_dims == (0, )
            text = render.render_explanation(explanation, fixture.schema)
            changes = [line for line in text.splitlines()
                if line.startswith("  change ")]
            assert len(changes) == 1
            assert changes[0].startswith("  change x1 to > ")

    def test_cells_are_constant(self, l_shape):
        fixture, model = l_shape
        data = fixture.labeled.data
        feasibilities = engine.rule_feasibilities(model.rules, data)
        low, high = data.column_min - 1.0, data.column_max + 1.0
        rng = np.random.default_rng(23)
        cells = engine.build_grid(
            model.rules, fixture.schema, model.config.cell_limit)
        assert len(cells) == model.cell_count
        for cell in cells[:50]:
            box = cell.as_rule()
            points = sample_box(rng, box, low, high, 100)
            assert np.all(rules.contains_rows(box, points))
            changes = np.array(
                [rules.changes_rows(points, rule) for rule in model.rules])
            assert np.all(changes == changes[:, :1])
            optima = engine.optimal_rule_indices(
                points, model.rules, feasibilities)
            assert len(set(optima.tolist())) == 1

    def test_metarules_are_pure(self, l_shape):
        fixture, model = l_shape
        data = fixture.labeled.data
        tree = model.metarule_tree
        low, high = data.column_min - 1.0, data.column_max + 1.0
        rng = np.random.default_rng(24)
        for j, metarule in enumerate(tree.metarules):
            expected = tree.leaf_rule_index(j)
            for x in sample_box(rng, metarule, low, high, 100):
                assert engine.cre_brute_force(x, model.rules, data) == \
                    expected

    def test_loaded_rules_are_valid(self, l_shape, tmp_path):
        fixture, model = l_shape
        path = tmp_path / "model.json"
        model.dump(path)
        loaded = engine.load_model(path)
        config = loaded.config
        for rule in loaded.rules:
            assert rules.is_valid(rule, fixture.labeled, loaded.target,
                rho=config.rho, tau=config.tau)

    def test_grid_stays_within_its_bound(self, l_shape):
        fixture, model = l_shape
        assert model.cell_count <= engine.worst_case_cell_count(
            model.rules, fixture.schema)


def test_grid_bound_with_four_categories(colored_model, colored_clusters):
    schema = colored_clusters.schema
    axes = engine.GridAxes(colored_model.rules, schema)
    expected = 1
    for feature in schema.features:
        if isinstance(feature, Numerical):
            expected *= len(axes.bounds(feature.indices[0])) - 1
        else:
            assert feature.width == 4
            assert len(axes.variants(feature)) <= feature.width
            expected *= len(axes.variants(feature))
    assert axes.cell_count == expected == colored_model.cell_count
    assert expected <= engine.worst_case_cell_count(
        colored_model.rules, schema)
    cells = engine.build_grid(colored_model.rules, schema, expected)
    assert len(cells) == expected


def overlapping_clusters(n=2000, seed=8):
    """
    Cluster memberships used directly as outputs, so that the surrogate
    keeps splitting the overlap until its leaves reach the minimum size.
    """
    rng = np.random.default_rng(seed)
    membership = rng.integers(0, 2, n)
    centers = np.where(membership[:, None] == 1, 1.0, -1.0)
    rows = np.round(centers + rng.normal(0.0, 0.8, (n, 2)), 3)
    data = Dataset(FeatureSchema([Numerical('x1'), Numerical('x2')]), rows)
    return LabeledDataset(data, membership, ModelKinds.CLASSIFIER)


@pytest.mark.slow
@pytest.mark.parametrize('settings', [
    [{'trees': T, 'rho': 0.1} for T in (1, 2, 3, 5)],
    [{'trees': 1, 'rho': rho} for rho in (0.05, 0.02, 0.01)],
])
def test_fit_work_grows_with_trees_and_smaller_rho(settings):
    labeled = overlapping_clusters()
    counts, times = [], []
    for kwargs in settings:
        config = engine.RecourseConfig(
            tau=0.8, target=ClassSet(['1']), **kwargs)
        fits = [engine.fit(labeled, config, labeled.schema, workers=1)
            for _ in range(3)]
        counts.append(fits[0].provenance['candidate_count'])
        times.append(min([model.fit_time for model in fits]))
    assert counts == sorted(counts)
    assert times[-1] > times[0]
    # Neighbouring settings may be close enough to swap by timing noise.
    for before, after in zip(times, times[1:]):
        assert after >= 0.75 * before
