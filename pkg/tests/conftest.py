import numpy as np
import pytest

from tree_recourse import engine, rules, synth, utils
from tree_recourse.data import (
    CategoricalGroup, ClassSet, Dataset, FeatureSchema, LabeledDataset,
    Numerical)
from tree_recourse.models import ModelKinds
from tree_recourse.surrogate import Internal, Leaf


@pytest.fixture(autouse=True)
def quiet_stdout():
    utils.stdout.configure(verbosity=0, styled=False)
    yield
    utils.stdout.configure(verbosity=1, styled=True)


@pytest.fixture
def plane_schema():
    return FeatureSchema([Numerical('x1'), Numerical('x2')])


@pytest.fixture
def color_schema():
    return FeatureSchema([
        Numerical('x1'),
        CategoricalGroup('color', ['red', 'blue', 'green'])
    ])


@pytest.fixture
def line_schema():
    return FeatureSchema([Numerical('x')])


@pytest.fixture(scope='session')
def clusters():
    return synth.make_clusters(seed=0, n=300)


@pytest.fixture(scope='session')
def colored_clusters():
    return synth.make_clusters(seed=1, n=400, categorical=True)


@pytest.fixture(scope='session')
def cluster_config():
    return engine.RecourseConfig(
        tau=0.8, rho=0.1, target=ClassSet(['1']))


@pytest.fixture(scope='session')
def cluster_model(clusters, cluster_config):
    return engine.fit(
        clusters.labeled, cluster_config, clusters.schema, workers=1)


@pytest.fixture(scope='session')
def colored_model(colored_clusters):
    config = engine.RecourseConfig(
        tau=0.75, rho=0.1, target=ClassSet(['1']))
    return engine.fit(
        colored_clusters.labeled, config, colored_clusters.schema, workers=1)


@pytest.fixture
def noisy_labeled(plane_schema):
    # Labels drawn independently of the inputs.
    rng = np.random.default_rng(3)
    data = Dataset(plane_schema, np.round(rng.normal(0, 1, (200, 2)), 3))
    return LabeledDataset(
        data, rng.integers(0, 2, 200), ModelKinds.CLASSIFIER)


@pytest.fixture
def two_rule_model(plane_schema):
    """
    A model over (x1, x2) whose metarule tree splits once at x1 = 3: inputs
    with x1 <= 3 are answered by R0 = {x1 <= 3} and the others by
    R1 = {x2 > 5}.
    """
    inf = np.inf
    rule_0 = rules.Rule([-inf, -inf], [3.0, inf])
    rule_1 = rules.Rule([-inf, 5.0], [inf, inf])
    root = Internal(
        split_dim=0,
        threshold=3.0,
        left=Leaf(prediction=0, fraction=0.5, count=5),
        right=Leaf(prediction=1, fraction=0.5, count=5),
        fraction=1.0,
        count=10
    )
    return engine.RuleModel(
        schema=plane_schema,
        config=engine.RecourseConfig(
            tau=0.9, rho=0.1, target=ClassSet(['1'])),
        kind=ModelKinds.CLASSIFIER,
        rules=[rule_0, rule_1],
        stats=[
            rules.RuleStats(
                feasibility=0.4, accuracy=0.95, complexity=1, support=4),
            rules.RuleStats(
                feasibility=0.3, accuracy=0.9, complexity=1, support=3),
        ],
        metarule_tree=engine.MetaruleTree(root, plane_schema.D)
    )


def _random_inputs(schema, n, low=-4.0, high=4.0, seed=0):
    rng = np.random.default_rng(seed)
    rows = np.zeros((n, schema.D))
    for feature in schema.features:
        if isinstance(feature, Numerical):
            rows[:, feature.indices[0]] = rng.uniform(low, high, n)
        else:
            hot = rng.integers(0, feature.width, n)
            rows[np.arange(n), np.array(feature.indices)[hot]] = 1.0
    return rows


@pytest.fixture
def random_inputs():
    """
    Draws uniform numerical values and a uniformly chosen hot category for
    every categorical group.
    """
    return _random_inputs
