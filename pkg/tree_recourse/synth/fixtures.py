import collections

import numpy as np

from tree_recourse import surrogate, utils
from tree_recourse.data import (
    CategoricalGroup, Dataset, FeatureSchema, LabeledDataset, Numerical,
    write_csv)
from tree_recourse.models import ModelKinds


__all__ = (
    'Fixture', 'CATEGORIES', 'OUTPUT_COLUMN', 'BLACK_BOX_RHO', 'PROBLEMS',
    'make_clusters', 'make_l_shape', 'make_regression', 'write_fixture'
)


CATEGORIES = ('a', 'b', 'c', 'd')
OUTPUT_COLUMN = 'output'

# The minimum leaf fraction of the trees standing in for the black box.
BLACK_BOX_RHO = 0.02


Fixture = collections.namedtuple('Fixture', ['schema', 'labeled', 'black_box'])


def _schema(numerical, categorical):
    features = [Numerical(name) for name in numerical]
    if categorical:
        features.append(CategoricalGroup('color', list(CATEGORIES)))
    return FeatureSchema(features)


def _one_hot(rng, n):
    hot = rng.integers(0, len(CATEGORIES), n)
    encoded = np.zeros((n, len(CATEGORIES)))
    encoded[np.arange(n), hot] = 1.0
    return hot, encoded


def _black_box(data, targets, kind, seed):
    labeled = LabeledDataset(data, targets, kind)
    forest = surrogate.grow_forest(
        labeled, T=1, rho=BLACK_BOX_RHO, kind=kind, seed=seed)
    black_box = surrogate.SurrogateModel(forest, schema=data.schema)
    outputs = black_box.predict_batch(data.rows, workers=1)
    return Fixture(
        schema=data.schema,
        labeled=LabeledDataset(data, outputs, kind),
        black_box=black_box
    )


def make_clusters(seed=0, n=500, categorical=False):
    """
    Two Gaussian clusters in the plane centred at (-1, -1) and (1, 1), the
    black box being a tree classifier grown over the cluster memberships.
    With `categorical` a four-category `color` feature is added, the
    membership of rows colored `d` being flipped with probability 0.5.
    """
    rng = np.random.default_rng(seed)
    membership = rng.integers(0, 2, n)
    centers = np.where(membership[:, None] == 1, 1.0, -1.0)
    rows = np.round(centers + rng.normal(0.0, 0.8, (n, 2)), 3)
    if categorical:
        hot, encoded = _one_hot(rng, n)
        flip = (hot == len(CATEGORIES) - 1) & (rng.random(n) < 0.5)
        membership = np.where(flip, 1 - membership, membership)
        rows = np.hstack([rows, encoded])
    data = Dataset(_schema(['x1', 'x2'], categorical), rows)
    utils.stdout.log(f"Generated {n} cluster rows with seed {seed}.")
    return _black_box(data, membership, ModelKinds.CLASSIFIER, seed)


def make_l_shape(seed=0, n=500, categorical=False):
    """
    Uniform rows over [0, 10] x [0, 10] labelled 1 inside the L-shaped region
    where x1 > 7, or where x1 > 3 and x2 > 5, the black box being a tree
    classifier grown over those labels.  The region is covered by two
    maximal rules, so that inputs near the origin are answered by the rule
    needing a change of x1 alone and the others by the more feasible rule.
    With `categorical` an irrelevant four-category `color` feature is added.
    """
    rng = np.random.default_rng(seed)
    rows = np.round(rng.uniform(0.0, 10.0, (n, 2)), 3)
    x1, x2 = rows[:, 0], rows[:, 1]
    membership = ((x1 > 7.0) | ((x1 > 3.0) & (x2 > 5.0))).astype(int)
    if categorical:
        _, encoded = _one_hot(rng, n)
        rows = np.hstack([rows, encoded])
    data = Dataset(_schema(['x1', 'x2'], categorical), rows)
    utils.stdout.log(f"Generated {n} L-shaped rows with seed {seed}.")
    return _black_box(data, membership, ModelKinds.CLASSIFIER, seed)


def make_regression(seed=0, n=500, categorical=False):
    """
    A noisy one dimensional signal over `x1` with an irrelevant `x2`, the
    black box being a regression tree grown over the signal.
    """
    rng = np.random.default_rng(seed)
    x1 = np.round(rng.uniform(0.0, 10.0, n), 3)
    x2 = np.round(rng.normal(0.0, 1.0, n), 3)
    signal = np.sin(x1) + 0.1 * x1 + rng.normal(0.0, 0.1, n)
    rows = np.column_stack([x1, x2])
    if categorical:
        hot, encoded = _one_hot(rng, n)
        signal = signal + 0.5 * (hot == 0)
        rows = np.hstack([rows, encoded])
    data = Dataset(_schema(['x1', 'x2'], categorical), rows)
    utils.stdout.log(f"Generated {n} regression rows with seed {seed}.")
    return _black_box(data, signal, ModelKinds.REGRESSOR, seed)


# The synthetic problems by the name the `synth` command takes.
PROBLEMS = collections.OrderedDict([
    ('clusters', make_clusters),
    ('l_shape', make_l_shape),
    ('regression', make_regression),
])


def write_fixture(fixture, directory):
    """
    Writes `data.csv` (with the black-box outputs in the `output` column),
    `schema.yaml` and `black_box.json` into the directory.
    """
    directory = utils.ensure_directory(directory)
    schema = fixture.schema
    rows = []
    for x, output in zip(fixture.labeled.rows, fixture.labeled.outputs):
        decoded = schema.decode_row(x)
        rows.append([
            value if isinstance(value, str) else utils.format_number(value)
            for value in decoded.values()
        ] + [output if isinstance(output, str)
            else utils.format_number(output)])
    write_csv(directory / "data.csv", schema.feature_names + [OUTPUT_COLUMN],
        rows)
    schema.dump(directory / "schema.yaml")
    fixture.black_box.dump(directory / "black_box.json")
    return directory
