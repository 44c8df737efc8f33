import numpy as np

from tree_recourse import synth
from tree_recourse.data import FeatureSchema, load_labeled_csv
from tree_recourse.models import ModelKinds
from tree_recourse.surrogate import SurrogateModel


def test_clusters_are_seeded():
    first = synth.make_clusters(seed=5, n=100)
    second = synth.make_clusters(seed=5, n=100)
    assert np.array_equal(first.labeled.rows, second.labeled.rows)
    assert first.labeled.outputs.tolist() == second.labeled.outputs.tolist()
    assert first.black_box.surrogate.fingerprint == \
        second.black_box.surrogate.fingerprint


def test_cluster_labels_come_from_the_black_box(clusters):
    assert clusters.labeled.labels == ['0', '1']
    assert clusters.black_box.predict_batch(
        clusters.labeled.rows, workers=1) == clusters.labeled.outputs.tolist()


def test_categorical_clusters(colored_clusters):
    schema = colored_clusters.schema
    assert schema.feature_names == ['x1', 'x2', 'color']
    assert schema.feature('color').categories == list(synth.CATEGORIES)
    assert colored_clusters.labeled.rows.shape == (400, 6)


def test_l_shape_labels_follow_the_region():
    fixture = synth.make_l_shape(seed=0, n=300)
    x1, x2 = fixture.labeled.rows.T
    expected = np.where((x1 > 7.0) | ((x1 > 3.0) & (x2 > 5.0)), '1', '0')
    assert np.mean(fixture.labeled.outputs == expected) >= 0.95
    assert fixture.labeled.labels == ['0', '1']
    assert list(synth.PROBLEMS) == ['clusters', 'l_shape', 'regression']


def test_regression():
    fixture = synth.make_regression(seed=0, n=50, categorical=True)
    assert fixture.labeled.kind == ModelKinds.REGRESSOR
    assert fixture.schema.D == 6
    assert all([isinstance(y, float) for y in fixture.labeled.outputs])


def test_write_fixture(tmp_path, clusters):
    directory = synth.write_fixture(clusters, tmp_path / "fixture")
    schema = FeatureSchema.load(directory / "schema.yaml")
    assert schema == clusters.schema
    labeled = load_labeled_csv(
        directory / "data.csv", schema, synth.OUTPUT_COLUMN,
        ModelKinds.CLASSIFIER)
    assert np.array_equal(labeled.rows, clusters.labeled.rows)
    assert labeled.outputs.tolist() == clusters.labeled.outputs.tolist()
    black_box = SurrogateModel.load(directory / "black_box.json")
    assert black_box.surrogate.fingerprint == \
        clusters.black_box.surrogate.fingerprint
