import json

import pytest
from click.testing import CliRunner

from tree_recourse import engine, render, synth
from tree_recourse.cli import cli
from tree_recourse.data import write_csv


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def fixture_dir(tmp_path, clusters):
    return synth.write_fixture(clusters, tmp_path / "clusters")


@pytest.fixture
def invoke(runner):
    def invoke(*args):
        return runner.invoke(cli, ['--quiet'] + [str(a) for a in args])
    return invoke


def fit_args(directory, model_out, *extra):
    return [
        'fit',
        '--data', directory / "data.csv",
        '--schema', directory / "schema.yaml",
        '--model-out', model_out,
    ] + list(extra)


@pytest.fixture
def fitted(invoke, fixture_dir, tmp_path):
    model_out = tmp_path / "model.json"
    result = invoke(*fit_args(
        fixture_dir, model_out,
        '--output-column', 'output',
        '--tau', '0.8', '--rho', '0.1',
        '--target-class', '1'
    ))
    assert result.exit_code == 0, result.output
    return model_out


def test_synth(invoke, tmp_path):
    result = invoke(
        'synth', '--report-dir', tmp_path / "out", '--rows', 120,
        '--seed', 3, '--categorical')
    assert result.exit_code == 0, result.output
    for name in ("data.csv", "schema.yaml", "black_box.json"):
        assert (tmp_path / "out" / name).exists()
    header = (tmp_path / "out" / "data.csv").read_text().splitlines()[0]
    assert header == "x1,x2,color,output"


def test_synth_l_shape(invoke, tmp_path):
    result = invoke(
        'synth', '--report-dir', tmp_path / "out", '--rows', 120,
        '--problem', 'l_shape')
    assert result.exit_code == 0, result.output
    header = (tmp_path / "out" / "data.csv").read_text().splitlines()[0]
    assert header == "x1,x2,output"


def test_fit_matches_library_fit(fitted, cluster_model):
    assert engine.load_model(fitted).to_json() == cluster_model.to_json()


def test_fit_with_black_box(invoke, fixture_dir, tmp_path, cluster_model):
    model_out = tmp_path / "model.json"
    result = invoke(*fit_args(
        fixture_dir, model_out,
        '--black-box', fixture_dir / "black_box.json",
        '--tau', '0.8', '--rho', '0.1',
        '--target-class', '1'
    ))
    assert result.exit_code == 0, result.output
    assert engine.load_model(model_out).to_json() == cluster_model.to_json()


def test_fit_untargeted(invoke, fixture_dir, tmp_path):
    model_out = tmp_path / "model.json"
    result = invoke(*fit_args(
        fixture_dir, model_out,
        '--output-column', 'output',
        '--tau', '0.8', '--rho', '0.1',
        '--target-untargeted'
    ))
    assert result.exit_code == 0, result.output
    model = engine.load_model(model_out)
    assert isinstance(model, engine.RuleModelSet)
    assert sorted(model.members) == ['0', '1']


@pytest.mark.parametrize('extra', [
    ['--tau', '1.5', '--rho', '0.1', '--target-class', '1'],
    ['--rho', '0.1', '--target-class', '1'],
    ['--tau', '0.8', '--rho', '0.1'],
    ['--tau', '0.8', '--rho', '0.1', '--target-class', '1',
        '--target-untargeted'],
    ['--tau', '0.8', '--rho', '0.1', '--target-class', '1',
        '--target-split'],
])
def test_fit_usage_errors(invoke, fixture_dir, tmp_path, extra):
    model_out = tmp_path / "model.json"
    result = invoke(*fit_args(
        fixture_dir, model_out, '--output-column', 'output', *extra))
    assert result.exit_code == 1
    assert not model_out.exists()


def test_fit_requires_outputs(invoke, fixture_dir, tmp_path):
    result = invoke(*fit_args(
        fixture_dir, tmp_path / "model.json",
        '--tau', '0.8', '--rho', '0.1', '--target-class', '1'))
    assert result.exit_code == 1


def test_fit_unknown_column(invoke, fixture_dir, tmp_path):
    result = invoke(*fit_args(
        fixture_dir, tmp_path / "model.json",
        '--output-column', 'label',
        '--tau', '0.8', '--rho', '0.1', '--target-class', '1'))
    assert result.exit_code == 1


def test_fit_without_valid_rules(invoke, tmp_path, noisy_labeled,
        plane_schema):
    write_csv(
        tmp_path / "data.csv",
        ['x1', 'x2', 'output'],
        [[str(x[0]), str(x[1]), y]
            for x, y in zip(noisy_labeled.rows, noisy_labeled.outputs)]
    )
    plane_schema.dump(tmp_path / "schema.yaml")
    result = invoke(*fit_args(
        tmp_path, tmp_path / "model.json",
        '--output-column', 'output',
        '--tau', '1.0', '--rho', '0.5', '--target-class', '1'))
    assert result.exit_code == 2


def test_fit_over_cell_limit(invoke, fixture_dir, tmp_path):
    result = invoke(*fit_args(
        fixture_dir, tmp_path / "model.json",
        '--output-column', 'output',
        '--tau', '0.8', '--rho', '0.1', '--target-class', '1',
        '--cell-limit', '1'))
    assert result.exit_code == 3


def test_explain_json(invoke, fitted, fixture_dir, clusters):
    result = invoke(
        'explain', '--model-in', fitted,
        '--data', fixture_dir / "data.csv",
        '--format', 'json')
    assert result.exit_code == 0, result.output
    documents = [json.loads(line) for line in result.output.splitlines()]
    assert len(documents) == clusters.labeled.N
    assert all([d['rule'].startswith("R") for d in documents])
    assert all([d['output'] is None for d in documents])


def test_explain_text(invoke, fitted, fixture_dir, tmp_path):
    result = invoke(
        'explain', '--model-in', fitted,
        '--data', fixture_dir / "data.csv",
        '--output-column', 'output',
        '--report-dir', tmp_path / "reports")
    assert result.exit_code == 0, result.output
    assert "Target: {1}" in result.output
    assert "The instance already satisfies target {1}." in result.output
    assert (tmp_path / "reports" / "explanations.txt").exists()
    assert (tmp_path / "reports" / "explanations.jsonl").exists()


def test_explain_csv(invoke, fitted, fixture_dir, clusters):
    result = invoke(
        'explain', '--model-in', fitted,
        '--data', fixture_dir / "data.csv",
        '--format', 'csv')
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == \
        "row,rule,metarule,sparsity,already_satisfied,changes,keeps"
    assert len(lines) == clusters.labeled.N + 1


def test_render(invoke, fitted, fixture_dir, tmp_path):
    result = invoke(
        'render', '--model-in', fitted, '--summary',
        '--sample', fixture_dir / "data.csv",
        '--report-dir', tmp_path / "reports")
    assert result.exit_code == 0, result.output
    assert "Rule R0 (" in result.output
    assert f"* {render.CAVEAT}" in result.output
    assert "x1: change" in result.output
    assert (tmp_path / "reports" / "tree.txt").exists()


def test_render_rule_plot(invoke, fitted, fixture_dir, tmp_path):
    result = invoke(
        'render', '--model-in', fitted,
        '--sample', fixture_dir / "data.csv",
        '--output-column', 'output',
        '--plot-rule', 0,
        '--report-dir', tmp_path / "reports")
    assert result.exit_code == 0, result.output
    assert (tmp_path / "reports" / "rule-R0.csv").exists()


def test_render_rule_plot_requires_sample(invoke, fitted, tmp_path):
    result = invoke(
        'render', '--model-in', fitted, '--plot-rule', 0,
        '--report-dir', tmp_path / "reports")
    assert result.exit_code == 1


def test_evaluate_model(invoke, fitted, fixture_dir):
    result = invoke(
        'evaluate', '--model-in', fitted,
        '--data', fixture_dir / "data.csv",
        '--output-column', 'output')
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output)
    assert summary['folds'] == 1
    assert summary['succeeded'] == 1


def test_evaluate_cross_validation(invoke, fixture_dir, tmp_path):
    result = invoke(
        'evaluate',
        '--data', fixture_dir / "data.csv",
        '--schema', fixture_dir / "schema.yaml",
        '--output-column', 'output',
        '--tau', '0.8', '--rho', '0.1', '--target-class', '1',
        '--folds', 2, '--tolerate-failures',
        '--report-dir', tmp_path / "reports")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['folds'] == 2
    assert (tmp_path / "reports" / "summary.json").exists()


def test_sweep(invoke, fixture_dir, tmp_path):
    result = invoke(
        'sweep',
        '--data', fixture_dir / "data.csv",
        '--schema', fixture_dir / "schema.yaml",
        '--output-column', 'output',
        '--tau', '0.8,1.0', '--rho', '0.1', '--target-class', '1',
        '--folds', 2,
        '--report-dir', tmp_path / "sweep")
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "sweep" / "sweep.csv").read_text().splitlines()
    assert len(lines) == 3


def test_sweep_validates_every_setting(invoke, fixture_dir, tmp_path):
    result = invoke(
        'sweep',
        '--data', fixture_dir / "data.csv",
        '--schema', fixture_dir / "schema.yaml",
        '--output-column', 'output',
        '--tau', '0.8,1.5', '--rho', '0.1', '--target-class', '1',
        '--report-dir', tmp_path / "sweep")
    assert result.exit_code == 1
    assert not (tmp_path / "sweep" / "sweep.csv").exists()
