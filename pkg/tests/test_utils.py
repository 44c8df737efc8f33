import threading

import pytest

from tree_recourse import utils


@pytest.mark.parametrize('value,expected', [
    (2.5, "2.5"),
    (3.0, "3"),
    (-0.125, "-0.125"),
    (float('inf'), "+inf"),
    (float('-inf'), "-inf"),
])
def test_format_number(value, expected):
    assert utils.format_number(value) == expected


def test_humanize_list():
    assert utils.humanize_list(['rho', 'tau', 'trees']) == \
        "rho, tau, and trees"
    assert utils.humanize_list(['rho', 'tau'], conjunction='or') == \
        "rho or tau"
    assert utils.humanize_list(['rho']) == "rho"
    with pytest.raises(TypeError):
        utils.humanize_list(['rho'], conjunction='nor')


def test_parallel_map_preserves_order():
    def slow_square(i):
        # Later items finish first.
        threading.Event().wait(0.001 * (20 - i))
        return i * i

    assert utils.parallel_map(slow_square, range(20), workers=4) == \
        [i * i for i in range(20)]


def test_parallel_map_serial():
    seen = []
    utils.parallel_map(seen.append, [1, 2, 3], workers=8, serial=True)
    assert seen == [1, 2, 3]


@pytest.mark.parametrize('name', ["TCREX_THREADS", "TREE_RECOURSE_THREADS"])
def test_max_workers_reads_environment(name):
    assert utils.max_workers(env={name: "3"}) == 3
    assert utils.max_workers(env={name: "0"}) == 1
    assert utils.max_workers(env={name: "many"}) >= 1
    assert utils.max_workers(env={}) >= 1


def test_max_workers_prefers_primary_variable():
    env = {"TCREX_THREADS": "2", "TREE_RECOURSE_THREADS": "5"}
    assert utils.max_workers(env=env) == 2
    # An invalid primary value falls back to the alias.
    env = {"TCREX_THREADS": "many", "TREE_RECOURSE_THREADS": "5"}
    assert utils.max_workers(env=env) == 5


def test_ensure_directory(tmp_path):
    path = utils.ensure_directory(tmp_path / "reports" / "fold")
    assert path.is_dir()


def test_message_fn_respects_verbosity(capsys):
    utils.stdout.configure(verbosity=1, styled=False)
    utils.stdout.log("hidden")
    utils.stdout.info("shown")
    captured = capsys.readouterr()
    assert "hidden" not in captured.err
    assert "shown" in captured.out


def test_message_fn_format_does_not_display(capsys):
    utils.stdout.configure(verbosity=2, styled=False)
    text = utils.stdout.info("Fitting", display=False)
    assert "Fitting" in text
    assert capsys.readouterr().out == ""


def test_timer_measures_elapsed_time():
    with utils.Timer() as timer:
        threading.Event().wait(0.01)
    assert timer.elapsed >= 0.0
    assert utils.Timer().elapsed == 0.0
