"""
Siberia-Spheroidal - Tests for the command line

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import pytest

from siberiaspheroidal.cli import (
    ANGULAR_HEADER,
    EXIT_CONFIG,
    EXIT_OK,
    RADIAL_HEADER,
    RunConfig,
    build_parser,
    config_from_args,
    main,
)
from siberiaspheroidal.config_manager import OUTPUT_DIR_ENV, manager
from siberiaspheroidal.core.errors import DomainError
from siberiaspheroidal.figures import FigureSweep, emit_figure_data


def table(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    return [line.split("\t") for line in lines]


@pytest.fixture
def no_env(monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)


def test_radial_run_writes_tables(tmp_path, no_env):
    code = main(["--c-real", "1", "--xi", "1", "--l-count", "3", "--mode", "r12", "--out-dir", str(tmp_path), "-q"])
    assert code == EXIT_OK
    rows = table(tmp_path / "radial.tsv")
    assert rows[0] == list(RADIAL_HEADER)
    assert len(rows) == 4
    assert all(len(r) == len(RADIAL_HEADER) for r in rows)
    assert [r[1] for r in rows[1:]] == ["0", "1", "2"]
    assert (tmp_path / "warnings.tsv").exists()
    assert len(table(tmp_path / "diagnostics.tsv")) == 4


def test_first_kind_only_run(tmp_path, no_env):
    code = main(["--c-real", "2", "--c-imag", "1", "--xi", "0.5", "--l-count", "2", "--mode", "r1",
                 "--diagnostics", "off", "--out-dir", str(tmp_path), "-q"])
    assert code == EXIT_OK
    rows = table(tmp_path / "radial.tsv")
    assert all(len(r) == 10 for r in rows)
    assert not (tmp_path / "diagnostics.tsv").exists()


def test_angular_run_on_theta_grid(tmp_path, no_env):
    code = main(["--c-real", "2", "--mode", "ang-deriv", "--l-count", "2", "--theta-first", "0",
                 "--theta-incr", "0.5", "--theta-count", "4", "--out-dir", str(tmp_path), "-q"])
    assert code == EXIT_OK
    rows = table(tmp_path / "angular.tsv")
    assert rows[0] == list(ANGULAR_HEADER)
    assert len(rows) == 1 + 2 * 4


def test_unknown_run_file_key_is_a_config_error(tmp_path, no_env):
    run_file = tmp_path / "run.txt"
    run_file.write_text("frobnicate = 3\n", encoding="utf-8")
    assert main(["--config", str(run_file), "--out-dir", str(tmp_path), "-q"]) == EXIT_CONFIG


def test_out_of_range_values_are_config_errors(tmp_path, no_env):
    assert main(["--c-imag", "-1", "--out-dir", str(tmp_path), "-q"]) == EXIT_CONFIG
    outside = ["--mode", "ang", "--eta-first", "0.9", "--eta-incr", "0.2", "--eta-count", "3"]
    assert main(outside + ["--out-dir", str(tmp_path), "-q"]) == EXIT_CONFIG


def test_flags_override_run_file(tmp_path, no_env):
    run_file = tmp_path / "run.yaml"
    run_file.write_text("c_real: 3.0\nl_count: 5\ntheta_first: 0.1\n", encoding="utf-8")
    args = build_parser().parse_args(["--config", str(run_file), "--l-count", "2"])
    config = config_from_args(args, manager(tmp_path / "absent.yaml"))
    assert config.c == 3.0 + 0j
    assert config.l_count == 2
    assert config.grid == "theta"
    assert config.grid_first == 0.1


def test_validate_rejects_unknown_grid():
    with pytest.raises(DomainError):
        RunConfig(grid="phi").validate()
    assert RunConfig(grid="theta", grid_first=0.0).eta_values[0] == 1.0


def test_figure_run(tmp_path, no_env):
    code = main(["--figure", "ms_norm_error", "--c-real", "2", "--sweep-c-imag", "0", "0.5",
                 "--l-count", "3", "--out-dir", str(tmp_path), "-q"])
    assert code == EXIT_OK
    rows = table(tmp_path / "figure_ms_norm_error.tsv")
    assert rows[0] == ["c_imag", "series", "ms_norm_error"]
    assert len(rows) == 3


def test_radial_run_at_larger_size_parameter(tmp_path, no_env):
    code = main(["--c-real", "50", "--c-imag", "10", "--xi", "0.5", "--l-count", "40", "--mode", "r12",
                 "--out-dir", str(tmp_path), "-q"])
    assert code == EXIT_OK
    rows = table(tmp_path / "radial.tsv")
    assert len(rows) == 41


@pytest.mark.slow
@pytest.mark.parametrize("c_real", [20.0, 100.0])
def test_normalization_loss_stays_small_for_moderate_imaginary_part(c_real):
    sweep = FigureSweep(c_real=c_real, c_imag=(0.0, 5.0, 10.0), m=0, l_count=20)
    rows = emit_figure_data("ms_norm_error", sweep)
    losses = {c_i: value for c_i, _, value in rows}
    assert all(value <= 2.0 for value in losses.values())
    assert losses[0.0] <= losses[10.0]
