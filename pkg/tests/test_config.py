"""
Siberia-Spheroidal - Tests for the configuration manager

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from pathlib import Path

import pytest

from siberiaspheroidal.config_manager import OUTPUT_DIR_ENV, manager


def test_missing_file_gives_defaults(tmp_path):
    cfg = manager(tmp_path / "absent.yaml")
    assert cfg.load_config() == cfg.default_config
    assert cfg.get_precision_mode() == "double"
    assert cfg.get_minacc() is None


def test_bad_yaml_falls_back_to_defaults(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("precision: [unclosed\n", encoding="utf-8")
    cfg = manager(path)
    assert cfg.load_config() == cfg.default_config


def test_partial_sections_are_merged(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("precision:\n  mode: extended\nthresholds:\n  use_integral: false\n", encoding="utf-8")
    cfg = manager(path)
    assert cfg.get_precision_mode() == "extended"
    assert cfg.get_warn_digits() == 6
    thresholds = cfg.get_thresholds()
    assert thresholds["use_integral"] is False
    assert thresholds["use_legendre"] is True


def test_environment_overrides_output_dir(tmp_path, monkeypatch):
    cfg = manager(tmp_path / "absent.yaml")
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
    assert cfg.get_output_dir() == Path("siberia_output")
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "out"))
    assert cfg.get_output_dir() == tmp_path / "out"


def test_run_file_key_value_lines(tmp_path):
    path = tmp_path / "run.txt"
    path.write_text("c_real = 2.5   # real part\nmode = r1\n\nl-count = 4\n", encoding="utf-8")
    values = manager().load_run_file(path)
    assert values == {"c_real": 2.5, "mode": "r1", "l_count": 4}


def test_run_file_yaml_mapping(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("c_imag: 1.5\nsweep-c-imag: [0, 1, 2]\n", encoding="utf-8")
    values = manager().load_run_file(path)
    assert values == {"c_imag": 1.5, "sweep_c_imag": [0, 1, 2]}


def test_run_file_rejects_stray_lines(tmp_path):
    path = tmp_path / "run.txt"
    path.write_text("just some words\n", encoding="utf-8")
    with pytest.raises(ValueError):
        manager().load_run_file(path)
