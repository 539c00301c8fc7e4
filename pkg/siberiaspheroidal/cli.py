"""
Siberia-Spheroidal - Command-line front end

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import argparse
import dataclasses
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .config_manager import manager
from .core.errors import DomainError, SpheroidalError
from .core.precision import PRECISION_MODES, check_finite, check_size_parameter
from .figures import FIGURE_KINDS, FigureSweep, emit_figure_data, figure_header
from .radial.selector import SelectionOptions
from .solver import SiberiaOblateSolver
from .utils.display import SiberiaTableWriter
from .utils.logger import WarningCollector, configure_logging, get_logger

logger = get_logger(__name__)

RUN_MODES = ("r1", "r12", "ang", "ang-deriv")
NORM_SCHEMES = {"ms": "meixner_schafke", "unit": "unit"}

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_COMPUTE = 2


@dataclass(frozen=True)
class RunConfig:
    """
    一次运行的设置 / Settings of one run

    Attributes:
        m_first, m_incr, m_count: m 的扫描 / sweep over m
        l_count: 每个 m 的 l 个数 / number of l values per m
        grid: "eta" 或 "theta"（弧度）/ angular grid given as η or θ in radians
        mode: r1 / r12 / ang / ang-deriv
        norm: ms / unit
        figure: 只输出图数据时的 kind / figure kind when only figure data is wanted
    """

    c: complex = 1 + 0j
    xi: float = 1.0
    m_first: int = 0
    m_incr: int = 1
    m_count: int = 1
    l_count: int = 3
    grid: str = "eta"
    grid_first: float = 0.0
    grid_incr: float = 0.1
    grid_count: int = 11
    mode: str = "r12"
    norm: str = "ms"
    precision: str = "double"
    minacc: Optional[int] = None
    warn_digits: int = 6
    out_dir: Path = Path("siberia_output")
    diagnostics: bool = True
    figure: Optional[str] = None
    thresholds: Dict[str, Any] = field(default_factory=dict)
    sweep_c_imag: Tuple[float, ...] = ()

    @property
    def m_values(self) -> List[int]:
        return [self.m_first + k * self.m_incr for k in range(self.m_count)]

    @property
    def grid_values(self) -> List[float]:
        return [self.grid_first + k * self.grid_incr for k in range(self.grid_count)]

    @property
    def eta_values(self) -> List[float]:
        if self.grid == "theta":
            return [max(-1.0, min(1.0, math.cos(t))) for t in self.grid_values]
        return self.grid_values

    def validate(self) -> "RunConfig":
        """
        检查取值范围 / Check ranges

        Raises:
            DomainError: 数值越界 / a value is out of range
        """
        check_size_parameter(self.c)
        check_finite(self.xi)
        if self.xi < 0:
            raise DomainError(f"xi must be non-negative, got {self.xi}")
        if min(self.m_count, self.l_count, self.grid_count) < 1:
            raise DomainError("m_count, l_count and grid_count must be at least 1")
        if self.m_first < 0 or min(self.m_values) < 0:
            raise DomainError("every m must be non-negative")
        if self.mode not in RUN_MODES:
            raise DomainError(f"mode must be one of {RUN_MODES}, got {self.mode!r}")
        if self.norm not in NORM_SCHEMES:
            raise DomainError(f"norm must be one of {tuple(NORM_SCHEMES)}, got {self.norm!r}")
        if self.precision not in PRECISION_MODES:
            raise DomainError(f"precision must be one of {PRECISION_MODES}, got {self.precision!r}")
        if self.grid not in ("eta", "theta"):
            raise DomainError(f"grid must be eta or theta, got {self.grid!r}")
        if self.mode in ("ang", "ang-deriv") and self.grid == "eta":
            for eta in self.grid_values:
                if abs(eta) > 1.0 + 1e-12:
                    raise DomainError(f"eta grid value {eta} outside [-1, 1]")
        if self.figure is not None and self.figure not in FIGURE_KINDS:
            raise DomainError(f"unsupported figure kind {self.figure!r}")
        return self

    def options(self) -> SelectionOptions:
        known = {f.name for f in dataclasses.fields(SelectionOptions)}
        picked = {k: v for k, v in self.thresholds.items() if k in known}
        return SelectionOptions(warn_digits=self.warn_digits, **picked)


# ---------------------------------------------------------------------------
# 参数解析 / argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siberia-spheroidal",
        description="Oblate spheroidal radial and angular functions for complex size parameter c",
    )
    parser.add_argument("--config", type=Path, help="run file (YAML mapping or key=value lines)")
    parser.add_argument("--c-real", type=float)
    parser.add_argument("--c-imag", type=float)
    parser.add_argument("--xi", type=float)
    parser.add_argument("--m-first", type=int)
    parser.add_argument("--m-incr", type=int)
    parser.add_argument("--m-count", type=int)
    parser.add_argument("--l-count", type=int)
    for prefix in ("eta", "theta"):
        parser.add_argument(f"--{prefix}-first", type=float)
        parser.add_argument(f"--{prefix}-incr", type=float)
        parser.add_argument(f"--{prefix}-count", type=int)
    parser.add_argument("--mode", choices=RUN_MODES)
    parser.add_argument("--norm", choices=tuple(NORM_SCHEMES))
    parser.add_argument("--precision", choices=PRECISION_MODES)
    parser.add_argument("--minacc", type=int)
    parser.add_argument("--warn-digits", type=int)
    parser.add_argument("--out-dir", type=Path)
    parser.add_argument("--diagnostics", choices=("on", "off"))
    parser.add_argument("--figure", choices=FIGURE_KINDS)
    parser.add_argument("--sweep-c-imag", type=float, nargs="+", help="c_i values for --figure sweeps")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    return parser


def _flatten(values: Dict[str, Any], settings: Dict[str, Any]) -> None:
    """把运行文件的键合并到 settings / fold run-file keys into the settings"""
    for key, value in values.items():
        key = key.replace("-", "_")
        if key in ("theta_first", "theta_incr", "theta_count"):
            settings["grid"] = "theta"
            settings[key.replace("theta", "grid")] = value
        elif key in ("eta_first", "eta_incr", "eta_count"):
            settings[key.replace("eta", "grid")] = value
        elif key == "diagnostics" and isinstance(value, str):
            settings[key] = value.lower() in ("on", "true", "yes", "1")
        else:
            settings[key] = value


def config_from_args(args: argparse.Namespace, config_manager: Optional[manager] = None) -> RunConfig:
    """
    合并默认值、config.yaml、--config 文件与命令行 / Defaults < config.yaml < --config < flags

    Raises:
        OSError, ValueError: 运行文件无法读取或解析 / unreadable or malformed run file
        DomainError: 取值越界 / values out of range
    """
    config_manager = config_manager if config_manager is not None else manager()
    base = config_manager.load_config()
    settings: Dict[str, Any] = {
        "precision": base["precision"].get("mode", "double"),
        "minacc": base["precision"].get("minacc"),
        "warn_digits": base["precision"].get("warn_digits", 6),
        "out_dir": config_manager.get_output_dir(),
        "diagnostics": bool(base["output"].get("diagnostics", True)),
        "thresholds": dict(base.get("thresholds", {})),
    }
    if args.config is not None:
        _flatten(config_manager.load_run_file(args.config), settings)

    flags = {k: v for k, v in vars(args).items() if v is not None and k not in ("config", "verbose", "quiet")}
    if "diagnostics" in flags:
        flags["diagnostics"] = flags["diagnostics"] == "on"
    _flatten(flags, settings)

    c_real = float(settings.pop("c_real", 1.0))
    c_imag = float(settings.pop("c_imag", 0.0))
    settings["c"] = complex(c_real, c_imag)
    settings["out_dir"] = Path(settings["out_dir"])
    if "sweep_c_imag" in settings:
        settings["sweep_c_imag"] = tuple(float(v) for v in settings["sweep_c_imag"])
    known = {f.name for f in dataclasses.fields(RunConfig)}
    unknown = sorted(set(settings) - known)
    if unknown:
        raise ValueError(f"unknown settings: {', '.join(unknown)}")
    return RunConfig(**settings).validate()


# ---------------------------------------------------------------------------
# 输出 / outputs
# ---------------------------------------------------------------------------

RADIAL_HEADER = (
    "m", "l",
    "r1_re", "r1_im", "r1_exp", "r1_acc",
    "r1p_re", "r1p_im", "r1p_exp", "r1p_acc",
    "r2_re", "r2_im", "r2_exp", "r2_acc",
    "r2p_re", "r2p_im", "r2p_exp", "r2p_acc",
    "method_r2", "eta_used",
)
ANGULAR_HEADER = ("m", "l", "eta", "s1_re", "s1_im", "s1_exp", "s1_acc", "ds1_re", "ds1_im", "ds1_exp", "ds1_acc")
DIAGNOSTICS_HEADER = ("m", "l", "record")
WARNINGS_HEADER = ("kind", "m", "l", "other_l", "detail")


def _radial_rows(config: RunConfig, solver: SiberiaOblateSolver, writer: SiberiaTableWriter) -> Tuple[List, List]:
    if config.mode == "r1":
        if config.xi == 0:
            results = solver.radial(0.0)
            return [[r.m, r.l, r.r1, r.acc_r1, r.r1p, r.acc_r1] for r in results], results
        fragments = solver.radial_first_kind(config.xi)
        rows = [[solver.m, l, f.r1, f.acc_r1, f.r1p, f.acc_r1] for l, f in fragments.items()]
        return rows, []
    results = solver.radial(config.xi)
    rows = [
        [r.m, r.l, r.r1, r.acc_r1, r.r1p, r.acc_r1, r.r2, r.acc_r2, r.r2p, r.acc_r2, r.method_r2, r.eta_used]
        for r in results
    ]
    return rows, results


def _angular_rows(config: RunConfig, solver: SiberiaOblateSolver) -> List:
    derivatives = config.mode == "ang-deriv"
    rows = []
    for result in solver.angular(config.eta_values, NORM_SCHEMES[config.norm], derivatives=derivatives):
        for k, eta in enumerate(result.eta):
            row = [result.m, result.l, eta, result.values[k], result.accuracy_digits[k]]
            if derivatives:
                row.extend([result.derivs[k], result.deriv_accuracy[k]])
            rows.append(row)
    return rows


def run(config: RunConfig) -> int:
    """
    执行一次运行并写出文件 / Execute a run and write its files

    精度警告不影响退出码。
    Accuracy warnings never change the exit status.

    Returns:
        0 成功 / success
    """
    writer = SiberiaTableWriter()
    out_dir = config.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)

    if config.figure is not None:
        sweep = FigureSweep(
            c_real=config.c.real, c_imag=config.sweep_c_imag or (config.c.imag,), m=config.m_first,
            xi=config.xi if config.xi > 0 else 0.5, l_count=config.l_count, mode=config.precision,
        )
        rows = emit_figure_data(config.figure, sweep)
        path = writer.write(out_dir / f"figure_{config.figure}.tsv", figure_header(config.figure), rows)
        logger.info("figure data written to %s", path)
        return EXIT_OK

    warnings = WarningCollector()
    radial_rows: List = []
    angular_rows: List = []
    diagnostic_rows: List = []
    for m in config.m_values:
        solver = SiberiaOblateSolver(
            m, config.c, config.l_count, config.precision, config.minacc, config.options(),
            float(config.thresholds.get("prolate_factor", 1.0e-2)), warnings,
        )
        results: List = []
        if config.mode in ("r1", "r12"):
            rows, results = _radial_rows(config, solver, writer)
            radial_rows.extend(rows)
        else:
            angular_rows.extend(_angular_rows(config, solver))
        if config.diagnostics:
            for record in solver.diagnostics(results or None):
                diagnostic_rows.append([record["m"], record["l"], record])
        logger.info("m=%d done (%d l values)", m, config.l_count)

    if config.mode in ("r1", "r12"):
        header = RADIAL_HEADER if config.mode == "r12" else RADIAL_HEADER[:10]
        writer.write(out_dir / "radial.tsv", header, radial_rows)
    else:
        header = ANGULAR_HEADER if config.mode == "ang-deriv" else ANGULAR_HEADER[:7]
        writer.write(out_dir / "angular.tsv", header, angular_rows)
    if config.diagnostics:
        writer.write(out_dir / "diagnostics.tsv", DIAGNOSTICS_HEADER, diagnostic_rows)
    writer.write(
        out_dir / "warnings.tsv", WARNINGS_HEADER,
        ([e.kind, e.m, e.l, e.other_l, e.detail] for e in warnings),
    )
    logger.info("outputs written to %s (%d warnings)", out_dir, len(warnings))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(-1 if args.quiet else args.verbose)
    try:
        config = config_from_args(args)
    except (OSError, ValueError) as exc:
        # DomainError is a ValueError: bad settings are configuration errors here
        logger.error("invalid configuration: %s", exc)
        return EXIT_CONFIG
    try:
        return run(config)
    except SpheroidalError as exc:
        logger.error("computation failed: %s", exc)
        return EXIT_COMPUTE
    except OSError as exc:
        logger.error("cannot write outputs: %s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
