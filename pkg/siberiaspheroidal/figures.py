"""
Siberia-Spheroidal - Data sweeps behind the accuracy and loss figures

每种 kind 输出 (扫描变量, 曲线标签, 数值) 三列。
Each kind yields rows of (sweep variable, series label, value); plotting is
left to the caller.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core.errors import DomainError, SpheroidalError
from .radial.eta_sum import radial_eta_sum
from .radial.integral import integral_tables, r2_integral
from .radial.legendre_expr import r2_legendre
from .radial.r1_search import THETA_MAX
from .radial.results import R1Fragment
from .radial.selector import r2_theta_step
from .radial.wronskian import WronskianPair, wronskian_accuracy
from .solver import SiberiaOblateSolver
from .utils.logger import get_logger

logger = get_logger(__name__)

FIGURE_KINDS = (
    "ms_norm_error",
    "mf_norm_error",
    "r1_numerator_error",
    "dneg_error",
    "legendre_acc",
    "integral_acc",
    "flammer_error",
    "eta0_acc",
    "var_eta_acc",
    "joining_error",
)

Row = Tuple[float, str, float]


@dataclass(frozen=True)
class FigureSweep:
    """
    扫描设置 / Sweep settings

    归一化类 kind 以 c_i 为扫描变量、取各 l 的最大损失；其余以 l - m 为扫描
    变量，每个 c_i 一条曲线。
    Normalization kinds sweep c_i and report the largest loss over l; the
    other kinds sweep l - m with one series per c_i.
    """

    c_real: float = 10.0
    c_imag: Tuple[float, ...] = (0.0,)
    m: int = 0
    xi: float = 0.5
    l_count: int = 10
    mode: str = "double"


def _solver(sweep: FigureSweep, c_i: float) -> SiberiaOblateSolver:
    return SiberiaOblateSolver(sweep.m, complex(sweep.c_real, c_i), sweep.l_count, sweep.mode)


def _max_over_l(sweep: FigureSweep, pick: Callable[[SiberiaOblateSolver, int], float]) -> List[Row]:
    rows = []
    for c_i in sweep.c_imag:
        solver = _solver(sweep, c_i)
        worst = max(pick(solver, l) for l in solver.l_values)
        rows.append((c_i, f"cr={sweep.c_real:g},m={sweep.m}", worst))
    return rows


def _per_l(sweep: FigureSweep, pick: Callable[[SiberiaOblateSolver, int, Dict], float]) -> List[Row]:
    rows = []
    for c_i in sweep.c_imag:
        solver = _solver(sweep, c_i)
        shared: Dict = {}
        for l in solver.l_values:
            try:
                value = pick(solver, l, shared)
            except SpheroidalError as exc:
                logger.debug("figure point m=%d l=%d c_i=%s skipped: %s", sweep.m, l, c_i, exc)
                value = math.nan
            rows.append((float(l - sweep.m), f"ci={c_i:g}", value))
    return rows


def _r1(solver: SiberiaOblateSolver, xi: float, shared: Dict) -> Dict[int, R1Fragment]:
    if "r1" not in shared:
        shared["r1"] = solver.radial_first_kind(xi)
    return shared["r1"]


def _scored(solver: SiberiaOblateSolver, l: int, xi: float, shared: Dict, method: str, r2, r2p, sub) -> float:
    fragment = _r1(solver, xi, shared)[l]
    pair = WronskianPair(fragment.r1, fragment.r1p, r2, r2p)
    return float(wronskian_accuracy(pair, solver.c, xi, method, solver.ctx.ndec, sub, solver.ctx.arith))


def _legendre_acc(sweep: FigureSweep) -> Callable:
    def pick(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
        fragment = _r1(solver, sweep.xi, shared)[l]
        out = r2_legendre(solver.m, l, solver.c, sweep.xi, solver.coeffs(l), solver.joining(l), fragment, solver.ctx)
        return _scored(solver, l, sweep.xi, shared, "legendre", out.r2, out.r2p, out.subtraction_acc)
    return pick


def _integral_acc(sweep: FigureSweep) -> Callable:
    def pick(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
        if "tables" not in shared:
            n_max = max(solver.coeffs(k).n_max for k in solver.l_values)
            shared["tables"] = integral_tables(solver.m, solver.c, sweep.xi, n_max, ctx=solver.ctx)
        out = r2_integral(solver.m, l, solver.c, sweep.xi, solver.coeffs(l), shared["tables"], solver.ctx)
        return _scored(solver, l, sweep.xi, shared, "integral", out.r2, out.r2p, out.subtraction_acc)
    return pick


def _eta_acc(sweep: FigureSweep, eta: float, solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
    cs = solver.coeffs(l)
    out = radial_eta_sum(2, solver.m, l, solver.c, sweep.xi, eta, cs, ctx=solver.ctx)
    sub = out.accuracy(solver.ctx.ndec, cs.naccre - 1, cs.itestm - 1)
    return _scored(solver, l, sweep.xi, shared, "eta_sum", out.value, out.deriv, sub)


def _eta0_acc(sweep: FigureSweep) -> Callable:
    def pick(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
        return _eta_acc(sweep, 0.0, solver, l, shared)
    return pick


def _var_eta_acc(sweep: FigureSweep) -> Callable:
    def pick(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
        step = r2_theta_step(sweep.xi)
        best = math.nan
        theta = 0.0
        while theta < THETA_MAX:
            try:
                found = _eta_acc(sweep, math.cos(theta), solver, l, shared)
            except SpheroidalError:
                found = math.nan
            if not math.isnan(found) and (math.isnan(best) or found > best):
                best = found
            theta += step
        return best
    return pick


def _r1_numerator(sweep: FigureSweep) -> Callable:
    def pick(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
        out = radial_eta_sum(1, solver.m, l, solver.c, sweep.xi, 1.0, solver.coeffs(l), ctx=solver.ctx)
        return out.numerator_loss
    return pick


def _dneg(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
    solver.joining(l)
    return solver.coeffs(l).jsub_neg.digits_lost


def _joining(solver: SiberiaOblateSolver, l: int, shared: Dict) -> float:
    return solver.joining(l).err.digits_lost


def emit_figure_data(kind: str, sweep: Optional[FigureSweep] = None) -> List[Row]:
    """
    生成一种图的数据 / Rows behind one figure kind

    Raises:
        DomainError: 未知 kind / unsupported kind
    """
    if kind not in FIGURE_KINDS:
        raise DomainError(f"unsupported figure kind {kind!r}; choose from {', '.join(FIGURE_KINDS)}")
    sweep = sweep if sweep is not None else FigureSweep()
    logger.info("figure data %s: c_r=%g, %d c_i values, m=%d", kind, sweep.c_real, len(sweep.c_imag), sweep.m)
    if kind == "ms_norm_error":
        return _max_over_l(sweep, lambda s, l: s.normalization(l).jsubms.digits_lost)
    if kind == "mf_norm_error":
        return _max_over_l(sweep, lambda s, l: s.normalization(l).jsubmf.digits_lost)
    if kind == "flammer_error":
        return _max_over_l(sweep, lambda s, l: s.normalization(l).jsubflam.digits_lost)
    pickers: Dict[str, Callable] = {
        "r1_numerator_error": _r1_numerator(sweep),
        "dneg_error": _dneg,
        "legendre_acc": _legendre_acc(sweep),
        "integral_acc": _integral_acc(sweep),
        "eta0_acc": _eta0_acc(sweep),
        "var_eta_acc": _var_eta_acc(sweep),
        "joining_error": _joining,
    }
    return _per_l(sweep, pickers[kind])


def figure_header(kind: str) -> Sequence[str]:
    variable = "c_imag" if kind in ("ms_norm_error", "mf_norm_error", "flammer_error") else "l_minus_m"
    return (variable, "series", kind)
