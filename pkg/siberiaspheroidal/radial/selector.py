"""
Siberia-Spheroidal - Method selection over l for the radial functions

每个 l 依次尝试：配对 → 近相等 → 积分 (ξ ≤ 0.2) → η = 0 (ξ ≥ 0.01) →
变 η (ξ ≥ 0.05) → Legendre (ξ ≤ 0.99) → Baber–Hasse（开关控制）。
第一个达到 minacc 的方法胜出；否则取精度最高者（近相等始终参与比较）。
Each l tries pairing, near-equality, the integral method, the η = 0 series,
the variable-η series, the Legendre expression and (when enabled) the
Baber–Hasse series, in that order. The first to reach minacc wins, otherwise
the most accurate candidate is kept. Near-equality always competes for best.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence

from ..coeffs.joining import JoiningFactor, joining_factor
from ..coeffs.negative import with_branches
from ..coeffs.ratios import CoeffSet
from ..core.errors import CancellationError, DomainError, MethodInapplicable, SpheroidalError
from ..core.precision import PrecisionContext
from ..core.scaled import ZERO
from ..eigen.spectrum import EigenRecord
from ..utils.logger import WarningCollector, WarningEvent, get_logger
from .baber_hasse import r2_baber_hasse
from .eta_sum import radial_eta_sum
from .integral import IntegralTables, integral_tables, r2_integral
from .legendre_expr import r2_legendre
from .near_equality import r2_near_equality
from .pairing import pairing_partner, r2_pairing
from .r1_search import THETA_MAX, R1SearchState, r1_search
from .results import R1Fragment, R2Candidate, RadialResult
from .wronskian import WronskianPair, wronskian_accuracy, wronskian_digits
from .xi_zero import r2_xi_zero

logger = get_logger(__name__)

R2_SEARCH_STEPS = 12


@dataclass(frozen=True)
class SelectionOptions:
    """
    方法开关与适用范围 / Method switches and validity windows

    Attributes:
        warn_digits: 低于该精度时发出警告 / warn below this many digits
        integral_max_xi: 积分法上限 / integral method only at or below this ξ
        integral_min_xi: 积分法下限 / lower ξ bound for the integral method
        integral_min_xi_absorbing: c_i > 2 时的下限 / lower bound when c_i > 2
        eta_zero_min_xi: η = 0 级数下限 / lower ξ bound for the η = 0 series
        variable_eta_min_xi: 变 η 下限 / lower ξ bound for the variable-η search
        legendre_max_xi: Legendre 表达式上限 / upper ξ bound for the Legendre path
    """

    warn_digits: int = 6
    use_integral: bool = True
    use_legendre: bool = True
    use_baber_hasse: bool = False
    integral_max_xi: float = 0.2
    integral_min_xi: float = 5.0e-4
    integral_min_xi_absorbing: float = 1.0e-7
    eta_zero_min_xi: float = 0.01
    variable_eta_min_xi: float = 0.05
    legendre_max_xi: float = 0.99

    def integral_allowed(self, c: complex, xi: float) -> bool:
        if not self.use_integral or xi > self.integral_max_xi:
            return False
        floor = self.integral_min_xi_absorbing if complex(c).imag > 2 else self.integral_min_xi
        return xi >= floor


@dataclass(frozen=True)
class R2SearchState:
    """变 η 求 R⁽²⁾ 时沿 l 传递的 θ / θ carried across l by the variable-η R⁽²⁾ path"""

    theta: float = 0.0


def r2_theta_step(xi: float) -> float:
    return 0.1 if xi > 0.4 else 0.05


class _RadialSelector:
    """一次 (m, c, ξ) 扫描的状态 / State of one (m, c, ξ) sweep"""

    def __init__(
        self,
        m: int,
        c: complex,
        xi: float,
        records: Sequence[EigenRecord],
        coeff_sets: Mapping[int, CoeffSet],
        ctx: PrecisionContext,
        options: SelectionOptions,
        warnings: WarningCollector,
        kappas: Optional[Dict[int, JoiningFactor]],
    ):
        self.m = m
        self.c = c
        self.xi = xi
        self.records = {r.l: r for r in records}
        self.coeff_sets = dict(coeff_sets)
        self.ctx = ctx
        self.options = options
        self.warnings = warnings
        self.kappas = kappas if kappas is not None else {}
        self.r1: Dict[int, R1Fragment] = {}
        self.r2_state = R2SearchState()
        self._tables: Optional[IntegralTables] = None
        self._tables_failed = False

    # -- shared inputs -------------------------------------------------------

    def coeffs(self, l: int) -> CoeffSet:
        found = with_branches(self.coeff_sets[l], self.ctx)
        self.coeff_sets[l] = found
        return found

    def kappa(self, l: int) -> JoiningFactor:
        if l not in self.kappas:
            self.kappas[l] = joining_factor(self.m, l, self.c, self.coeffs(l), ctx=self.ctx)
        return self.kappas[l]

    def tables(self) -> IntegralTables:
        if self._tables_failed:
            raise MethodInapplicable("integral", "integral tables failed earlier in this sweep")
        if self._tables is None:
            n_max = max(cs.n_max for cs in self.coeff_sets.values())
            try:
                self._tables = integral_tables(self.m, self.c, self.xi, n_max, ctx=self.ctx)
            except SpheroidalError as exc:
                self._tables_failed = True
                raise MethodInapplicable("integral", str(exc)) from exc
        return self._tables

    # -- R⁽¹⁾ ----------------------------------------------------------------

    def first_kind(self, ls: Sequence[int]) -> None:
        state = R1SearchState()
        for l in ls:
            try:
                fragment, state = r1_search(self.m, l, self.c, self.xi, state, self.coeffs(l), self.ctx)
            except CancellationError as exc:
                logger.warning("R1 unavailable for m=%d l=%d: %s", self.m, l, exc)
                fragment = R1Fragment(ZERO, ZERO, 0)
            self.r1[l] = fragment

    # -- R⁽²⁾ candidates -----------------------------------------------------

    def _scored(self, method: str, l: int, r2, r2p, subtraction_acc=None, eta=None, ledger=None) -> R2Candidate:
        fragment = self.r1[l]
        pair = WronskianPair(fragment.r1, fragment.r1p, r2, r2p)
        ndec = self.ctx.ndec
        raw = wronskian_digits(pair.r1, pair.r1p, r2, r2p, self.c, self.xi, ndec, self.ctx.arith)
        acc = wronskian_accuracy(pair, self.c, self.xi, method, ndec, subtraction_acc, self.ctx.arith)
        return R2Candidate(method, r2, r2p, acc, raw, eta, ledger or {})

    def pairing(self, l: int) -> R2Candidate:
        partner = pairing_partner(self.m, l)
        r2, r2p = r2_pairing(self.m, l, self.c, self.records[l], self.r1.get(partner))
        return self._scored("pairing", l, r2, r2p, ledger={"partner": partner})

    def near_equality(self, l: int) -> R2Candidate:
        r2, r2p, acc = r2_near_equality(self.m, l, self.c, self.xi, self.r1[l])
        return self._scored("near_equality", l, r2, r2p, subtraction_acc=acc, ledger={"acc": acc})

    def integral(self, l: int) -> R2Candidate:
        if not self.options.integral_allowed(self.c, self.xi):
            raise MethodInapplicable("integral", f"xi={self.xi} outside the integral window")
        out = r2_integral(self.m, l, self.c, self.xi, self.coeffs(l), self.tables(), self.ctx)
        ledger = {"value_loss": out.value_loss, "deriv_loss": out.deriv_loss, "quadrature_loss": out.quadrature_loss,
                  "terms": out.terms}
        return self._scored("integral", l, out.r2, out.r2p, out.subtraction_acc, ledger=ledger)

    def _eta_candidate(self, l: int, eta: float) -> R2Candidate:
        coeffs = self.coeffs(l)
        out = radial_eta_sum(2, self.m, l, self.c, self.xi, eta, coeffs, ctx=self.ctx)
        sub = out.accuracy(self.ctx.ndec, coeffs.naccre - 1, coeffs.itestm - 1)
        ledger = {"numerator_loss": out.numerator_loss, "denominator_loss": out.denominator_loss,
                  "terms": out.terms_used}
        return self._scored("eta_sum", l, out.value, out.deriv, sub, eta=out.eta, ledger=ledger)

    def eta_zero(self, l: int) -> R2Candidate:
        if self.xi < self.options.eta_zero_min_xi:
            raise MethodInapplicable("eta_sum", f"eta=0 series needs xi >= {self.options.eta_zero_min_xi}")
        return self._eta_candidate(l, 0.0)

    def variable_eta(self, l: int) -> R2Candidate:
        if self.xi < self.options.variable_eta_min_xi:
            raise MethodInapplicable("eta_sum", f"variable eta needs xi >= {self.options.variable_eta_min_xi}")
        step = r2_theta_step(self.xi)
        theta = self.r2_state.theta
        best, best_theta = None, theta
        for _ in range(R2_SEARCH_STEPS):
            if theta >= THETA_MAX:
                break
            try:
                found = self._eta_candidate(l, max(0.0, min(1.0, math.cos(theta))))
            except (CancellationError, DomainError) as exc:
                logger.debug("variable eta theta=%.2f failed for m=%d l=%d: %s", theta, self.m, l, exc)
                found = None
            if found is not None and (best is None or found.acc > best.acc):
                best, best_theta = found, theta
            if best is not None and best.acc >= self.ctx.minacc:
                break
            theta += step
        if best is None:
            raise MethodInapplicable("eta_sum", f"no usable eta for R2 at m={self.m} l={l}")
        self.r2_state = R2SearchState(best_theta)
        return best

    def legendre(self, l: int) -> R2Candidate:
        if not self.options.use_legendre or self.xi > self.options.legendre_max_xi:
            raise MethodInapplicable("legendre", f"xi={self.xi} above the Legendre window")
        out = r2_legendre(self.m, l, self.c, self.xi, self.coeffs(l), self.kappa(l), self.r1[l], self.ctx)
        ledger = {"value_loss": out.value_loss, "deriv_loss": out.deriv_loss, "kappa_loss": out.kappa_loss,
                  "repaired": out.repaired, "q_terms": out.q_terms, "p_terms": out.p_terms}
        return self._scored("legendre", l, out.r2, out.r2p, out.subtraction_acc, ledger=ledger)

    def baber_hasse(self, l: int) -> R2Candidate:
        if not self.options.use_baber_hasse:
            raise MethodInapplicable("baber_hasse", "disabled")
        record = self.records[l]
        out = r2_baber_hasse(self.m, l, self.c, self.xi, record.lam, self.coeffs(l), self.r1[l], self.ctx)
        return self._scored("baber_hasse", l, out.r2, out.r2p, out.subtraction_acc,
                            ledger={"loss": out.loss, "terms": out.terms})

    # -- selection -------------------------------------------------------------

    def select(self, l: int) -> RadialResult:
        attempts: List[Callable[[int], R2Candidate]] = [
            self.pairing, self.near_equality, self.integral, self.eta_zero,
            self.variable_eta, self.legendre, self.baber_hasse,
        ]
        tried: Dict[str, object] = {}
        best: Optional[R2Candidate] = None
        winner: Optional[R2Candidate] = None
        for attempt in attempts:
            name = attempt.__name__
            try:
                found = attempt(l)
            except (MethodInapplicable, SpheroidalError) as exc:
                tried[name] = f"skipped: {exc}"
                continue
            tried[name] = found.acc
            if best is None or found.acc > best.acc:
                best = found
            if found.acc >= self.ctx.minacc:
                winner = found
                break
        # 近相等即使排在前面未达 minacc，只要更准也会被选中
        chosen = winner or best
        if winner is not None and best is not None and best.method == "near_equality" and best.acc > winner.acc:
            chosen = best

        fragment = self.r1[l]
        ledger = {
            "tried": tried,
            "r1_numerator_loss": fragment.numerator_loss,
            "r1_denominator_loss": fragment.denominator_loss,
            "r1_terms": fragment.terms_used,
        }
        if chosen is None:
            self.warnings.add(WarningEvent("method_failure", self.m, l, "no radial method produced R2"))
            return RadialResult(self.m, l, fragment.r1, fragment.r1p, ZERO, ZERO, fragment.acc_r1, 0, "none",
                                fragment.eta_used, None, None, ledger)
        ledger.update(chosen.ledger)
        result = RadialResult(
            self.m, l, fragment.r1, fragment.r1p, chosen.r2, chosen.r2p, fragment.acc_r1, chosen.acc,
            chosen.method, fragment.eta_used, chosen.eta_used, chosen.wronskian_digits, ledger,
        )
        if result.acc_r2 < self.options.warn_digits:
            self.warnings.add(WarningEvent(
                "radial_accuracy", self.m, l, f"R2 by {result.method_r2} has {result.acc_r2} digits",
            ))
        return result

    def at_zero(self, l: int) -> RadialResult:
        out = r2_xi_zero(self.m, l, self.c, self.coeffs(l), self.kappa(l), self.ctx)
        result = RadialResult(
            self.m, l, out.r1, out.r1p, out.r2, out.r2p, out.acc_r1, out.acc_r2, "xi_zero",
            ledger={"direct_acc": out.direct_acc, "limit_acc": out.limit_acc},
        )
        if result.acc_r2 < self.options.warn_digits:
            self.warnings.add(WarningEvent(
                "radial_accuracy", self.m, l, f"xi=0 values have {result.acc_r2} digits",
            ))
        return result


def select_radial(
    m: int,
    c: complex,
    xi: float,
    records: Sequence[EigenRecord],
    coeff_sets: Mapping[int, CoeffSet],
    ctx: Optional[PrecisionContext] = None,
    options: Optional[SelectionOptions] = None,
    warnings: Optional[WarningCollector] = None,
    kappas: Optional[Dict[int, JoiningFactor]] = None,
) -> List[RadialResult]:
    """
    对 records 中每个 l 选出 R⁽²⁾ 的方法 / Radial functions of both kinds for every l

    R⁽¹⁾ 先按 l 顺序全部求出（η 搜索状态沿 l 传递），再逐个 l 选择 R⁽²⁾。
    R⁽¹⁾ is computed for all l first because the η search is sequential in l
    and pairing needs the neighbour's R⁽¹⁾. Never raises for lack of accuracy;
    low results produce warning events.

    Args:
        records: 按 l 排列的特征值记录 / eigenvalue records ordered by l
        coeff_sets: l → 系数 / coefficient sets keyed by l
        kappas: l → κ 缓存（可选，会被填充）/ optional κ cache, filled in place
    """
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi}")
    if complex(c) == 0:
        raise DomainError("radial functions need c != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    options = options if options is not None else SelectionOptions()
    warnings = warnings if warnings is not None else WarningCollector()
    ls = [r.l for r in records]
    missing = [l for l in ls if l not in coeff_sets]
    if missing:
        raise DomainError(f"no coefficient sets for l={missing}")

    selector = _RadialSelector(m, c, xi, records, coeff_sets, ctx, options, warnings, kappas)
    if xi == 0:
        return [selector.at_zero(l) for l in ls]

    selector.first_kind(ls)
    results = [selector.select(l) for l in ls]
    logger.info(
        "radial m=%d c=%s xi=%s: methods %s", m, c, xi, ",".join(sorted({r.method_r2 for r in results})),
    )
    return results
