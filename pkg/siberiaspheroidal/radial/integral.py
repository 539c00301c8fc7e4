"""
Siberia-Spheroidal - Integral-representation method for R⁽²⁾ at small ξ

积分对 η ∈ (0, 1) 进行并加倍（被积函数关于 η 对称）。代换 η = sin φ 使
1 - η² = cos²φ 精确，面板在 φ → π/2（η → 1）处几何加密，每个面板 20 阶
Gauss–Legendre。
The integrals run over η in (0, 1) and are doubled. With η = sin φ the factor
1 - η² = cos²φ is exact; panels in φ halve geometrically toward π/2, where the
integrand varies on the scale of ξ. Each panel uses 20-point Gauss–Legendre.

    I⁽ᵃ⁾_n = ∫ F_m y_m(z) P^m_{m+n}(η) dη
    I⁽ᶜ⁾_n = ∫ F_m y_{m+1}(z)/z P^m_{m+n}(η) dη
    I⁽ᵈ⁾_n = ∫ F_m η y_{m+2}(z)/z² P^m_{m+n}(η) dη
    (2n+2m+1) I⁽ᵇ⁾_n = (n+2m) I⁽ᶜ⁾_{n-1} + (n+1) I⁽ᶜ⁾_{n+1}

z = c(ξ²+1-η²)^{1/2}，F_m = [(ξ²+1)(1-η²)/(ξ²-η²+1)]^{m/2}。

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from ..basis.bessel import sph_neumann_y
from ..coeffs.ratios import CoeffSet
from ..core.errors import ConvergenceError, DomainError, MethodInapplicable
from ..core.precision import PrecisionContext, SiberiaArithmetic
from ..core.scaled import (
    ZERO,
    RunningScale,
    ScaledComplex,
    scaled_double_factorial,
    scaled_from,
    scaled_from_int,
    scaled_power,
)
from ..core.subtraction import SeriesSum, scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses, clamp_digits

logger = get_logger(__name__)

GAUSS_ORDER = 20
NEWTON_STEPS = 4
MAX_REFINEMENTS = 3
MAX_PANELS = 64
# 每个子面板允许的振荡弧度 / radians of oscillation allowed per sub-panel
PANEL_PHASE = 10.0

TABLE_NAMES = ("a", "b", "c", "d")


def _legendre_pair(order: int, t: Any) -> Tuple[Any, Any]:
    """P_n(t) 与 P_n′(t) / P_n and its derivative by the three-term recurrence"""
    prev, cur = 1, t
    for k in range(2, order + 1):
        prev, cur = cur, ((2 * k - 1) * t * cur - (k - 1) * prev) / k
    return cur, order * (t * cur - prev) / (t * t - 1)


@functools.lru_cache(maxsize=8)
def gauss_legendre(order: int = GAUSS_ORDER, digits: int = 0) -> Tuple[Tuple[Any, ...], Tuple[Any, ...]]:
    """
    [-1, 1] 上的 Gauss–Legendre 节点与权重 / Gauss–Legendre nodes and weights on [-1, 1]

    digits = 0 时直接用 numpy；否则以 numpy 节点为初值在 mpmath 中 Newton 精化。
    With digits > 0 the numpy nodes seed a Newton refinement in mpmath and the
    weights become 2/((1-x²)P_n′(x)²).
    """
    x, w = np.polynomial.legendre.leggauss(order)
    if digits == 0:
        return tuple(float(v) for v in x), tuple(float(v) for v in w)
    nodes, weights = [], []
    with mpmath.workdps(digits + 10):
        for x0 in x:
            t = mpmath.mpf(float(x0))
            for _ in range(NEWTON_STEPS):
                p, dp = _legendre_pair(order, t)
                t -= p / dp
            _, dp = _legendre_pair(order, t)
            nodes.append(t)
            weights.append(2 / ((1 - t * t) * dp * dp))
    return tuple(nodes), tuple(weights)


@dataclass(frozen=True)
class QuadratureRule:
    """
    η ∈ (0, 1) 上的求积规则 / Quadrature rule on (0, 1)

    Attributes:
        nodes: η 节点 / nodes in η
        weights: 含 cos φ 雅可比的权重 / weights including the cos φ Jacobian
        complements: (1-η²)^{1/2} = cos φ
        breakpoints: φ 面板端点 / panel ends in φ
        level: 细分层级，每层面板数加倍 / refinement level, panels double per level
    """

    xi: float
    nodes: Tuple[Any, ...]
    weights: Tuple[Any, ...]
    complements: Tuple[Any, ...]
    breakpoints: Tuple[Any, ...]
    level: int = 0
    subdivisions: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.nodes)

    def total_weight(self) -> Any:
        return sum(self.weights)


def _breakpoints(xi: float, ar: SiberiaArithmetic) -> List[Any]:
    half = ar.pi / 2
    width = half / 2
    points = [ar.real(0), width]
    limit = max(xi / 4, 1.0e-12)
    while width >= limit and len(points) < MAX_PANELS:
        width = width / 2
        points.append(half - width)
    points.append(half)
    return points


def _subdivisions(points: Sequence[Any], frequency: float, level: int) -> List[int]:
    out = []
    for lo, hi in zip(points, points[1:]):
        base = max(1, int(math.ceil(float(hi - lo) * frequency / PANEL_PHASE)))
        out.append(base * 2 ** level)
    return out


def quadrature_rule(
    xi: float,
    c: complex = 0j,
    n_max: int = 0,
    level: int = 0,
    ctx: Optional[PrecisionContext] = None,
) -> QuadratureRule:
    """
    组合 Gauss–Legendre 规则 / Composite Gauss–Legendre rule in φ, mapped to η

    面板宽度按 |c| 与 n_max 限制振荡，再按 level 加倍。
    Panels are split so each piece sees a bounded number of oscillations of
    y_m(z) and P^m_{m+n}(η); `level` doubles every panel.
    """
    if xi <= 0:
        raise DomainError(f"the quadrature rule needs xi > 0, got {xi}")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ar = ctx.arith
    x_ref, w_ref = gauss_legendre(GAUSS_ORDER, ar.digits if ar.use_mp else 0)
    sin = mpmath.sin if ar.use_mp else math.sin
    cos = mpmath.cos if ar.use_mp else math.cos

    nodes, weights, complements = [], [], []
    with ar.context():
        points = _breakpoints(xi, ar)
        splits = _subdivisions(points, abs(complex(c)) + n_max + 1, level)
        for (lo, hi), pieces in zip(zip(points, points[1:]), splits):
            step = (hi - lo) / pieces
            for k in range(pieces):
                a = lo + k * step
                mid, half = a + step / 2, step / 2
                for t, w in zip(x_ref, w_ref):
                    phi = mid + half * t
                    s = cos(phi)
                    nodes.append(sin(phi))
                    complements.append(s)
                    weights.append(half * w * s)
    return QuadratureRule(xi, tuple(nodes), tuple(weights), tuple(complements), tuple(points), level, tuple(splits))


def _reduced_legendre(m: int, n_top: int, eta: Any, ar: SiberiaArithmetic) -> List[ScaledComplex]:
    """P^m_{m+n}(η)/(1-η²)^{m/2}，n = 0..n_top"""
    anchor = scaled_double_factorial(2 * m - 1, ar.use_mp)
    rs = RunningScale(anchor.exp10)
    prev, cur = ar.zero, anchor.char
    values = [rs.emit(cur)]
    for n in range(n_top):
        nu = m + n
        nxt = ((2 * nu + 1) * eta * cur - (nu + m) * prev) / (nu - m + 1)
        prev, cur = rs.settle(cur, nxt)
        values.append(rs.emit(cur))
    return values


@dataclass(frozen=True)
class IntegralTables:
    """
    积分表 / Integral tables, index n = 0..n_max

    Attributes:
        ia, ib, ic, id: I⁽ᵃ⁾..I⁽ᵈ⁾（奇偶不符处为精确 0）/ exact zeros off parity
        losses: 每个积分的抵消位数 / cancellation digits per integral
        agreement: 两次细分之间一致的最少位数 / worst agreement between refinements
    """

    m: int
    c: complex
    xi: float
    n_max: int
    ia: Tuple[ScaledComplex, ...]
    ib: Tuple[ScaledComplex, ...]
    ic: Tuple[ScaledComplex, ...]
    id: Tuple[ScaledComplex, ...]
    losses: Dict[str, Tuple[float, ...]] = field(default_factory=dict)
    agreement: int = 0
    rule: Optional[QuadratureRule] = None

    def table(self, name: str) -> Tuple[ScaledComplex, ...]:
        return {"a": self.ia, "b": self.ib, "c": self.ic, "d": self.id}[name]


def _raw_integrals(
    m: int, c: complex, xi: float, n_top: int, rule: QuadratureRule, ctx: PrecisionContext,
) -> Tuple[Dict[str, List[SeriesSum]], Dict[str, List[ScaledComplex]]]:
    """按节点累积各 n 的项 / accumulate node terms for every n, then sum them"""
    ar = ctx.arith
    ndec = ctx.ndec
    sqrt = mpmath.sqrt if ar.use_mp else math.sqrt
    terms: Dict[str, List[List[ScaledComplex]]] = {k: [[] for _ in range(n_top + 1)] for k in ("a", "c", "d")}
    with ar.context():
        cc = ar.num(c)
        x = ar.real(xi)
        grow = x * x + 1
        for eta, s, w in zip(rule.nodes, rule.complements, rule.weights):
            rho2 = x * x + s * s
            z = cc * sqrt(rho2)
            y = sph_neumann_y(m + 2, z, ctx)
            pref = scaled_power(grow / rho2, ar.real(m) / 2, ar.use_mp) * scaled_power(s, 2 * m, ar.use_mp) * w
            sz = scaled_from(z)
            ka = pref * y.value(m)
            kc = pref * y.value(m + 1) / sz
            kd = pref * y.value(m + 2) * eta / (sz * sz)
            for n, p in enumerate(_reduced_legendre(m, n_top, eta, ar)):
                if n % 2 == 0:
                    terms["a"][n].append(ka * p)
                    terms["c"][n].append(kc * p)
                else:
                    terms["d"][n].append(kd * p)

        sums: Dict[str, List[SeriesSum]] = {}
        scales: Dict[str, List[ScaledComplex]] = {}
        for key, rows in terms.items():
            sums[key] = [scaled_series_sum(row, ndec) for row in rows]
            scales[key] = [
                scaled_series_sum([scaled_from(abs(t.char), t.exp10) for t in row], ndec).value for row in rows
            ]
    return sums, scales


def _agreement(
    old: Dict[str, List[SeriesSum]], new: Dict[str, List[SeriesSum]], scales: Dict[str, List[ScaledComplex]], ndec: int,
) -> int:
    worst = ndec
    for key, rows in new.items():
        for before, after, scale in zip(old[key], rows, scales[key]):
            if scale.is_zero():
                continue
            diff = after.value - before.value
            if diff.is_zero():
                continue
            worst = min(worst, clamp_digits(scale.log10_abs() - diff.log10_abs(), ndec))
    return worst


def integral_tables(
    m: int,
    c: complex,
    xi: float,
    n_max: int,
    rule: Optional[QuadratureRule] = None,
    ctx: Optional[PrecisionContext] = None,
) -> IntegralTables:
    """
    计算 I⁽ᵃ⁾, I⁽ᵇ⁾, I⁽ᶜ⁾, I⁽ᵈ⁾ / Integral tables for n = 0..n_max

    面板加倍直到两次结果的差 ≤ 10^{-(ndec-2)}·Σ w|f|，最多细分 3 次。
    Panels double until successive results differ by at most
    10^{-(ndec-2)} times the absolute integral, for up to three refinements.

    Raises:
        ConvergenceError: 细分后仍不收敛 / refinements did not settle
    """
    if xi <= 0:
        raise DomainError(f"the integral method needs xi > 0, got {xi}")
    if complex(c) == 0:
        raise DomainError("the integral method needs c != 0")
    if m < 0 or n_max < 0:
        raise DomainError("integral_tables needs m >= 0 and n_max >= 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ndec = ctx.ndec
    target = ndec - 2
    n_top = n_max + 1

    rule = rule if rule is not None else quadrature_rule(xi, c, n_top, 0, ctx)
    old, _ = _raw_integrals(m, c, xi, n_top, rule, ctx)
    agreement = 0
    for _ in range(MAX_REFINEMENTS):
        rule = quadrature_rule(xi, c, n_top, rule.level + 1, ctx)
        new, scales = _raw_integrals(m, c, xi, n_top, rule, ctx)
        agreement = _agreement(old, new, scales, ndec)
        old = new
        if agreement >= target:
            break
        logger.debug("integral tables m=%d xi=%s: %d digits at level %d, refining", m, xi, agreement, rule.level)
    else:
        raise ConvergenceError(
            f"integral tables for m={m} xi={xi} settled to only {agreement} digits", index=n_max,
        )

    ar = ctx.arith
    with ar.context():
        two = scaled_from(ar.num(2))
        ia = [ZERO if n % 2 else two * old["a"][n].value for n in range(n_top + 1)]
        ic = [ZERO if n % 2 else two * old["c"][n].value for n in range(n_top + 1)]
        idd = [two * old["d"][n].value if n % 2 else ZERO for n in range(n_top + 1)]
        ib = [ZERO] * (n_max + 1)
        b_loss = [0.0] * (n_max + 1)
        for n in range(1, n_max + 1, 2):
            pair = scaled_series_sum([ic[n - 1] * (n + 2 * m), ic[n + 1] * (n + 1)], ndec)
            ib[n] = pair.value / (2 * n + 2 * m + 1)
            b_loss[n] = max(pair.digits_lost, old["c"][n - 1].digits_lost, old["c"][n + 1].digits_lost)

    losses = {
        "a": tuple(s.digits_lost for s in old["a"][: n_max + 1]),
        "b": tuple(b_loss),
        "c": tuple(s.digits_lost for s in old["c"][: n_max + 1]),
        "d": tuple(s.digits_lost for s in old["d"][: n_max + 1]),
    }
    logger.debug("integral tables m=%d xi=%s: %d nodes, %d digits", m, xi, len(rule), agreement)
    return IntegralTables(
        m, c, xi, n_max, tuple(ia[: n_max + 1]), tuple(ib), tuple(ic[: n_max + 1]), tuple(idd[: n_max + 1]),
        losses, agreement, rule,
    )


@dataclass(frozen=True)
class IntegralOutcome:
    r2: ScaledComplex
    r2p: ScaledComplex
    value_loss: float
    deriv_loss: float
    quadrature_loss: float
    subtraction_acc: int
    terms: int


def _weighted(
    coeffs: CoeffSet, table: Sequence[ScaledComplex], losses: Sequence[float], indices: range, ndec: int,
) -> Tuple[SeriesSum, float]:
    terms = [coeffs.d(n) * table[n] for n in indices]
    total = scaled_series_sum(terms, ndec)
    if total.value.is_zero():
        return total, float(ndec)
    floor = total.value.log10_abs() - ndec
    loss = max(
        (losses[n] for n, t in zip(indices, terms) if not t.is_zero() and t.log10_abs() >= floor),
        default=0.0,
    )
    return total, loss


def r2_integral(
    m: int,
    l: int,
    c: complex,
    xi: float,
    coeffs: CoeffSet,
    tables: IntegralTables,
    ctx: Optional[PrecisionContext] = None,
) -> IntegralOutcome:
    """
    积分法计算 R⁽²⁾ 与导数 / R⁽²⁾ and dR⁽²⁾/dξ from the integral tables

    l-m 偶：R⁽²⁾ = B⁽ᵃ⁾ Σ d_n I⁽ᵃ⁾_n，
            R⁽²⁾′ = mξ/(ξ²+1) R⁽²⁾ - c²ξ B⁽ᵃ⁾ Σ d_n I⁽ᶜ⁾_n；
    l-m 奇：R⁽²⁾ = cξ B⁽ᵇ⁾ Σ d_n I⁽ᵇ⁾_n，
            R⁽²⁾′ = ((m+1)ξ²+1)/(ξ(ξ²+1)) R⁽²⁾ - c³ξ² B⁽ᵇ⁾ Σ d_n I⁽ᵈ⁾_n；
    B⁽ᵃ⁾ = (-1)^{(l-m)/2}(2m+1)/(2^{m+1} m! d_0)，
    B⁽ᵇ⁾ = (-1)^{(l-m-1)/2}(2m+3)/(2^{m+1} m! d_1)。

    Raises:
        MethodInapplicable: 首系数为零或和完全抵消 / vanishing lead or total cancellation
    """
    if xi <= 0:
        raise DomainError(f"the integral method needs xi > 0, got {xi}")
    if coeffs.m != m or coeffs.l != l:
        raise DomainError("coefficient set does not belong to this (m, l)")
    if tables.m != m or tables.xi != xi:
        raise DomainError("integral tables were built for another (m, xi)")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ar = ctx.arith
    ndec = ctx.ndec
    p = coeffs.parity
    lead = coeffs.d(p)
    if lead.is_zero():
        raise MethodInapplicable("integral", f"d_{p} vanishes for m={m} l={l}")
    top = min(coeffs.n_max, tables.n_max)
    indices = range(p, top + 1, 2)

    with ar.context():
        cc = ar.num(c)
        x = ar.real(xi)
        grow = x * x + 1
        sign = -1 if ((l - m - p) // 2) % 2 else 1
        bottom = scaled_from_int(2 ** (m + 1) * math.factorial(m), ar.use_mp) * lead
        b = scaled_from(ar.num(sign * (2 * m + 1 + 2 * p))) / bottom
        if p == 0:
            vs, vq = _weighted(coeffs, tables.ia, tables.losses["a"], indices, ndec)
            ds, dq = _weighted(coeffs, tables.ic, tables.losses["c"], indices, ndec)
            r2 = b * vs.value
            first = r2 * (m * x / grow)
            second = b * ds.value * (cc * cc * x)
        else:
            vs, vq = _weighted(coeffs, tables.ib, tables.losses["b"], indices, ndec)
            ds, dq = _weighted(coeffs, tables.id, tables.losses["d"], indices, ndec)
            r2 = b * vs.value * (cc * x)
            first = r2 * (((m + 1) * x * x + 1) / (x * grow))
            second = b * ds.value * (cc * cc * cc * x * x)
        deriv = scaled_series_sum([first, -second], ndec)
        r2p = deriv.value

    if r2.is_zero() and r2p.is_zero():
        raise MethodInapplicable("integral", f"both sums cancelled for m={m} l={l}")
    quad = float(max(0, ndec - tables.agreement))
    value_loss = max(vs.digits_lost, vq)
    deriv_loss = max(ds.digits_lost, dq, deriv.digits_lost)
    acc = accuracy_from_losses(ndec, [value_loss, deriv_loss, quad], coeffs.naccre - 1)
    return IntegralOutcome(r2, r2p, value_loss, deriv_loss, quad, acc, len(indices))
