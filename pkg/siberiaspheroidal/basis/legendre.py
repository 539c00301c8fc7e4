"""
Siberia-Spheroidal - Associated Legendre functions

实变量 P^m_n(η)、η=0 闭式、虚变量 P 与 Q。不含 Condon–Shortley 相位。
Real-argument P, closed forms at η = 0, and the imaginary-argument functions
P^m_ν(iξ), Q^m_ν(iξ) written with the (ξ²+1)^{m/2} prefactor. No Condon–Shortley
phase anywhere.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

import mpmath

from ..core.errors import DomainError
from ..core.precision import PrecisionContext, check_finite
from ..core.scaled import (
    ZERO,
    RunningScale,
    ScaledComplex,
    double_factorial,
    scaled_double_factorial,
    scaled_from,
    scaled_power,
    shifted,
)


@dataclass(frozen=True)
class RatioTable:
    """
    比值表 / Ratio table

    Attributes:
        kind: legendre_p / legendre_q_imag / legendre_p_imag / bessel_j / neumann_y
        order: 阶 m / order m (0 for Bessel tables)
        start: 最低指标 / lowest index held
        arg: 自变量 / argument
        values: 各指标的缩放值 / scaled values, one per index
        derivs: 导数（可选）/ derivatives, when computed
    """

    kind: str
    order: int
    start: int
    arg: Any
    values: Tuple[ScaledComplex, ...]
    derivs: Optional[Tuple[ScaledComplex, ...]] = None

    @property
    def anchor(self) -> ScaledComplex:
        return self.values[0]

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    @property
    def ratios(self) -> Tuple[Any, ...]:
        out = []
        for lo, hi in zip(self.values, self.values[1:]):
            out.append(0j if lo.is_zero() else (hi / lo).to_complex())
        return tuple(out)

    def value(self, index: int) -> ScaledComplex:
        if not self.start <= index <= self.stop:
            raise IndexError(f"{self.kind} index {index} outside [{self.start}, {self.stop}]")
        return self.values[index - self.start]

    def deriv(self, index: int) -> ScaledComplex:
        if self.derivs is None:
            raise ValueError(f"{self.kind} table carries no derivatives")
        if not self.start <= index <= self.stop:
            raise IndexError(f"{self.kind} index {index} outside [{self.start}, {self.stop}]")
        return self.derivs[index - self.start]


def _default_ctx(ctx: Optional[PrecisionContext]) -> PrecisionContext:
    return ctx if ctx is not None else PrecisionContext.for_mode("double")


# ---------------------------------------------------------------------------
# 实变量 / real argument
# ---------------------------------------------------------------------------

def _endpoint_derivative(m: int, nu: int, sign: int) -> ScaledComplex:
    """η = ±1 处的导数极限 / derivative limit at η = ±1"""
    if m == 0:
        value = nu * (nu + 1) // 2
        return scaled_from(float(value if sign > 0 or nu % 2 else -value))
    if m == 1:
        raise DomainError("dP^1_n/dη is unbounded at |η| = 1")
    if m == 2:
        value = (nu + 2) * (nu + 1) * nu * (nu - 1) // 4
        return scaled_from(float(-value if sign > 0 else (value if nu % 2 == 0 else -value)))
    return ZERO


def legendre_p(
    m: int,
    n_max: int,
    eta: float,
    ctx: Optional[PrecisionContext] = None,
    derivatives: bool = True,
) -> RatioTable:
    """
    实变量连带 Legendre 函数 / Associated Legendre functions of real argument

    返回 P^m_{m+n}(η)，n = 0..n_max，按次数向上递推。
    Values P^m_{m+n}(η) for n = 0..n_max by upward recurrence in degree.

    Args:
        m: 阶 / order
        n_max: 最大相对次数 / highest relative degree
        eta: 自变量，|η| ≤ 1 / argument in [-1, 1]
        derivatives: 是否计算 dP/dη / also compute dP/dη
    """
    check_finite(eta)
    if m < 0 or n_max < 0:
        raise DomainError("legendre_p needs m >= 0 and n_max >= 0")
    if abs(float(eta)) > 1.0:
        raise DomainError(f"|eta| must not exceed 1, got {eta}")
    ctx = _default_ctx(ctx)
    ar = ctx.arith
    with ar.context():
        x = ar.real(eta)
        one_minus = (1 - x) * (1 + x)
        if one_minus == 0 and m > 0:
            values = [ZERO] * (n_max + 1)
        else:
            anchor = scaled_double_factorial(2 * m - 1, ar.use_mp) * scaled_power(one_minus, ar.real(m) / 2, ar.use_mp)
            rs = RunningScale(anchor.exp10)
            prev, cur = ar.zero, anchor.char
            values = [rs.emit(cur)]
            for n in range(n_max):
                nu = m + n
                nxt = ((2 * nu + 1) * x * cur - (nu + m) * prev) / (nu - m + 1)
                prev, cur = rs.settle(cur, nxt)
                values.append(rs.emit(cur))

        derivs = None
        if derivatives:
            derivs = []
            for n in range(n_max + 1):
                nu = m + n
                if one_minus == 0:
                    derivs.append(_endpoint_derivative(m, nu, 1 if x > 0 else -1))
                    continue
                lower = values[n - 1] if n > 0 else ZERO
                top = lower * (nu + m) - values[n] * (nu * x)
                derivs.append(top / scaled_from(one_minus))
    return RatioTable("legendre_p", m, m, eta, tuple(values), None if derivs is None else tuple(derivs))


def legendre_p_zero(m: int, n: int, use_mp: bool = False) -> Tuple[ScaledComplex, ScaledComplex]:
    """
    η = 0 处的闭式值 / Closed forms at η = 0

    Returns:
        (P^m_{m+n}(0), dP^m_{m+n}/dη at 0)
    """
    if m < 0 or n < 0:
        raise DomainError("legendre_p_zero needs m >= 0 and n >= 0")
    if n % 2 == 0:
        value = scaled_double_factorial(n + 2 * m - 1, use_mp) / scaled_double_factorial(n, use_mp)
        return (-value if (n // 2) % 2 else value), ZERO
    value = scaled_double_factorial(n + 2 * m - 2, use_mp) / scaled_double_factorial(n - 1, use_mp)
    value = value * (n + 2 * m)
    return ZERO, (-value if ((n - 1) // 2) % 2 else value)


# ---------------------------------------------------------------------------
# 虚变量 / imaginary argument, z = iξ
# ---------------------------------------------------------------------------

def _imag_derivative(values: Sequence[ScaledComplex], start: int, m: int, xi: Any) -> Tuple[ScaledComplex, ...]:
    # dF_ν/dξ = (ν ξ F_ν + i (ν+m) F_{ν-1}) / (ξ²+1)
    scale = scaled_from(1 + xi * xi)
    out = []
    for k, value in enumerate(values):
        nu = start + k
        lower = values[k - 1] if k > 0 else ZERO
        out.append((value * (nu * xi) + lower * (1j * (nu + m))) / scale)
    return tuple(out)


def p_imag_table(m: int, n_max: int, xi: float, ctx: Optional[PrecisionContext] = None) -> RatioTable:
    """P^m_{m+n}(iξ)，允许 ξ = 0 / P^m_{m+n}(iξ) for ξ >= 0"""
    ctx = _default_ctx(ctx)
    ar = ctx.arith
    with ar.context():
        x = ar.real(xi)
        z = ar.num(1j) * x
        anchor = scaled_double_factorial(2 * m - 1, ar.use_mp) * scaled_power(1 + x * x, ar.real(m) / 2, ar.use_mp)
        rs = RunningScale(anchor.exp10)
        prev, cur = ar.zero, ar.num(anchor.char)
        values = [rs.emit(cur)]
        for n in range(n_max):
            nu = m + n
            nxt = ((2 * nu + 1) * z * cur - (nu + m) * prev) / (nu - m + 1)
            prev, cur = rs.settle(cur, nxt)
            values.append(rs.emit(cur))
        # P^m_{m-1} = 0 closes the derivative identity at the lowest degree
        derivs = _imag_derivative(values, m, m, x)
    return RatioTable("legendre_p_imag", m, m, xi, tuple(values), derivs)


def legendre_p_imag(m: int, n_max: int, xi: float, ctx: Optional[PrecisionContext] = None) -> RatioTable:
    """虚变量第一类函数 / First-kind function at iξ, ξ > 0"""
    check_finite(xi)
    if xi <= 0:
        raise DomainError(f"xi must be positive, got {xi}")
    return p_imag_table(m, n_max, xi, ctx)


def _poly_derivative(nu: int, order: int, z: Any) -> Any:
    """P_ν 的 order 阶导数在 z 处的值 / order-th derivative of P_ν at z"""
    total = mpmath.mpc(0)
    for r in range(nu // 2 + 1):
        power = nu - 2 * r
        if power < order:
            break
        coeff = mpmath.mpf(math.factorial(2 * nu - 2 * r)) / (
            2 ** nu * math.factorial(r) * math.factorial(nu - r) * math.factorial(power - order)
        )
        term = coeff * z ** (power - order)
        total += -term if r % 2 else term
    return total


@functools.lru_cache(maxsize=256)
def _q_leibniz_pair(m: int, xi: str, dps: int) -> Tuple[Any, Any]:
    """
    Q^m_{m-1}(iξ) 与 Q^m_m(iξ) 的 Leibniz 展开 / Leibniz expansion of the two anchors

    Q_ν = P_ν Q_0 - W_{ν-1} 且 W_{ν-1} 的次数低于 m，所以 m 阶导数只剩 Leibniz 和。
    """
    with mpmath.workdps(dps):
        x = mpmath.mpf(xi)
        z = mpmath.mpc(0, x)
        theta = mpmath.atan(x)
        s = mpmath.sqrt(1 + x * x)
        dq = [mpmath.mpc(0, -(mpmath.pi / 2 - theta))]
        for k in range(1, m + 1):
            u = mpmath.mpc(0, -mpmath.sin(k * theta)) if k % 2 == 0 else mpmath.mpc(mpmath.cos(k * theta))
            t_k = (-1) ** (k - 1) * mpmath.factorial(k - 1) * u
            dq.append(t_k / s ** k)
        out = []
        for nu in (m - 1, m):
            total = mpmath.mpc(0)
            for k in range(m + 1):
                if m - k > nu:
                    continue
                total += mpmath.binomial(m, k) * _poly_derivative(nu, m - k, z) * dq[k]
            out.append(total * s ** m)
        return out[0], out[1]


def _q_anchors(m: int, xi: Any, ar) -> Tuple[ScaledComplex, ScaledComplex, int]:
    """返回 (Q_{a}, Q_{a+1}, a)；m = 0 时 a = 0，否则 a = m-1"""
    if m == 0:
        theta = ar.atan(xi)
        q0 = ar.num(-1j) * (ar.pi / 2 - theta)
        q1 = ar.num(1j) * xi * q0 - 1
        return scaled_from(q0), scaled_from(q1), 0
    dps = 40 + 3 * m + (ar.digits if ar.use_mp else 0)
    key = mpmath.nstr(xi, ar.digits + 10) if ar.use_mp else repr(float(xi))
    lo, hi = _q_leibniz_pair(m, key, dps)
    if not ar.use_mp:
        lo, hi = complex(lo), complex(hi)
    return scaled_from(lo), scaled_from(hi), m - 1


def q_imag_table(
    m: int,
    nu_lo: int,
    nu_hi: int,
    xi: float,
    ctx: Optional[PrecisionContext] = None,
) -> RatioTable:
    """
    Q^m_ν(iξ) 表，ν ∈ [nu_lo, nu_hi]，允许 ξ = 0 / Q table at iξ, ξ >= 0 allowed

    低次数向下递推；高次数在 ξ·ν 较大时用连分式比值，否则向上递推。
    Degrees below the anchors come from downward recurrence. Degrees above
    come from continued-fraction ratios when ξ·nu_hi > 1 and from forward
    recurrence otherwise.
    """
    ctx = _default_ctx(ctx)
    ar = ctx.arith
    nu_lo = max(nu_lo, -m)
    if nu_hi < nu_lo:
        raise DomainError("empty degree range")
    with ar.context():
        x = ar.real(xi)
        z = ar.num(1j) * x
        lo_val, hi_val, a = _q_anchors(m, x, ar)
        table = {a: lo_val, a + 1: hi_val}

        # 向下到 -m / downward, one degree below nu_lo for the derivative identity
        down_to = max(nu_lo - 1, -m)
        if down_to < a:
            rs = RunningScale(hi_val.exp10)
            upper = ar.num(hi_val.char)
            cur = ar.num(shifted(lo_val, hi_val.exp10))
            nu = a
            while nu > down_to:
                if m > 0 and nu == m - 1:
                    lower = z * cur
                else:
                    lower = ((2 * nu + 1) * z * cur - (nu - m + 1) * upper) / (nu + m)
                upper, cur = rs.settle(cur, lower)
                nu -= 1
                table[nu] = rs.emit(cur)

        # 向上 / upward from the anchor pair
        if nu_hi > a + 1:
            if float(x) == 0.0 or float(x) * nu_hi <= 1.0:
                rs = RunningScale(hi_val.exp10)
                prev = ar.num(shifted(lo_val, hi_val.exp10))
                cur = ar.num(hi_val.char)
                for nu in range(a + 1, nu_hi):
                    nxt = ((2 * nu + 1) * z * cur - (nu + m) * prev) / (nu - m + 1)
                    prev, cur = rs.settle(cur, nxt)
                    table[nu + 1] = rs.emit(cur)
            else:
                extra = int(math.ceil((ctx.ndec + 5) * math.log(10.0) / (2.0 * math.asinh(float(x))))) + 20
                ratio = ar.zero
                ratios = {}
                for nu in range(nu_hi + extra, a + 1, -1):
                    # r_{ν-1} = Q_ν / Q_{ν-1}
                    ratio = (nu + m) / ((2 * nu + 1) * z - (nu - m + 1) * ratio)
                    if nu - 1 < nu_hi:
                        ratios[nu - 1] = ratio
                cur = table[a + 1]
                for nu in range(a + 1, nu_hi):
                    cur = cur * ratios[nu]
                    table[nu + 1] = cur

        values = [table[nu] for nu in range(nu_lo, nu_hi + 1)]
        lower = table.get(nu_lo - 1, ZERO)
        derivs = list(_imag_derivative([lower] + values, nu_lo - 1, m, x)[1:])
    return RatioTable("legendre_q_imag", m, nu_lo, xi, tuple(values), tuple(derivs))


def legendre_q_imag(
    m: int,
    n_range: Tuple[int, int],
    xi: float,
    ctx: Optional[PrecisionContext] = None,
) -> RatioTable:
    """
    虚变量第二类函数 / Second-kind function at iξ, ξ > 0

    Args:
        n_range: 次数范围 (lo, hi) / inclusive degree range (lo, hi), lo >= -m
    """
    check_finite(xi)
    if xi <= 0:
        raise DomainError(f"xi must be positive, got {xi}")
    return q_imag_table(m, n_range[0], n_range[1], xi, ctx)


def legendre_q0_closed(xi: float) -> complex:
    """Q_0(iξ) = -i arccot(ξ)"""
    return -1j * (math.pi / 2 - math.atan(xi))


__all__ = [
    "RatioTable",
    "legendre_p",
    "legendre_p_zero",
    "legendre_p_imag",
    "legendre_q_imag",
    "p_imag_table",
    "q_imag_table",
    "legendre_q0_closed",
    "double_factorial",
]
