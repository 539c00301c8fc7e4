"""
Siberia-Spheroidal - Legendre-function series and the joining factor κ

W(ξ) = Σ d_n Q^m_{n+m}(iξ) + Σ ρ_n P^m_{n-m-1}(iξ) 与 R⁽²⁾ 成比例，
R⁽²⁾ = W/κ。κ 由 ξ = 0 处的 Wronskian 确定：
l-m 偶：κ = c R⁽¹⁾(0) W′(0)；l-m 奇：κ = -c R⁽¹⁾′(0) W(0)。
W(ξ) is proportional to R⁽²⁾ and R⁽²⁾ = W/κ. The Wronskian at ξ = 0 fixes κ
from R⁽¹⁾(0) (l-m even) or R⁽¹⁾′(0) (l-m odd).

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from ..basis.legendre import p_imag_table, q_imag_table
from ..core.errors import DomainError
from ..core.precision import PrecisionContext
from ..core.scaled import ZERO, ScaledComplex, double_factorial, scaled_from, scaled_from_int
from ..core.subtraction import NO_LOSS, SeriesSum, SubtractionError, scaled_series_sum
from ..utils.logger import get_logger
from .negative import with_branches
from .normalization import NormalizationResult, flammer_sum, morse_feshbach_sum, truncated
from .ratios import CoeffSet

logger = get_logger(__name__)

_EMPTY = SeriesSum(ZERO, NO_LOSS, ZERO, float("inf"))


@dataclass(frozen=True)
class LegendreSeries:
    """
    Legendre 级数的两部分 / The Q-part and P-part of W(ξ) with derivatives

    P 部分与 ρ 首项成正比，修正时可单独缩放。
    The P-part is proportional to the leading ρ coefficient, so a repair can
    rescale it on its own.
    """

    q_value: SeriesSum
    q_deriv: SeriesSum
    p_value: SeriesSum
    p_deriv: SeriesSum
    q_terms: int
    p_terms: int
    ndec: int = 15

    def combined(self, p_scale: Any = 1.0) -> Tuple[SeriesSum, SeriesSum]:
        """W 与 W′，P 部分乘以 p_scale / W and W′ with the P-part scaled"""
        value = scaled_series_sum([self.q_value.value, self.p_value.value * p_scale], self.ndec)
        deriv = scaled_series_sum([self.q_deriv.value, self.p_deriv.value * p_scale], self.ndec)
        return value, deriv

    @property
    def value(self) -> ScaledComplex:
        return self.q_value.value + self.p_value.value

    @property
    def deriv(self) -> ScaledComplex:
        return self.q_deriv.value + self.p_deriv.value

    def value_loss(self) -> float:
        return max(self.q_value.digits_lost, self.p_value.digits_lost, self.combined()[0].digits_lost)

    def deriv_loss(self) -> float:
        return max(self.q_deriv.digits_lost, self.p_deriv.digits_lost, self.combined()[1].digits_lost)


@dataclass(frozen=True)
class JoiningFactor:
    """
    连接因子 κ⁽²⁾ / Joining factor

    Attributes:
        value: κ，相对 d_{l-m} = 1 / κ for coefficients relative to d_{l-m} = 1
        err: 综合损失 / combined loss from the Morse–Feshbach sum, the Flammer
            sum, the negative-index recursion and the series at ξ = 0
        usable: 是否可用 / False after total cancellation
    """

    value: ScaledComplex
    err: SubtractionError
    usable: bool = True


def legendre_series(coeffs: CoeffSet, xi: float, ctx: Optional[PrecisionContext] = None) -> LegendreSeries:
    """
    计算 W(ξ) 的两部分及导数 / Both parts of W(ξ) and of dW/dξ, ξ ≥ 0
    """
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", coeffs.c)
    coeffs = with_branches(coeffs, ctx)
    with ctx.arith.context():
        return _series(coeffs, xi, ctx)


def _series(coeffs: CoeffSet, xi: float, ctx: PrecisionContext) -> LegendreSeries:
    m, p, ndec = coeffs.m, coeffs.parity, ctx.ndec
    lo = -2 * m + p if m > 0 else p
    table = q_imag_table(m, lo + m, coeffs.n_max + m, xi, ctx)
    indices = range(lo, coeffs.n_max + 1, 2)
    q_terms = truncated([coeffs.d(n) * table.value(n + m) for n in indices], ndec)
    q_dterms = [coeffs.d(n) * table.deriv(n + m) for n in indices][: len(q_terms)]

    rho = coeffs.rho
    if rho is not None and rho.indices:
        k_hi = rho.degree(rho.indices[-1])
        ptab = p_imag_table(m, k_hi - m, xi, ctx)
        p_terms = truncated([v * ptab.value(rho.degree(n)) for n, v in zip(rho.indices, rho.values)], ndec)
        p_dterms = [v * ptab.deriv(rho.degree(n)) for n, v in zip(rho.indices, rho.values)][: len(p_terms)]
        p_value, p_deriv = scaled_series_sum(p_terms, ndec), scaled_series_sum(p_dterms, ndec)
    else:
        p_terms = []
        p_value = p_deriv = _EMPTY
    return LegendreSeries(
        scaled_series_sum(q_terms, ndec), scaled_series_sum(q_dterms, ndec),
        p_value, p_deriv, len(q_terms), len(p_terms), ndec,
    )


def _i_power(k: int, ar) -> complex:
    return ar.num((1, 1j, -1, -1j)[k % 4])


def r1_at_zero(coeffs: CoeffSet, ctx: Optional[PrecisionContext] = None) -> Tuple[ScaledComplex, ScaledComplex, SeriesSum]:
    """
    ξ = 0 处的 R⁽¹⁾ 与 R⁽¹⁾′ / R⁽¹⁾(0) and R⁽¹⁾′(0) from the surviving term

    l-m 偶：R⁽¹⁾(0) = i^{m-l} d_0 (2m)! c^m / ((2m+1)!! D)，R⁽¹⁾′(0) = 0；
    l-m 奇：R⁽¹⁾(0) = 0，R⁽¹⁾′(0) = i^{m-l+1} d_1 (2m+1)! c^{m+1} / ((2m+3)!! D)；
    D 为 Morse–Feshbach 和。

    Returns:
        (R⁽¹⁾(0), R⁽¹⁾′(0), Morse–Feshbach sum)
    """
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", coeffs.c)
    ar = ctx.arith
    m, l, p = coeffs.m, coeffs.l, coeffs.parity
    den = morse_feshbach_sum(coeffs, ctx)
    if den.value.is_zero():
        return ZERO, ZERO, den
    with ar.context():
        power = scaled_from(ar.one)
        cc = scaled_from(ar.num(coeffs.c))
        for _ in range(m + p):
            power = power * cc
        top = scaled_from_int(math.factorial(2 * m + p), ar.use_mp)
        bottom = scaled_from_int(double_factorial(2 * m + 1 + 2 * p), ar.use_mp)
        value = coeffs.d(p) * top * power * _i_power(m - l + p, ar) / (bottom * den.value)
    if p == 0:
        return value, ZERO, den
    return ZERO, value, den


def joining_factor(
    m: int,
    l: int,
    c: complex,
    coeffs: CoeffSet,
    norms: Optional[NormalizationResult] = None,
    ctx: Optional[PrecisionContext] = None,
) -> JoiningFactor:
    """
    由 ξ = 0 的 Wronskian 求 κ / κ from the Wronskian at ξ = 0

    完全抵消时 err = ndec 且 usable = False。

    Raises:
        DomainError: c = 0
    """
    if complex(c) == 0:
        raise DomainError("the joining factor needs c != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ndec = ctx.ndec
    coeffs = with_branches(coeffs, ctx)
    series = legendre_series(coeffs, 0.0, ctx)
    r1, r1p, den = r1_at_zero(coeffs, ctx)
    fl_error = norms.jsubflam if norms is not None else flammer_sum(coeffs, ctx).error

    with ctx.arith.context():
        cc = scaled_from(ctx.arith.num(c))
        if coeffs.parity == 0:
            value = cc * r1 * series.deriv
            wloss = series.deriv_loss()
        else:
            value = -(cc * r1p * series.value)
            wloss = series.value_loss()

    err = den.error.combine(fl_error).combine(coeffs.jsub_neg).combine(SubtractionError(wloss))
    if value.is_zero() or err.digits_lost >= ndec:
        logger.warning("joining factor unusable for m=%d l=%d c=%s", m, l, c)
        return JoiningFactor(value, SubtractionError(float(ndec)), False)
    return JoiningFactor(value, err, True)
