"""
Siberia-Spheroidal - Normalization of the angular functions

四种归一化：Meixner–Schäfke（与 P^m_l 同范数）、单位范数、Flammer（η = 0 处与
P^m_l 或其导数一致）、Morse–Feshbach（η = 1 处的系数和）。
Four schemes: Meixner–Schäfke (same norm as P^m_l), unit norm, Flammer
(matching P^m_l or its derivative at η = 0) and Morse–Feshbach (the sum that
appears at η = 1). Every defining sum carries its cancellation ledger.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

from typing_extensions import Literal

from ..basis.legendre import legendre_p_zero
from ..core.errors import CancellationError, DomainError
from ..core.precision import PrecisionContext
from ..core.scaled import ScaledComplex, scaled_factorial_ratio, scaled_from, scaled_sqrt
from ..core.subtraction import SeriesSum, SubtractionError, scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses
from .ratios import CoeffSet

logger = get_logger(__name__)

Scheme = Literal["meixner_schafke", "unit", "flammer", "morse_feshbach"]
SCHEMES = ("meixner_schafke", "unit", "flammer", "morse_feshbach")

TRUNCATION_RUN = 5


@dataclass(frozen=True)
class NormalizationResult:
    """
    归一化结果 / Normalization outcome

    Attributes:
        scheme: 归一化方式 / scheme name
        scale: d_0 或 d_1 的取值 / value assigned to d_0 or d_1
        factor: d_n/d_{l-m} 的乘子 / multiplier applied to the relative coefficients
        jsubms: Meixner–Schäfke 和的损失 / loss in the Meixner–Schäfke sum
        jsubflam: Flammer 和的损失 / loss in the Flammer sum
        jsubmf: Morse–Feshbach 和的损失 / loss in the Morse–Feshbach sum
        accuracy_digits: 估计精度 / estimated accurate digits
    """

    scheme: str
    scale: ScaledComplex
    factor: ScaledComplex
    jsubms: SubtractionError
    jsubflam: SubtractionError
    jsubmf: SubtractionError
    accuracy_digits: int

    @property
    def digits_lost(self) -> float:
        if self.scheme == "flammer":
            return self.jsubflam.digits_lost
        if self.scheme == "morse_feshbach":
            return self.jsubmf.digits_lost
        return self.jsubms.digits_lost

    def d(self, coeffs: CoeffSet, n: int) -> ScaledComplex:
        return coeffs.d(n) * self.factor


def truncated(
    terms: Iterable[ScaledComplex],
    ndec: int,
    run: int = TRUNCATION_RUN,
    margin: int = 2,
) -> List[ScaledComplex]:
    """连续 run 项相对最大项低于 10^{-ndec-margin} 时截断 / Cut after `run` negligible terms in a row"""
    out: List[ScaledComplex] = []
    top = -float("inf")
    small = 0
    for term in terms:
        out.append(term)
        size = term.log10_abs()
        top = max(top, size)
        if size < top - ndec - margin:
            small += 1
            if small >= run:
                break
        else:
            small = 0
    return out


def _summed(terms: List[ScaledComplex], ndec: int) -> SeriesSum:
    return scaled_series_sum(truncated(terms, ndec), ndec)


def ms_sum(coeffs: CoeffSet, ctx: PrecisionContext) -> SeriesSum:
    """Σ 2(n+2m)!/((2n+2m+1) n!) d_n²"""
    m, ar = coeffs.m, ctx.arith
    with ar.context():
        terms = []
        for n in coeffs.indices():
            d = coeffs.d(n)
            weight = scaled_factorial_ratio(n + 2 * m, n, ar.use_mp) * (ar.real(2) / (2 * n + 2 * m + 1))
            terms.append(weight * d * d)
        return _summed(terms, ctx.ndec)


def flammer_sum(coeffs: CoeffSet, ctx: PrecisionContext) -> SeriesSum:
    """Σ d_n P^m_{n+m}(0)（偶）或 Σ d_n P^m_{n+m}′(0)（奇）"""
    m, ar = coeffs.m, ctx.arith
    slot = coeffs.parity
    with ar.context():
        terms = [coeffs.d(n) * legendre_p_zero(m, n, ar.use_mp)[slot] for n in coeffs.indices()]
        return _summed(terms, ctx.ndec)


def morse_feshbach_sum(coeffs: CoeffSet, ctx: PrecisionContext) -> SeriesSum:
    """Σ d_n (n+2m)!/n!"""
    m, ar = coeffs.m, ctx.arith
    with ar.context():
        terms = [coeffs.d(n) * scaled_factorial_ratio(n + 2 * m, n, ar.use_mp) for n in coeffs.indices()]
        return _summed(terms, ctx.ndec)


def _checked(total: SeriesSum, name: str) -> ScaledComplex:
    if total.value.is_zero():
        raise CancellationError(f"{name} sum cancelled completely", ledger=total.error)
    return total.value


def normalize(scheme: str, coeffs: CoeffSet, ctx: Optional[PrecisionContext] = None) -> NormalizationResult:
    """
    按所选方式归一化 / Normalize the coefficient set

    accuracy_digits = min(naccre-1, itestm-1, ndec-loss-1)，loss 为该方式定义和的损失。

    Raises:
        DomainError: 未知方式 / unknown scheme
        CancellationError: 定义和完全抵消 / the defining sum cancelled to zero
    """
    if scheme not in SCHEMES:
        raise DomainError(f"unknown normalization scheme {scheme!r}")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", coeffs.c)
    ar = ctx.arith
    m, l = coeffs.m, coeffs.l
    ms = ms_sum(coeffs, ctx)
    fl = flammer_sum(coeffs, ctx)
    mf = morse_feshbach_sum(coeffs, ctx)

    with ar.context():
        if scheme in ("meixner_schafke", "unit"):
            if scheme == "unit":
                rhs = scaled_from(ar.one)
            else:
                rhs = scaled_factorial_ratio(l + m, l - m, ar.use_mp) * (ar.real(2) / (2 * l + 1))
            factor = scaled_sqrt(rhs / _checked(ms, "Meixner-Schafke"))
            loss = ms.error
        elif scheme == "flammer":
            target = legendre_p_zero(m, l - m, ar.use_mp)[coeffs.parity]
            factor = target / _checked(fl, "Flammer")
            loss = fl.error
        else:
            factor = scaled_factorial_ratio(l + m, l - m, ar.use_mp) / _checked(mf, "Morse-Feshbach")
            loss = mf.error
        scale = coeffs.d(coeffs.parity) * factor

    accuracy = accuracy_from_losses(ctx.ndec, [loss.digits_lost], coeffs.naccre - 1, coeffs.itestm - 1)
    logger.debug("normalized m=%d l=%d (%s): loss %.1f, accuracy %d", m, l, scheme, loss.digits_lost, accuracy)
    return NormalizationResult(scheme, scale, factor, ms.error, fl.error, mf.error, accuracy)
