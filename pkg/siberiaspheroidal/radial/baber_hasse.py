"""
Siberia-Spheroidal - Baber–Hasse expansion of the third-kind radial function

R⁽³⁾ ∝ e^{icξ} Σ_{n≥-m} A_n Q^m_{m+n}(iξ)，
a_n A_{n+1} - b_n A_n - g_n A_{n-1} = 0：
    a_n = 2c(n+m+1)(n+2m+1)/(2n+2m+3)
    b_n = (n+m)(n+m+1) - λ - c²
    g_n = 2cn(n+m)/(2n+2m-1)
A_{-m} = 1，向上递推到 A_0；其上取最小解（比值由 A_{n+1}/A_n → c/n 起步
向下递推）。比例常数由 ξ = 0 的 Wronskian 确定，R⁽²⁾ = (R⁽³⁾ - R⁽¹⁾)/i。
A_{-m} = 1 and forward recurrence reach A_0; above it the minimal solution
comes from backward ratios seeded with c/n. The overall constant is fixed by
the Wronskian at ξ = 0, then R⁽²⁾ = (R⁽³⁾ - R⁽¹⁾)/i.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from ..basis.legendre import q_imag_table
from ..coeffs.joining import r1_at_zero
from ..coeffs.ratios import CoeffSet
from ..core.errors import DomainError, MethodInapplicable
from ..core.precision import PrecisionContext
from ..core.scaled import ZERO, ScaledComplex, scaled_exp, scaled_from
from ..core.subtraction import SeriesSum, scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses
from .results import R1Fragment

logger = get_logger(__name__)


@dataclass(frozen=True)
class BaberHasseOutcome:
    r2: ScaledComplex
    r2p: ScaledComplex
    loss: float
    subtraction_acc: int
    terms: int


def bh_coefficients(n: int, m: int, c: Any, lam: Any) -> Tuple[Any, Any, Any]:
    """(a_n, b_n, g_n)"""
    a = 2 * c * (n + m + 1) * (n + 2 * m + 1) / (2 * n + 2 * m + 3)
    b = (n + m) * (n + m + 1) - lam - c * c
    g = 2 * c * n * (n + m) / (2 * n + 2 * m - 1)
    return a, b, g


def bh_top(m: int, c: complex, ndec: int) -> int:
    return int(2 * math.e * abs(complex(c))) + 3 * ndec + 40


def bh_ratios(m: int, c: Any, lam: Any, top: int, ar) -> List[Any]:
    """u_n = A_{n+1}/A_n，n = 0..top-1，u_top = c/top"""
    ratio = c / top
    out = [ar.zero] * top
    for n in range(top, 0, -1):
        a, b, g = bh_coefficients(n, m, c, lam)
        den = a * ratio - b
        if den == 0:
            raise MethodInapplicable("baber_hasse", f"zero pivot in the backward ratios at n={n}")
        ratio = g / den
        out[n - 1] = ratio
    return out


def bh_coefficient_table(m: int, c: Any, lam: Any, top: int, ar) -> List[ScaledComplex]:
    """A_n，n = -m..top，A_{-m} = 1"""
    values = [scaled_from(ar.one)]
    prev = ZERO
    for n in range(-m, 0):
        a, b, g = bh_coefficients(n, m, c, lam)
        if a == 0:
            raise MethodInapplicable("baber_hasse", f"a_n vanishes at n={n}")
        nxt = (values[-1] * b + prev * g) / scaled_from(a)
        prev = values[-1]
        values.append(nxt)
    for u in bh_ratios(m, c, lam, top, ar):
        values.append(values[-1] * u)
    return values


def _series(m: int, xi: float, coeffs: List[ScaledComplex], ctx: PrecisionContext) -> Tuple[SeriesSum, SeriesSum]:
    top = len(coeffs) - 1 - m
    table = q_imag_table(m, 0, m + top, xi, ctx)
    terms = [a * table.value(k) for k, a in enumerate(coeffs)]
    dterms = [a * table.deriv(k) for k, a in enumerate(coeffs)]
    return scaled_series_sum(terms, ctx.ndec), scaled_series_sum(dterms, ctx.ndec)


def r2_baber_hasse(
    m: int,
    l: int,
    c: complex,
    xi: float,
    lam: Any,
    coeffs: CoeffSet,
    r1: R1Fragment,
    ctx: Optional[PrecisionContext] = None,
) -> BaberHasseOutcome:
    """
    Baber–Hasse 展开计算 R⁽²⁾ / R⁽²⁾ and its derivative from the Baber–Hasse series

    Args:
        lam: 特征值 / the eigenvalue λ_{ml}
        coeffs: 用于 ξ = 0 处 R⁽¹⁾ 的系数 / coefficients for R⁽¹⁾ at ξ = 0
        r1: ξ 处的 R⁽¹⁾ / R⁽¹⁾ at this ξ

    Raises:
        MethodInapplicable: 递推主元为零或归一常数退化 / degenerate pivots or constant
    """
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi}")
    if complex(c) == 0:
        raise DomainError("the Baber-Hasse series needs c != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ar = ctx.arith
    ndec = ctx.ndec
    top = bh_top(m, c, ndec)
    r1_0, r1p_0, mf = r1_at_zero(coeffs, ctx)

    with ar.context():
        cc = ar.num(c)
        table = bh_coefficient_table(m, cc, ar.num(lam), top, ar)
        t_xi, tp_xi = _series(m, xi, table, ctx)
        t_0, tp_0 = _series(m, 0.0, table, ctx)
        ic = cc * ar.num(1j)
        s0p = scaled_series_sum([t_0.value * ic, tp_0.value], ndec)
        w0 = scaled_series_sum([r1_0 * s0p.value, -(r1p_0 * t_0.value)], ndec)
        if w0.value.is_zero():
            raise MethodInapplicable("baber_hasse", f"normalizing Wronskian vanished for m={m} l={l}")
        k = scaled_from(ar.num(1j) / cc) / w0.value

        phase = scaled_exp(ic * ar.real(xi))
        s_xi = phase * t_xi.value
        sp_xi = phase * scaled_series_sum([t_xi.value * ic, tp_xi.value], ndec).value
        r3 = k * s_xi
        r3p = k * sp_xi
        minus_i = ar.num(-1j)
        value = scaled_series_sum([r3, -r1.r1], ndec)
        deriv = scaled_series_sum([r3p, -r1.r1p], ndec)
        r2 = value.value * minus_i
        r2p = deriv.value * minus_i

    losses = [
        t_xi.digits_lost, tp_xi.digits_lost, t_0.digits_lost, tp_0.digits_lost, s0p.digits_lost,
        w0.digits_lost, mf.digits_lost, value.digits_lost, deriv.digits_lost,
    ]
    acc = accuracy_from_losses(ndec, losses, r1.acc_r1, coeffs.naccre - 1)
    logger.debug("baber-hasse m=%d l=%d: %d terms, acc %d", m, l, len(table), acc)
    return BaberHasseOutcome(r2, r2p, max(losses), acc, len(table))
