"""
Siberia-Spheroidal - R⁽²⁾ from the associated Legendre function expression

R⁽²⁾ = W/κ，W = Σ d_n Q^m_{n+m}(iξ) + Σ ρ_n P^m_{n-m-1}(iξ)。
ξ ≤ 0.01 时可由 Wronskian 重新求 P 部分的首系数（线性方程，κ 亦随之变化）。
At ξ ≤ 0.01 the Wronskian can be solved for the scale of the P-part, which is
proportional to the lead ρ-coefficient. κ moves with that scale, so the
equation stays linear. The repaired value is kept when its predicted accuracy
is higher.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..coeffs.joining import JoiningFactor, LegendreSeries, legendre_series, r1_at_zero
from ..coeffs.negative import with_branches
from ..coeffs.ratios import CoeffSet
from ..core.errors import DomainError, MethodInapplicable
from ..core.precision import PrecisionContext
from ..core.scaled import ScaledComplex, scaled_from
from ..core.subtraction import scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses
from .results import R1Fragment
from .wronskian import WronskianPair, wronskian_accuracy

logger = get_logger(__name__)

REPAIR_XI = 0.01


@dataclass(frozen=True)
class LegendreOutcome:
    """
    Legendre 表达式结果 / Result of the Legendre expression

    Attributes:
        value_loss, deriv_loss: W 与 W′ 的损失 / losses in W and W′
        kappa_loss: κ 的损失 / loss in the joining factor
        subtraction_acc: 由损失得到的精度 / accuracy predicted from the losses
        repaired: 是否使用了 Wronskian 修正 / whether the repair was applied
        p_scale: P 部分的缩放 / scale applied to the P-part (1 when not repaired)
    """

    r2: ScaledComplex
    r2p: ScaledComplex
    value_loss: float
    deriv_loss: float
    kappa_loss: float
    subtraction_acc: int
    repaired: bool = False
    p_scale: complex = 1.0
    q_terms: int = 0
    p_terms: int = 0


def _repair(
    c: complex,
    xi: float,
    coeffs: CoeffSet,
    series: LegendreSeries,
    r1: R1Fragment,
    ctx: PrecisionContext,
) -> Optional[LegendreOutcome]:
    ar = ctx.arith
    ndec = ctx.ndec
    at_zero = legendre_series(coeffs, 0.0, ctx)
    r1_0, r1p_0, mf = r1_at_zero(coeffs, ctx)
    with ar.context():
        cc = scaled_from(ar.num(c))
        x = ar.real(xi)
        cs = cc * (x * x + 1)
        if coeffs.parity == 0:
            k0 = cc * r1_0 * at_zero.q_deriv.value
            k1 = cc * r1_0 * at_zero.p_deriv.value
        else:
            k0 = -(cc * r1p_0 * at_zero.q_value.value)
            k1 = -(cc * r1p_0 * at_zero.p_value.value)
        u_q = scaled_series_sum([r1.r1 * series.q_deriv.value, -(r1.r1p * series.q_value.value)], ndec)
        u_p = scaled_series_sum([r1.r1 * series.p_deriv.value, -(r1.r1p * series.p_value.value)], ndec)
        top = scaled_series_sum([k0, -(cs * u_q.value)], ndec)
        bottom = scaled_series_sum([cs * u_p.value, -k1], ndec)
        if bottom.value.is_zero():
            return None
        scale = (top.value / bottom.value).to_complex()
        kappa = scaled_series_sum([k0, k1 * scale], ndec)
        if kappa.value.is_zero():
            return None
        w, wp = series.combined(scale)
        r2 = w.value / kappa.value
        r2p = wp.value / kappa.value

    losses = [
        series.q_value.digits_lost, series.q_deriv.digits_lost, series.p_value.digits_lost,
        series.p_deriv.digits_lost, at_zero.value_loss(), at_zero.deriv_loss(), mf.digits_lost,
        u_q.digits_lost, u_p.digits_lost, top.digits_lost, bottom.digits_lost, kappa.digits_lost,
        w.digits_lost, wp.digits_lost,
    ]
    acc = accuracy_from_losses(ndec, losses, r1.acc_r1, coeffs.naccre - 1, coeffs.itestm - 1)
    return LegendreOutcome(
        r2, r2p, w.digits_lost, wp.digits_lost, kappa.digits_lost, acc, True, scale,
        series.q_terms, series.p_terms,
    )


def r2_legendre(
    m: int,
    l: int,
    c: complex,
    xi: float,
    coeffs: CoeffSet,
    kappa: JoiningFactor,
    r1: Optional[R1Fragment] = None,
    ctx: Optional[PrecisionContext] = None,
) -> LegendreOutcome:
    """
    Legendre 表达式计算 R⁽²⁾ / R⁽²⁾ and dR⁽²⁾/dξ from the Legendre expression

    ξ = 0 时返回极限形式。
    ξ = 0 returns the limiting form.

    Raises:
        MethodInapplicable: κ 不可用 / the joining factor cancelled
    """
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi}")
    if coeffs.m != m or coeffs.l != l:
        raise DomainError("coefficient set does not belong to this (m, l)")
    if not kappa.usable:
        raise MethodInapplicable("legendre", f"joining factor unusable for m={m} l={l}")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ndec = ctx.ndec
    coeffs = with_branches(coeffs, ctx)
    series = legendre_series(coeffs, xi, ctx)
    with ctx.arith.context():
        r2 = series.value / kappa.value
        r2p = series.deriv / kappa.value
    vloss, dloss = series.value_loss(), series.deriv_loss()
    caps = [coeffs.naccre - 1, coeffs.itestm - 1]
    if r1 is not None:
        caps.append(r1.acc_r1)
    acc = accuracy_from_losses(ndec, [vloss, dloss, kappa.err.digits_lost], *caps)
    outcome = LegendreOutcome(
        r2, r2p, vloss, dloss, kappa.err.digits_lost, acc, False, 1.0, series.q_terms, series.p_terms,
    )

    if 0 < xi <= REPAIR_XI and r1 is not None and coeffs.rho is not None and coeffs.rho.indices:
        repaired = _repair(c, xi, coeffs, series, r1, ctx)
        if repaired is not None:
            plain = wronskian_accuracy(
                WronskianPair(r1.r1, r1.r1p, r2, r2p), c, xi, "legendre", ndec, acc, ctx.arith,
            )
            if repaired.subtraction_acc > plain:
                logger.debug(
                    "legendre repair for m=%d l=%d: %d -> %d digits", m, l, plain, repaired.subtraction_acc,
                )
                return repaired
    return outcome
