"""
Siberia-Spheroidal - Radial functions at ξ = 0

l-m 奇：R⁽²⁾(0) = -1/(c R⁽¹⁾′(0))；l-m 偶：R⁽²⁾′(0) = 1/(c R⁽¹⁾(0))。
另一个分量取 Legendre 表达式在 ξ = 0 的极限 W/κ，精度由 κ 的抵消损失保守估计，
精度为 0 时该分量置零。
The other component is the ξ = 0 limit W/κ of the Legendre expression; its
accuracy comes from the losses in κ and in the series, and the component is
set to zero when that accuracy is 0.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..coeffs.joining import JoiningFactor, legendre_series, r1_at_zero
from ..coeffs.negative import with_branches
from ..coeffs.ratios import CoeffSet
from ..core.errors import DomainError
from ..core.precision import PrecisionContext, SiberiaArithmetic
from ..core.scaled import ZERO, ScaledComplex, scaled_from
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses

logger = get_logger(__name__)


@dataclass(frozen=True)
class XiZeroOutcome:
    """
    ξ = 0 处的两类径向函数 / Both kinds at ξ = 0

    Attributes:
        direct_acc: 闭式分量的精度 / accuracy of the closed-form component
        limit_acc: 极限分量的精度 / accuracy of the limiting component
    """

    r1: ScaledComplex
    r1p: ScaledComplex
    r2: ScaledComplex
    r2p: ScaledComplex
    acc_r1: int
    acc_r2: int
    direct_acc: int
    limit_acc: int


def reciprocal_wronskian_term(c: complex, value: ScaledComplex, ar: Optional[SiberiaArithmetic] = None) -> ScaledComplex:
    """1/(c·value)"""
    if complex(c) == 0:
        raise DomainError("the xi = 0 forms need c != 0")
    if value.is_zero():
        raise DomainError("R1 at xi = 0 vanishes in the surviving component")
    ar = ar if ar is not None else SiberiaArithmetic()
    with ar.context():
        return scaled_from(ar.one) / (scaled_from(ar.num(c)) * value)


def r2_xi_zero(
    m: int,
    l: int,
    c: complex,
    coeffs: CoeffSet,
    kappa: JoiningFactor,
    ctx: Optional[PrecisionContext] = None,
) -> XiZeroOutcome:
    """
    计算 ξ = 0 的 R⁽¹⁾、R⁽²⁾ 及导数 / R⁽¹⁾, R⁽²⁾ and derivatives at ξ = 0

    Raises:
        DomainError: c = 0
    """
    if complex(c) == 0:
        raise DomainError("the xi = 0 forms need c != 0")
    if coeffs.m != m or coeffs.l != l:
        raise DomainError("coefficient set does not belong to this (m, l)")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ar = ctx.arith
    ndec = ctx.ndec
    caps = (coeffs.naccre - 1, coeffs.itestm - 1)

    r1, r1p, den = r1_at_zero(coeffs, ctx)
    acc_r1 = accuracy_from_losses(ndec, [den.digits_lost], *caps)
    direct_acc = acc_r1

    coeffs = with_branches(coeffs, ctx)
    series = legendre_series(coeffs, 0.0, ctx)
    if kappa.usable:
        with ar.context():
            w = series.value / kappa.value
            wp = series.deriv / kappa.value
        loss = series.deriv_loss() if coeffs.parity else series.value_loss()
        limit_acc = accuracy_from_losses(ndec, [kappa.err.digits_lost, loss], *caps)
    else:
        w = wp = ZERO
        limit_acc = 0

    if coeffs.parity:
        r2 = -reciprocal_wronskian_term(c, r1p, ar) if not r1p.is_zero() else ZERO
        r2p = wp if limit_acc > 0 else ZERO
    else:
        r2p = reciprocal_wronskian_term(c, r1, ar) if not r1.is_zero() else ZERO
        r2 = w if limit_acc > 0 else ZERO
    if (coeffs.parity and r1p.is_zero()) or (not coeffs.parity and r1.is_zero()):
        direct_acc = 0

    acc_r2 = min(direct_acc, limit_acc)
    logger.debug("xi=0 m=%d l=%d: direct %d digits, limit %d digits", m, l, direct_acc, limit_acc)
    return XiZeroOutcome(r1, r1p, r2, r2p, acc_r1, acc_r2, direct_acc, limit_acc)
