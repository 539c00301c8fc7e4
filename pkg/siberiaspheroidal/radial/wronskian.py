"""
Siberia-Spheroidal - Wronskian accuracy estimates

R⁽¹⁾ dR⁽²⁾/dξ - R⁽²⁾ dR⁽¹⁾/dξ = 1/(c(ξ²+1))

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from typing import Any, NamedTuple, Optional

from ..core.errors import DomainError
from ..core.precision import SiberiaArithmetic
from ..core.scaled import ScaledComplex, scaled_from
from ..utils.utils import clamp_digits

# 积分法在此以下用抵消估计下调 / below this ξ the integral estimate is capped by its losses
SMALL_XI = 0.01

_DOUBLE = SiberiaArithmetic()


class WronskianPair(NamedTuple):
    """两类函数及导数 / Both kinds with their derivatives"""

    r1: ScaledComplex
    r1p: ScaledComplex
    r2: ScaledComplex
    r2p: ScaledComplex


def theoretical_wronskian(c: complex, xi: float, ar: Optional[SiberiaArithmetic] = None) -> ScaledComplex:
    """1/(c(ξ²+1))"""
    if complex(c) == 0:
        raise DomainError("the Wronskian needs c != 0")
    ar = ar if ar is not None else _DOUBLE
    with ar.context():
        x = ar.real(xi)
        return scaled_from(ar.one / (ar.num(c) * (x * x + 1)))


def wronskian_digits(
    r1: ScaledComplex,
    r1p: ScaledComplex,
    r2: ScaledComplex,
    r2p: ScaledComplex,
    c: complex,
    xi: float,
    ndec: int,
    ar: Optional[SiberiaArithmetic] = None,
) -> int:
    """计算值与理论值一致的位数 / Leading digits shared by the computed and exact Wronskian"""
    ar = ar if ar is not None else _DOUBLE
    rhs = theoretical_wronskian(c, xi, ar)
    with ar.context():
        diff = r1 * r2p - r2 * r1p - rhs
        if diff.is_zero():
            return ndec
        return clamp_digits(-(diff / rhs).log10_abs(), ndec)


def near_equality_digits(r1: ScaledComplex, r1p: ScaledComplex, c: complex, xi: float) -> int:
    """int{log10 |R⁽¹⁾ R⁽¹⁾′ c (ξ²+1)|}，向零截断 / truncated toward zero"""
    size = r1.log10_abs() + r1p.log10_abs() + math.log10(abs(complex(c)) * (xi * xi + 1.0))
    if not math.isfinite(size):
        return 0
    return int(size)


def pairing_downgrade(xi: float) -> int:
    """ξ < 1 时按 log10 ξ 截断下调 / digits lost by pairing at small ξ"""
    if xi <= 0 or xi >= 1:
        return 0
    return int(-math.log10(xi))


def wronskian_accuracy(
    result: Any,
    c: complex,
    xi: float,
    method: str,
    ndec: int,
    subtraction_acc: Optional[int] = None,
    ar: Optional[SiberiaArithmetic] = None,
) -> int:
    """
    按方法调整后的 Wronskian 精度 / Wronskian accuracy with the per-method adjustments

    - 近相等：R⁽¹⁾ 较大时加上 acc 位 / adds the near-equality digits when R⁽¹⁾ is
      large; the Legendre path needs acc > 1 and the integral path never adds;
    - Legendre：与抵消估计取小 / capped by the subtraction estimate;
    - 积分：ξ ≤ 0.01 时与抵消估计取小 / capped by the subtraction estimate at small ξ;
    - 配对：按 log10 ξ 下调 / downgraded at small ξ.

    Args:
        result: 具有 r1, r1p, r2, r2p 的对象 / anything carrying r1, r1p, r2, r2p
        subtraction_acc: 由级数损失得到的估计 / estimate from the series losses
    """
    raw = wronskian_digits(result.r1, result.r1p, result.r2, result.r2p, c, xi, ndec, ar)
    near = near_equality_digits(result.r1, result.r1p, c, xi)
    acc = raw
    if method == "legendre":
        if near > 1:
            acc += near
        if subtraction_acc is not None:
            acc = min(acc, subtraction_acc)
    elif method == "integral":
        if xi <= SMALL_XI and subtraction_acc is not None:
            acc = min(acc, subtraction_acc)
    else:
        if near >= 1:
            acc += near
            if subtraction_acc is not None:
                acc = min(acc, subtraction_acc)
        if method == "pairing":
            acc -= pairing_downgrade(xi)
    return max(0, min(ndec, acc))
