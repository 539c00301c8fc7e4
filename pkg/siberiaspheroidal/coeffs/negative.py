"""
Siberia-Spheroidal - Negative-index and ρ-branch coefficients

负指标系数 d_{-2}, ..., d_{-2m}（或奇数情形 d_{-1}, ..., d_{-2m+1}）
从底端的两项闭式开始向上递推；ρ 系数（P^m_{n-m-1}(iξ) 级数的系数）
从高指标比值 0 开始向下递推，最后一步连接到 d_{-2m} 或 d_{-2m+1}。
Negative-index coefficients start from the two-term closed form at the bottom
index and recur up to d_{-2}/d_0 (or d_{-1}/d_1). The ρ coefficients of the
P^m_{n-m-1}(iξ) series recur down from a zero ratio at a high index; the last
step joins them to d_{-2m} (or d_{-2m+1}).

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any, Optional, Tuple

from ..core.precision import PrecisionContext
from ..core.scaled import ZERO, ScaledComplex
from ..core.subtraction import NO_LOSS, SubtractionError, sum_with_error
from ..eigen.recurrence import coefficients
from ..utils.logger import get_logger
from .ratios import CoeffSet

logger = get_logger(__name__)


@dataclass(frozen=True)
class NegativeBranch:
    """
    负指标系数 / Negative-index coefficients

    Attributes:
        indices: n' = -2, -4, ..., -2m（偶）或 -1, -3, ..., -2m+1（奇）
        ratios: r_{n'} = d_{n'}/d_{n'+2}
        values: d_{n'} / d_{l-m}
        error: 递推中累积的抵消位数 / cancellation accumulated over the recursion
    """

    indices: Tuple[int, ...] = ()
    ratios: Tuple[Any, ...] = ()
    values: Tuple[ScaledComplex, ...] = ()
    error: SubtractionError = NO_LOSS

    def value(self, n: int) -> ScaledComplex:
        for index, value in zip(self.indices, self.values):
            if index == n:
                return value
        return ZERO

    @property
    def bottom(self) -> ScaledComplex:
        """d_{-2m} 或 d_{-2m+1} / the lowest coefficient"""
        return self.values[-1] if self.values else ZERO


@dataclass(frozen=True)
class RhoBranch:
    """
    ρ 系数 / ρ-branch coefficients

    ρ_n 乘 P^m_{n-m-1}(iξ)，n = 2m+2, 2m+4, ...（偶）或 2m+1, 2m+3, ...（奇）。

    Attributes:
        junction: ρ_{n0} / d_{-2m}（或 d_{-2m+1}）
        ratios: t_n = ρ_{n+2}/ρ_n
        values: ρ_n / d_{l-m}
        last_error: 最后一步的抵消位数 / cancellation in the joining step
    """

    m: int = 0
    indices: Tuple[int, ...] = ()
    ratios: Tuple[Any, ...] = ()
    junction: Any = 0j
    values: Tuple[ScaledComplex, ...] = ()
    last_error: SubtractionError = NO_LOSS

    def degree(self, n: int) -> int:
        return n - self.m - 1


def _junction_alpha(m: int, parity: int, c2: Any) -> Any:
    # α at the decoupled index, after the Q-to-P limit
    if parity == 0:
        return c2 / ((2 * m + 1) * (2 * m - 1))
    return -c2 / ((2 * m - 1) * (2 * m - 3))


def d_negative(m: int, l: int, c: complex, coeffs: CoeffSet, ctx: Optional[PrecisionContext] = None) -> NegativeBranch:
    """
    负指标系数比值 / Negative-index ratios with their cancellation ledger

    底端 r_{-2m} = -α/(β-λ)，其上 r_{n'} = -α_{n'}/((β_{n'}-λ) + γ_{n'} r_{n'-2})。
    每一步的分母按 sum_with_error 记损失并累加。
    """
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    p = coeffs.parity
    if m == 0 or complex(c) == 0:
        return NegativeBranch()
    ndec = ctx.ndec
    ar = ctx.arith
    bottom = -2 * m + p
    with ar.context():
        lam = ar.num(coeffs.lam)
        c2 = ar.num(c) ** 2
        ratios = {}
        lost = 0.0
        prev = None
        for n in range(bottom, 0, 2):
            a, b, g = coefficients(n, m, c2)
            terms = [ar.num(b), -lam] if prev is None else [ar.num(b), -lam, g * prev]
            den, err = sum_with_error(terms, ndec)
            lost += err.digits_lost
            prev = -a / den
            ratios[n] = prev

        indices = tuple(range(-2 + p, bottom - 1, -2))
        values = []
        cur = coeffs.d(p)
        for n in indices:
            cur = cur * ratios[n]
            values.append(cur)
    error = SubtractionError(min(float(ndec), lost))
    logger.debug("negative branch m=%d l=%d: %d terms, %.1f digits lost", m, l, len(indices), error.digits_lost)
    return NegativeBranch(indices, tuple(ratios[n] for n in indices), tuple(values), error)


def d_rho(
    m: int,
    l: int,
    c: complex,
    coeffs: CoeffSet,
    ctx: Optional[PrecisionContext] = None,
    top: Optional[int] = None,
    negative: Optional[NegativeBranch] = None,
) -> RhoBranch:
    """
    ρ 系数比值 / ρ-branch ratios and the joining-step ledger

    从高指标 (比值取 0) 向下：t_{n-2} = -α_{-n}/((β_{-n}-λ) + γ_{-n} t_n)；
    最后一步以连接系数 α′ 得到 ρ_{n0}/d_{-2m}。
    From a zero ratio at a high index the recursion runs down to n0; the last
    step uses the coupling α′ left by the Q-to-P limit at the decoupled index.

    Args:
        top: 起始指标，缺省时由系数表长度确定 / start index, from the table size by default
        negative: 已有的负指标分支 / negative branch when already computed
    """
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    if complex(c) == 0:
        return RhoBranch(m)
    ndec = ctx.ndec
    ar = ctx.arith
    p = coeffs.parity
    n0 = 2 * m + 2 - p
    span = coeffs.n_max - p
    if top is None:
        top = n0 + span + 2 * int(math.ceil(abs(complex(c)))) + 40
    top += (top - n0) % 2

    if m == 0:
        base = coeffs.d(p)
    else:
        negative = negative if negative is not None else d_negative(m, l, c, coeffs, ctx)
        base = negative.bottom

    with ar.context():
        lam = ar.num(coeffs.lam)
        c2 = ar.num(c) ** 2
        ratios = {}
        ratio = ar.zero
        for n in range(top, n0, -2):
            a, b, g = coefficients(-n, m, c2)
            ratio = -a / ((b - lam) + g * ratio)
            ratios[n - 2] = ratio
        a_join = _junction_alpha(m, p, c2)
        _, b, g = coefficients(-n0, m, c2)
        den, last = sum_with_error([ar.num(b), -lam, g * ratios[n0]], ndec)
        junction = -a_join / den

        indices = tuple(range(n0, n0 + span + 1, 2))
        values = [base * junction]
        for n in indices[:-1]:
            values.append(values[-1] * ratios[n])
    logger.debug("rho branch m=%d l=%d: junction loss %.1f digits", m, l, last.digits_lost)
    return RhoBranch(m, indices, tuple(ratios[n] for n in indices[:-1]), junction, tuple(values), last)


def with_branches(coeffs: CoeffSet, ctx: Optional[PrecisionContext] = None) -> CoeffSet:
    """按需附加负指标与 ρ 分支 / Attach the negative and ρ branches when missing"""
    if coeffs.negative is not None and coeffs.rho is not None:
        return coeffs
    negative = coeffs.negative or d_negative(coeffs.m, coeffs.l, coeffs.c, coeffs, ctx)
    rho = coeffs.rho or d_rho(coeffs.m, coeffs.l, coeffs.c, coeffs, ctx, negative=negative)
    return replace(coeffs, negative=negative, rho=rho)
