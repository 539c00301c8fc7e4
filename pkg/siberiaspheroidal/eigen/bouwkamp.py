"""
Siberia-Spheroidal - Bouwkamp eigenvalue refinement

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from ..core.errors import DomainError
from ..core.precision import PrecisionContext, check_finite
from ..utils.logger import get_logger
from .recurrence import coefficients

logger = get_logger(__name__)

MAX_ITER = 50
GROWTH_LIMIT = 3


@dataclass(frozen=True)
class BouwkampOutcome:
    """
    精化结果 / Refinement outcome

    Attributes:
        lam: 最佳特征值 / best eigenvalue found
        naccre: 估计精度位数 / estimated accurate digits
        converged: 是否收敛 / whether the correction fell below the target
        first_digits: 首次修正对应的位数 / digits implied by the first correction
        iterations: 迭代次数 / Newton steps taken
    """

    lam: Any
    naccre: int
    converged: bool
    first_digits: int
    iterations: int


def _top_index(t: int, c: complex, digits: int) -> int:
    top = t + 2 * int(math.ceil(abs(c))) + 4 * digits + 40
    return top + (top - t) % 2


def mismatch(m: int, l: int, lam: Any, c2: Any, n_top: int) -> Tuple[Any, Any]:
    """
    前后向比值的失配函数及其导数 / Forward/backward ratio mismatch and its λ-derivative

    f(λ) = (β_t - λ) + γ_t / N^f_t + α_t N^b_{t+2}, t = l - m, N_n = d_n / d_{n-2}
    """
    t = l - m
    p = t % 2

    # backward from the top: N_n = -γ_n / ((β_n - λ) + α_n N_{n+2})
    nb = lam * 0
    dnb = lam * 0
    for n in range(n_top, t + 1, -2):
        a, b, g = coefficients(n, m, c2)
        den = (b - lam) + a * nb
        dden = -1 + a * dnb
        nb, dnb = -g / den, g * dden / (den * den)

    a_t, b_t, g_t = coefficients(t, m, c2)
    f = (b_t - lam) + a_t * nb
    df = -1 + a_t * dnb
    if t >= 2:
        a, b, _ = coefficients(p, m, c2)
        nf = (lam - b) / a
        dnf = 1 / a
        for n in range(p + 2, t, 2):
            a, b, g = coefficients(n, m, c2)
            nf, dnf = ((lam - b) - g / nf) / a, (1 + g * dnf / (nf * nf)) / a
        f += g_t / nf
        df -= g_t * dnf / (nf * nf)
    return f, df


def _to_working(value: Any, ctx: PrecisionContext) -> Any:
    """精化层结果转回工作精度 / Bring a refined value back to the working tier"""
    return ctx.arith.num(value) if ctx.arith.use_mp else complex(value)


def _digits(rel: float, ndec: int) -> int:
    if rel == 0:
        return ndec
    return max(0, min(ndec, int(math.floor(-math.log10(rel)))))


def bouwkamp_iterate(
    m: int,
    l: int,
    lam0: complex,
    c: complex,
    ctx: Optional[PrecisionContext] = None,
    max_iter: int = MAX_ITER,
) -> BouwkampOutcome:
    """
    牛顿迭代消除前后向失配 / Newton iteration on the forward/backward mismatch

    在 ctx.refine_arith 精度下运算。c = 0 时直接返回 λ0。
    Runs in the refinement tier of ctx. At c = 0 λ0 is returned untouched.
    """
    check_finite(lam0, c)
    if l < m or m < 0:
        raise DomainError("bouwkamp needs 0 <= m <= l")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double")
    ar = ctx.refine_arith
    if complex(c) == 0:
        return BouwkampOutcome(_to_working(ar.num(lam0), ctx), ctx.ndec, True, ctx.ndec, 0)

    with ar.context():
        lam = ar.num(lam0)
        c2 = ar.num(c) ** 2
        n_top = _top_index(l - m, complex(c), ar.digits)
        target = 10.0 ** (-ar.digits)
        best_lam, best_rel = lam, math.inf
        history: List[float] = []
        growth = 0
        converged = False
        first_digits = 0
        for step in range(1, max_iter + 1):
            f, df = mismatch(m, l, lam, c2, n_top)
            if df == 0:
                logger.debug("bouwkamp derivative vanished at m=%d l=%d", m, l)
                break
            delta = -f / df
            size = abs(lam) if lam != 0 else 1
            rel = float(abs(delta) / size)
            if step == 1:
                first_digits = _digits(rel, ctx.ndec)
            if history and rel > history[-1]:
                growth += 1
            else:
                growth = 0
            history.append(rel)
            if rel < best_rel:
                best_rel, best_lam = rel, lam + delta
            lam = lam + delta
            if rel < target:
                converged = True
                break
            if growth >= GROWTH_LIMIT:
                logger.debug("bouwkamp correction grew %d times at m=%d l=%d", growth, m, l)
                break
        naccre = _digits(best_rel, ctx.ndec)
        out_lam = _to_working(best_lam, ctx)
    return BouwkampOutcome(out_lam, naccre, converged, first_digits, len(history))


def bouwkamp_refine(
    m: int,
    l: int,
    lam0: complex,
    c: complex,
    ctx: Optional[PrecisionContext] = None,
) -> Tuple[Any, int, bool]:
    """Bouwkamp 精化 / Refine λ0; returns (λ, naccre, converged)"""
    out = bouwkamp_iterate(m, l, lam0, c, ctx)
    return out.lam, out.naccre, out.converged
