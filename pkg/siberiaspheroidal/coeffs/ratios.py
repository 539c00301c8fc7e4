"""
Siberia-Spheroidal - Expansion coefficients d_n(-ic|ml), positive branch

系数以相邻比值 N_n = d_n/d_{n-2} 计算：高指标向下递推，低指标向前递推，
在匹配位置拼接，匹配位数记为 itestm。
Coefficients are carried as successive ratios N_n = d_n/d_{n-2}. Backward
recursion runs from above the convergence horizon, forward recursion from
the lowest index, and the two are joined at the best-matching index; the
number of matching digits is itestm.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional, Tuple, TYPE_CHECKING

from ..core.errors import DomainError
from ..core.precision import PrecisionContext, check_finite, check_size_parameter
from ..core.scaled import ZERO, ScaledComplex, scaled_from
from ..core.subtraction import NO_LOSS, SubtractionError
from ..eigen.recurrence import coefficients
from ..utils.logger import get_logger
from ..utils.utils import clamp_digits

if TYPE_CHECKING:
    from .negative import NegativeBranch, RhoBranch

logger = get_logger(__name__)

# c_r 超过该值时使用幅值匹配 / magnitude matching above this real part of c
MATCH_THRESHOLD = 50.0
MATCH_DROP = 2
MATCH_PATIENCE = 3
HORIZON_TRIES = 8


@dataclass(frozen=True)
class CoeffSet:
    """
    一组 (m, l) 的展开系数 / Expansion coefficients for one (m, l)

    values 保存 d_n / d_{l-m}，n = p, p+2, ..., n_max（p 为 l-m 的奇偶）。
    values hold d_n relative to d_{l-m} = 1 for n = p, p+2, ..., n_max.
    Negative-index and ρ-branch coefficients are attached lazily by
    `with_branches`.

    Attributes:
        ratios_pos: N_n = d_n/d_{n-2}, n = p+2 .. n_max
        itestm: 前后向匹配位数 / digits of forward/backward match
        match_index: 拼接位置 / index where the two recursions were joined
        naccre: 特征值精度 / accuracy of the eigenvalue used
    """

    m: int
    l: int
    c: complex
    lam: Any
    ndec: int
    use_mp: bool
    ratios_pos: Tuple[Any, ...]
    values: Tuple[ScaledComplex, ...]
    itestm: int
    match_index: int
    naccre: int
    negative: Optional["NegativeBranch"] = None
    rho: Optional["RhoBranch"] = None

    @property
    def t(self) -> int:
        return self.l - self.m

    @property
    def parity(self) -> int:
        return self.t % 2

    @property
    def n_max(self) -> int:
        return self.parity + 2 * (len(self.values) - 1)

    def indices(self) -> range:
        return range(self.parity, self.n_max + 1, 2)

    def d(self, n: int) -> ScaledComplex:
        """d_n / d_{l-m}，超出范围或奇偶不符时为 0 / zero outside the stored range"""
        if (n - self.parity) % 2:
            return ZERO
        if n >= 0:
            k = (n - self.parity) // 2
            return self.values[k] if k < len(self.values) else ZERO
        if self.negative is not None:
            return self.negative.value(n)
        return ZERO

    @property
    def ratios_neg(self) -> Tuple[Any, ...]:
        return self.negative.ratios if self.negative is not None else ()

    @property
    def ratios_rho(self) -> Tuple[Any, ...]:
        return self.rho.ratios if self.rho is not None else ()

    @property
    def jsub_neg(self) -> SubtractionError:
        return self.negative.error if self.negative is not None else NO_LOSS

    @property
    def jsub_rho_last(self) -> SubtractionError:
        return self.rho.last_error if self.rho is not None else NO_LOSS


def _aligned(n: int, parity: int) -> int:
    return n + (n - parity) % 2


def _backward(m: int, lowest: int, top: int, c2: Any, lam: Any) -> Dict[int, Any]:
    # N_n = -γ_n / ((β_n - λ) + α_n N_{n+2}), N_{top+2} = 0
    out: Dict[int, Any] = {}
    ratio = lam * 0
    for n in range(top, lowest - 1, -2):
        a, b, g = coefficients(n, m, c2)
        den = (b - lam) + a * ratio
        if den == 0:
            den = lam * 0 + 1e-300
        ratio = -g / den
        out[n] = ratio
    return out


def _forward(m: int, parity: int, top: int, c2: Any, lam: Any) -> Dict[int, Any]:
    # N_{p+2} = (λ - β_p)/α_p, N_{n+2} = ((λ - β_n) - γ_n/N_n)/α_n
    a, b, _ = coefficients(parity, m, c2)
    if a == 0:
        raise DomainError("zero α in the forward start; degenerate parameters")
    out: Dict[int, Any] = {parity + 2: (lam - b) / a}
    for n in range(parity + 2, top - 1, 2):
        prev = out[n]
        if prev == 0:
            break
        a, b, g = coefficients(n, m, c2)
        out[n + 2] = ((lam - b) - g / prev) / a
    return out


def _magnitude_digits(a: Any, b: Any, ndec: int) -> int:
    ma, mb = float(abs(a)), float(abs(b))
    if ma == mb:
        return ndec
    if mb == 0:
        return 0
    return clamp_digits(-math.log10(abs(ma - mb) / mb), ndec)


def coefficient_horizon(m: int, l: int, c: complex, lam: Any, ndec: int) -> int:
    """
    级数收敛的截断位置 / Where the coefficient series has converged

    首个使 |d_n (n+2m)!/n!| 相对其 n = l-m 处的值低于 10^{-ndec-3} 的 n，
    然后把超出 l-m 的部分加倍。
    First n where |d_n (n+2m)!/n!| falls below 10^{-ndec-3} of its value at
    n = l - m; the distance beyond l - m is then doubled once.
    """
    t = l - m
    p = t % 2
    c2 = complex(c) ** 2
    lamc = complex(lam)
    probe = _aligned(t + max(2 * int(math.ceil(abs(complex(c)))), 20) + 60, p)
    target = -(ndec + 3)
    for _ in range(HORIZON_TRIES):
        back = _backward(m, t + 2, _aligned(probe + 40, p), c2, lamc)
        logw = 0.0
        for n in range(t + 2, probe + 1, 2):
            size = abs(back[n])
            if size == 0:
                return _aligned(t + 2 * (n - t), p)
            logw += math.log10(size) + math.log10((n + 2 * m) * (n + 2 * m - 1) / (n * (n - 1)))
            if logw < target:
                return _aligned(t + 2 * (n - t), p)
        probe = _aligned(2 * probe - t, p)
    logger.debug("coefficient horizon not reached for m=%d l=%d c=%s; using %d", m, l, c, probe)
    return probe


def d_ratios(
    m: int,
    l: int,
    c: complex,
    lam: Any,
    n_max: Optional[int] = None,
    ctx: Optional[PrecisionContext] = None,
    naccre: Optional[int] = None,
) -> CoeffSet:
    """
    正指标系数比值与 itestm / Positive-branch ratios and the match digits itestm

    c_r ≤ 50 时前向递推到 l-m、其上用后向递推；c_r > 50 时逐点比较两者的
    幅值，匹配下降 2 位并持续 3 个候选后停止，取最佳位置拼接。
    For c_r ≤ 50 forward ratios are used up to l - m and backward ratios
    above. For larger c_r the magnitudes are compared index by index and the
    search stops once the match has fallen 2 digits below its best for three
    candidates in a row; the best index is the join.

    Args:
        lam: 特征值 λ_{ml} / the eigenvalue
        n_max: 最高指标，缺省时自动确定 / highest index, automatic when None
        naccre: 特征值精度位数 / eigenvalue accuracy carried into the set

    Raises:
        DomainError: 参数非法或前向起点退化 / bad arguments or degenerate start
    """
    if m < 0 or l < m:
        raise DomainError("d_ratios needs 0 <= m <= l")
    c = check_size_parameter(c)
    check_finite(lam)
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    ndec = ctx.ndec
    ar = ctx.arith
    t = l - m
    p = t % 2
    naccre = ndec if naccre is None else int(naccre)
    if n_max is None:
        n_max = coefficient_horizon(m, l, c, lam, ndec) if c != 0 else t + 4
    n_max = _aligned(max(n_max, t + 4), p)
    count = (n_max - p) // 2 + 1

    if c == 0:
        with ar.context():
            one = scaled_from(ar.one)
            zero = scaled_from(ar.zero)
        values = tuple(one if p + 2 * k == t else zero for k in range(count))
        return CoeffSet(m, l, c, lam, ndec, ar.use_mp, tuple(0j for _ in range(count - 1)),
                        values, ndec, t, naccre)

    with ar.context():
        lam_w = ar.num(lam)
        c2 = ar.num(c) ** 2
        top = _aligned(n_max + 2 * int(math.ceil(abs(c))) + 40, p)
        back = _backward(m, p + 2, top, c2, lam_w)
        if c.real <= MATCH_THRESHOLD or t <= 1:
            forward = _forward(m, p, t + 2, c2, lam_w)
            join = t
            probe = t + 2
            itestm = _magnitude_digits(forward[probe], back[probe], ndec) if probe in forward else 0
        else:
            forward = _forward(m, p, n_max, c2, lam_w)
            join, itestm = _best_match(forward, back, p, n_max, ndec)

        ratios = []
        for n in range(p + 2, n_max + 1, 2):
            ratios.append(forward[n] if n <= join and n in forward else back[n])

        rel = [scaled_from(ar.one)]
        for r in ratios:
            rel.append(rel[-1] * r)
        anchor = rel[(t - p) // 2]
        values = tuple(v / anchor for v in rel)

    logger.debug("d ratios m=%d l=%d: n_max=%d join=%d itestm=%d", m, l, n_max, join, itestm)
    return CoeffSet(m, l, c, lam, ndec, ar.use_mp, tuple(ratios), values, itestm, join, naccre)


def _best_match(forward: Dict[int, Any], back: Dict[int, Any], p: int, n_max: int, ndec: int) -> Tuple[int, int]:
    best_index, best = p, -1
    below = 0
    for n in range(p + 2, n_max + 1, 2):
        if n not in forward:
            break
        digits = _magnitude_digits(forward[n], back[n], ndec)
        if digits >= best:
            best, best_index = digits, n
            below = 0
        elif digits <= best - MATCH_DROP:
            below += 1
            if below >= MATCH_PATIENCE:
                break
        else:
            below = 0
    return best_index, max(best, 0)


def extend_coeffs(coeffs: CoeffSet, n_max: int, ctx: PrecisionContext) -> CoeffSet:
    """扩展到更高指标并保留附加分支 / Recompute up to a higher index, keeping attached branches"""
    if n_max <= coeffs.n_max:
        return coeffs
    # both tables are relative to d_{l-m} = 1, so the branches carry over
    grown = d_ratios(coeffs.m, coeffs.l, coeffs.c, coeffs.lam, n_max, ctx, coeffs.naccre)
    return replace(grown, negative=coeffs.negative, rho=coeffs.rho)
