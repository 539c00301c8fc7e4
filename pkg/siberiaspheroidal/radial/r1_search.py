"""
Siberia-Spheroidal - Variable-η evaluation of R⁽¹⁾

从 θ = arccos η 的上一个取值出发，按 0.05 弧度步进，使分子抵消不超过目标
（双精度 2 位，扩展精度 4 位）。θ 回到 0 后不再增大。
Starts from the θ = arccos η that worked for the previous l and steps it by
0.05 rad until the numerator cancellation is within target (2 digits in
double, 4 in extended). Once θ is back at 0 it stays there for higher l.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..coeffs.ratios import CoeffSet
from ..core.errors import CancellationError
from ..core.precision import PrecisionContext
from ..utils.logger import get_logger
from .eta_sum import EtaSum, radial_eta_sum
from .results import R1Fragment

logger = get_logger(__name__)

THETA_STEP = 0.05
THETA_MAX = 0.5 * math.pi


@dataclass(frozen=True)
class R1SearchState:
    """
    θ 搜索状态 / Carry-over between successive l

    Attributes:
        theta: 上一个 l 使用的 θ / θ used for the previous l
        settled: θ 已回到 0 并固定 / θ has returned to 0 for good
    """

    theta: float = 0.0
    settled: bool = False


def loss_target(ctx: PrecisionContext) -> float:
    return 4.0 if ctx.ndec > 15 else 2.0


def _eta(theta: float) -> float:
    if theta <= 0.0:
        return 1.0
    if theta >= THETA_MAX - 1e-12:
        return 0.0
    return max(0.0, min(1.0, math.cos(theta)))


def _loss(evaluation: EtaSum) -> float:
    return max(evaluation.numerator_loss, evaluation.denominator_loss)


def r1_search(
    m: int,
    l: int,
    c: complex,
    xi: float,
    state: Optional[R1SearchState],
    coeffs: CoeffSet,
    ctx: Optional[PrecisionContext] = None,
) -> Tuple[R1Fragment, R1SearchState]:
    """
    变 η 计算 R⁽¹⁾ / R⁽¹⁾ with the variable-η search

    Returns:
        (R⁽¹⁾ 部分, 更新后的状态) / the R⁽¹⁾ fragment and the updated state;
        never raises for lack of accuracy, the best evaluation found is kept
    """
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    state = state if state is not None else R1SearchState()
    target = loss_target(ctx)
    tried = {}

    def evaluate(theta: float) -> Optional[EtaSum]:
        key = round(theta, 6)
        if key not in tried:
            try:
                tried[key] = radial_eta_sum(1, m, l, c, xi, _eta(theta), coeffs, ctx=ctx)
            except CancellationError as exc:
                logger.debug("eta=%s cancelled for m=%d l=%d: %s", _eta(theta), m, l, exc)
                tried[key] = None
        return tried[key]

    def loss_of(theta: float) -> float:
        found = evaluate(theta)
        return math.inf if found is None else _loss(found)

    theta = 0.0 if state.settled else state.theta
    if loss_of(theta) <= target:
        # 尽量向 0 回退 / walk back toward 0 while the target still holds
        while theta > 0.0 and loss_of(max(0.0, theta - THETA_STEP)) <= target:
            theta = max(0.0, theta - THETA_STEP)
    elif not state.settled:
        best = theta
        lower = theta - THETA_STEP
        while lower >= -1e-12:
            if loss_of(max(0.0, lower)) < loss_of(best):
                best = max(0.0, lower)
            if loss_of(max(0.0, lower)) <= target:
                break
            lower -= THETA_STEP
        if loss_of(best) > target:
            upper = theta + THETA_STEP
            while upper <= THETA_MAX + 1e-12:
                upper = min(upper, THETA_MAX)
                if loss_of(upper) < loss_of(best):
                    best = upper
                if loss_of(upper) <= target or upper >= THETA_MAX:
                    break
                upper += THETA_STEP
        theta = best

    chosen = evaluate(theta)
    if chosen is None:
        # 所有尝试都完全抵消 / every evaluation cancelled; fall back to the best finite one
        finite = [(k, v) for k, v in tried.items() if v is not None]
        if not finite:
            raise CancellationError(f"no eta gave a usable R1 for m={m} l={l}")
        theta, chosen = min(finite, key=lambda kv: _loss(kv[1]))

    settled = state.settled or (theta == 0.0 and _loss(chosen) <= target)
    acc = chosen.accuracy(ctx.ndec, coeffs.naccre - 1, coeffs.itestm - 1)
    logger.debug(
        "R1 m=%d l=%d: theta=%.2f eta=%.4f loss=%.1f acc=%d", m, l, theta, chosen.eta, _loss(chosen), acc,
    )
    fragment = R1Fragment(
        chosen.value, chosen.deriv, acc, chosen.eta,
        chosen.numerator_loss, chosen.denominator_loss, chosen.terms_used,
    )
    return fragment, R1SearchState(theta, settled)
