"""
Siberia-Spheroidal - Digit-count helpers shared across modules

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math
from typing import Any, Iterable


def clamp_digits(value: float, ndec: int) -> int:
    """截断到 [0, ndec] 的整数位数 / Whole digits clamped to [0, ndec]"""
    if value != value:
        return 0
    if value == math.inf:
        return ndec
    return max(0, min(ndec, int(math.floor(value))))


def agreement_digits(a: Any, b: Any, ndec: int) -> int:
    """两数一致的十进制位数 / Decimal digits to which a and b agree"""
    if a == b:
        return ndec
    scale = max(float(abs(a)), float(abs(b)))
    if scale == 0:
        return ndec
    return clamp_digits(-math.log10(float(abs(a - b)) / scale), ndec)


def accuracy_from_losses(ndec: int, losses: Iterable[float], *caps: int) -> int:
    """
    由抵消损失与其他上限估计精度 / Accuracy from cancellation losses and caps

    acc = min(ndec - max(losses) - 1, caps...)，不小于 0
    """
    worst = max((float(x) for x in losses), default=0.0)
    acc = clamp_digits(ndec - worst - 1 + 1e-9, ndec)
    for cap in caps:
        acc = min(acc, int(cap))
    return max(0, acc)
