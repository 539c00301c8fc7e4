"""
Siberia-Spheroidal - Subtraction-error accounting

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Tuple

from .scaled import ScaledComplex, ZERO, scaled_from, shifted


@dataclass(frozen=True)
class SubtractionError:
    """
    求和中损失的有效位数 / Digits lost to cancellation in one sum

    Attributes:
        digits_lost: 损失位数，范围 [0, ndec] / lost digits, within [0, ndec]
    """

    digits_lost: float = 0.0

    def combine(self, other: "SubtractionError") -> "SubtractionError":
        return SubtractionError(max(self.digits_lost, other.digits_lost))

    @property
    def whole(self) -> int:
        return int(math.ceil(self.digits_lost - 1e-9))


NO_LOSS = SubtractionError(0.0)


def _component_loss(pos: float, neg: float, total: float, ndec: int) -> float:
    top = max(pos, neg)
    if top == 0.0:
        return 0.0
    size = abs(total)
    if size == 0.0:
        return float(ndec)
    return min(float(ndec), max(0.0, math.log10(top / size)))


def sum_with_error(terms: Iterable[Any], ndec: int) -> Tuple[Any, SubtractionError]:
    """
    求和并估计抵消损失 / Sum terms and estimate cancellation loss

    实部与虚部分别统计正负项之和，各以该分量之和为基准，取两者较大者。
    Positive and negative contributions are accumulated per component and
    compared with that component's own sum; the larger loss is reported.
    A component that cancels to exactly zero reports ndec lost digits.
    """
    terms = list(terms)
    if not terms:
        return 0j, NO_LOSS
    total = terms[0] * 0
    pos_re = neg_re = pos_im = neg_im = 0.0
    for t in terms:
        total += t
        re, im = float(t.real), float(t.imag)
        if re > 0:
            pos_re += re
        else:
            neg_re -= re
        if im > 0:
            pos_im += im
        else:
            neg_im -= im
    loss = max(
        _component_loss(pos_re, neg_re, float(total.real), ndec),
        _component_loss(pos_im, neg_im, float(total.imag), ndec),
    )
    return total, SubtractionError(loss)


@dataclass(frozen=True)
class SeriesSum:
    """缩放级数和 / Result of a scaled series sum"""

    value: ScaledComplex
    error: SubtractionError
    largest: ScaledComplex
    tail_digits: float

    @property
    def digits_lost(self) -> float:
        return self.error.digits_lost


def scaled_series_sum(terms: Sequence[ScaledComplex], ndec: int, tail: int = 4) -> SeriesSum:
    """
    对缩放项求和 / Sum scaled terms

    先找最大项，再以其为基准求和，最后乘回。
    tail_digits 是最后几项相对于和的位数，用来判断截断是否充分。
    The largest term fixes the reference exponent; tail_digits measures how
    far below the total the last `tail` terms sit.
    """
    nonzero: List[ScaledComplex] = [t for t in terms if not t.is_zero()]
    if not nonzero:
        return SeriesSum(ZERO, NO_LOSS, ZERO, math.inf)
    largest = max(nonzero, key=lambda t: t.log10_abs())
    top = largest.exp10
    total, err = sum_with_error((shifted(t, top) for t in terms), ndec)
    value = scaled_from(total, top)
    if value.is_zero():
        return SeriesSum(value, SubtractionError(float(ndec)), largest, 0.0)
    last = [t for t in terms[-tail:] if not t.is_zero()]
    if last:
        tail_mag = max(t.log10_abs() for t in last)
        tail_digits = value.log10_abs() - tail_mag
    else:
        tail_digits = math.inf
    return SeriesSum(value, err, largest, tail_digits)
