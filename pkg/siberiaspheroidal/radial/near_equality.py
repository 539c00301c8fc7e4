"""
Siberia-Spheroidal - R⁽²⁾ ≈ iR⁽¹⁾ when c_i ξ is large

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from typing import Tuple

from ..core.errors import MethodInapplicable
from ..core.scaled import ScaledComplex
from .results import R1Fragment
from .wronskian import near_equality_digits


def r2_near_equality(m: int, l: int, c: complex, xi: float, r1: R1Fragment) -> Tuple[ScaledComplex, ScaledComplex, int]:
    """
    R⁽²⁾ = iR⁽¹⁾，精度 acc = int{log10|R⁽¹⁾R⁽¹⁾′c(ξ²+1)|}，不超过 R⁽¹⁾ 的精度
    R⁽²⁾ = iR⁽¹⁾ (or -iR⁽¹⁾ when c_i < 0) accurate to the smaller of acc and the
    accuracy of R⁽¹⁾.

    Raises:
        MethodInapplicable: acc ≤ 0
    """
    acc = min(near_equality_digits(r1.r1, r1.r1p, c, xi), r1.acc_r1)
    if acc <= 0:
        raise MethodInapplicable("near_equality", f"R1 too small at m={m} l={l} (acc {acc})")
    unit = 1j if complex(c).imag >= 0 else -1j
    return r1.r1 * unit, r1.r1p * unit, acc
