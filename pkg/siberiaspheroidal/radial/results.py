"""
Siberia-Spheroidal - Radial result records

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..core.scaled import ScaledComplex

METHODS = ("pairing", "near_equality", "eta_sum", "legendre", "baber_hasse", "integral", "xi_zero", "none")


@dataclass(frozen=True)
class R1Fragment:
    """
    第一类径向函数部分 / The R⁽¹⁾ side of a radial result

    Attributes:
        r1, r1p: R⁽¹⁾ 与 dR⁽¹⁾/dξ
        acc_r1: 估计精度 / estimated accurate digits
        eta_used: 使用的 η / η of the evaluation
        numerator_loss, denominator_loss: 级数抵消位数 / series cancellation
        terms_used: 分子级数项数 / terms taken in the numerator series
    """

    r1: ScaledComplex
    r1p: ScaledComplex
    acc_r1: int
    eta_used: Optional[float] = None
    numerator_loss: float = 0.0
    denominator_loss: float = 0.0
    terms_used: int = 0


@dataclass(frozen=True)
class RadialResult:
    """
    径向函数结果 / Radial functions of both kinds for one (m, l)

    Attributes:
        r1, r1p, r2, r2p: 函数值与 ξ 导数 / values and ξ-derivatives
        acc_r1, acc_r2: 估计精度 / estimated accurate digits
        method_r2: 计算 R⁽²⁾ 的方法 / method that produced R⁽²⁾
        eta_used: R⁽¹⁾ 所用的 η / η used for R⁽¹⁾
        eta_used_r2: 变 η 方法所用的 η / η used by the variable-η R⁽²⁾ path
        wronskian_digits: Wronskian 原始一致位数 / raw Wronskian agreement
        ledger: 损失记录 / cancellation ledger and term counts for diagnostics
    """

    m: int
    l: int
    r1: ScaledComplex
    r1p: ScaledComplex
    r2: ScaledComplex
    r2p: ScaledComplex
    acc_r1: int
    acc_r2: int
    method_r2: str
    eta_used: Optional[float] = None
    eta_used_r2: Optional[float] = None
    wronskian_digits: Optional[int] = None
    ledger: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class R2Candidate:
    """某一方法给出的 R⁽²⁾ 候选 / One method's R⁽²⁾ proposal before selection"""

    method: str
    r2: ScaledComplex
    r2p: ScaledComplex
    acc: int
    wronskian_digits: Optional[int] = None
    eta_used: Optional[float] = None
    ledger: Dict[str, Any] = field(default_factory=dict)
