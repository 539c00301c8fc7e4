"""
Siberia-Spheroidal - Precision modes and arithmetic backends

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import cmath
import contextlib
import math
from dataclasses import dataclass, field
from typing import Any, Iterator

import mpmath

from .errors import DomainError, NonFiniteInputError

PRECISION_MODES = ("double", "hybrid", "extended")
EXTENDED_DIGITS = 33


class SiberiaArithmetic:
    """
    标量算术后端 / Scalar arithmetic backend

    double 模式使用 cmath，extended 模式使用 mpmath。
    The same scalar loops run on Python complex or on mpmath mpc.
    """

    def __init__(self, digits: int = 15, use_mp: bool = False):
        self.digits = digits
        self.use_mp = use_mp

    def __repr__(self) -> str:
        return f"SiberiaArithmetic(digits={self.digits}, use_mp={self.use_mp})"

    @contextlib.contextmanager
    def context(self) -> Iterator[None]:
        """在 mpmath 模式下设置工作精度 / Set working precision when on mpmath"""
        if self.use_mp:
            with mpmath.workdps(self.digits + 5):
                yield
        else:
            yield

    def num(self, value: Any) -> Any:
        if self.use_mp:
            return mpmath.mpc(value)
        return complex(value)

    def real(self, value: Any) -> Any:
        if self.use_mp:
            return mpmath.mpf(value)
        return float(value)

    @property
    def zero(self) -> Any:
        return self.num(0)

    @property
    def one(self) -> Any:
        return self.num(1)

    @property
    def pi(self) -> Any:
        return +mpmath.mp.pi if self.use_mp else math.pi

    @property
    def eps(self) -> float:
        return 10.0 ** (-self.digits - 1)

    def sqrt(self, z: Any) -> Any:
        return mpmath.sqrt(z) if self.use_mp else cmath.sqrt(z)

    def real_sqrt(self, x: Any) -> Any:
        """非负实数的实平方根 / real root of a non-negative real"""
        return mpmath.sqrt(self.real(x)) if self.use_mp else math.sqrt(x)

    def exp(self, z: Any) -> Any:
        return mpmath.exp(z) if self.use_mp else cmath.exp(z)

    def log(self, z: Any) -> Any:
        return mpmath.log(z) if self.use_mp else cmath.log(z)

    def sin(self, z: Any) -> Any:
        return mpmath.sin(z) if self.use_mp else cmath.sin(z)

    def cos(self, z: Any) -> Any:
        return mpmath.cos(z) if self.use_mp else cmath.cos(z)

    def atan(self, x: Any) -> Any:
        return mpmath.atan(x) if self.use_mp else math.atan(x)

    def abs(self, z: Any) -> float:
        return float(abs(z))


@dataclass(frozen=True)
class PrecisionContext:
    """
    精度上下文 / Precision context

    Attributes:
        mode: double / hybrid / extended
        ndec: 结果的工作位数 / working decimal digits of results
        ndec_refine: 特征值精化位数 / digits used when refining eigenvalues
        minacc: 期望的最少精度位数 / minimum acceptable accuracy
    """

    mode: str = "double"
    ndec: int = 15
    ndec_refine: int = 15
    minacc: int = 8
    arith: SiberiaArithmetic = field(default_factory=SiberiaArithmetic)
    refine_arith: SiberiaArithmetic = field(default_factory=SiberiaArithmetic)

    @classmethod
    def for_mode(cls, mode: str = "double", c: complex = 0j, minacc: int | None = None) -> "PrecisionContext":
        """
        按模式创建上下文 / Build a context for a precision mode

        extended 模式在 c_i > 20 时 minacc 降为 8。
        """
        if mode not in PRECISION_MODES:
            raise DomainError(f"unknown precision mode {mode!r}")
        if mode == "double":
            ctx = cls("double", 15, 15, 8, SiberiaArithmetic(15), SiberiaArithmetic(15))
        elif mode == "hybrid":
            ctx = cls(
                "hybrid", 15, EXTENDED_DIGITS, 8,
                SiberiaArithmetic(15), SiberiaArithmetic(EXTENDED_DIGITS, use_mp=True),
            )
        else:
            default = 8 if complex(c).imag > 20 else 15
            big = SiberiaArithmetic(EXTENDED_DIGITS, use_mp=True)
            ctx = cls("extended", EXTENDED_DIGITS, EXTENDED_DIGITS, default, big, big)
        if minacc is not None:
            object.__setattr__(ctx, "minacc", int(minacc))
        return ctx


def check_finite(*values: Any) -> None:
    """拒绝 NaN/inf 输入 / Reject NaN or inf inputs"""
    for value in values:
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise NonFiniteInputError(f"non-finite input {value!r}")


def check_size_parameter(c: Any) -> complex:
    """检查 c 的取值 / Validate the size parameter c"""
    check_finite(c)
    c = complex(c)
    if c.real < 0 or c.imag < 0:
        raise DomainError(f"c must have non-negative real and imaginary parts, got {c}")
    return c
