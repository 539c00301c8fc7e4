"""
Siberia-Spheroidal - Scaled complex numbers

数值以 (实部特征, 虚部特征, 十进制指数) 表示，避免溢出。
Values are carried as characteristic pairs with a base-10 exponent so that
factorials, Bessel functions and Legendre functions never overflow.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any, Iterable, List

import mpmath

from .errors import NonFiniteInputError

LOG10_E = math.log10(math.e)
# 超过该量级时重新归一 / renormalize running values above this magnitude
RESCALE_LIMIT = 1.0e100


def is_mp(value: Any) -> bool:
    return isinstance(value, (mpmath.mpf, mpmath.mpc))


def _floor_log10(mag: Any) -> int:
    if is_mp(mag):
        return int(mpmath.floor(mpmath.log10(mag)))
    return int(math.floor(math.log10(mag)))


@dataclass(frozen=True)
class ScaledComplex:
    """
    缩放复数 / Scaled complex number

    value = (char_re + i*char_im) * 10**exp10, with max(|char_re|, |char_im|)
    in [1, 10) unless the value is exactly zero.
    """

    char_re: Any = 0.0
    char_im: Any = 0.0
    exp10: int = 0

    @property
    def char(self) -> Any:
        if is_mp(self.char_re) or is_mp(self.char_im):
            return mpmath.mpc(self.char_re, self.char_im)
        return complex(self.char_re, self.char_im)

    def is_zero(self) -> bool:
        return self.char_re == 0 and self.char_im == 0

    def to_complex(self) -> Any:
        """还原为普通数，可能溢出 / Expand to a plain number (may overflow)"""
        ch = self.char
        if is_mp(ch):
            return ch * mpmath.power(10, self.exp10)
        if self.is_zero():
            return 0j
        if self.exp10 > 308:
            return complex(math.copysign(math.inf, self.char_re) if self.char_re else 0.0,
                           math.copysign(math.inf, self.char_im) if self.char_im else 0.0)
        if self.exp10 < -340:
            return 0j
        return ch * 10.0 ** self.exp10

    def log10_abs(self) -> float:
        if self.is_zero():
            return -math.inf
        return float(math.log10(float(abs(self.char)))) + self.exp10

    def __mul__(self, other: Any) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = scaled_from(other)
        return scaled_from(self.char * other.char, self.exp10 + other.exp10)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = scaled_from(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a zero scaled value")
        return scaled_from(self.char / other.char, self.exp10 - other.exp10)

    def __neg__(self) -> "ScaledComplex":
        return ScaledComplex(-self.char_re, -self.char_im, self.exp10)

    def __add__(self, other: Any) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = scaled_from(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        top = max(self.exp10, other.exp10)
        return scaled_from(shifted(self, top) + shifted(other, top), top)

    def __sub__(self, other: Any) -> "ScaledComplex":
        if not isinstance(other, ScaledComplex):
            other = scaled_from(other)
        return self + (-other)

    def conj(self) -> "ScaledComplex":
        return ScaledComplex(self.char_re, -self.char_im, self.exp10)

    def relative_to(self, other: "ScaledComplex") -> Any:
        """self/other 作为普通数 / self/other as a plain number"""
        return (self / other).to_complex()


ZERO = ScaledComplex()


def shifted(value: ScaledComplex, exp10: int) -> Any:
    """value 的特征按指数 exp10 表示 / Characteristic of value expressed at exponent exp10"""
    ch = value.char
    if value.is_zero():
        return ch * 0
    diff = value.exp10 - exp10
    if is_mp(ch):
        return ch * mpmath.power(10, diff)
    if diff < -340:
        return 0j
    return ch * 10.0 ** diff


def scaled_from(value: Any, exp10: int = 0) -> ScaledComplex:
    """
    从普通数构造缩放复数 / Build a ScaledComplex from a plain number

    Args:
        value: complex, float, int 或 mpmath 数
        exp10: 额外的十进制指数 / extra exponent applied to value
    """
    if isinstance(value, ScaledComplex):
        return ScaledComplex(value.char_re, value.char_im, value.exp10 + exp10)
    if is_mp(value):
        z = mpmath.mpc(value)
        if not (mpmath.isfinite(z.real) and mpmath.isfinite(z.imag)):
            raise NonFiniteInputError(f"cannot scale non-finite value {value!r}")
        mag = max(abs(z.real), abs(z.imag))
        if mag == 0:
            return ScaledComplex(mpmath.mpf(0), mpmath.mpf(0), 0)
        e = _floor_log10(mag)
        z = z / mpmath.power(10, e)
        mag = max(abs(z.real), abs(z.imag))
        if mag >= 10:
            z, e = z / 10, e + 1
        elif mag < 1:
            z, e = z * 10, e - 1
        return ScaledComplex(z.real, z.imag, e + exp10)
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteInputError(f"cannot scale non-finite value {value!r}")
    mag = max(abs(z.real), abs(z.imag))
    if mag == 0:
        return ScaledComplex(0.0, 0.0, 0)
    e = _floor_log10(mag)
    # 10.0**e 对很小的 e 会下溢，分两步缩放 / split the shift to avoid underflow
    if e < -300:
        z = z * 1.0e300
        z = z / 10.0 ** (e + 300)
    else:
        z = z / 10.0 ** e
    mag = max(abs(z.real), abs(z.imag))
    if mag >= 10.0:
        z, e = z / 10.0, e + 1
    elif mag < 1.0:
        z, e = z * 10.0, e - 1
    return ScaledComplex(z.real, z.imag, e + exp10)


def scaled_from_log10(log10_mag: float, phase: Any = 1.0) -> ScaledComplex:
    """由 log10|x| 与单位相位构造 / Build from log10 of the magnitude and a phase factor"""
    e = int(math.floor(log10_mag))
    return scaled_from(phase * 10.0 ** (log10_mag - e), e)


def scaled_exp(w: Any) -> ScaledComplex:
    """e**w 的缩放形式 / exp(w) without overflow"""
    if is_mp(w):
        w = mpmath.mpc(w)
        log10_mag = w.real / mpmath.log(10)
        e = int(mpmath.floor(log10_mag))
        return scaled_from(mpmath.power(10, log10_mag - e) * mpmath.expj(w.imag), e)
    w = complex(w)
    return scaled_from_log10(w.real * LOG10_E, cmath.exp(1j * w.imag))


def log_factorial10(n: int) -> float:
    """log10(n!)"""
    return math.lgamma(n + 1) / math.log(10)


def scaled_from_int(n: int, use_mp: bool = False) -> ScaledComplex:
    """精确整数的缩放形式 / Scale an exact integer without rounding through logs"""
    if n == 0:
        return ScaledComplex(0.0, 0.0, 0)
    if use_mp:
        return scaled_from(mpmath.mpf(n))
    e = max(0, int((abs(n).bit_length() - 1) * math.log10(2.0)) - 1)
    return scaled_from(n / 10 ** e, e)


def scaled_factorial_ratio(top: int, bottom: int, use_mp: bool = False) -> ScaledComplex:
    """top!/bottom! 的缩放形式 / top!/bottom! as a scaled value"""
    if top >= bottom:
        return scaled_from_int(math.prod(range(bottom + 1, top + 1)), use_mp)
    return scaled_from_int(1, use_mp) / scaled_from_int(math.prod(range(top + 1, bottom + 1)), use_mp)


def double_factorial(k: int) -> int:
    """k!!，约定 (-1)!! = 0!! = 1 / with (-1)!! = 0!! = 1"""
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def scaled_double_factorial(k: int, use_mp: bool = False) -> ScaledComplex:
    return scaled_from_int(double_factorial(k), use_mp)


def scaled_power(base: Any, exponent: Any, use_mp: bool = False) -> ScaledComplex:
    """正实数 base 的幂 / Power of a positive real base"""
    if base == 0:
        return ScaledComplex(0.0, 0.0, 0) if exponent else scaled_from(1.0)
    if use_mp:
        return scaled_from(mpmath.power(mpmath.mpf(base), exponent))
    return scaled_from_log10(float(exponent) * math.log10(float(base)))


def scaled_mul(a: ScaledComplex, b: ScaledComplex) -> ScaledComplex:
    return a * b


def scaled_sqrt(value: ScaledComplex) -> ScaledComplex:
    """主值平方根 / Principal square root"""
    if value.is_zero():
        return value
    ch, e = value.char, value.exp10
    if e % 2:
        ch, e = ch * 10, e - 1
    root = mpmath.sqrt(ch) if is_mp(ch) else cmath.sqrt(ch)
    return scaled_from(root, e // 2)


def scaled_values_from_ratios(anchor: ScaledComplex, ratios: Iterable[Any]) -> List[ScaledComplex]:
    """anchor·Π ratios 的逐项展开 / Expand a ratio chain from its anchor"""
    out = [anchor]
    for r in ratios:
        out.append(out[-1] * r)
    return out


class RunningScale:
    """
    递推中的运行指数 / Running exponent for scaled recurrences

    保存当前的两个相邻值，过大或过小时整体平移指数。
    Holds the two latest values of a three-term recurrence and shifts both by
    a common power of ten when they leave a safe range.
    """

    def __init__(self, exp10: int = 0):
        self.exp10 = exp10

    def settle(self, a: Any, b: Any) -> tuple:
        mag = max(float(abs(a)), float(abs(b)))
        if mag == 0 or (1.0e-100 < mag < RESCALE_LIMIT):
            return a, b
        e = int(math.floor(math.log10(mag)))
        factor = mpmath.power(10, -e) if is_mp(a) or is_mp(b) else 10.0 ** -e
        self.exp10 += e
        return a * factor, b * factor

    def emit(self, value: Any) -> ScaledComplex:
        return scaled_from(value, self.exp10)
