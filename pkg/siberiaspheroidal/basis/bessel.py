"""
Siberia-Spheroidal - Spherical Bessel and Neumann functions of complex argument

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from typing import Any, List, Optional, Tuple

from ..core.errors import ConvergenceError, DomainError
from ..core.precision import PrecisionContext, check_finite
from ..core.scaled import ScaledComplex, scaled_exp, scaled_from
from ..utils.logger import get_logger
from .legendre import RatioTable

logger = get_logger(__name__)

MAX_DOUBLINGS = 6


def _sin_cos_scaled(z: Any, ar) -> Tuple[ScaledComplex, ScaledComplex]:
    """sin z, cos z 的缩放形式 / sin z and cos z without overflow for large Im z"""
    i = ar.num(1j)
    if float(z.imag) >= 0:
        big = scaled_exp(-i * z)
        small = ar.exp(2 * i * z)
        sin = big * ((small - 1) / (2 * i))
        cos = big * ((small + 1) / 2)
    else:
        big = scaled_exp(i * z)
        small = ar.exp(-2 * i * z)
        sin = big * ((1 - small) / (2 * i))
        cos = big * ((1 + small) / 2)
    return sin, cos


def _backward_ratios(n_top: int, n_max: int, z: Any, ar) -> List[Any]:
    # r_{n-1} = j_n / j_{n-1} = 1 / ((2n+1)/z - r_n)
    ratio = ar.zero
    out = [ar.zero] * n_max
    for n in range(n_top, 0, -1):
        ratio = 1 / ((2 * n + 1) / z - ratio)
        if n - 1 < n_max:
            out[n - 1] = ratio
    return out


def sph_bessel_j(n_max: int, z: complex, ctx: Optional[PrecisionContext] = None) -> RatioTable:
    """
    球 Bessel 函数 j_n(z) / Spherical Bessel functions j_n(z), n = 0..n_max

    比值 j_{n+1}/j_n 从足够高的指标向下递推，起点加倍直到两次结果一致。
    Ratios come from backward recursion; the start index is doubled until two
    runs agree to ndec digits. The anchor is j_0(z) = sin z / z.
    """
    check_finite(z)
    if z == 0:
        raise DomainError("sph_bessel_j needs z != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double")
    ar = ctx.arith
    n_keep = n_max + 1
    with ar.context():
        zz = ar.num(z)
        extra = max(50, int(math.ceil(abs(complex(z)))))
        ratios = _backward_ratios(n_keep + extra, n_keep, zz, ar)
        tol = 10.0 ** (-ctx.ndec)
        for _ in range(MAX_DOUBLINGS):
            extra *= 2
            again = _backward_ratios(n_keep + extra, n_keep, zz, ar)
            worst = max(
                (float(abs(a - b) / abs(b)) for a, b in zip(ratios, again) if b != 0),
                default=0.0,
            )
            ratios = again
            if worst <= tol:
                break
        else:
            raise ConvergenceError("bessel backward recursion did not settle", index=n_max)

        sin, _ = _sin_cos_scaled(zz, ar)
        values = [sin / scaled_from(zz)]
        for r in ratios:
            values.append(values[-1] * r)
        derivs = _derivatives(values, zz)
    return RatioTable("bessel_j", 0, 0, z, tuple(values[: n_max + 1]), tuple(derivs[: n_max + 1]))


def _derivatives(values: List[ScaledComplex], z: Any) -> List[ScaledComplex]:
    # f_0' = -f_1, f_n' = f_{n-1} - (n+1)/z f_n
    out = [-values[1]]
    for n in range(1, len(values) - 1):
        out.append(values[n - 1] - values[n] * ((n + 1) / z))
    return out


def sph_neumann_y(
    n_max: int,
    z: complex,
    ctx: Optional[PrecisionContext] = None,
    j_table: Optional[RatioTable] = None,
) -> RatioTable:
    """
    球 Neumann 函数 y_n(z) / Spherical Neumann functions y_n(z)

    转折点以下用与 j_n 的交叉关系 j_n y_{n-1} - j_{n-1} y_n = 1/z²，
    以上用向前递推。转折点取 |y_n| 第一次不再减小的位置。
    Below the turning point (first index where |y_n| stops decreasing) values
    come from the cross relation with j_n; above it from forward recurrence.
    """
    check_finite(z)
    if z == 0:
        raise DomainError("sph_neumann_y needs z != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double")
    ar = ctx.arith
    if j_table is None or j_table.stop < n_max + 1:
        j_table = sph_bessel_j(n_max + 1, z, ctx)
    with ar.context():
        zz = ar.num(z)
        sz = scaled_from(zz)
        inv_z2 = scaled_from(1 / (zz * zz))
        sin, cos = _sin_cos_scaled(zz, ar)
        y0 = -cos / sz
        y1 = y0 / sz - j_table.value(0)
        values = [y0, y1]
        forward = values[1].log10_abs() >= values[0].log10_abs()
        for n in range(2, n_max + 2):
            if not forward:
                candidate = (j_table.value(n) * values[n - 1] - inv_z2) / j_table.value(n - 1)
                if candidate.log10_abs() < values[n - 1].log10_abs():
                    values.append(candidate)
                    continue
                forward = True
                logger.debug("neumann turning point at n=%d for z=%s", n, z)
            values.append(values[n - 1] * ((2 * n - 1) / zz) - values[n - 2])
        derivs = _derivatives(values, zz)
    return RatioTable("neumann_y", 0, 0, z, tuple(values[: n_max + 1]), tuple(derivs[: n_max + 1]))


def sph_functions(kind: int, n_max: int, z: complex, ctx: Optional[PrecisionContext] = None) -> RatioTable:
    """kind 1 → j_n，kind 2 → y_n"""
    if kind == 1:
        return sph_bessel_j(n_max, z, ctx)
    if kind == 2:
        return sph_neumann_y(n_max, z, ctx)
    raise DomainError(f"kind must be 1 or 2, got {kind}")


__all__ = ["sph_bessel_j", "sph_neumann_y", "sph_functions"]
