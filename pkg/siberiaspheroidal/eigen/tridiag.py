"""
Siberia-Spheroidal - Complex symmetric tridiagonal eigenvalues (implicit QL)

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import cmath
from typing import List

from ..core.errors import ConvergenceError
from .matrix import TridiagonalSystem

EPS = 2.2e-16
MAX_ITER = 60


def eigen_tridiag(system: TridiagonalSystem, max_iter: int = MAX_ITER) -> List[complex]:
    """
    复对称三对角矩阵的 QL 隐式位移迭代 / Implicit-shift QL for complex symmetric tridiagonals

    旋转使用复数平方根，不做共轭；位移符号选使 |g ± r| 最大者。
    Rotations use the complex square root without conjugation and the shift
    sign maximizes |g ± r|. Returns the eigenvalues in deflation order.

    Raises:
        ConvergenceError: 某个特征值超过迭代上限，或旋转退化 / iteration cap or
            an isotropic rotation at the named index
    """
    n = system.size
    scale = complex(system.scale)
    d = [complex(v) / scale for v in system.diag]
    e = [complex(v) / scale for v in system.offdiag] + [0j]

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if iterations >= max_iter:
                raise ConvergenceError("tridiagonal QL iteration cap exceeded", index=l)
            iterations += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = cmath.sqrt(g * g + 1.0)
            shift = g + r if abs(g + r) >= abs(g - r) else g - r
            g = d[m] - d[l] + e[l] / shift
            s = c = 1.0 + 0j
            p = 0j
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = cmath.sqrt(f * f + g * g)
                e[i + 1] = r
                if abs(r) <= 1.0e-8 * (abs(f) + abs(g)):
                    if f != 0 or g != 0:
                        raise ConvergenceError("isotropic rotation in complex QL", index=l)
                    d[i + 1] -= p
                    e[m] = 0j
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0j
    return [v * scale for v in d]
