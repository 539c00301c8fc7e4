"""
Siberia-Spheroidal - Symmetric tridiagonal matrix for the eigenvalue estimates

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any, List, Tuple, Union

import mpmath
import numpy as np

from ..core.errors import DomainError
from .recurrence import alpha, beta, gamma

# 小于该值时不按 c² 缩放 / below this |c| the matrix is left unscaled
SCALE_THRESHOLD = 1.0e-3
MIN_SIZE = 67

Parity = Union[str, int]


def parity_offset(parity: Parity) -> int:
    """'even'/'odd' 或 0/1 → 0/1"""
    if parity in ("even", 0):
        return 0
    if parity in ("odd", 1):
        return 1
    raise DomainError(f"parity must be even/odd, got {parity!r}")


@dataclass(frozen=True)
class TridiagonalSystem:
    """
    对称化三对角矩阵 / Symmetrized tridiagonal matrix for one parity

    diag 与 offdiag 保存未缩放的元素；scale 是求解时使用的因子 (c² 或 1)。
    diag and offdiag hold the unscaled entries; scale is the factor the solver
    divides by before iterating and multiplies back afterwards.
    """

    m: int
    parity: str
    diag: Tuple[complex, ...]
    offdiag: Tuple[complex, ...]
    size: int
    scale: complex = 1.0 + 0j

    def dense(self) -> np.ndarray:
        a = np.diag(np.asarray(self.diag, dtype=complex))
        off = np.asarray(self.offdiag, dtype=complex)
        return a + np.diag(off, 1) + np.diag(off, -1)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.dense(), ord=np.inf))


def breakpoint(m: int, c: complex) -> int:
    """n_b = floor(2(c_r + c_i)/π)"""
    c = complex(c)
    return max(0, int(math.floor(2.0 * (abs(c.real) + abs(c.imag)) / math.pi)))


def matrix_size(m: int, c: complex, needed: int = 0) -> int:
    nb = breakpoint(m, c)
    return max(int(math.ceil(4 * nb / 3)), MIN_SIZE, needed)


def build_matrix(m: int, c: complex, parity: Parity, size: int) -> TridiagonalSystem:
    """
    构建三对角矩阵 / Build the symmetrized tridiagonal matrix

    对角元为 β_n，次对角元为 sqrt(α_n γ_{n+2})，n = parity, parity+2, ...
    """
    if size < 2:
        raise DomainError("matrix size must be at least 2")
    p = parity_offset(parity)
    c = complex(c)
    c2 = c * c
    index = [p + 2 * k for k in range(size)]
    diag = tuple(complex(beta(n, m, c2)) for n in index)
    offdiag = tuple(cmath.sqrt(alpha(n, m, c2) * gamma(n + 2, m, c2)) for n in index[:-1])
    scale = c2 if abs(c) >= SCALE_THRESHOLD else 1.0 + 0j
    return TridiagonalSystem(m, "even" if p == 0 else "odd", diag, offdiag, size, scale)


def prolate_asymptotic(m: int, l: int, c: complex) -> complex:
    """
    长椭球渐近特征值，c 换为 -ic / Large-c prolate estimate with c replaced by -ic

    λ ≈ -inc + m² - (n²+5)/8 - in(n²+11-32m²)/(64c), n = 2(l-m)+1
    """
    if l < m:
        raise DomainError("prolate_asymptotic needs l >= m")
    c = complex(c)
    if c == 0:
        raise DomainError("prolate_asymptotic needs c != 0")
    n = 2 * (l - m) + 1
    return -1j * n * c + m * m - (n * n + 5) / 8.0 - 1j * n * (n * n + 11 - 32 * m * m) / (64.0 * c)


def dense_eigenvalues(system: TridiagonalSystem, use_mp: bool = False, dps: int = 40) -> List[Any]:
    """稠密矩阵特征值（测试与后备）/ Dense eigenvalues, used as oracle and fallback"""
    if use_mp:
        with mpmath.workdps(dps):
            a = mpmath.matrix(system.size, system.size)
            for k, value in enumerate(system.diag):
                a[k, k] = mpmath.mpc(value)
            for k, value in enumerate(system.offdiag):
                a[k, k + 1] = a[k + 1, k] = mpmath.mpc(value)
            return [complex(v) for v in mpmath.eig(a, left=False, right=False)]
    return [complex(v) for v in np.linalg.eigvals(system.dense())]
