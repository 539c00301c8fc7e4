"""
Siberia-Spheroidal - Three-term recurrence coefficients for d_n

α_n d_{n+2} + (β_n - λ) d_n + γ_n d_{n-2} = 0

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from typing import Any, Tuple


def alpha(n: int, m: int, c2: Any) -> Any:
    return -(2 * m + n + 2) * (2 * m + n + 1) * c2 / ((2 * n + 2 * m + 3) * (2 * n + 2 * m + 5))


def beta(n: int, m: int, c2: Any) -> Any:
    k = (n + m) * (n + m + 1)
    return k - (2 * k - 2 * m * m - 1) * c2 / ((2 * n + 2 * m + 3) * (2 * n + 2 * m - 1))


def gamma(n: int, m: int, c2: Any) -> Any:
    return -n * (n - 1) * c2 / ((2 * n + 2 * m - 3) * (2 * n + 2 * m - 1))


def coefficients(n: int, m: int, c2: Any) -> Tuple[Any, Any, Any]:
    """(α_n, β_n, γ_n)"""
    return alpha(n, m, c2), beta(n, m, c2), gamma(n, m, c2)


def residual(d_prev: Any, d_cur: Any, d_next: Any, n: int, m: int, c2: Any, lam: Any) -> Any:
    """三项递推的残差 / residual of the three-term recurrence at index n"""
    a, b, g = coefficients(n, m, c2)
    return a * d_next + (b - lam) * d_cur + g * d_prev
