"""
Siberia-Spheroidal - Bessel/Neumann series for the radial functions at a chosen η

R⁽ʲ⁾(ξ) = Σ' i^{n+m-l} d_n ψ_{n+m}(c(ξ²-η²+1)^{1/2}) P^m_{n+m}(ηξ/(ξ²-η²+1)^{1/2})
          / Σ' d_n P^m_{n+m}(η)

η = 1 时取极限（含 ((ξ²+1)/ξ²)^{m/2} 因子，分母为 Morse–Feshbach 和）；
η = 0 时按 l-m 奇偶取 P(0) 或 P′(0) 权重（分母为 Flammer 和）。
At η = 1 the closed limit with the ((ξ²+1)/ξ²)^{m/2} prefactor is used and the
denominator is the Morse–Feshbach sum. At η = 0 the weights are P^m(0) or its
derivative by parity and the denominator is the Flammer sum. ψ is j for the
first kind and y for the second kind.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from ..basis.bessel import sph_functions
from ..basis.legendre import RatioTable, legendre_p, legendre_p_zero
from ..coeffs.ratios import CoeffSet, extend_coeffs
from ..core.errors import CancellationError, DomainError
from ..core.precision import PrecisionContext, check_finite
from ..core.scaled import ScaledComplex, scaled_factorial_ratio, scaled_from, scaled_power
from ..core.subtraction import SeriesSum, scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses

logger = get_logger(__name__)

SERIES_RUN = 4
# 过最小项后回升超过该位数视为发散 / a rise of this many digits past the minimum marks divergence
RISE_DIGITS = 3.0
KIND2_TERM_CAP = 4000


@dataclass(frozen=True)
class EtaSum:
    """
    一次 η 求和的结果 / Outcome of one η-series evaluation

    Attributes:
        value, deriv: R⁽ᵏ⁾ 与 dR⁽ᵏ⁾/dξ
        numerator_loss: 分子（含导数与截断）的损失位数 / numerator loss, including
            the derivative series and any truncation shortfall
        denominator_loss: 分母的损失位数 / denominator loss
        terms_used: 分子使用的项数 / numerator terms summed
        tail_digits: 末项相对和的位数 / how far the last terms sit below the sum
        coeffs: 实际使用的系数（第二类可能被扩展）/ coefficients used, possibly extended
    """

    kind: int
    eta: float
    value: ScaledComplex
    deriv: ScaledComplex
    numerator_loss: float
    denominator_loss: float
    terms_used: int
    tail_digits: float
    coeffs: CoeffSet

    def accuracy(self, ndec: int, *caps: int) -> int:
        return accuracy_from_losses(ndec, [self.numerator_loss, self.denominator_loss], *caps)

    def as_tuple(self) -> Tuple[ScaledComplex, ScaledComplex, float, float]:
        return self.value, self.deriv, self.numerator_loss, self.denominator_loss


def _sign(n: int, t: int) -> int:
    # i^{n+m-l} = i^{n-t}, n - t is even
    return -1 if ((n - t) // 2) % 2 else 1


def partial_length(sizes: Sequence[float], ndec: int) -> int:
    """
    部分和的项数 / Number of terms to keep in a possibly asymptotic series

    连续 SERIES_RUN 项低于最大项 10^{-ndec-1} 时停止；若越过最小项后
    回升 RISE_DIGITS 位，则截断在最小项处。
    """
    top = -math.inf
    low, low_at = math.inf, 0
    small = 0
    for k, size in enumerate(sizes):
        if size >= top:
            top = size
            low, low_at = math.inf, k
        elif size < low:
            low, low_at = size, k
        if size < top - ndec - 1:
            small += 1
            if small >= SERIES_RUN:
                return k + 1
        else:
            small = 0
        if low < top - 1 and size > low + RISE_DIGITS:
            return low_at + 1
    return len(sizes)


def _summed(terms: List[ScaledComplex], ndec: int) -> SeriesSum:
    return scaled_series_sum(terms, ndec)


def _basis(kind: int, top: int, arg: Any, basis: Optional[RatioTable], ctx: PrecisionContext) -> RatioTable:
    if basis is not None and basis.stop >= top and basis.derivs is not None:
        return basis
    return sph_functions(kind, top, arg, ctx)


def _evaluate(
    kind: int,
    m: int,
    c: complex,
    xi: float,
    eta: float,
    coeffs: CoeffSet,
    basis: Optional[RatioTable],
    ctx: PrecisionContext,
) -> Tuple[EtaSum, bool]:
    ar = ctx.arith
    ndec = ctx.ndec
    t, p = coeffs.t, coeffs.parity
    indices = list(coeffs.indices())
    n_top = indices[-1]
    num: List[ScaledComplex] = []
    dnum: List[ScaledComplex] = []
    den: List[ScaledComplex] = []

    with ar.context():
        x = ar.real(xi)
        e = ar.real(eta)
        cc = ar.num(c)
        if eta == 1.0:
            psi = _basis(kind, m + n_top, cc * x, basis, ctx)
            for n in indices:
                d = coeffs.d(n) * scaled_factorial_ratio(n + 2 * m, n, ar.use_mp)
                num.append(d * psi.value(m + n) * _sign(n, t))
                dnum.append(d * psi.deriv(m + n) * (cc * _sign(n, t)))
                den.append(d)
        elif eta == 0.0:
            s = ar.real_sqrt(x * x + 1)
            psi = _basis(kind, m + n_top, cc * s, basis, ctx)
            dz = cc * x / s
            for n in indices:
                d = coeffs.d(n) * legendre_p_zero(m, n, ar.use_mp)[p]
                num.append(d * psi.value(m + n) * _sign(n, t))
                dnum.append(d * psi.deriv(m + n) * (dz * _sign(n, t)))
                den.append(d)
        else:
            rho = ar.real_sqrt(x * x - e * e + 1)
            psi = _basis(kind, m + n_top, cc * rho, basis, ctx)
            arg = e * x / rho
            inner = legendre_p(m, n_top, arg, ctx, derivatives=True)
            outer = legendre_p(m, n_top, e, ctx, derivatives=False)
            dz = cc * x / rho
            darg = e * (1 - e * e) / (rho * rho * rho)
            for n in indices:
                d = coeffs.d(n) * _sign(n, t)
                pv = inner.value(m + n)
                num.append(d * psi.value(m + n) * pv)
                dnum.append(d * (psi.deriv(m + n) * pv * dz + psi.value(m + n) * inner.deriv(m + n) * darg))
                den.append(coeffs.d(n) * outer.value(m + n))

        keep = partial_length([term.log10_abs() for term in num], ndec)
        exhausted = keep == len(num)
        n_sum = _summed(num[:keep], ndec)
        dn_sum = _summed(dnum[:keep], ndec)
        d_sum = _summed(den[: partial_length([term.log10_abs() for term in den], ndec)], ndec)
        if d_sum.value.is_zero():
            raise CancellationError(f"denominator of the eta={eta} series cancelled", ledger=d_sum.error)

        losses = [n_sum.digits_lost, dn_sum.digits_lost]
        if eta == 1.0 and m > 0:
            prefactor = scaled_power((x * x + 1) / (x * x), ar.real(m) / 2, ar.use_mp)
            slope = -m / (x * (x * x + 1))
            combo = scaled_series_sum([dn_sum.value, n_sum.value * slope], ndec)
            losses.append(combo.digits_lost)
            value = prefactor * n_sum.value / d_sum.value
            deriv = prefactor * combo.value / d_sum.value
        elif eta == 0.0 and p == 1:
            s = ar.real_sqrt(x * x + 1)
            combo = scaled_series_sum([n_sum.value / scaled_from(s * s * s), dn_sum.value * (x / s)], ndec)
            losses.append(combo.digits_lost)
            value = n_sum.value * (x / s) / d_sum.value
            deriv = combo.value / d_sum.value
        else:
            value = n_sum.value / d_sum.value
            deriv = dn_sum.value / d_sum.value

    tail = min(n_sum.tail_digits, dn_sum.tail_digits)
    if math.isfinite(tail):
        losses.append(max(0.0, min(float(ndec), ndec - tail)))
    result = EtaSum(
        kind, float(eta), value, deriv, min(float(ndec), max(losses)),
        d_sum.digits_lost, keep, tail, coeffs,
    )
    return result, exhausted


def radial_eta_sum(
    kind: int,
    m: int,
    l: int,
    c: complex,
    xi: float,
    eta: float,
    coeffs: CoeffSet,
    basis: Optional[RatioTable] = None,
    ctx: Optional[PrecisionContext] = None,
    max_terms: Optional[int] = None,
) -> EtaSum:
    """
    在给定 η 处求 R⁽ᵏ⁾ 与导数 / R⁽ᵏ⁾ and dR⁽ᵏ⁾/dξ from the series at one η

    第二类级数若用尽系数仍未收敛，则加倍系数范围直至 max_terms。
    A second-kind series that runs out of coefficients before converging is
    retried with twice the coefficient range, up to `max_terms`.

    Args:
        kind: 1 或 2 / first or second kind
        eta: 0 ≤ η ≤ 1
        basis: 预先算好的 ψ 表（可选）/ optional precomputed ψ table at the
            spherical argument

    Raises:
        DomainError: ξ ≤ 0、η 越界或系数不匹配 / bad arguments
        CancellationError: 分母完全抵消 / the denominator cancelled to zero
    """
    check_finite(xi, eta)
    if kind not in (1, 2):
        raise DomainError(f"kind must be 1 or 2, got {kind}")
    if xi <= 0:
        raise DomainError(f"the eta series needs xi > 0, got {xi}")
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"eta must lie in [0, 1], got {eta}")
    if coeffs.m != m or coeffs.l != l:
        raise DomainError("coefficient set does not belong to this (m, l)")
    if complex(c) == 0:
        raise DomainError("the eta series needs c != 0")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    cap = KIND2_TERM_CAP if max_terms is None else int(max_terms)

    while True:
        result, exhausted = _evaluate(kind, m, c, xi, eta, coeffs, basis, ctx)
        if kind == 1 or not exhausted or result.tail_digits > ctx.ndec or coeffs.n_max >= cap:
            break
        grown = min(cap, 2 * coeffs.n_max)
        logger.debug("extending the kind-2 eta=%s series for m=%d l=%d to n=%d", eta, m, l, grown)
        coeffs = extend_coeffs(coeffs, grown, ctx)
        basis = None
    return result
