"""
Siberia-Spheroidal - Angular functions of the first kind S⁽¹⁾_{ml}(-ic, η)

S⁽¹⁾ = Σ' d_n P^m_{n+m}(η)，以及 dS⁽¹⁾/dη。
S⁽¹⁾ is the primed sum of d_n P^m_{n+m}(η) over n of the parity of l - m;
its η-derivative uses the same coefficients.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..basis.legendre import legendre_p
from ..coeffs.normalization import NormalizationResult, truncated
from ..coeffs.ratios import CoeffSet
from ..core.errors import DomainError
from ..core.precision import PrecisionContext, check_finite
from ..core.scaled import ZERO, ScaledComplex
from ..core.subtraction import scaled_series_sum
from ..utils.logger import get_logger
from ..utils.utils import accuracy_from_losses

logger = get_logger(__name__)

SERIES_RUN = 4
SERIES_MARGIN = 1


@dataclass(frozen=True)
class AngularResult:
    """
    角函数结果 / Angular function values on a grid

    Attributes:
        eta: 网格 / the η grid
        values: S⁽¹⁾(η)
        derivs: dS⁽¹⁾/dη，未计算时为 None / None when not requested
        accuracy_digits: 每点估计精度 / estimated digits per grid point
        deriv_accuracy: 导数的估计精度 / estimated digits of the derivative
        series_loss: 每点级数的抵消位数 / series cancellation per grid point
        terms_used: 每点使用的项数 / terms summed per grid point
    """

    m: int
    l: int
    scheme: str
    eta: Tuple[float, ...]
    values: Tuple[ScaledComplex, ...]
    derivs: Optional[Tuple[ScaledComplex, ...]]
    accuracy_digits: Tuple[int, ...]
    deriv_accuracy: Tuple[int, ...]
    series_loss: Tuple[float, ...]
    terms_used: Tuple[int, ...]


def eta_from_theta(thetas: Iterable[float]) -> List[float]:
    """θ（弧度）转为 η = cos θ / Convert arc-cosine arguments (radians) to η"""
    out = []
    for theta in thetas:
        check_finite(theta)
        eta = math.cos(float(theta))
        out.append(max(-1.0, min(1.0, eta)))
    return out


def angular_s1(
    m: int,
    l: int,
    c: complex,
    eta_grid: Sequence[float],
    coeffs: CoeffSet,
    norm: NormalizationResult,
    ctx: Optional[PrecisionContext] = None,
    derivatives: bool = True,
) -> AngularResult:
    """
    计算 S⁽¹⁾ 及其导数 / Evaluate S⁽¹⁾ and dS⁽¹⁾/dη on a grid

    每点精度 = min(naccre-1, itestm-1, ndec-级数损失-1, ndec-归一化损失-1)。
    m = 1 时 η = ±1 处导数无界，该点导数记为 0 且精度为 0。

    Raises:
        DomainError: |η| > 1
    """
    if coeffs.m != m or coeffs.l != l:
        raise DomainError("coefficient set does not belong to this (m, l)")
    for eta in eta_grid:
        check_finite(eta)
        if abs(float(eta)) > 1.0:
            raise DomainError(f"|eta| must not exceed 1, got {eta}")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    with ctx.arith.context():
        return _evaluate(m, l, eta_grid, coeffs, norm, ctx, derivatives)


def _evaluate(
    m: int,
    l: int,
    eta_grid: Sequence[float],
    coeffs: CoeffSet,
    norm: NormalizationResult,
    ctx: PrecisionContext,
    derivatives: bool,
) -> AngularResult:
    ndec = ctx.ndec
    indices = list(coeffs.indices())
    weights = [norm.d(coeffs, n) for n in indices]
    caps = (coeffs.naccre - 1, coeffs.itestm - 1)

    values, derivs, accs, dacc, losses, used = [], [], [], [], [], []
    for eta in eta_grid:
        at_pole = abs(float(eta)) == 1.0
        want_deriv = derivatives and not (at_pole and m == 1)
        table = legendre_p(m, coeffs.n_max, eta, ctx, derivatives=want_deriv)
        terms = truncated((w * table.value(m + n) for w, n in zip(weights, indices)), ndec, SERIES_RUN, SERIES_MARGIN)
        total = scaled_series_sum(terms, ndec)
        values.append(total.value)
        losses.append(total.digits_lost)
        used.append(len(terms))
        accs.append(accuracy_from_losses(ndec, [total.digits_lost, norm.digits_lost], *caps))
        if not derivatives:
            continue
        if not want_deriv:
            logger.debug("dS/dη unbounded at eta=%s for m=1; reporting zero with no accuracy", eta)
            derivs.append(ZERO)
            dacc.append(0)
            continue
        dterms = [w * table.deriv(m + n) for w, n in zip(weights, indices)][: len(terms)]
        dtotal = scaled_series_sum(dterms, ndec)
        derivs.append(dtotal.value)
        dacc.append(accuracy_from_losses(ndec, [dtotal.digits_lost, norm.digits_lost], *caps))

    return AngularResult(
        m, l, norm.scheme, tuple(float(e) for e in eta_grid), tuple(values),
        tuple(derivs) if derivatives else None, tuple(accs), tuple(dacc), tuple(losses), tuple(used),
    )
