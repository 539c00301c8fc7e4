"""
Siberia-Spheroidal - Ordered eigenvalue spectrum λ_{ml}(-ic)

矩阵估计、长椭球型特征值识别、排序交错、Bouwkamp 精化与精度估计。
Matrix estimates, detection of prolate-like eigenvalues, ordering and
interlacing, Bouwkamp refinement and accuracy estimates.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any, List, Optional, Sequence, Tuple

from ..core.errors import ConvergenceError, DomainError
from ..core.precision import PrecisionContext, check_size_parameter
from ..utils.logger import WarningCollector, WarningEvent, get_logger
from ..utils.utils import agreement_digits
from .bouwkamp import bouwkamp_iterate
from .matrix import breakpoint, build_matrix, dense_eigenvalues, matrix_size, prolate_asymptotic
from .tridiag import eigen_tridiag

logger = get_logger(__name__)

PROLATE_FACTOR = 1.0e-2
SEED_TOLERANCE = 1.0e-2


@dataclass(frozen=True)
class EigenRecord:
    """
    单个特征值记录 / One eigenvalue record

    Attributes:
        lam: 特征值 λ_{ml} / the eigenvalue
        naccre: 估计精度位数 / estimated accurate digits
        prolate_like: 是否与长椭球渐近值一致 / agrees with the prolate asymptotic form
        paired_with: 配对伙伴的 l / l of the pairing partner
        source: matrix / bouwkamp / extrapolation
    """

    m: int
    l: int
    lam: Any
    naccre: int
    prolate_like: bool = False
    paired_with: Optional[int] = None
    source: str = "matrix"
    converged: bool = True
    pairing_digits: int = 0

    @property
    def parity(self) -> int:
        return (self.l - self.m) % 2


def prolate_threshold(c: complex, factor: float = PROLATE_FACTOR) -> float:
    """10^-2 · max(1, |c|^{-1/2})"""
    size = abs(complex(c))
    return factor * max(1.0, 1.0 / math.sqrt(size)) if size > 0 else math.inf


def is_prolate_like(value: complex, m: int, parity: int, count: int, c: complex, threshold: float) -> bool:
    """与同奇偶的渐近值相对距离小于阈值 / Close to a same-parity prolate estimate"""
    if complex(c) == 0:
        return False
    for q in range(parity, parity + 2 * count + 2, 2):
        estimate = prolate_asymptotic(m, m + q, c)
        if abs(value - estimate) < threshold * abs(estimate):
            return True
    return False


def _matrix_eigenvalues(m: int, c: complex, parity: int, size: int) -> List[complex]:
    system = build_matrix(m, c, parity, size)
    try:
        values = eigen_tridiag(system)
    except ConvergenceError as exc:
        logger.debug("QL failed (%s); using dense eigenvalues for m=%d parity=%d", exc, m, parity)
        values = dense_eigenvalues(system)
    return sorted(values, key=lambda v: (v.real, v.imag))


def order_matrix_estimates(
    m: int,
    c: complex,
    even: Sequence[complex],
    odd: Sequence[complex],
    minacc: int,
    ndec: int,
    factor: float = PROLATE_FACTOR,
) -> Tuple[List[Tuple[complex, bool]], List[Tuple[complex, bool]]]:
    """
    排序并重新放置长椭球型特征值 / Order both parities and relocate prolate-like values

    每个奇偶序列按实部排序；长椭球型值移到前导的负实部或配对值之后。
    Each parity is sorted by real part. Prolate-like values are moved behind the
    leading run of negative-real or paired entries, in both parities alike.
    """
    threshold = prolate_threshold(c, factor)
    flagged = []
    for parity, values in ((0, even), (1, odd)):
        values = sorted(values, key=lambda v: (v.real, v.imag))
        flagged.append([(v, is_prolate_like(v, m, parity, len(values), c, threshold)) for v in values])

    plain = [[v for v, p in flags if not p] for flags in flagged]
    prolate = [[v for v, p in flags if p] for flags in flagged]
    k = 0
    while k < min(len(plain[0]), len(plain[1])):
        a, b = plain[0][k], plain[1][k]
        if (a.real < 0 and b.real < 0) or agreement_digits(a, b, ndec) >= minacc:
            k += 1
        else:
            break
    out = []
    for parity in (0, 1):
        seq = [(v, False) for v in plain[parity][:k]]
        seq += [(v, True) for v in prolate[parity]]
        seq += [(v, False) for v in plain[parity][k:]]
        out.append(seq)
    return out[0], out[1]


def eigenvalue_spectrum(
    m: int,
    c: complex,
    l_max: int,
    ctx: Optional[PrecisionContext] = None,
    warnings: Optional[WarningCollector] = None,
    prolate_factor: float = PROLATE_FACTOR,
) -> List[EigenRecord]:
    """
    计算 l = m..l_max 的有序特征值 / Ordered eigenvalues for l = m..l_max

    Args:
        m: 阶 / order
        c: 尺寸参数 / size parameter
        l_max: 最大 l / highest degree
        ctx: 精度上下文 / precision context
        warnings: 警告收集器 / collector for duplicate-eigenvalue warnings

    Returns:
        恰好 l_max - m + 1 条记录 / exactly l_max - m + 1 records, ordered by l
    """
    c = check_size_parameter(c)
    if m < 0 or l_max < m:
        raise DomainError("eigenvalue_spectrum needs 0 <= m <= l_max")
    ctx = ctx if ctx is not None else PrecisionContext.for_mode("double", c)
    warnings = warnings if warnings is not None else WarningCollector()
    count = l_max - m + 1
    per_parity = [(count + 1) // 2, count // 2]

    if c == 0:
        return [EigenRecord(m, l, ctx.arith.num(l * (l + 1)), ctx.ndec) for l in range(m, l_max + 1)]

    nb = breakpoint(m, c)
    size = matrix_size(m, c, max(per_parity) + 20)
    even_raw = _matrix_eigenvalues(m, c, 0, size)
    odd_raw = _matrix_eigenvalues(m, c, 1, size)
    ordered = order_matrix_estimates(m, c, even_raw, odd_raw, ctx.minacc, ctx.ndec, prolate_factor)
    logger.info("matrix estimates ready for m=%d c=%s (size %d, breakpoint %d)", m, c, size, nb)

    by_parity: List[List[EigenRecord]] = [[], []]
    for parity in (0, 1):
        refined: List[Any] = []
        for j in range(per_parity[parity]):
            l = m + 2 * j + parity
            seed, prolate_like = ordered[parity][j]
            use_matrix = (l - m) <= 4 * nb / 3 or j < 3
            if not use_matrix:
                seed = 3 * refined[j - 1] - 3 * refined[j - 2] + refined[j - 3]
            out = bouwkamp_iterate(m, l, seed, c, ctx)
            if use_matrix:
                close = abs(complex(out.lam) - seed) < SEED_TOLERANCE * max(abs(seed), 1e-300)
                if close:
                    record = EigenRecord(m, l, out.lam, out.naccre, prolate_like, None, "bouwkamp", out.converged)
                else:
                    logger.debug("bouwkamp left the matrix value at m=%d l=%d; keeping the seed", m, l)
                    record = EigenRecord(m, l, ctx.arith.num(seed), out.first_digits, prolate_like,
                                         None, "matrix", False)
            else:
                source = "bouwkamp" if out.converged else "extrapolation"
                record = EigenRecord(m, l, out.lam, out.naccre, prolate_like, None, source, out.converged)
            refined.append(complex(record.lam))
            by_parity[parity].append(record)

    _mark_pairs(by_parity, ctx)
    records = _interlace(by_parity)
    _check_duplicates(by_parity, warnings)
    return records


def _mark_pairs(by_parity: List[List[EigenRecord]], ctx: PrecisionContext) -> None:
    even, odd = by_parity
    for j in range(min(len(even), len(odd))):
        digits = agreement_digits(even[j].lam, odd[j].lam, ctx.ndec)
        if digits < ctx.minacc:
            continue
        a, b = even[j], odd[j]
        a_acc = a.naccre if a.converged else min(a.naccre, digits)
        b_acc = b.naccre if b.converged else min(b.naccre, digits)
        even[j] = replace(a, paired_with=b.l, naccre=a_acc, pairing_digits=digits)
        odd[j] = replace(b, paired_with=a.l, naccre=b_acc, pairing_digits=digits)


def _interlace(by_parity: List[List[EigenRecord]]) -> List[EigenRecord]:
    out = []
    even, odd = by_parity
    for j in range(len(even)):
        out.append(even[j])
        if j < len(odd):
            out.append(odd[j])
    return out


def _check_duplicates(by_parity: List[List[EigenRecord]], warnings: WarningCollector) -> None:
    for records in by_parity:
        for i, a in enumerate(records):
            for b in records[i + 1:]:
                need = min(a.naccre, b.naccre)
                if need <= 0:
                    continue
                if agreement_digits(a.lam, b.lam, need) >= need:
                    warnings.add(WarningEvent(
                        "duplicate_eigenvalue", a.m, a.l,
                        f"parity={'even' if a.parity == 0 else 'odd'} same value as l={b.l}", b.l,
                    ))
