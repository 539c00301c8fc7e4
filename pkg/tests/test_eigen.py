"""
Siberia-Spheroidal - Tests for the eigenvalue spectrum

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import numpy as np
import pytest
from scipy import linalg

from siberiaspheroidal.core.errors import DomainError
from siberiaspheroidal.core.precision import PrecisionContext
from siberiaspheroidal.eigen.bouwkamp import bouwkamp_iterate, mismatch
from siberiaspheroidal.eigen.matrix import (
    breakpoint,
    build_matrix,
    dense_eigenvalues,
    matrix_size,
    prolate_asymptotic,
)
from siberiaspheroidal.eigen.recurrence import beta
from siberiaspheroidal.eigen.spectrum import (
    EigenRecord,
    _check_duplicates,
    eigenvalue_spectrum,
    is_prolate_like,
    prolate_threshold,
)
from siberiaspheroidal.eigen.tridiag import eigen_tridiag


def nearest_rel(value, pool):
    return min(abs(value - p) / max(abs(p), 1e-300) for p in pool)


def nearest_abs(value, pool):
    return min(abs(value - p) for p in pool)


def test_zero_size_parameter_gives_legendre_values(ctx):
    records = eigenvalue_spectrum(3, 0, 3 + 40, ctx)
    assert len(records) == 41
    for rec in records:
        assert complex(rec.lam) == rec.l * (rec.l + 1)
        assert rec.naccre == ctx.ndec


def test_records_ordered_by_l(ctx):
    records = eigenvalue_spectrum(2, 3 + 1j, 9, ctx)
    assert [r.l for r in records] == list(range(2, 10))
    assert [r.parity for r in records] == [0, 1] * 4


def test_small_c_leading_term(ctx):
    c = 0.1
    lam = complex(eigenvalue_spectrum(0, c, 0, ctx)[0].lam)
    # 二阶微扰 / second-order perturbation through the first off-diagonal pair
    assert lam == pytest.approx(-c * c / 3 - 2 * c ** 4 / 135, abs=1e-8)
    assert complex(beta(0, 0, c * c)) == pytest.approx(-c * c / 3)


def test_spectrum_matches_large_dense_matrix(ctx):
    m, c = 1, 2.0 + 1.0j
    records = eigenvalue_spectrum(m, c, m + 7, ctx)
    even = dense_eigenvalues(build_matrix(m, c, 0, 80))
    odd = dense_eigenvalues(build_matrix(m, c, 1, 80))
    for rec in records:
        pool = even if rec.parity == 0 else odd
        assert nearest_rel(complex(rec.lam), pool) < 1e-10
        assert rec.naccre >= 10


def test_tridiagonal_solver_against_extended_dense_oracle():
    rng = np.random.default_rng(20261018)
    for _ in range(12):
        m = int(rng.integers(0, 6))
        c = complex(rng.uniform(0.0, 8.0), rng.uniform(0.0, 4.0))
        size = int(rng.integers(4, 17))
        system = build_matrix(m, c, int(rng.integers(0, 2)), size)
        fast = eigen_tridiag(system)
        oracle = dense_eigenvalues(system, use_mp=True)
        assert len(fast) == size
        for value in fast:
            assert nearest_abs(value, oracle) < 1e-11 * system.norm


def test_tridiagonal_solver_agrees_with_scipy_eigvals():
    system = build_matrix(0, 6.0 + 2.0j, 0, 30)
    expected = linalg.eigvals(system.dense())
    for value in eigen_tridiag(system):
        assert nearest_abs(value, expected) < 1e-11 * system.norm


def test_matrix_geometry():
    assert breakpoint(0, 10 + 40j) == 31
    assert matrix_size(0, 1 + 1j) == 67
    assert matrix_size(0, 200 + 0j) == 170
    with pytest.raises(DomainError):
        build_matrix(0, 1.0, "sideways", 4)


def test_prolate_asymptotic_value():
    lam = prolate_asymptotic(0, 0, 10 + 40j)
    assert lam.real == pytest.approx(39.2455882, abs=1e-7)
    assert lam.imag == pytest.approx(-10.0011029, abs=1e-7)


def test_prolate_like_values_present_for_large_imaginary_part():
    c = 10 + 40j
    threshold = prolate_threshold(c)
    found = False
    for parity in (0, 1):
        values = dense_eigenvalues(build_matrix(0, c, parity, matrix_size(0, c)))
        if any(is_prolate_like(v, 0, parity, 20, c, threshold) for v in values):
            found = True
    assert found


@pytest.mark.parametrize("c", [10 + 40j, 20 + 20j])
@pytest.mark.parametrize("m", [0, 1, 5])
def test_spectrum_flags_prolate_like_records(c, m):
    records = eigenvalue_spectrum(m, c, m + 59)
    flagged = [r for r in records if r.prolate_like]
    assert flagged
    threshold = prolate_threshold(c)
    assert any(is_prolate_like(complex(r.lam), m, r.parity, 30, c, threshold) for r in flagged)


@pytest.mark.parametrize("m", [0, 1, 5])
def test_prolate_gap_shrinks_as_c_doubles(m):
    gaps = []
    for c in (10 + 40j, 20 + 80j):
        values = dense_eigenvalues(build_matrix(m, c, 0, matrix_size(m, c)))
        estimate = prolate_asymptotic(m, m, c)
        gaps.append(nearest_abs(estimate, values) / abs(estimate))
    assert gaps[0] < prolate_threshold(10 + 40j)
    assert gaps[1] < gaps[0]


def test_prolate_threshold_scaling():
    assert prolate_threshold(100.0) == pytest.approx(1.0e-2)
    assert prolate_threshold(0.25) == pytest.approx(2.0e-2)


def test_bouwkamp_removes_mismatch(ctx):
    m, l, c = 0, 2, 3.0 + 0.5j
    seed = dense_eigenvalues(build_matrix(m, c, 0, 60))
    seed = sorted(seed, key=lambda v: v.real)[1]
    out = bouwkamp_iterate(m, l, seed + 1e-4, c, ctx)
    assert out.naccre >= 12
    assert abs(out.lam - seed) / abs(seed) < 1e-11
    f, _ = mismatch(m, l, out.lam, c * c, 120)
    assert abs(f) < 1e-9 * abs(out.lam)


def test_bouwkamp_at_zero_c_returns_seed(ctx):
    out = bouwkamp_iterate(1, 3, 12.0, 0, ctx)
    assert out.lam == 12.0 and out.converged


def test_oblate_pairs_marked_for_large_real_part(ctx):
    records = eigenvalue_spectrum(0, 30 + 1j, 3, ctx)
    assert records[0].paired_with == 1
    assert records[1].paired_with == 0
    assert records[0].pairing_digits >= ctx.minacc


def test_duplicate_same_parity_values_warn(warnings):
    even = [EigenRecord(0, 0, 5.0 + 1.0j, 12), EigenRecord(0, 2, 5.0 + 1.0j, 12)]
    _check_duplicates([even, []], warnings)
    events = list(warnings)
    assert len(events) == 1
    event = events[0]
    assert event.kind == "duplicate_eigenvalue"
    assert (event.m, event.l, event.other_l) == (0, 0, 2)
    assert "parity=even" in event.detail


def test_spectrum_rejects_bad_range(ctx):
    with pytest.raises(DomainError):
        eigenvalue_spectrum(3, 1.0, 2, ctx)


@pytest.mark.slow
@pytest.mark.parametrize("m", [0, 10])
def test_hybrid_never_less_accurate_than_double(m):
    c = 100 + 15j
    l_max = m + 80
    double = eigenvalue_spectrum(m, c, l_max, PrecisionContext.for_mode("double", c))
    hybrid = eigenvalue_spectrum(m, c, l_max, PrecisionContext.for_mode("hybrid", c))
    for low, high in zip(double, hybrid):
        assert high.naccre >= low.naccre
    assert any(high.naccre > low.naccre for low, high in zip(double, hybrid))
