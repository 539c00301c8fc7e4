"""
Siberia-Spheroidal - Tests for Legendre and spherical Bessel tables

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math

import pytest
from scipy import special

from siberiaspheroidal.basis.bessel import sph_bessel_j, sph_functions, sph_neumann_y
from siberiaspheroidal.basis.legendre import (
    legendre_p,
    legendre_p_imag,
    legendre_p_zero,
    legendre_q0_closed,
    legendre_q_imag,
    p_imag_table,
    q_imag_table,
)
from siberiaspheroidal.core.errors import DomainError


def rel_err(a, b):
    a, b = complex(a), complex(b)
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------------------
# 实变量 P / real-argument P
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m", [0, 1, 2, 5])
@pytest.mark.parametrize("eta", [-0.7, 0.0, 0.3, 0.95])
def test_legendre_p_matches_scipy_without_phase(m, eta, ctx):
    table = legendre_p(m, 12, eta, ctx, derivatives=False)
    for n in range(13):
        expected = (-1) ** m * special.lpmv(m, m + n, eta)
        got = table.value(m + n).to_complex()
        assert abs(got - expected) <= 1e-9 * max(1.0, abs(expected))


def test_legendre_p_derivative_by_central_difference(ctx):
    m, eta, h = 2, 0.4, 1e-6
    table = legendre_p(m, 8, eta, ctx)
    hi = legendre_p(m, 8, eta + h, ctx, derivatives=False)
    lo = legendre_p(m, 8, eta - h, ctx, derivatives=False)
    for nu in range(m, m + 9):
        numeric = (hi.value(nu).to_complex() - lo.value(nu).to_complex()) / (2 * h)
        assert rel_err(table.deriv(nu).to_complex(), numeric) < 1e-6


def test_legendre_p_endpoint_derivative(ctx):
    table = legendre_p(0, 6, 1.0, ctx)
    for n in range(7):
        assert table.deriv(n).to_complex().real == pytest.approx(n * (n + 1) / 2)


def test_legendre_p_closed_forms_at_zero(ctx):
    m = 3
    table = legendre_p(m, 7, 0.0, ctx)
    for n in range(8):
        value, deriv = legendre_p_zero(m, n)
        if n % 2 == 0:
            assert rel_err(table.value(m + n).to_complex(), value.to_complex()) < 1e-13
            assert deriv.is_zero()
        else:
            assert abs(table.value(m + n).to_complex()) < 1e-12
            assert rel_err(table.deriv(m + n).to_complex(), deriv.to_complex()) < 1e-12


def test_legendre_p_rejects_outside_interval(ctx):
    with pytest.raises(DomainError):
        legendre_p(0, 3, 1.2, ctx)
    with pytest.raises(DomainError):
        legendre_p(-1, 3, 0.2, ctx)


def test_ratio_table_index_guard(ctx):
    table = legendre_p(2, 3, 0.1, ctx, derivatives=False)
    with pytest.raises(IndexError):
        table.value(1)
    with pytest.raises(ValueError):
        table.deriv(2)


def test_large_degree_stays_finite(ctx):
    table = legendre_p(150, 300, 0.2, ctx, derivatives=False)
    assert math.isfinite(table.value(450).log10_abs())


# ---------------------------------------------------------------------------
# 虚变量 P, Q / imaginary-argument P and Q
# ---------------------------------------------------------------------------

def test_p_imag_low_degrees(ctx):
    xi = 0.7
    table = legendre_p_imag(0, 3, xi, ctx)
    assert table.value(0).to_complex() == pytest.approx(1.0)
    assert table.value(1).to_complex() == pytest.approx(1j * xi)
    assert table.value(2).to_complex() == pytest.approx((-3 * xi * xi - 1) / 2)


def test_p_imag_allows_zero_but_public_form_does_not(ctx):
    assert p_imag_table(1, 4, 0.0, ctx).value(1).to_complex() == pytest.approx(1.0)
    with pytest.raises(DomainError):
        legendre_p_imag(1, 4, 0.0, ctx)


def test_q0_closed_form(ctx):
    xi = 0.5
    table = q_imag_table(0, 0, 6, xi, ctx)
    q0 = legendre_q0_closed(xi)
    assert rel_err(table.value(0).to_complex(), q0) < 1e-14
    assert rel_err(table.value(1).to_complex(), 1j * xi * q0 - 1) < 1e-13


@pytest.mark.parametrize("m, xi, hi", [(0, 0.5, 12), (2, 0.5, 12), (3, 2.0, 25), (1, 0.01, 30)])
def test_q_imag_satisfies_recurrence(m, xi, hi, ctx):
    table = legendre_q_imag(m, (0, hi), xi, ctx)
    z = 1j * xi
    for nu in range(max(1, m), hi):
        lhs = (nu - m + 1) * table.value(nu + 1).to_complex()
        rhs = (2 * nu + 1) * z * table.value(nu).to_complex() - (nu + m) * table.value(nu - 1).to_complex()
        assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(rhs))


def test_q_imag_derivative_by_central_difference(ctx):
    m, xi, h = 2, 0.8, 1e-6
    table = q_imag_table(m, m, m + 6, xi, ctx)
    hi = q_imag_table(m, m, m + 6, xi + h, ctx)
    lo = q_imag_table(m, m, m + 6, xi - h, ctx)
    for nu in range(m, m + 7):
        numeric = (hi.value(nu).to_complex() - lo.value(nu).to_complex()) / (2 * h)
        assert rel_err(table.deriv(nu).to_complex(), numeric) < 1e-6


def test_q_imag_extended_agrees_with_double(ctx, ext_ctx):
    low = q_imag_table(2, 0, 15, 0.3, ctx)
    high = q_imag_table(2, 0, 15, 0.3, ext_ctx)
    for nu in range(0, 16):
        assert rel_err(low.value(nu).to_complex(), complex(high.value(nu).to_complex())) < 1e-11


# ---------------------------------------------------------------------------
# 球 Bessel / spherical Bessel
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("z", [0.5, 3.0 + 2.0j, 20.0 + 5.0j])
def test_bessel_j_matches_scipy(z, ctx):
    table = sph_bessel_j(25, z, ctx)
    for n in range(26):
        expected = special.spherical_jn(n, z)
        assert rel_err(table.value(n).to_complex(), expected) < 1e-10


@pytest.mark.parametrize("z", [0.5, 3.0 + 2.0j, 20.0 + 5.0j])
def test_neumann_y_matches_scipy(z, ctx):
    table = sph_neumann_y(25, z, ctx)
    for n in range(26):
        expected = special.spherical_yn(n, z)
        assert rel_err(table.value(n).to_complex(), expected) < 1e-10
        expected_d = special.spherical_yn(n, z, derivative=True)
        assert rel_err(table.deriv(n).to_complex(), expected_d) < 1e-9


def test_bessel_large_imaginary_argument_does_not_overflow(ctx):
    table = sph_functions(1, 10, 5.0 + 900.0j, ctx)
    assert table.value(0).log10_abs() > 300
    assert math.isfinite(table.value(10).log10_abs())


def test_cross_relation_between_kinds(ctx):
    z = 4.0 + 1.5j
    j = sph_functions(1, 12, z, ctx)
    y = sph_functions(2, 12, z, ctx)
    for n in range(1, 12):
        cross = j.value(n).to_complex() * y.value(n - 1).to_complex() - j.value(n - 1).to_complex() * y.value(n).to_complex()
        assert rel_err(cross, 1 / z ** 2) < 1e-10


def test_bessel_rejects_zero_argument(ctx):
    with pytest.raises(DomainError):
        sph_functions(2, 5, 0.0, ctx)
    with pytest.raises(DomainError):
        sph_functions(3, 5, 1.0, ctx)


def test_extended_bessel_table(ext_ctx):
    table = sph_bessel_j(10, 2.0 + 1.0j, ext_ctx)
    expected = special.spherical_jn(10, 2.0 + 1.0j)
    assert rel_err(complex(table.value(10).to_complex()), expected) < 1e-12
