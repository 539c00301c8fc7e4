"""
Siberia-Spheroidal - Tests for expansion coefficients, normalization and the joining factor

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math

import pytest

from siberiaspheroidal.basis.legendre import legendre_p_zero
from siberiaspheroidal.coeffs.joining import joining_factor, legendre_series, r1_at_zero
from siberiaspheroidal.coeffs.negative import d_negative, with_branches
from siberiaspheroidal.coeffs.normalization import (
    flammer_sum,
    morse_feshbach_sum,
    ms_sum,
    normalize,
    truncated,
)
from siberiaspheroidal.coeffs.ratios import d_ratios, extend_coeffs
from siberiaspheroidal.core.errors import DomainError
from siberiaspheroidal.core.scaled import scaled_from
from siberiaspheroidal.eigen.recurrence import coefficients
from siberiaspheroidal.eigen.spectrum import eigenvalue_spectrum


def coeff_set(m, l, c, ctx):
    record = eigenvalue_spectrum(m, c, l, ctx)[-1]
    return d_ratios(m, l, c, record.lam, ctx=ctx, naccre=record.naccre)


def residual_digits(cs, n):
    """三项递推在 n 处的相对残差位数 / digits by which the recurrence balances at n"""
    a, b, g = coefficients(n, cs.m, complex(cs.c) ** 2)
    parts = [cs.d(n + 2) * a, cs.d(n) * (b - complex(cs.lam)), cs.d(n - 2) * g]
    size = max(p.log10_abs() for p in parts)
    total = parts[0] + parts[1] + parts[2]
    return math.inf if total.is_zero() else size - total.log10_abs()


def test_zero_c_coefficients_are_a_single_term(ctx):
    cs = d_ratios(2, 5, 0, 30, ctx=ctx)
    assert cs.d(3).to_complex() == 1
    assert all(cs.d(n).is_zero() for n in cs.indices() if n != 3)
    assert cs.itestm == ctx.ndec


def test_zero_c_meixner_schafke_factor_is_one(ctx):
    cs = d_ratios(1, 4, 0, 20, ctx=ctx)
    norm = normalize("meixner_schafke", cs, ctx)
    assert norm.factor.to_complex() == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("m, l, c", [(0, 0, 2 + 1j), (1, 4, 2 + 1j), (3, 6, 8 + 3j)])
def test_coefficients_satisfy_recurrence(m, l, c, ctx):
    cs = coeff_set(m, l, c, ctx)
    assert cs.itestm >= 8
    for n in list(cs.indices())[:-1]:
        assert residual_digits(cs, n) > 9


def test_coefficients_decay_to_the_horizon(ctx):
    cs = coeff_set(0, 2, 5 + 2j, ctx)
    assert cs.n_max > cs.t
    assert cs.d(cs.n_max).log10_abs() < -ctx.ndec
    assert cs.d(cs.t).to_complex() == pytest.approx(1.0)


def test_extend_coeffs_keeps_existing_values(ctx):
    cs = coeff_set(1, 3, 3 + 1j, ctx)
    grown = extend_coeffs(cs, cs.n_max + 20, ctx)
    assert grown.n_max >= cs.n_max + 20
    for n in cs.indices():
        a, b = cs.d(n), grown.d(n)
        if a.log10_abs() > -12:
            assert (a - b).log10_abs() - a.log10_abs() < -10
    assert extend_coeffs(cs, cs.n_max - 2, ctx) is cs


def test_d_ratios_rejects_bad_degree(ctx):
    with pytest.raises(DomainError):
        d_ratios(3, 2, 1.0, 0.0, ctx=ctx)


# ---------------------------------------------------------------------------
# 归一化 / normalization
# ---------------------------------------------------------------------------

def test_meixner_schafke_matches_legendre_norm(ctx):
    m, l = 2, 5
    cs = coeff_set(m, l, 4 + 1j, ctx)
    norm = normalize("meixner_schafke", cs, ctx)
    total = ms_sum(cs, ctx).value * norm.factor * norm.factor
    expected = 2.0 / (2 * l + 1) * math.factorial(l + m) / math.factorial(l - m)
    assert total.to_complex() == pytest.approx(expected, rel=1e-12)
    assert norm.accuracy_digits <= min(cs.naccre, cs.itestm) - 1


def test_unit_norm(ctx):
    cs = coeff_set(0, 1, 3 + 2j, ctx)
    norm = normalize("unit", cs, ctx)
    assert (ms_sum(cs, ctx).value * norm.factor * norm.factor).to_complex() == pytest.approx(1.0, rel=1e-12)


def test_flammer_matches_legendre_at_zero(ctx):
    m, l = 1, 3
    cs = coeff_set(m, l, 2 + 2j, ctx)
    norm = normalize("flammer", cs, ctx)
    target = legendre_p_zero(m, l - m)[cs.parity]
    got = flammer_sum(cs, ctx).value * norm.factor
    assert got.to_complex() == pytest.approx(target.to_complex(), rel=1e-12)


def test_morse_feshbach_sum_scaled(ctx):
    m, l = 2, 4
    cs = coeff_set(m, l, 3 + 0.5j, ctx)
    norm = normalize("morse_feshbach", cs, ctx)
    got = morse_feshbach_sum(cs, ctx).value * norm.factor
    assert got.to_complex() == pytest.approx(math.factorial(l + m) / math.factorial(l - m), rel=1e-12)


def test_unknown_scheme_rejected(ctx):
    cs = d_ratios(0, 0, 0, 0, ctx=ctx)
    with pytest.raises(DomainError):
        normalize("sphere", cs, ctx)


def test_normalization_loss_small_for_moderate_imaginary_part(ctx):
    cs = coeff_set(0, 4, 10 + 5j, ctx)
    assert normalize("meixner_schafke", cs, ctx).jsubms.digits_lost <= 2.0


def test_truncation_stops_after_negligible_run():
    terms = [scaled_from(1.0)] + [scaled_from(1e-30)] * 10
    assert len(truncated(terms, 15)) == 6


# ---------------------------------------------------------------------------
# 负指标与连接因子 / negative branch and joining factor
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m, l", [(2, 3), (3, 3), (1, 2)])
def test_negative_coefficients_continue_the_recurrence(m, l, ctx):
    cs = coeff_set(m, l, 2 + 1j, ctx)
    branch = d_negative(m, l, cs.c, cs, ctx)
    full = with_branches(cs, ctx)
    assert len(branch.indices) == m
    for n in branch.indices:
        assert residual_digits(full, n) > 9


def test_no_negative_branch_for_m_zero(ctx):
    cs = coeff_set(0, 2, 2 + 1j, ctx)
    assert d_negative(0, 2, cs.c, cs, ctx).indices == ()


def test_r1_at_zero_small_c_limits(ctx):
    c = 0.01
    even = coeff_set(0, 0, c, ctx)
    r1, r1p, _ = r1_at_zero(even, ctx)
    assert r1.to_complex() == pytest.approx(1.0, rel=1e-4)
    assert r1p.is_zero()

    odd = coeff_set(1, 2, c, ctx)
    r1, r1p, _ = r1_at_zero(odd, ctx)
    assert r1.is_zero()
    assert r1p.to_complex() == pytest.approx(c * c / 15, rel=1e-3)


def test_legendre_series_parts(ctx):
    cs = coeff_set(1, 2, 3 + 1j, ctx)
    series = legendre_series(cs, 0.4, ctx)
    assert series.q_terms > 0
    assert series.p_terms > 0
    value, deriv = series.combined()
    assert (value.value - series.value).is_zero() or (value.value - series.value).log10_abs() < value.value.log10_abs() - 12


def test_joining_factor_usable(ctx):
    cs = coeff_set(0, 1, 3 + 1j, ctx)
    kappa = joining_factor(0, 1, cs.c, cs, ctx=ctx)
    assert kappa.usable
    assert kappa.err.digits_lost < 8
    assert not kappa.value.is_zero()


def test_joining_factor_needs_nonzero_c(ctx):
    cs = d_ratios(0, 0, 0, 0, ctx=ctx)
    with pytest.raises(DomainError):
        joining_factor(0, 0, 0, cs, ctx=ctx)
