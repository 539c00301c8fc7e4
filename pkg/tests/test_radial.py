"""
Siberia-Spheroidal - Tests for radial functions and method selection

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math

import pytest

from siberiaspheroidal.core.errors import DomainError, MethodInapplicable
from siberiaspheroidal.core.scaled import scaled_from
from siberiaspheroidal.eigen.matrix import breakpoint
from siberiaspheroidal.eigen.spectrum import EigenRecord
from siberiaspheroidal.radial.eta_sum import radial_eta_sum
from siberiaspheroidal.radial.integral import integral_tables, quadrature_rule, r2_integral
from siberiaspheroidal.radial.pairing import pairing_partner, r2_pairing
from siberiaspheroidal.radial.results import METHODS, R1Fragment
from siberiaspheroidal.radial.selector import SelectionOptions, _RadialSelector, select_radial
from siberiaspheroidal.radial.wronskian import (
    near_equality_digits,
    pairing_downgrade,
    theoretical_wronskian,
    wronskian_digits,
)
from siberiaspheroidal.radial.xi_zero import reciprocal_wronskian_term
from siberiaspheroidal.solver import SiberiaOblateSolver
from siberiaspheroidal.utils.logger import WarningCollector


# ---------------------------------------------------------------------------
# Wronskian 工具 / Wronskian helpers
# ---------------------------------------------------------------------------

def test_theoretical_wronskian():
    assert theoretical_wronskian(2j, 1.0).to_complex() == pytest.approx(-0.25j)
    with pytest.raises(DomainError):
        theoretical_wronskian(0, 1.0)


def test_wronskian_digits_exact_pair():
    c, xi = 2.0, 0.0
    one, zero = scaled_from(1.0), scaled_from(0.0)
    r2p = scaled_from(1.0 / (c * (xi * xi + 1)))
    assert wronskian_digits(one, zero, zero, r2p, c, xi, 15) == 15


def test_near_equality_digits_truncates():
    big = scaled_from(1.0e3)
    assert near_equality_digits(big, big, 1.0, 0.0) == 6
    assert near_equality_digits(scaled_from(0.0), big, 1.0, 0.0) == 0


def test_pairing_downgrade():
    assert pairing_downgrade(2.5e-3) == 2
    assert pairing_downgrade(0.5) == 0
    assert pairing_downgrade(1.5) == 0


def test_reciprocal_wronskian_term():
    assert reciprocal_wronskian_term(2.0, scaled_from(0.5)).to_complex() == pytest.approx(1.0)
    with pytest.raises(DomainError):
        reciprocal_wronskian_term(2.0, scaled_from(0.0))


# ---------------------------------------------------------------------------
# 配对 / pairing
# ---------------------------------------------------------------------------

def test_pairing_signs():
    fragment = R1Fragment(scaled_from(2.0), scaled_from(-3.0), 12)
    assert pairing_partner(0, 0) == 1 and pairing_partner(0, 1) == 0
    even = EigenRecord(0, 0, 5.0, 12, paired_with=1)
    r2, r2p = r2_pairing(0, 0, 30.0, even, fragment)
    assert r2.to_complex() == 2.0 and r2p.to_complex() == -3.0
    odd = EigenRecord(0, 1, 5.0, 12, paired_with=0)
    r2, r2p = r2_pairing(0, 1, 30.0, odd, fragment)
    assert r2.to_complex() == -2.0 and r2p.to_complex() == 3.0


def test_pairing_needs_partner():
    with pytest.raises(MethodInapplicable):
        r2_pairing(0, 0, 3.0, EigenRecord(0, 0, 5.0, 12), None)
    with pytest.raises(MethodInapplicable):
        r2_pairing(0, 0, 3.0, EigenRecord(0, 0, 5.0, 12, paired_with=1), None)


# ---------------------------------------------------------------------------
# 积分法 / integral method
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("xi", [1.0e-3, 0.05, 0.2])
def test_quadrature_weights_cover_unit_interval(xi):
    rule = quadrature_rule(xi, 5.0 + 1.0j, 10)
    assert rule.total_weight() == pytest.approx(1.0, rel=1e-13)
    assert all(0.0 <= float(x) <= 1.0 for x in rule.nodes)
    with pytest.raises(DomainError):
        quadrature_rule(0.0)


def test_integral_tables_parity_pattern():
    tables = integral_tables(1, 2.0 + 1.0j, 0.1, 8)
    for n in range(9):
        if n % 2:
            assert tables.ia[n].is_zero() and tables.ic[n].is_zero()
        else:
            assert tables.ib[n].is_zero() and tables.id[n].is_zero()
    assert tables.agreement >= 13


def test_integral_small_c_limit():
    c, xi = 0.01, 0.1
    solver = SiberiaOblateSolver(0, c, 1)
    cs = solver.coeffs(0)
    tables = integral_tables(0, c, xi, cs.n_max)
    out = r2_integral(0, 0, c, xi, cs, tables)
    expected = -math.atan2(1.0, xi) / c
    assert out.r2.to_complex() == pytest.approx(expected, rel=1e-3)
    assert out.r2p.to_complex() == pytest.approx(1.0 / (c * (xi * xi + 1)), rel=1e-3)


# ---------------------------------------------------------------------------
# 方法选择 / selection
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m, c, xi", [(0, 2.0 + 1.0j, 0.5), (1, 5.0 + 2.0j, 1.5), (2, 1.0 + 0.5j, 0.1)])
def test_selected_results_satisfy_wronskian(m, c, xi):
    solver = SiberiaOblateSolver(m, c, 4)
    for result in solver.radial(xi):
        assert result.method_r2 in METHODS
        assert result.acc_r1 >= 8
        assert result.acc_r2 >= 8
        digits = wronskian_digits(result.r1, result.r1p, result.r2, result.r2p, c, xi, 15)
        assert digits >= 5
        assert "tried" in result.ledger


def test_pairing_wins_for_large_real_size_parameter():
    solver = SiberiaOblateSolver(0, 30.0 + 1.0j, 2)
    results = solver.radial(1.0)
    assert "pairing" in {r.method_r2 for r in results}


def test_radial_at_zero_follows_parity():
    solver = SiberiaOblateSolver(1, 2.0 + 1.0j, 4)
    for result in solver.radial(0.0):
        assert result.method_r2 == "xi_zero"
        if (result.l - result.m) % 2:
            assert result.r1.is_zero()
        else:
            assert result.r1p.is_zero()


def test_first_kind_matches_full_selection():
    solver = SiberiaOblateSolver(0, 3.0 + 1.0j, 3)
    fragments = solver.radial_first_kind(0.8)
    for result in solver.radial(0.8):
        a, b = fragments[result.l].r1.to_complex(), result.r1.to_complex()
        assert a == pytest.approx(b, rel=1e-9)
    with pytest.raises(DomainError):
        solver.radial_first_kind(0.0)


def test_select_radial_rejects_bad_input(ctx):
    solver = SiberiaOblateSolver(0, 1.0, 2)
    with pytest.raises(DomainError):
        select_radial(0, 1.0, -0.1, solver.records, {0: solver.coeffs(0), 1: solver.coeffs(1)}, ctx)
    with pytest.raises(DomainError):
        select_radial(0, 1.0, 0.5, solver.records, {0: solver.coeffs(0)}, ctx)
    with pytest.raises(DomainError):
        SiberiaOblateSolver(0, 0, 2).radial(0.5)


def test_disabled_methods_are_recorded():
    options = SelectionOptions(use_integral=False, use_legendre=False)
    solver = SiberiaOblateSolver(0, 2.0 + 0.5j, 2, options=options)
    for result in solver.radial(0.1):
        tried = result.ledger["tried"]
        assert result.method_r2 not in ("integral", "legendre")
        if "integral" in tried:
            assert str(tried["integral"]).startswith("skipped")


@pytest.mark.parametrize("m, c, xi", [(0, 2.0 + 0.5j, 0.1), (1, 5.0 + 2.0j, 0.1)])
def test_eta_paths_carry_selection_without_integral(m, c, xi):
    options = SelectionOptions(use_integral=False)
    solver = SiberiaOblateSolver(m, c, 4, options=options)
    for result in solver.radial(xi):
        tried = result.ledger["tried"]
        assert result.method_r2 != "integral"
        if "integral" in tried:
            assert str(tried["integral"]).startswith("skipped")
        assert result.acc_r1 >= 8


# ---------------------------------------------------------------------------
# 较大 c 与方法间一致性 / larger c and agreement between methods
# ---------------------------------------------------------------------------

def test_first_kind_interior_eta_matches_eta_one():
    m, c, xi = 0, 50.0 + 10.0j, 0.5
    solver = SiberiaOblateSolver(m, c, 3)
    ndec = solver.ctx.ndec
    for l in solver.l_values:
        cs = solver.coeffs(l)
        at_one = radial_eta_sum(1, m, l, solver.c, xi, 1.0, cs, ctx=solver.ctx)
        inside = radial_eta_sum(1, m, l, solver.c, xi, 0.7, cs, ctx=solver.ctx)
        digits = min(at_one.accuracy(ndec), inside.accuracy(ndec))
        assert digits >= 4
        ratio = (inside.value / at_one.value).to_complex()
        assert abs(ratio - 1) < 10.0 ** (2 - digits)


def test_radial_at_moderately_large_c():
    c, xi = 50.0 + 10.0j, 0.5
    solver = SiberiaOblateSolver(0, c, 40)
    results = solver.radial(xi)
    assert len(results) == 40
    for result in results:
        assert result.method_r2 in METHODS
        assert result.method_r2 != "none"
        assert result.acc_r2 >= 5
        assert wronskian_digits(result.r1, result.r1p, result.r2, result.r2p, c, xi, 15) >= 5


@pytest.mark.parametrize("m, c, xi", [(0, 5.0 + 2.0j, 0.1), (1, 20.0 + 5.0j, 0.15), (2, 10.0 + 3.0j, 0.08)])
def test_integral_and_eta_series_agree(m, c, xi):
    solver = SiberiaOblateSolver(m, c, 6)
    coeff_sets = {l: solver.coeffs(l) for l in solver.l_values}
    selector = _RadialSelector(m, solver.c, xi, solver.records, coeff_sets, solver.ctx,
                               SelectionOptions(), WarningCollector(), None)
    selector.first_kind(list(solver.l_values))
    compared = 0
    for l in solver.l_values:
        by_integral = selector.integral(l)
        try:
            by_eta = selector.variable_eta(l)
        except MethodInapplicable:
            continue
        digits = min(by_integral.acc, by_eta.acc)
        if digits < 6:
            continue
        ratio = (by_integral.r2 / by_eta.r2).to_complex()
        assert abs(ratio - 1) < 10.0 ** (1 - digits)
        compared += 1
    assert compared >= 1


@pytest.mark.slow
@pytest.mark.parametrize("c_real", [5.0, 20.0, 50.0, 100.0, 200.0])
@pytest.mark.parametrize("c_imag", [0.0, 2.0, 5.0, 10.0])
@pytest.mark.parametrize("m", [0, 2, 10, 50])
def test_wronskian_sweep(c_real, c_imag, m):
    c = complex(c_real, c_imag)
    solver = SiberiaOblateSolver(m, c, breakpoint(m, c) + 21)
    for xi in (0.01, 0.1, 0.5, 1.5):
        for result in solver.radial(xi):
            assert result.acc_r2 >= 5, (xi, result.l, result.method_r2)
            digits = wronskian_digits(result.r1, result.r1p, result.r2, result.r2p, c, xi, 15)
            assert digits >= 5, (xi, result.l, result.method_r2)


@pytest.mark.slow
@pytest.mark.parametrize("m", [0, 20])
def test_large_real_size_parameter_runs(m):
    c = 1000.0 + 2.0j
    solver = SiberiaOblateSolver(m, c, 10)
    for xi in (0.1, 1.0):
        for result in solver.radial(xi):
            assert result.method_r2 != "none"
            assert result.acc_r2 >= 4
