"""
Siberia-Spheroidal - Tests for angular functions of the first kind

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math

import numpy as np
import pytest
from scipy import special

from siberiaspheroidal.angular.functions import angular_s1, eta_from_theta
from siberiaspheroidal.basis.legendre import legendre_p_zero
from siberiaspheroidal.core.errors import DomainError
from siberiaspheroidal.radial.selector import SelectionOptions
from siberiaspheroidal.solver import SiberiaOblateSolver

GRID = [-1.0 + 0.1 * k for k in range(21)]


def gauss_norm(result_values, weights):
    return sum(w * v.to_complex() ** 2 for w, v in zip(weights, result_values))


@pytest.mark.parametrize("m", [0, 1, 4, 20])
def test_zero_c_reduces_to_legendre(m):
    solver = SiberiaOblateSolver(m, 0, 6)
    for result in solver.angular(GRID, derivatives=False):
        for eta, value, acc in zip(result.eta, result.values, result.accuracy_digits):
            expected = (-1) ** m * special.lpmv(m, result.l, eta)
            assert abs(value.to_complex() - expected) <= 1e-10 * max(1.0, abs(expected))
            assert acc >= 12


@pytest.mark.parametrize("scheme, target", [
    ("unit", lambda m, l: 1.0),
    ("meixner_schafke", lambda m, l: 2.0 / (2 * l + 1) * math.factorial(l + m) / math.factorial(l - m)),
])
def test_normalization_integrals(scheme, target):
    nodes, weights = np.polynomial.legendre.leggauss(80)
    m, c = 1, 3.0 + 1.5j
    solver = SiberiaOblateSolver(m, c, 4)
    for result in solver.angular(list(nodes), scheme, derivatives=False):
        integral = gauss_norm(result.values, weights)
        assert integral == pytest.approx(target(m, result.l), rel=1e-10)


def test_flammer_value_at_equator():
    m, c = 2, 4.0 + 1.0j
    solver = SiberiaOblateSolver(m, c, 3)
    results = solver.angular([0.0], "flammer", derivatives=True)
    even = results[0]
    assert even.values[0].to_complex() == pytest.approx(legendre_p_zero(m, 0)[0].to_complex(), rel=1e-12)
    odd = results[1]
    assert odd.derivs[0].to_complex() == pytest.approx(legendre_p_zero(m, 1)[1].to_complex(), rel=1e-10)


def test_derivative_matches_central_difference():
    solver = SiberiaOblateSolver(2, 5.0 + 2.0j, 3)
    eta, h = 0.35, 1e-6
    mid = solver.angular([eta])
    hi = solver.angular([eta + h], derivatives=False)
    lo = solver.angular([eta - h], derivatives=False)
    for a, b, c in zip(mid, hi, lo):
        numeric = (b.values[0].to_complex() - c.values[0].to_complex()) / (2 * h)
        assert abs(a.derivs[0].to_complex() - numeric) <= 1e-6 * abs(numeric)
        assert a.deriv_accuracy[0] >= 8


def test_parity_in_eta():
    solver = SiberiaOblateSolver(1, 3.0 + 1.0j, 4)
    for result in solver.angular([-0.6, 0.6], derivatives=False):
        sign = (-1) ** (result.l - result.m)
        assert result.values[0].to_complex() == pytest.approx(sign * result.values[1].to_complex(), rel=1e-12)


def test_m1_pole_derivative_is_flagged():
    solver = SiberiaOblateSolver(1, 2.0, 2)
    for result in solver.angular([1.0, 0.5]):
        assert result.derivs[0].is_zero()
        assert result.deriv_accuracy[0] == 0
        assert result.deriv_accuracy[1] > 0


def test_theta_grid_matches_eta_grid():
    solver = SiberiaOblateSolver(0, 2.0 + 0.5j, 2)
    thetas = [0.0, 0.5, 1.0]
    by_theta = solver.angular(theta=thetas, derivatives=False)
    by_eta = solver.angular([math.cos(t) for t in thetas], derivatives=False)
    for a, b in zip(by_theta, by_eta):
        for u, v in zip(a.values, b.values):
            assert u.to_complex() == pytest.approx(v.to_complex(), rel=1e-14)


def test_eta_from_theta_clamps():
    assert eta_from_theta([0.0, math.pi]) == [1.0, -1.0]
    assert eta_from_theta([math.pi / 2])[0] == pytest.approx(0.0, abs=1e-15)


def test_grid_outside_interval_rejected():
    solver = SiberiaOblateSolver(0, 1.0, 1)
    with pytest.raises(DomainError):
        solver.angular([1.5])
    with pytest.raises(DomainError):
        solver.angular()
    cs = solver.coeffs(0)
    with pytest.raises(DomainError):
        angular_s1(1, 0, 1.0, [0.0], cs, solver.normalization(0))


def test_normalization_warning_emitted_when_threshold_unreachable():
    solver = SiberiaOblateSolver(0, 2.0 + 1.0j, 2, options=SelectionOptions(warn_digits=99))
    solver.angular([0.0], derivatives=False)
    events = [e for e in solver.warnings if e.kind == "normalization_accuracy"]
    assert {e.l for e in events} == {0, 1}
