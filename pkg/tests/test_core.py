"""
Siberia-Spheroidal - Tests for scaled numbers, precision contexts and loss accounting

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import math

import mpmath
import pytest

from siberiaspheroidal.core.errors import (
    CancellationError,
    ConvergenceError,
    DomainError,
    MethodInapplicable,
    NonFiniteInputError,
    SpheroidalError,
)
from siberiaspheroidal.core.precision import PrecisionContext, check_finite, check_size_parameter
from siberiaspheroidal.core.scaled import (
    RunningScale,
    ScaledComplex,
    double_factorial,
    scaled_double_factorial,
    scaled_exp,
    scaled_factorial_ratio,
    scaled_from,
    scaled_from_int,
    scaled_power,
    scaled_sqrt,
)
from siberiaspheroidal.core.subtraction import SubtractionError, scaled_series_sum, sum_with_error
from siberiaspheroidal.utils.utils import accuracy_from_losses, agreement_digits, clamp_digits


# ---------------------------------------------------------------------------
# 缩放复数 / scaled complex numbers
# ---------------------------------------------------------------------------

def test_scaled_from_normalizes_characteristic():
    s = scaled_from(12345.0 - 6.0j)
    assert s.exp10 == 4
    assert 1.0 <= max(abs(s.char_re), abs(s.char_im)) < 10.0
    assert abs(s.to_complex() - (12345.0 - 6.0j)) < 1e-9


def test_scaled_zero_round_trip():
    z = scaled_from(0.0)
    assert z.is_zero()
    assert z.to_complex() == 0j
    assert z.log10_abs() == -math.inf


def test_products_far_beyond_double_range():
    big = scaled_from(1.0e200)
    product = big * big * big
    assert product.log10_abs() == pytest.approx(600.0, abs=1e-9)
    back = product / big / big
    assert back.to_complex().real == pytest.approx(1.0e200, rel=1e-12)


def test_addition_aligns_exponents():
    total = scaled_from(1.0e20) + scaled_from(3.0e18)
    assert total.to_complex().real == pytest.approx(1.03e20, rel=1e-14)
    assert (scaled_from(5.0) - scaled_from(5.0)).is_zero()


def test_scaled_exp_matches_log10():
    value = scaled_exp(1000.0 + 0.5j)
    assert value.log10_abs() == pytest.approx(1000.0 / math.log(10.0), rel=1e-12)
    phase = value.char / abs(value.char)
    assert phase == pytest.approx(complex(math.cos(0.5), math.sin(0.5)), rel=1e-12)


def test_scaled_exp_mpmath_branch():
    with mpmath.workdps(40):
        value = scaled_exp(mpmath.mpc(2, 0))
        assert float(abs(value.to_complex() - mpmath.e ** 2)) < 1e-30


def test_integer_helpers():
    assert double_factorial(7) == 105
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert scaled_double_factorial(9).to_complex().real == pytest.approx(945.0)
    assert scaled_from_int(10 ** 30).log10_abs() == pytest.approx(30.0)
    assert scaled_factorial_ratio(10, 7).to_complex().real == pytest.approx(720.0)
    assert scaled_factorial_ratio(3, 5).to_complex().real == pytest.approx(1.0 / 20.0)


def test_scaled_power_and_sqrt():
    assert scaled_power(2.0, 1000).log10_abs() == pytest.approx(1000 * math.log10(2.0), rel=1e-12)
    assert scaled_power(0.0, 0).to_complex() == pytest.approx(1.0)
    root = scaled_sqrt(scaled_from(-4.0e21))
    assert root.to_complex() == pytest.approx(complex(0.0, 2.0 * math.sqrt(10.0) * 1e10), rel=1e-12)


def test_division_by_zero_scaled():
    with pytest.raises(ZeroDivisionError):
        scaled_from(1.0) / ScaledComplex()


def test_non_finite_values_rejected():
    with pytest.raises(NonFiniteInputError):
        scaled_from(float("nan"))
    with pytest.raises(NonFiniteInputError):
        check_finite(1.0, complex(0.0, math.inf))


def test_running_scale_keeps_values_in_range():
    rs = RunningScale()
    a, b = rs.settle(1.0e150, 3.0e150)
    assert 1.0 <= max(abs(a), abs(b)) < 10.0
    assert rs.emit(b).to_complex().real == pytest.approx(3.0e150, rel=1e-12)


# ---------------------------------------------------------------------------
# 精度上下文 / precision contexts
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "mode, ndec, refine, minacc",
    [("double", 15, 15, 8), ("hybrid", 15, 33, 8), ("extended", 33, 33, 15)],
)
def test_precision_modes(mode, ndec, refine, minacc):
    ctx = PrecisionContext.for_mode(mode, 5 + 1j)
    assert (ctx.ndec, ctx.ndec_refine, ctx.minacc) == (ndec, refine, minacc)


def test_extended_minacc_drops_for_large_imaginary_part():
    assert PrecisionContext.for_mode("extended", 10 + 25j).minacc == 8
    assert PrecisionContext.for_mode("double", 1j, minacc=5).minacc == 5


def test_unknown_mode_rejected():
    with pytest.raises(DomainError):
        PrecisionContext.for_mode("quad")


def test_size_parameter_quadrant():
    assert check_size_parameter(3) == 3 + 0j
    with pytest.raises(DomainError):
        check_size_parameter(-1 + 1j)
    with pytest.raises(DomainError):
        check_size_parameter(1 - 1j)


def test_mp_context_sets_working_precision():
    ctx = PrecisionContext.for_mode("extended")
    with ctx.arith.context():
        third = ctx.arith.one / 3
        assert isinstance(third, mpmath.mpc)
        assert float(abs(third * 3 - 1)) < 1e-32


def test_error_hierarchy():
    for cls in (NonFiniteInputError, DomainError, ConvergenceError, CancellationError):
        assert issubclass(cls, SpheroidalError)
    assert issubclass(DomainError, ValueError)
    err = ConvergenceError("bouwkamp", index=7)
    assert err.index == 7 and "index 7" in str(err)
    skipped = MethodInapplicable("integral", "xi too large")
    assert skipped.method == "integral" and "xi too large" in str(skipped)


# ---------------------------------------------------------------------------
# 抵消损失 / cancellation accounting
# ---------------------------------------------------------------------------

def test_sum_without_cancellation_loses_nothing():
    total, err = sum_with_error([1.0, 2.0, 3.0], 15)
    assert total == 6.0
    assert err.digits_lost == 0.0


def test_sum_with_cancellation_reports_lost_digits():
    _, err = sum_with_error([1.0, -(1.0 - 1.0e-10)], 15)
    assert 9.5 < err.digits_lost < 10.5


def test_exact_cancellation_reports_all_digits():
    _, err = sum_with_error([1.0 + 1.0j, -1.0 - 1.0j], 15)
    assert err.digits_lost == 15.0


def test_loss_measured_per_component():
    # 每个分量以自身之和为基准 / each component is measured against its own sum
    _, err = sum_with_error([1.0 + 1.0e-3j, -(1.0 - 1.0e-6)], 15)
    assert err.digits_lost == pytest.approx(6.0, abs=0.01)
    _, err = sum_with_error([1.0 + 1.0j, -1.0 + 1.0e-8], 15)
    assert err.digits_lost == pytest.approx(8.0, abs=0.01)


@pytest.mark.parametrize("terms, expected", [
    ([1000.0, -999.0], 3.0),
    ([1.0, -1.0 + 1.0e-8], 8.0),
    ([2.0 + 3.0j, 1.0 + 5.0j, 4.0 + 0.5j], 0.0),
])
def test_loss_reference_sums(terms, expected):
    _, err = sum_with_error(terms, 15)
    assert err.digits_lost == pytest.approx(expected, abs=0.01)


def test_subtraction_error_combine_takes_worst():
    assert SubtractionError(2.5).combine(SubtractionError(4.0)).digits_lost == 4.0
    assert SubtractionError(2.5).whole == 3


def test_scaled_series_sum_reports_tail():
    terms = [scaled_from(10.0 ** -k) for k in range(20)]
    result = scaled_series_sum(terms, 15)
    assert result.value.to_complex().real == pytest.approx(1.0 / 0.9 * (1 - 1e-20), rel=1e-14)
    assert result.digits_lost == 0.0
    assert result.tail_digits == pytest.approx(16.0, abs=0.1)
    assert result.largest.to_complex() == pytest.approx(1.0)


def test_scaled_series_sum_huge_terms():
    terms = [scaled_from(1.0, 500), scaled_from(-1.0, 500), scaled_from(1.0, 490)]
    result = scaled_series_sum(terms, 15)
    assert result.value.log10_abs() == pytest.approx(490.0)
    assert result.digits_lost == pytest.approx(10.0, abs=1e-6)


def test_digit_helpers():
    assert clamp_digits(float("nan"), 15) == 0
    assert clamp_digits(math.inf, 15) == 15
    assert clamp_digits(-3.0, 15) == 0
    assert accuracy_from_losses(15, [3.2]) == 10
    assert accuracy_from_losses(15, [0.0], 7) == 7
    assert accuracy_from_losses(15, []) == 14
    assert agreement_digits(1.0, 1.0 + 2.0e-7, 15) == 6
    assert agreement_digits(2.0, 2.0, 15) == 15
