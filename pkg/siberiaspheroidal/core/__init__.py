"""
Siberia-Spheroidal - Numeric core: precision, scaled numbers, loss accounting

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .errors import (
    SpheroidalError,
    NonFiniteInputError,
    DomainError,
    ConvergenceError,
    CancellationError,
    MethodInapplicable,
)
from .precision import PrecisionContext, SiberiaArithmetic, PRECISION_MODES, check_finite
from .scaled import ScaledComplex, scaled_from, scaled_exp, scaled_factorial_ratio
from .subtraction import SubtractionError, SeriesSum, sum_with_error, scaled_series_sum

__all__ = [
    'SpheroidalError',
    'NonFiniteInputError',
    'DomainError',
    'ConvergenceError',
    'CancellationError',
    'MethodInapplicable',
    'PrecisionContext',
    'SiberiaArithmetic',
    'PRECISION_MODES',
    'check_finite',
    'ScaledComplex',
    'scaled_from',
    'scaled_exp',
    'scaled_factorial_ratio',
    'SubtractionError',
    'SeriesSum',
    'sum_with_error',
    'scaled_series_sum',
]
