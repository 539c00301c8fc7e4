"""
Siberia-Spheroidal - Oblate spheroidal wave functions for complex size parameter

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .__version__ import __version__
from .core.errors import (
    CancellationError,
    ConvergenceError,
    DomainError,
    MethodInapplicable,
    NonFiniteInputError,
    SpheroidalError,
)
from .core.precision import PRECISION_MODES, PrecisionContext
from .core.scaled import ScaledComplex
from .angular.functions import AngularResult, angular_s1
from .eigen.spectrum import EigenRecord, eigenvalue_spectrum
from .radial.results import R1Fragment, RadialResult
from .radial.selector import SelectionOptions, select_radial
from .solver import SiberiaOblateSolver
from .figures import FIGURE_KINDS, FigureSweep, emit_figure_data

__all__ = [
    '__version__',
    'CancellationError',
    'ConvergenceError',
    'DomainError',
    'MethodInapplicable',
    'NonFiniteInputError',
    'SpheroidalError',
    'PRECISION_MODES',
    'PrecisionContext',
    'ScaledComplex',
    'AngularResult',
    'angular_s1',
    'EigenRecord',
    'eigenvalue_spectrum',
    'R1Fragment',
    'RadialResult',
    'SelectionOptions',
    'select_radial',
    'SiberiaOblateSolver',
    'FIGURE_KINDS',
    'FigureSweep',
    'emit_figure_data',
]
