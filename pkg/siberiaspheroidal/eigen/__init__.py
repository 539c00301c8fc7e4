"""
Siberia-Spheroidal - Eigenvalues λ_{ml}(-ic)

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .recurrence import alpha, beta, gamma, coefficients
from .matrix import (
    TridiagonalSystem,
    breakpoint,
    build_matrix,
    matrix_size,
    prolate_asymptotic,
    dense_eigenvalues,
)
from .tridiag import eigen_tridiag
from .bouwkamp import BouwkampOutcome, bouwkamp_iterate, bouwkamp_refine
from .spectrum import EigenRecord, eigenvalue_spectrum, order_matrix_estimates, prolate_threshold

__all__ = [
    'alpha',
    'beta',
    'gamma',
    'coefficients',
    'TridiagonalSystem',
    'breakpoint',
    'build_matrix',
    'matrix_size',
    'prolate_asymptotic',
    'dense_eigenvalues',
    'eigen_tridiag',
    'BouwkampOutcome',
    'bouwkamp_iterate',
    'bouwkamp_refine',
    'EigenRecord',
    'eigenvalue_spectrum',
    'order_matrix_estimates',
    'prolate_threshold',
]
