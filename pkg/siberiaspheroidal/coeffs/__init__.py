"""
Siberia-Spheroidal - Expansion coefficients, normalization and the joining factor

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .ratios import CoeffSet, coefficient_horizon, d_ratios, extend_coeffs
from .negative import NegativeBranch, RhoBranch, d_negative, d_rho, with_branches
from .normalization import (
    SCHEMES,
    NormalizationResult,
    flammer_sum,
    morse_feshbach_sum,
    ms_sum,
    normalize,
)
from .joining import JoiningFactor, LegendreSeries, joining_factor, legendre_series, r1_at_zero

__all__ = [
    'CoeffSet',
    'coefficient_horizon',
    'd_ratios',
    'extend_coeffs',
    'NegativeBranch',
    'RhoBranch',
    'd_negative',
    'd_rho',
    'with_branches',
    'SCHEMES',
    'NormalizationResult',
    'flammer_sum',
    'morse_feshbach_sum',
    'ms_sum',
    'normalize',
    'JoiningFactor',
    'LegendreSeries',
    'joining_factor',
    'legendre_series',
    'r1_at_zero',
]
