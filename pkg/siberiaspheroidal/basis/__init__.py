"""
Siberia-Spheroidal - Basis functions (Legendre, spherical Bessel/Neumann)

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .legendre import (
    RatioTable,
    legendre_p,
    legendre_p_zero,
    legendre_p_imag,
    legendre_q_imag,
    p_imag_table,
    q_imag_table,
    legendre_q0_closed,
)
from .bessel import sph_bessel_j, sph_neumann_y, sph_functions

__all__ = [
    'RatioTable',
    'legendre_p',
    'legendre_p_zero',
    'legendre_p_imag',
    'legendre_q_imag',
    'p_imag_table',
    'q_imag_table',
    'legendre_q0_closed',
    'sph_bessel_j',
    'sph_neumann_y',
    'sph_functions',
]
