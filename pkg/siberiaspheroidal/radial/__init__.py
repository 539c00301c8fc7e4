"""
Siberia-Spheroidal - Radial functions of the first and second kind

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .results import METHODS, R1Fragment, R2Candidate, RadialResult
from .eta_sum import EtaSum, radial_eta_sum
from .r1_search import R1SearchState, r1_search
from .wronskian import (
    WronskianPair,
    near_equality_digits,
    pairing_downgrade,
    theoretical_wronskian,
    wronskian_accuracy,
    wronskian_digits,
)
from .pairing import pairing_partner, r2_pairing
from .near_equality import r2_near_equality
from .legendre_expr import LegendreOutcome, r2_legendre
from .baber_hasse import BaberHasseOutcome, r2_baber_hasse
from .integral import IntegralOutcome, IntegralTables, QuadratureRule, integral_tables, quadrature_rule, r2_integral
from .xi_zero import XiZeroOutcome, r2_xi_zero
from .selector import SelectionOptions, select_radial

__all__ = [
    'METHODS',
    'R1Fragment',
    'R2Candidate',
    'RadialResult',
    'EtaSum',
    'radial_eta_sum',
    'R1SearchState',
    'r1_search',
    'WronskianPair',
    'near_equality_digits',
    'pairing_downgrade',
    'theoretical_wronskian',
    'wronskian_accuracy',
    'wronskian_digits',
    'pairing_partner',
    'r2_pairing',
    'r2_near_equality',
    'LegendreOutcome',
    'r2_legendre',
    'BaberHasseOutcome',
    'r2_baber_hasse',
    'IntegralOutcome',
    'IntegralTables',
    'QuadratureRule',
    'integral_tables',
    'quadrature_rule',
    'r2_integral',
    'XiZeroOutcome',
    'r2_xi_zero',
    'SelectionOptions',
    'select_radial',
]
