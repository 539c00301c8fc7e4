"""
Siberia-Spheroidal - Angular functions

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .functions import AngularResult, angular_s1, eta_from_theta

__all__ = [
    'AngularResult',
    'angular_s1',
    'eta_from_theta',
]
