"""
Siberia-Spheroidal - Version information

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

__version__ = "1.0.0"
__title__ = "Siberia-Spheroidal"
__description__ = "Oblate spheroidal radial and angular functions for complex size parameter"
__author__ = "siberiah0h"
__email__ = "siberiah0h@gmail.com"
__license__ = "MIT"
