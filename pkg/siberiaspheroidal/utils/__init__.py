"""
Siberia-Spheroidal - Utility module: logging, digit helpers and table output

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from .logger import (
    SiberiaFormatter,
    WarningCollector,
    WarningEvent,
    configure_logging,
    get_logger,
)
from .utils import accuracy_from_losses, agreement_digits, clamp_digits
from .display import SiberiaTableWriter

__all__ = [
    'SiberiaFormatter',
    'WarningCollector',
    'WarningEvent',
    'configure_logging',
    'get_logger',
    'accuracy_from_losses',
    'agreement_digits',
    'clamp_digits',
    'SiberiaTableWriter',
]
