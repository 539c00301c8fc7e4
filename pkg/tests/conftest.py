"""
Siberia-Spheroidal - Shared test fixtures

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import pytest

from siberiaspheroidal.core.precision import PrecisionContext
from siberiaspheroidal.utils.logger import WarningCollector


@pytest.fixture
def ctx():
    return PrecisionContext.for_mode("double")


@pytest.fixture
def ext_ctx():
    return PrecisionContext.for_mode("extended")


@pytest.fixture
def warnings():
    return WarningCollector()
