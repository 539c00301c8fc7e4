"""
Siberia-Spheroidal - Exception hierarchy

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from typing import Any, Optional


class SpheroidalError(Exception):
    """所有计算错误的基类 / Base class of every error raised by the package"""


class NonFiniteInputError(SpheroidalError, ValueError):
    """输入包含 NaN 或 inf / Input contains NaN or inf"""


class DomainError(SpheroidalError, ValueError):
    """参数超出定义域 / Argument outside the supported domain"""


class ConvergenceError(SpheroidalError, ArithmeticError):
    """
    迭代超过上限 / Iteration cap exceeded

    Attributes:
        index: 未收敛的位置 / position that failed to converge
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


class CancellationError(SpheroidalError, ArithmeticError):
    """
    求和完全抵消 / Total cancellation in a series

    Attributes:
        ledger: 损失记录 / digit-loss ledger at the point of failure
    """

    def __init__(self, message: str, ledger: Any = None):
        super().__init__(message)
        self.ledger = ledger


class MethodInapplicable(SpheroidalError):
    """某个径向方法不适用于当前参数 / A radial method cannot run for these parameters"""

    def __init__(self, method: str, reason: str):
        super().__init__(f"{method}: {reason}")
        self.method = method
        self.reason = reason
