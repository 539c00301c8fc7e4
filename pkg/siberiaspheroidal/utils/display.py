"""
Siberia-Spheroidal - Table and JSON formatting for run outputs

可以格式化任意类型的数据，包括缩放复数、数字、列表、字典等。
Formats any value for the output tables, including scaled complex numbers,
numbers, lists and dicts.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import json
import math
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Union

import mpmath

from ..core.scaled import ScaledComplex, is_mp


class SiberiaTableWriter:
    """
    通用表格输出 - 可以写出任何类型的数据
    Table Writer - Write any type of data as delimiter-separated text

    功能特性 / Features:
    - 缩放复数拆为特征与指数列 / Scaled values split into characteristic and exponent columns
    - 自动格式化显示 / Auto-format values
    - 复杂类型转为JSON / Nested data as JSON
    - 固定格式保证重复运行字节一致 / Fixed formats keep repeated runs byte-identical
    """

    def __init__(self, delimiter: str = "\t", digits: int = 16):
        self.delimiter = delimiter
        self.digits = digits

    def format_real(self, value: Any) -> str:
        """实数的定宽表示 / Fixed-format real"""
        if is_mp(value):
            return mpmath.nstr(value, self.digits, min_fixed=1, max_fixed=0, strip_zeros=False)
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return f"{value:.{self.digits - 1}e}"

    def scaled_columns(self, value: ScaledComplex) -> List[str]:
        """(char_re, char_im, exp10)"""
        return [self.format_real(value.char_re), self.format_real(value.char_im), str(value.exp10)]

    def convert_single_value(self, value: Any) -> Union[str, List[str]]:
        """
        转换单个值为可显示格式
        Convert single value to displayable format

        Args:
            value: 要转换的值 / Value to convert

        Returns:
            字符串，缩放复数返回三列 / a string, or three columns for a scaled value
        """
        try:
            # 字符串直接返回
            if isinstance(value, str):
                return value

            if value is None:
                return ""

            if isinstance(value, ScaledComplex):
                return self.scaled_columns(value)

            # 布尔与整数转为字符串
            if isinstance(value, (bool, int)):
                return str(value)

            if isinstance(value, float) or (is_mp(value) and not isinstance(value, mpmath.mpc)):
                return self.format_real(value)

            if isinstance(value, (complex, mpmath.mpc)):
                return [self.format_real(value.real), self.format_real(value.imag)]

            # 复杂类型尝试JSON序列化
            return self.serialize_to_json(value)

        except (TypeError, ValueError):
            # 转换失败时使用字符串表示
            return str(value)

    def serialize_to_json(self, value: Any) -> str:
        """
        将值序列化为JSON字符串
        Serialize value to JSON string
        """
        try:
            return json.dumps(value, ensure_ascii=False, sort_keys=True, default=str)
        except (TypeError, ValueError):
            return str(value)

    def row(self, values: Iterable[Any]) -> str:
        cells: List[str] = []
        for value in values:
            converted = self.convert_single_value(value)
            if isinstance(converted, list):
                cells.extend(converted)
            else:
                cells.append(converted)
        return self.delimiter.join(cells)

    def write(self, path: Union[str, Path], header: Sequence[str], rows: Iterable[Iterable[Any]]) -> Path:
        """写出带表头的表格 / Write a table with a header line"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [self.delimiter.join(header)]
        lines.extend(self.row(r) for r in rows)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
