"""
Siberia-Spheroidal - Logging helpers

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

ROOT_LOGGER = "siberiaspheroidal"
TAG = "[Siberia-Spheroidal]"
NO_COLOR_ENV = "SIBERIA_SPHEROIDAL_NO_COLOR"

_MARKS = {
    logging.INFO: "✅",
    logging.WARNING: "⚠️",
    logging.ERROR: "❌",
    logging.CRITICAL: "❌",
}


class SiberiaFormatter(logging.Formatter):
    """
    带项目标签的日志格式 / Formatter with the project tag

    INFO 记录加 ✅，WARNING 加 ⚠️，ERROR 加 ❌。
    """

    def __init__(self, colour: bool = True):
        super().__init__("%(message)s")
        self.colour = colour

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        tag = f"\033[34m{TAG}\033[0m" if self.colour else TAG
        mark = _MARKS.get(record.levelno)
        return f"{tag} {mark} {message}" if mark else f"{tag} {message}"


def colour_enabled(stream=None) -> bool:
    if os.environ.get(NO_COLOR_ENV):
        return False
    stream = stream or sys.stderr
    return bool(getattr(stream, "isatty", lambda: False)())


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """获取包内 logger / Get a logger under the package namespace"""
    if not name or name == ROOT_LOGGER:
        return logging.getLogger(ROOT_LOGGER)
    if name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(verbosity: int = 0, stream=None) -> logging.Logger:
    """
    CLI 使用的日志配置 / Logging setup used by the command line

    Args:
        verbosity: -1 安静，0 默认，1 详细 / -1 quiet, 0 default, 1 verbose
    """
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(SiberiaFormatter(colour=colour_enabled(stream)))
    logger.addHandler(handler)
    level = {-1: logging.ERROR, 0: logging.WARNING}.get(verbosity, logging.DEBUG if verbosity > 1 else logging.INFO)
    logger.setLevel(level)
    logger.propagate = False
    return logger


@dataclass(frozen=True)
class WarningEvent:
    """
    精度警告记录 / Accuracy warning record

    kind: radial_accuracy / duplicate_eigenvalue / normalization_accuracy / method_failure
    """

    kind: str
    m: int
    l: int
    detail: str = ""
    other_l: Optional[int] = None


class WarningCollector:
    """收集警告并同时写日志 / Collect warnings and log them at warning level"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.events: List[WarningEvent] = []
        self.logger = logger or get_logger("warnings")

    def add(self, event: WarningEvent) -> None:
        self.events.append(event)
        self.logger.warning("%s m=%d l=%d %s", event.kind, event.m, event.l, event.detail)

    def extend(self, events) -> None:
        for event in events:
            self.add(event)

    def __iter__(self):
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)
