"""
Siberia-Spheroidal - Configuration manager for run settings

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from .utils.logger import get_logger

logger = get_logger(__name__)

OUTPUT_DIR_ENV = "SIBERIA_SPHEROIDAL_OUT"


class manager:
    """
    配置读取管理器 / Configuration Read Manager
    负责读取精度、阈值与输出目录配置 / Handles precision, threshold and output settings
    """

    def __init__(self, config_file: Optional[Union[str, Path]] = None):
        # 配置文件路径 / Configuration file path
        self.config_dir = Path(__file__).parent.parent
        self.config_file = Path(config_file) if config_file is not None else self.config_dir / "config.yaml"
        self.default_config = {
            "precision": {
                "mode": "double",
                "minacc": None,
                "warn_digits": 6,
            },
            "output": {
                "directory": "siberia_output",
                "diagnostics": True,
            },
            "thresholds": {
                "prolate_factor": 1.0e-2,
                "use_integral": True,
                "use_legendre": True,
                "use_baber_hasse": False,
            },
        }

    def _merged(self, loaded: Any) -> Dict:
        config = copy.deepcopy(self.default_config)
        if not isinstance(loaded, dict):
            return config
        for section, values in loaded.items():
            if isinstance(values, dict) and isinstance(config.get(section), dict):
                config[section].update(values)
            else:
                config[section] = values
        return config

    def load_config(self, path: Optional[Union[str, Path]] = None) -> Dict:
        """加载YAML配置文件 / Load YAML configuration file"""
        target = Path(path) if path is not None else self.config_file
        try:
            if target.exists():
                with open(target, 'r', encoding='utf-8') as f:
                    config = yaml.safe_load(f)

                # 确保配置结构完整 / Ensure configuration structure is complete
                return self._merged(config)
            else:
                # 如果配置文件不存在，返回默认配置 / Return default config if file doesn't exist
                return copy.deepcopy(self.default_config)
        except (OSError, yaml.YAMLError) as e:
            logger.warning("配置文件加载失败，使用默认配置 / Failed to load config, using default: %s", e)
            return copy.deepcopy(self.default_config)

    def load_run_file(self, path: Union[str, Path]) -> Dict[str, Any]:
        """
        读取运行参数文件 / Read a run file

        接受 YAML 映射或 key=value 行；# 之后为注释。
        Accepts a YAML mapping or key=value lines, with # comments.

        Raises:
            OSError: 文件不可读 / the file cannot be read
            ValueError: 格式无法解析 / neither format parses
        """
        text = Path(path).read_text(encoding='utf-8')
        try:
            loaded = yaml.safe_load(text)
        except yaml.YAMLError:
            loaded = None
        if isinstance(loaded, dict):
            return {str(k).replace('-', '_'): v for k, v in loaded.items()}

        values: Dict[str, Any] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ValueError(f"{path}:{number}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split('=', 1))
            values[key.replace('-', '_')] = yaml.safe_load(value) if value else None
        return values

    def get_precision_mode(self) -> str:
        """获取精度模式 / Get precision mode"""
        return str(self.load_config()["precision"].get("mode", "double"))

    def get_minacc(self) -> Optional[int]:
        value = self.load_config()["precision"].get("minacc")
        return None if value is None else int(value)

    def get_warn_digits(self) -> int:
        return int(self.load_config()["precision"].get("warn_digits", 6))

    def get_output_dir(self) -> Path:
        """获取输出目录，环境变量优先 / Output directory, the environment variable wins"""
        env = os.environ.get(OUTPUT_DIR_ENV)
        if env:
            return Path(env)
        return Path(self.load_config()["output"].get("directory", "siberia_output"))

    def get_diagnostics(self) -> bool:
        return bool(self.load_config()["output"].get("diagnostics", True))

    def get_thresholds(self) -> Dict[str, Any]:
        """获取方法开关与阈值 / Get method switches and thresholds"""
        return dict(self.load_config()["thresholds"])
