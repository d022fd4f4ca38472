"""
运行配置

默认值可以被 TOML 配置文件（[resdouble] 段）和环境变量依次覆盖。
"""
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import toml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from core.errors import InputError
from utils.logger import logger


ENV_OVERRIDES = {
    "RESDOUBLE_MAX_BLOWUPS": "max_blowups",
    "RESDOUBLE_SELFTEST_INSTANCES": "selftest_instances",
    "RESDOUBLE_SEED": "seed",
}


class ResolutionConfig(BaseModel):
    """消解流程配置"""
    max_blowups: int = Field(default=64, ge=1, description="平面曲线消解的爆破次数上限")
    satellite_probability: float = Field(default=0.3, ge=0.0, le=1.0, description="随机有向图中卫星点的概率")
    pluri_max: int = Field(default=3, ge=1, description="多重典范条件计算到的最大 m")
    selftest_instances: int = Field(default=1000, ge=1, description="自检随机实例数")
    selftest_max_n: int = Field(default=12, ge=1, description="随机实例的最大点数")
    selftest_workers: int = Field(default=4, ge=1, description="自检线程数")
    seed: int = Field(default=20240229, description="随机种子")
    poly_probability: float = Field(default=0.5, ge=0.0, le=1.0, description="自检中用随机多项式生成实例的比例")

    model_config = ConfigDict(extra="forbid")


def load_config(path: Optional[Union[str, Path]] = None, env: Optional[Dict[str, str]] = None) -> ResolutionConfig:
    """加载配置

    Args:
        path: 可选的 TOML 文件路径
        env: 环境变量映射，默认 os.environ

    Returns:
        ResolutionConfig 实例
    """
    values: Dict[str, Any] = {}

    if path is not None:
        try:
            data = toml.load(str(path))
        except (OSError, toml.TomlDecodeError) as e:
            raise InputError(f"无法读取配置文件 {path}: {e}") from e
        values.update(data.get("resdouble", {}))
        logger.debug(f"已加载配置文件 {path}")

    env = os.environ if env is None else env
    for var, key in ENV_OVERRIDES.items():
        raw = env.get(var)
        if raw is None or raw == "":
            continue
        try:
            values[key] = int(raw)
        except ValueError as e:
            raise InputError(f"环境变量 {var} 不是整数: {raw}") from e

    try:
        return ResolutionConfig(**values)
    except ValidationError as e:
        raise InputError(f"配置无效: {e}") from e


__all__ = ["ResolutionConfig", "load_config", "ENV_OVERRIDES"]
