"""
加权有向图的 JSON 读写

输入先用 jsonschema 按 docs/digraph.schema.json 校验，再构造 WeightedDigraph。
"alpha_tilde" 与 "mu" 恰好给出一个。
"""
import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema

from core.canres import WeightedDigraph, alpha_tilde_from_mu
from core.errors import DigraphError
from core.gamma import GammaData
from core.lattice import EnriquesDigraph, ensure_valid

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs"


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    """读取 docs/ 下的 JSON schema"""
    with open(SCHEMA_DIR / name, "r", encoding="utf-8") as f:
        return json.load(f)


def digraph_from_json(data: Any, validate: bool = True) -> WeightedDigraph:
    """由已解析的 JSON 对象构造加权有向图

    Args:
        data: JSON 对象
        validate: 是否要求有向图满足 Enriques 规则（check 命令关闭它，改为输出诊断）

    Raises:
        DigraphError: schema 不符、权重键缺失或重复、有向图非法
    """
    try:
        jsonschema.validate(instance=data, schema=load_schema("digraph.schema.json"))
    except jsonschema.ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise DigraphError(f"JSON 结构不符合 schema ({location}): {e.message}")

    has_alpha, has_mu = "alpha_tilde" in data, "mu" in data
    if has_alpha == has_mu:
        raise DigraphError('"alpha_tilde" 与 "mu" 必须恰好给出一个')

    digraph = EnriquesDigraph.from_dict(data)
    if validate:
        ensure_valid(digraph)
    alpha = tuple(data["alpha_tilde"]) if has_alpha else alpha_tilde_from_mu(digraph, data["mu"])

    try:
        gamma = GammaData.from_list(data.get("gamma_points"))
    except ValueError as e:
        raise DigraphError(f"gamma_points 非法: {e}")
    return WeightedDigraph(digraph, alpha, gamma)


def load_digraph(path: Union[str, Path], validate: bool = True) -> WeightedDigraph:
    """从文件读取加权有向图；文件不可读或不是 JSON 时抛出 DigraphError"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise DigraphError(f"无法读取有向图文件 {path}: {e}")
    except json.JSONDecodeError as e:
        raise DigraphError(f"有向图文件 {path} 不是合法的 JSON: 第 {e.lineno} 行第 {e.colno} 列 {e.msg}")
    return digraph_from_json(data, validate=validate)


def digraph_to_json(w: WeightedDigraph) -> Dict[str, Any]:
    """规范化的 JSON 表示"""
    return w.to_dict()


def dumps(data: Any) -> str:
    """报告统一的 JSON 文本格式"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


__all__ = ["load_schema", "digraph_from_json", "load_digraph", "digraph_to_json", "dumps"]
