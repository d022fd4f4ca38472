from dataclasses import dataclass
from typing import List

from pydantic import Field, InstanceOf

from core.canres import CanResData, SplitStatus, WeightedDigraph, check_complete, derive_vectors, with_curves
from core.lattice import ResolutionLattice, matrices
from tools.base import Tool, ToolInput, ToolOutput


@dataclass(frozen=True)
class CanResBundle:
    """canres 阶段的产物：格与全部向量"""
    weighted: WeightedDigraph
    lattice: ResolutionLattice
    data: CanResData


class CanResInput(ToolInput):
    """典范消解数据的输入"""
    weighted: InstanceOf[WeightedDigraph] = Field(description="完整的加权有向图")


class CanResTool(Tool):
    """典范消解数据工具

    检查完整性，计算 N、M、S 以及 μ、ε、α、β、β̃、γ̃、γ 和每条曲线的记录。
    分裂状态无法判定时返回警告结果。
    """

    name = "canres"
    description = "计算消解格和典范消解的全部向量"
    input_schema = CanResInput

    def _execute_impl(self, input_data: CanResInput) -> ToolOutput:
        weighted = input_data.weighted
        data = derive_vectors(weighted)
        lattice = matrices(weighted.digraph)
        data = with_curves(weighted, data, lattice)
        bundle = CanResBundle(weighted, lattice, data)

        undetermined = [c.index for c in data.curves if c.split is SplitStatus.UNDETERMINED]
        if undetermined:
            return ToolOutput.warning_result(
                data=bundle,
                message=f"缺少 Γ̃ 数据，曲线 {undetermined} 的分裂状态无法判定",
                undetermined=undetermined,
            )
        return ToolOutput.success_result(data=bundle, message=f"n={weighted.n}")


class CheckInput(ToolInput):
    """完整性检查的输入"""
    weighted: InstanceOf[WeightedDigraph] = Field(description="待检查的加权有向图")


class CheckTool(Tool):
    """完整性检查工具：只做有向图校验和完整性检查，返回诊断列表"""

    name = "check"
    description = "校验有向图并检查是否为完整的典范消解"
    input_schema = CheckInput

    def _execute_impl(self, input_data: CheckInput) -> ToolOutput:
        problems: List = check_complete(input_data.weighted)
        if problems:
            return ToolOutput.error_result(
                f"发现 {len(problems)} 个问题",
                exit_code=4,
                diagnostics=[p.to_dict() for p in problems],
            )
        return ToolOutput.success_result(data=[], message="完整")
