from pydantic import Field, InstanceOf

from core.cycles import CyclesResult, compute_cycles
from core.minres import contract
from tools.base import Tool, ToolInput, ToolOutput
from tools.canres_tool import CanResBundle


class CyclesInput(ToolInput):
    """纤维圈与基本圈的输入"""
    bundle: InstanceOf[CanResBundle] = Field(description="canres 阶段的产物")


class CyclesTool(Tool):
    """纤维圈与基本圈工具"""

    name = "cycles"
    description = "计算纤维圈 F、基本圈 Z 并与归纳算法交叉验证"
    input_schema = CyclesInput

    def _execute_impl(self, input_data: CyclesInput) -> ToolOutput:
        b = input_data.bundle
        result = compute_cycles(b.weighted, b.data, b.lattice)
        if result.oracle_skipped:
            return ToolOutput.warning_result(data=result, message=f"归纳算法已跳过: {result.oracle_skipped}")
        return ToolOutput.success_result(data=result, message=f"witness={result.witness}")


class MinResInput(ToolInput):
    """极小消解的输入"""
    bundle: InstanceOf[CanResBundle] = Field(description="canres 阶段的产物")
    cycles: InstanceOf[CyclesResult] = Field(description="cycles 阶段的产物")


class MinResTool(Tool):
    """极小消解工具：收缩全部 (−1)-曲线"""

    name = "minres"
    description = "收缩 (−1)-曲线得到极小消解上的格与圈"
    input_schema = MinResInput

    def _execute_impl(self, input_data: MinResInput) -> ToolOutput:
        b = input_data.bundle
        result = contract(b.weighted, b.data, b.lattice, input_data.cycles.fiber, input_data.cycles.fundamental)
        return ToolOutput.success_result(data=result, message=f"收缩 {list(result.contracted)}")
