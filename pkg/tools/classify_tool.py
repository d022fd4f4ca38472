from typing import Dict

from pydantic import Field, InstanceOf

from core.adjoint import adjoint_report
from core.classify import classify
from core.cycles import CyclesResult
from tools.base import Tool, ToolInput, ToolOutput
from tools.canres_tool import CanResBundle


class ClassifyInput(ToolInput):
    """分类的输入"""
    bundle: InstanceOf[CanResBundle] = Field(description="canres 阶段的产物")
    cycles: InstanceOf[CyclesResult] = Field(description="cycles 阶段的产物")


class ClassifyTool(Tool):
    """结构分类工具：F > Z 判据、缺陷点、ADE 类型"""

    name = "classify"
    description = "判定 F > Z、缺陷点及其层级、有理二重点类型"
    input_schema = ClassifyInput

    def _execute_impl(self, input_data: ClassifyInput) -> ToolOutput:
        b = input_data.bundle
        result = classify(b.weighted, b.data, b.lattice, input_data.cycles)
        return ToolOutput.success_result(data=result, message=f"gap={result.gap}, rdp={result.rdp}")


class AdjointInput(ToolInput):
    """伴随条件的输入"""
    bundle: InstanceOf[CanResBundle] = Field(description="canres 阶段的产物")
    defective: Dict[int, int] = Field(description="缺陷点 → 层级")
    pluri_max: int = Field(default=3, ge=1, description="多重典范的最大 m")


class AdjointTool(Tool):
    """伴随条件工具：c、多重典范条件数和固定部分"""

    name = "adjoint"
    description = "计算伴随条件数与伴随线性系统的固定部分"
    input_schema = AdjointInput

    def _execute_impl(self, input_data: AdjointInput) -> ToolOutput:
        b = input_data.bundle
        report = adjoint_report(b.weighted, b.data, b.lattice, input_data.defective, pluri_max=input_data.pluri_max)
        return ToolOutput.success_result(data=report, message=f"c={report.c}, d={report.d}")
