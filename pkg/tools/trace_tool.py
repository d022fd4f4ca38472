from pydantic import Field

from core.canres import WeightedDigraph
from planecurve.poly import parse_poly
from planecurve.resolution import canonical_resolution_trace
from tools.base import Tool, ToolInput, ToolOutput


class TraceInput(ToolInput):
    """消解轨迹的输入"""
    poly: str = Field(description="x, y 的多项式表达式", min_length=1)
    max_blowups: int = Field(default=64, ge=1, description="爆破次数上限")


class TraceTool(Tool):
    """平面曲线消解工具

    解析多项式，反复爆破总分歧轨迹的奇点，输出典范消解的加权 Enriques 有向图。
    """

    name = "trace"
    description = "从平面曲线芽得到典范消解的加权 Enriques 有向图"
    input_schema = TraceInput

    def _execute_impl(self, input_data: TraceInput) -> ToolOutput:
        f = parse_poly(input_data.poly)
        weighted: WeightedDigraph = canonical_resolution_trace(f, max_blowups=input_data.max_blowups)
        return ToolOutput.success_result(
            data=weighted,
            message=f"爆破 {weighted.n} 次",
            n=weighted.n,
        )
