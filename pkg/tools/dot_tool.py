from typing import Optional

import graphviz
from pydantic import Field, InstanceOf

from core.cycles import ExcCycle
from tools.base import Tool, ToolInput, ToolOutput
from tools.canres_tool import CanResBundle
from utils.logger import log_operation


class DotInput(ToolInput):
    """DOT 导出的输入"""
    bundle: InstanceOf[CanResBundle] = Field(description="canres 阶段的产物")
    fiber: Optional[InstanceOf[ExcCycle]] = Field(default=None, description="纤维圈，给出时写进对偶图的标题")


def enriques_graph(bundle: CanResBundle) -> graphviz.Digraph:
    """加权 Enriques 有向图：顶点 "q_i: μ_i"，分歧点画双圈，边为邻近关系"""
    w, data = bundle.weighted, bundle.data
    graph = graphviz.Digraph(name="enriques")
    graph.attr("node", shape="circle")
    for i in range(1, w.n + 1):
        shape = "doublecircle" if data.epsilon[i - 1] == 1 else "circle"
        graph.node(f"q{i}", label=f"q{i}: {data.mu[i - 1]}", shape=shape)
    for j, i in sorted(w.digraph.prox):
        graph.edge(f"q{j}", f"q{i}")
    return graph


def dual_graph(bundle: CanResBundle, fiber: Optional[ExcCycle] = None) -> graphviz.Graph:
    """例外分量的对偶图：顶点 "F_i: F², p_a"，边数等于相交数"""
    data, lattice = bundle.data, bundle.lattice
    graph = graphviz.Graph(name="dual")
    graph.attr("node", shape="box")
    if fiber is not None:
        graph.attr(label="F = " + " + ".join(f"{c}F{i}" for i, c in zip(fiber.support, fiber.coeffs) if c))
    for record in data.curves:
        square = f"{record.halves[0]},{record.halves[1]}" if record.halves else str(record.F_sq)
        graph.node(f"F{record.index}", label=f"F{record.index}: {square}, {record.pa_F}")
    for i in range(1, data.n + 1):
        for j in range(i + 1, data.n + 1):
            weight = (2 - data.epsilon[i - 1] - data.epsilon[j - 1]) * lattice.s(i, j)
            for _ in range(weight):
                graph.edge(f"F{i}", f"F{j}")
    return graph


class DotExportTool(Tool):
    """DOT 导出工具

    输出两张图的 DOT 文本，只含报告里已有的数据。
    """

    name = "dot"
    description = "导出加权 Enriques 有向图与对偶图的 DOT 文本"
    input_schema = DotInput

    def _execute_impl(self, input_data: DotInput) -> ToolOutput:
        source = enriques_graph(input_data.bundle).source + dual_graph(input_data.bundle, input_data.fiber).source
        log_operation("export", format="dot", n=input_data.bundle.weighted.n)
        return ToolOutput.success_result(data=source, message="DOT 已生成")
