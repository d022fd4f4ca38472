from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from core.adjoint import AdjointReport
from core.canres import WeightedDigraph
from core.classify import Classification
from core.cycles import CyclesResult
from core.digraph_io import load_digraph
from core.errors import ResDoubleError
from core.minres import ContractionResult
from tools.base import Tool, ToolOutput, ToolStatus
from tools.canres_tool import CanResBundle, CanResTool, CheckTool
from tools.classify_tool import AdjointTool, ClassifyTool
from tools.cycles_tool import CyclesTool, MinResTool
from tools.dot_tool import DotExportTool
from tools.selftest_tool import SelfTestSummary, SelfTestTool
from tools.trace_tool import TraceTool
from utils.config import ResolutionConfig
from utils.logger import logger


class PipelineError(ResDoubleError):
    """某个阶段失败，记录阶段名和退出码"""

    def __init__(
        self,
        stage: str,
        message: str,
        exit_code: int = 1,
        diagnostics: Optional[List[Dict[str, Any]]] = None,
        summary: Optional[Dict[str, Any]] = None,
    ):
        self.stage = stage
        self.exit_code = exit_code
        self.diagnostics = list(diagnostics or [])
        self.summary = summary
        super().__init__(f"[{stage}] {message}")


@dataclass
class PipelineResult:
    """一次完整流水线的各阶段产物"""
    input_echo: Dict[str, str]
    bundle: CanResBundle
    cycles: CyclesResult
    minres: ContractionResult
    classification: Classification
    adjoint: AdjointReport
    warnings: List[str] = field(default_factory=list)

    def report(self) -> Dict[str, Any]:
        """报告字典，键顺序固定"""
        vectors = self.bundle.data.to_dict()
        curves = vectors.pop("curves")
        return {
            "input": dict(self.input_echo),
            "digraph": self.bundle.weighted.to_dict(),
            "vectors": vectors,
            "lattice": self.bundle.lattice.to_dict(),
            "curves": curves,
            "cycles": self.cycles.to_dict(),
            "minres": self.minres.to_dict(),
            "classification": self.classification.to_dict(),
            "adjoint": self.adjoint.to_dict(),
            "warnings": list(self.warnings),
        }


class ResolutionAgent:
    """消解流水线

    固定工作流：（多项式时先做消解轨迹）canres → cycles → minres → classify → adjoint。
    每一步都是一个 Tool，失败结果转换为 PipelineError。
    """

    def __init__(self, config: Optional[ResolutionConfig] = None):
        self.config = config or ResolutionConfig()
        self.tools = self._register_tools()
        logger.debug(f"ResolutionAgent initialized with {len(self.tools)} tools")

    def _register_tools(self) -> Dict[str, Tool]:
        return {
            "trace": TraceTool(),
            "check": CheckTool(),
            "canres": CanResTool(),
            "cycles": CyclesTool(),
            "minres": MinResTool(),
            "classify": ClassifyTool(),
            "adjoint": AdjointTool(),
            "dot": DotExportTool(),
            "selftest": SelfTestTool(),
        }

    def _run(self, name: str, warnings: Optional[List[str]] = None, **kwargs: Any) -> Any:
        """执行一个阶段，失败时抛出 PipelineError"""
        tool = self.tools[name]
        result: ToolOutput = tool.execute(tool.input_schema(**kwargs))
        if not result.success:
            raise PipelineError(name, result.message, result.exit_code, result.metadata.get("diagnostics"))
        if result.status is ToolStatus.WARNING and warnings is not None:
            warnings.append(f"{name}: {result.message}")
        return result.data

    def load(self, poly: Optional[str] = None, digraph: Optional[Union[str, Path]] = None) -> WeightedDigraph:
        """从多项式或有向图文件得到加权有向图"""
        if (poly is None) == (digraph is None):
            raise PipelineError("input", "必须恰好给出 --poly 或 --digraph 之一", exit_code=2)
        if poly is not None:
            logger.info("步骤1: 平面曲线消解")
            return self._run("trace", poly=poly, max_blowups=self.config.max_blowups)
        logger.info("步骤1: 读取加权有向图")
        try:
            return load_digraph(digraph)
        except ResDoubleError as e:
            raise PipelineError("input", str(e), e.exit_code, [d.to_dict() for d in getattr(e, "diagnostics", [])])

    def run_pipeline(
        self,
        weighted: WeightedDigraph,
        pluri_max: Optional[int] = None,
        input_echo: Optional[Dict[str, str]] = None,
    ) -> PipelineResult:
        """对加权有向图运行全部阶段"""
        pluri_max = pluri_max or self.config.pluri_max
        warnings: List[str] = []

        logger.info("步骤2: 典范消解数据")
        bundle = self._run("canres", warnings, weighted=weighted)

        logger.info("步骤3: 纤维圈与基本圈")
        cycles = self._run("cycles", warnings, bundle=bundle)

        logger.info("步骤4: 极小消解")
        minres = self._run("minres", warnings, bundle=bundle, cycles=cycles)

        logger.info("步骤5: 结构分类")
        classification = self._run("classify", warnings, bundle=bundle, cycles=cycles)

        logger.info("步骤6: 伴随条件")
        adjoint = self._run(
            "adjoint", warnings, bundle=bundle, defective=classification.defective, pluri_max=pluri_max
        )

        return PipelineResult(
            input_echo=input_echo or {"source": "digraph"},
            bundle=bundle,
            cycles=cycles,
            minres=minres,
            classification=classification,
            adjoint=adjoint,
            warnings=warnings,
        )

    def resolve(
        self,
        poly: Optional[str] = None,
        digraph: Optional[Union[str, Path]] = None,
        pluri_max: Optional[int] = None,
    ) -> PipelineResult:
        """主入口：读取输入并运行全部阶段

        Raises:
            PipelineError: 任一阶段失败，exit_code 给出进程退出码
        """
        echo = {"source": "poly", "poly": poly} if poly is not None else {"source": "digraph", "digraph": str(digraph)}
        weighted = self.load(poly=poly, digraph=digraph)
        return self.run_pipeline(weighted, pluri_max=pluri_max, input_echo=echo)

    def export_dot(self, result: PipelineResult) -> str:
        """两张图的 DOT 文本"""
        return self._run("dot", bundle=result.bundle, fiber=result.cycles.fiber)

    def check(self, digraph: Union[str, Path]) -> List[Dict[str, Any]]:
        """只做有向图校验和完整性检查

        Returns:
            空列表表示完整

        Raises:
            PipelineError: 文件不可读或 JSON 非法（退出码 2）
        """
        try:
            weighted = load_digraph(digraph, validate=False)
        except ResDoubleError as e:
            raise PipelineError("input", str(e), e.exit_code)
        tool = self.tools["check"]
        result = tool.execute(tool.input_schema(weighted=weighted))
        if result.success:
            return []
        if "diagnostics" not in result.metadata:
            raise PipelineError("check", result.message, result.exit_code)
        return result.metadata["diagnostics"]

    def selftest(
        self,
        instances: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> SelfTestSummary:
        """在随机实例上检查全部不变量

        Raises:
            PipelineError: 有实例失败，summary 中带有汇总
        """
        tool = self.tools["selftest"]
        params = tool.input_schema(
            instances=instances or self.config.selftest_instances,
            seed=self.config.seed if seed is None else seed,
            workers=workers or self.config.selftest_workers,
            max_n=self.config.selftest_max_n,
            satellite_probability=self.config.satellite_probability,
            poly_probability=self.config.poly_probability,
            max_blowups=self.config.max_blowups,
        )
        result = tool.execute(params)
        if not result.success:
            raise PipelineError("selftest", result.message, result.exit_code, summary=result.metadata.get("summary"))
        return result.data

    def get_stats(self) -> List[Dict[str, Any]]:
        """各阶段的执行统计"""
        return [tool.get_stats() for tool in self.tools.values()]
