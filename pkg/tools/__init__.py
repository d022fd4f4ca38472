from tools.base import Tool, ToolInput, ToolOutput, ToolStatus
from tools.trace_tool import TraceTool
from tools.canres_tool import CanResBundle, CanResTool, CheckTool
from tools.cycles_tool import CyclesTool, MinResTool
from tools.classify_tool import AdjointTool, ClassifyTool
from tools.dot_tool import DotExportTool
from tools.selftest_tool import SelfTestSummary, SelfTestTool

__all__ = [
    "Tool",
    "ToolInput",
    "ToolOutput",
    "ToolStatus",
    "TraceTool",
    "CanResBundle",
    "CanResTool",
    "CheckTool",
    "CyclesTool",
    "MinResTool",
    "ClassifyTool",
    "AdjointTool",
    "DotExportTool",
    "SelfTestSummary",
    "SelfTestTool",
]
