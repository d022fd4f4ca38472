from pydantic import BaseModel, ConfigDict, Field
from typing import Any, Dict, Optional
from abc import ABC, abstractmethod
import time
from enum import Enum

from core.errors import ResDoubleError
from utils.logger import logger


class ToolStatus(Enum):
    """阶段执行状态"""
    SUCCESS = "success"
    FAILURE = "failure"
    WARNING = "warning"


class ToolInput(BaseModel):
    """阶段输入基类"""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


class ToolOutput(BaseModel):
    """阶段输出"""
    success: bool = Field(description="是否执行成功")
    status: ToolStatus = Field(description="执行状态")
    data: Optional[Any] = Field(default=None, description="返回数据")
    message: str = Field(default="", description="状态消息")
    execution_time: Optional[float] = Field(default=None, description="执行时间（秒）")
    metadata: Dict[str, Any] = Field(default_factory=dict, description="额外元数据，失败时含 exit_code")

    @property
    def exit_code(self) -> int:
        """失败结果对应的进程退出码"""
        if self.success:
            return 0
        return int(self.metadata.get("exit_code", 1))

    @classmethod
    def success_result(cls, data: Any, message: str = "", **metadata) -> "ToolOutput":
        return cls(success=True, status=ToolStatus.SUCCESS, data=data, message=message, metadata=metadata)

    @classmethod
    def error_result(cls, message: str, **metadata) -> "ToolOutput":
        return cls(success=False, status=ToolStatus.FAILURE, data=None, message=message, metadata=metadata)

    @classmethod
    def warning_result(cls, data: Any, message: str, **metadata) -> "ToolOutput":
        """成功但带有警告，例如归纳算法被跳过"""
        return cls(success=True, status=ToolStatus.WARNING, data=data, message=message, metadata=metadata)


class Tool(ABC):
    """流水线阶段基类

    每个阶段继承此类并实现 _execute_impl。execute 负责计时、统计，
    并把领域异常转换成带 exit_code 的失败结果。
    """

    name: str
    description: str
    input_schema: type[ToolInput]

    def __init__(self):
        self._execution_count = 0
        self._total_time = 0.0

    @abstractmethod
    def _execute_impl(self, input_data: ToolInput) -> ToolOutput:
        """具体的阶段逻辑，由子类实现"""
        pass

    def execute(self, input_data: ToolInput) -> ToolOutput:
        """执行阶段，包含计时和错误处理"""
        start_time = time.time()

        try:
            if not isinstance(input_data, self.input_schema):
                return ToolOutput.error_result(
                    f"输入类型错误，期望 {self.input_schema.__name__}，实际 {type(input_data).__name__}",
                    exit_code=1,
                )

            result = self._execute_impl(input_data)

            execution_time = time.time() - start_time
            self._execution_count += 1
            self._total_time += execution_time
            result.execution_time = execution_time
            return result

        except ResDoubleError as e:
            execution_time = time.time() - start_time
            logger.debug(f"阶段 {self.name} 失败: {type(e).__name__}: {e}")
            metadata: Dict[str, Any] = {
                "exception_type": type(e).__name__,
                "exit_code": e.exit_code,
                "execution_time": execution_time,
            }
            diagnostics = getattr(e, "diagnostics", None)
            if diagnostics:
                metadata["diagnostics"] = [d.to_dict() for d in diagnostics]
            return ToolOutput.error_result(str(e), **metadata)

        except Exception as e:
            execution_time = time.time() - start_time
            logger.exception(f"阶段 {self.name} 出现未预期的异常")
            return ToolOutput.error_result(
                f"阶段 {self.name} 执行异常: {str(e)}",
                exception_type=type(e).__name__,
                exit_code=1,
                execution_time=execution_time,
            )

    def get_stats(self) -> Dict[str, Any]:
        """执行统计"""
        return {
            "name": self.name,
            "execution_count": self._execution_count,
            "total_time": self._total_time,
            "average_time": self._total_time / max(1, self._execution_count),
        }

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}', executions={self._execution_count})"
