"""
异常体系

所有模块抛出的异常都继承自 ResDoubleError，exit_code 供命令行映射进程退出码。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Diagnostic:
    """单条诊断信息

    校验函数以诊断列表作为返回值，而不是抛出异常。
    """
    rule: str
    indices: Tuple[int, ...] = field(default_factory=tuple)
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {"rule": self.rule, "indices": list(self.indices), "message": self.message}

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        return f"{self.rule}({where}): {self.message}" if where else f"{self.rule}: {self.message}"


class ResDoubleError(Exception):
    """所有领域异常的基类"""
    exit_code = 1


class InputError(ResDoubleError):
    """输入错误（退出码 2）"""
    exit_code = 2


class PolySyntaxError(InputError):
    """多项式表达式语法错误"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (位置 {position})"
        super().__init__(message)


class GermError(InputError):
    """多项式不是合法的奇点芽"""

    def __init__(self, message: str, diagnostics: Optional[List[Diagnostic]] = None):
        self.diagnostics = list(diagnostics or [])
        super().__init__(message)


class DigraphError(InputError):
    """Enriques 有向图或 S 矩阵非法"""

    def __init__(self, message: str, diagnostics: Optional[List[Diagnostic]] = None):
        self.diagnostics = list(diagnostics or [])
        if self.diagnostics:
            message = message + ": " + "; ".join(str(d) for d in self.diagnostics)
        super().__init__(message)


class IrrationalCenter(ResDoubleError):
    """需要爆破的中心点坐标不是有理数（退出码 3）"""
    exit_code = 3

    def __init__(self, factor: str, curve: int, suggestion: str = ""):
        self.factor = factor
        self.curve = curve
        self.suggestion = suggestion
        message = f"E{curve} 上需要爆破的点由不可约因子 {factor} 给出，坐标不是有理数"
        if suggestion:
            message = f"{message}；{suggestion}"
        super().__init__(message)


class CompletenessViolation(ResDoubleError):
    """加权有向图不是完整的典范消解（退出码 4）"""
    exit_code = 4

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("典范消解不完整: " + "; ".join(str(d) for d in self.diagnostics))


class InternalDefect(ResDoubleError):
    """内部一致性检查失败，说明实现有缺陷"""
    exit_code = 1


class ParityViolation(InternalDefect):
    """α、β、γ 的奇偶性不变量不成立"""


class CrossCheckMismatch(InternalDefect):
    """两种独立计算给出不同结果"""


class BlowupLimitExceeded(InternalDefect):
    """爆破次数超过上限"""


class SplitAmbiguity(InternalDefect):
    """分裂分量的两半与邻居的关联无法确定，归纳算法拒绝执行"""


__all__ = [
    "Diagnostic",
    "ResDoubleError",
    "InputError",
    "PolySyntaxError",
    "GermError",
    "DigraphError",
    "IrrationalCenter",
    "CompletenessViolation",
    "InternalDefect",
    "ParityViolation",
    "CrossCheckMismatch",
    "BlowupLimitExceeded",
    "SplitAmbiguity",
]
