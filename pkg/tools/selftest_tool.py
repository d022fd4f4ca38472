import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.errors import BlowupLimitExceeded, GermError, InternalDefect, IrrationalCenter
from core.generators import random_branch_product, random_weighted_digraph
from core.properties import check_properties
from planecurve.poly import parse_poly
from planecurve.resolution import canonical_resolution_trace
from tools.base import Tool, ToolInput, ToolOutput
from utils.logger import logger


class SelfTestInput(ToolInput):
    """自检的输入"""
    instances: int = Field(default=1000, ge=1, description="需要检查的实例数")
    seed: int = Field(default=20240229, description="起始种子")
    workers: int = Field(default=4, ge=1, description="线程数")
    max_n: int = Field(default=12, ge=1, description="实例的最大点数")
    satellite_probability: float = Field(default=0.3, ge=0.0, le=1.0, description="卫星点概率")
    poly_probability: float = Field(default=0.5, ge=0.0, le=1.0, description="用随机多项式生成实例的比例")
    max_blowups: int = Field(default=64, ge=1, description="爆破次数上限")


class SelfTestFailure(BaseModel):
    """一个失败的实例"""
    seed: int = Field(description="实例种子，可单独复现")
    source: str = Field(description="实例来源：多项式或有向图")
    error: str = Field(description="异常类型")
    message: str = Field(description="异常消息")

    model_config = ConfigDict(extra="forbid")


class SelfTestSummary(BaseModel):
    """自检汇总"""
    instances: int = Field(description="检查过的实例数")
    from_poly: int = Field(description="来自随机多项式的实例数")
    from_digraph: int = Field(description="来自随机有向图的实例数")
    rejected: int = Field(description="因超出规模或中心非有理而丢弃的候选数")
    oracle_skipped: int = Field(description="归纳算法被跳过的实例数")
    gap: int = Field(description="F > Z 的实例数")
    failures: List[SelfTestFailure] = Field(default_factory=list, description="失败的实例")

    model_config = ConfigDict(extra="forbid")


InstanceResult = Tuple[int, str, Optional[object], Optional[SelfTestFailure]]


def run_instance(seed: int, params: SelfTestInput) -> InstanceResult:
    """检查一个种子对应的实例

    Returns:
        (种子, 来源, PropertyOutcome 或 None（丢弃）, 失败记录或 None)
    """
    rng = random.Random(seed)
    if rng.random() < params.poly_probability:
        source = random_branch_product(rng)
        try:
            weighted = canonical_resolution_trace(parse_poly(source), max_blowups=params.max_blowups)
        except (GermError, IrrationalCenter, BlowupLimitExceeded):
            return seed, source, None, None
        if weighted.n > params.max_n:
            return seed, source, None, None
    else:
        source = "digraph"
        weighted = random_weighted_digraph(
            rng, max_n=params.max_n, satellite_probability=params.satellite_probability
        )
        if weighted is None:
            return seed, source, None, None

    try:
        return seed, source, check_properties(weighted), None
    except InternalDefect as e:
        return seed, source, None, SelfTestFailure(seed=seed, source=source, error=type(e).__name__, message=str(e))


class SelfTestTool(Tool):
    """随机实例自检工具

    按种子产生随机完整实例（随机分支乘积的消解，或随机有向图补全），对每个实例检查全部不变量。
    实例之间没有共享的可变状态，用线程池并行。
    """

    name = "selftest"
    description = "在随机实例上检查全部不变量"
    input_schema = SelfTestInput

    def _execute_impl(self, input_data: SelfTestInput) -> ToolOutput:
        results: List[InstanceResult] = []
        checked = 0
        next_seed = input_data.seed
        rejected = 0

        with ThreadPoolExecutor(max_workers=input_data.workers) as executor:
            while checked < input_data.instances:
                wanted = input_data.instances - checked
                future_to_seed = {}
                for seed in range(next_seed, next_seed + wanted):
                    future = executor.submit(run_instance, seed, input_data)
                    future_to_seed[future] = seed
                next_seed += wanted

                for future in as_completed(future_to_seed):
                    seed, source, outcome, failure = future.result()
                    if outcome is None and failure is None:
                        rejected += 1
                        continue
                    checked += 1
                    results.append((seed, source, outcome, failure))
                logger.debug(f"自检进度 {checked}/{input_data.instances}")

        results.sort(key=lambda r: r[0])
        outcomes = [r[2] for r in results if r[2] is not None]
        failures = [r[3] for r in results if r[3] is not None]
        summary = SelfTestSummary(
            instances=len(results),
            from_poly=sum(1 for r in results if r[1] != "digraph"),
            from_digraph=sum(1 for r in results if r[1] == "digraph"),
            rejected=rejected,
            oracle_skipped=sum(1 for o in outcomes if o.oracle_skipped),
            gap=sum(1 for o in outcomes if o.gap),
            failures=failures,
        )
        if failures:
            return ToolOutput.error_result(
                f"{len(failures)} 个实例失败",
                exit_code=1,
                summary=summary.model_dump(),
            )
        return ToolOutput.success_result(data=summary, message=f"{summary.instances} 个实例全部通过")
