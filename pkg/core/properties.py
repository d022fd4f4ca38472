"""
完整实例上的不变量检查

把流水线全部跑一遍，任何不变量失败都以 InternalDefect 的子类抛出。
selftest 和性质测试共用这一入口。
"""
from dataclasses import dataclass
from typing import Optional

from sympy import ImmutableMatrix

from core.adjoint import adjoint_report
from core.canres import WeightedDigraph, derive_vectors, with_curves
from core.classify import classify
from core.cycles import compute_cycles
from core.errors import CrossCheckMismatch, ParityViolation
from core.lattice import matrices
from core.minres import contract


@dataclass(frozen=True)
class PropertyOutcome:
    """单个实例的检查摘要"""
    n: int
    oracle_skipped: bool
    gap: bool
    defective: int
    rdp: Optional[str]


def check_properties(w: WeightedDigraph, pluri_max: int = 2) -> PropertyOutcome:
    """对一个完整的加权有向图检查全部不变量

    各阶段内部已有的交叉验证（归纳算法、亏格公式、缺陷点三种刻画、rk 等式、mod 4、
    (D+Ē)·E_i ≤ 0、m=1 条件数）在这里一并触发。
    """
    lattice = matrices(w.digraph)
    data = with_curves(w, derive_vectors(w), lattice)

    beta_tilde = ImmutableMatrix([list(w.alpha_tilde)]) * lattice.M
    if tuple(int(v) % 2 for v in beta_tilde) != data.epsilon:
        raise ParityViolation("ε ≠ α̃M mod 2")

    cycles = compute_cycles(w, data, lattice)
    if cycles.fiber.self_intersection != -2:
        raise CrossCheckMismatch(f"F² = {cycles.fiber.self_intersection}")
    if cycles.fundamental.self_intersection not in (-1, -2):
        raise CrossCheckMismatch(f"Z² = {cycles.fundamental.self_intersection}")

    contract(w, data, lattice, cycles.fiber, cycles.fundamental)
    result = classify(w, data, lattice, cycles)
    adjoint_report(w, data, lattice, result.defective, pluri_max=pluri_max)

    return PropertyOutcome(
        n=w.n,
        oracle_skipped=cycles.oracle_skipped is not None,
        gap=result.gap,
        defective=len(result.defective),
        rdp=result.rdp,
    )


__all__ = ["PropertyOutcome", "check_properties"]
