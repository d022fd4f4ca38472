"""
伴随条件

奇点对典范系统施加的条件数 c、对 m 重典范系统施加的条件数，以及伴随线性系统的固定部分。
这些计数假设分歧曲线的次数充分大。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from core.canres import CanResData, D_divisor, WeightedDigraph
from core.classify import stacked_successor
from core.errors import CrossCheckMismatch, InternalDefect
from core.lattice import ResolutionLattice
from utils.logger import log_operation


@dataclass(frozen=True)
class PluriEntry:
    """某个 m 的多重典范数据"""
    conditions: int
    fixed_m_m: Tuple[int, ...]
    fixed_m_mminus1: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conditions": self.conditions,
            "fixed_m_m": list(self.fixed_m_m),
            "fixed_m_mminus1": list(self.fixed_m_mminus1),
        }


@dataclass(frozen=True)
class AdjointReport:
    """伴随条件报告"""
    c: int
    d: int
    fixed_canonical: Tuple[int, ...]
    relabeling: Dict[int, int]
    adjoint_multiplicities: Tuple[int, ...]
    pluri: Dict[int, PluriEntry] = field(default_factory=dict)
    asymptotic: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "c": self.c,
            "d": self.d,
            "fixed_canonical": list(self.fixed_canonical),
            "relabeling": {str(k): v for k, v in sorted(self.relabeling.items())},
            "adjoint_multiplicities": list(self.adjoint_multiplicities),
            "pluri": {str(m): entry.to_dict() for m, entry in sorted(self.pluri.items())},
            "asymptotic": self.asymptotic,
        }


def adjunction_conditions(data: CanResData) -> int:
    """c = Σ α_i(α_i − 2)/8"""
    total = 0
    for a in data.alpha:
        if (a * (a - 2)) % 8:
            raise InternalDefect(f"α = {a} 给出非整数的条件数")
        total += a * (a - 2) // 8
    return total


def defective_chains(w: WeightedDigraph, data: CanResData, levels: Dict[int, int]) -> List[List[int]]:
    """极大的叠加缺陷链 [d1, u1, d2, u2, …]，u_t 是 d_{t+1} 的父点"""
    successors = {i: stacked_successor(w, data, levels, i) for i in levels}
    reached = {j for j in successors.values() if j is not None}
    chains = []
    for head in sorted(levels):
        if head in reached:
            continue
        chain = [head]
        current = head
        while successors.get(current) is not None:
            nxt = successors[current]
            chain.extend([w.digraph.parent(nxt), nxt])
            current = nxt
        chains.append(chain)
    return chains


def normalize_defective_order(w: WeightedDigraph, data: CanResData, levels: Dict[int, int]) -> Dict[int, int]:
    """让每条叠加缺陷链在编号上连续的重编号 old → new（仍然是合法的爆破顺序）"""
    chains = {chain[0]: chain for chain in defective_chains(w, data, levels) if len(chain) > 1}
    order: List[int] = []
    placed = set()
    for i in range(1, w.n + 1):
        if i in placed:
            continue
        block = chains.get(i, [i])
        for j in block:
            if j not in placed:
                order.append(j)
                placed.add(j)
    perm = {old: new for new, old in enumerate(order, start=1)}
    for j, i in w.digraph.prox:
        if perm[i] >= perm[j]:
            raise CrossCheckMismatch(f"重编号破坏了爆破顺序: q{j} → q{i}")
    return perm


def fixed_part_canonical(
    w: WeightedDigraph,
    data: CanResData,
    lattice: ResolutionLattice,
    levels: Dict[int, int],
) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    """|K_Y + B/2| 的固定部分 Ē = Σ_{j∈Def} Σ_{r<def(q_j)} E_{j+r}

    下标 j+r 在重编号后的顺序中取，结果映射回原编号。

    Returns:
        (Ē 在原编号下的系数, 重编号)
    """
    perm = normalize_defective_order(w, data, levels)
    inverse = {new: old for old, new in perm.items()}
    coeffs = [0] * w.n
    for j, level in levels.items():
        for r in range(level):
            coeffs[inverse[perm[j] + r] - 1] += 1

    divisor = D_divisor(data, lattice)
    for i in range(1, w.n + 1):
        e_bar_dot = sum(coeffs[k - 1] * lattice.s(k, i) for k in range(1, w.n + 1))
        if divisor.pairings[i - 1] + e_bar_dot > 0:
            raise CrossCheckMismatch(f"(D + Ē)·E{i} = {divisor.pairings[i - 1] + e_bar_dot} > 0")
    return tuple(coeffs), perm


def pluricanonical_conditions(data: CanResData, d: int, m: int) -> int:
    """Σ[2(m²−m)(α−2)² + α² − 2α]/8 − d·m(m−1)/2"""
    if m < 1:
        raise ValueError("m 必须 ≥ 1")
    numerator = sum(2 * (m * m - m) * (a - 2) ** 2 + a * a - 2 * a for a in data.alpha)
    if numerator % 8:
        raise InternalDefect(f"m={m} 的条件数不是整数")
    result = numerator // 8 - d * m * (m - 1) // 2
    if result < 0:
        raise InternalDefect(f"m={m} 的条件数为负: {result}")
    return result


def fixed_part_pluricanonical(
    levels: Dict[int, int],
    fixed_canonical: Tuple[int, ...],
    m: int,
    variant: str = "m",
) -> Tuple[int, ...]:
    """|mK_Y + m̄B/2| 的固定部分 [m̄/2]Ẽ + (m̄ mod 2)Ē，Ẽ = Σ_{Def} E_j

    Args:
        variant: "m" 取 m̄ = m，"m-1" 取 m̄ = m − 1
    """
    if variant == "m":
        m_bar = m
    elif variant == "m-1":
        m_bar = m - 1
    else:
        raise ValueError(f"未知的变体: {variant}")
    e_tilde = [1 if i in levels else 0 for i in range(1, len(fixed_canonical) + 1)]
    return tuple((m_bar // 2) * t + (m_bar % 2) * b for t, b in zip(e_tilde, fixed_canonical))


def adjoint_multiplicities(data: CanResData, lattice: ResolutionLattice, fixed_canonical: Tuple[int, ...]) -> Tuple[int, ...]:
    """D + Ē 在 E^* 基下的系数：一般伴随曲线在各 q_i 处的重数"""
    divisor = D_divisor(data, lattice)
    e_bar = lattice.to_e_star(fixed_canonical)
    return tuple(a + b for a, b in zip(divisor.coeffs, e_bar))


def adjoint_report(
    w: WeightedDigraph,
    data: CanResData,
    lattice: ResolutionLattice,
    levels: Dict[int, int],
    pluri_max: int = 3,
) -> AdjointReport:
    """汇总伴随条件"""
    c = adjunction_conditions(data)
    d = len(levels)
    fixed, perm = fixed_part_canonical(w, data, lattice, levels)
    if (c == 0) != all(a == 2 for a in data.alpha):
        raise CrossCheckMismatch("c = 0 与 α 全为 2 不等价")
    if (d == 0) != (not any(fixed)):
        raise CrossCheckMismatch("Ē = 0 与没有缺陷点不等价")

    pluri: Dict[int, PluriEntry] = {}
    previous = -1
    for m in range(1, pluri_max + 1):
        conditions = pluricanonical_conditions(data, d, m)
        if m == 1 and conditions != c:
            raise CrossCheckMismatch(f"m=1 的条件数 {conditions} ≠ c = {c}")
        if conditions < previous:
            raise CrossCheckMismatch(f"条件数随 m 减少: {previous} → {conditions}")
        previous = conditions
        pluri[m] = PluriEntry(
            conditions=conditions,
            fixed_m_m=fixed_part_pluricanonical(levels, fixed, m, "m"),
            fixed_m_mminus1=fixed_part_pluricanonical(levels, fixed, m, "m-1"),
        )

    report = AdjointReport(
        c=c,
        d=d,
        fixed_canonical=fixed,
        relabeling=perm,
        adjoint_multiplicities=adjoint_multiplicities(data, lattice, fixed),
        pluri=pluri,
    )
    log_operation("adjoint", c=c, d=d, fixed=list(fixed))
    return report


__all__ = [
    "PluriEntry",
    "AdjointReport",
    "adjunction_conditions",
    "defective_chains",
    "normalize_defective_order",
    "fixed_part_canonical",
    "pluricanonical_conditions",
    "fixed_part_pluricanonical",
    "adjoint_multiplicities",
    "adjoint_report",
]
