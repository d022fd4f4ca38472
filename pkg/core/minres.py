"""
极小消解

典范消解上的 (−1)-曲线恰好是 ε_j = 1 且 E_j² = −2 的 F_j，它们两两不交，一次全部收缩即得极小消解。
收缩只在格上进行，幸存曲线保留原来的下标。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from core.canres import CanResData, SplitStatus, WeightedDigraph
from core.cycles import ExcCycle, cycle_self_intersection, fiber_lattice
from core.errors import CrossCheckMismatch
from core.lattice import ResolutionLattice
from utils.logger import log_operation


@dataclass(frozen=True)
class ContractionResult:
    """收缩结果"""
    contracted: Tuple[int, ...]
    survivors: Tuple[int, ...]
    bar_intersections: Tuple[Tuple[int, ...], ...]
    bar_F: ExcCycle
    bar_Z: ExcCycle
    rk: Tuple[Tuple[int, int, int], ...] = ()
    predicates: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "contracted": list(self.contracted),
            "survivors": list(self.survivors),
            "bar_intersections": [list(row) for row in self.bar_intersections],
            "bar_F": self.bar_F.to_dict(),
            "bar_Z": self.bar_Z.to_dict(),
            "predicates": dict(self.predicates),
        }


def minus_one_curves(w: WeightedDigraph, data: CanResData, lattice: ResolutionLattice) -> Tuple[int, ...]:
    """典范消解上的 (−1)-曲线

    交叉验证：每个这样的 q_j 的第一邻域中恰有一个点，且它的 μ 等于 μ_j + 1。
    """
    found = tuple(
        j for j in range(1, data.n + 1) if data.epsilon[j - 1] == 1 and lattice.s(j, j) == -2
    )
    for j in found:
        children = [k for k in range(j + 1, data.n + 1) if w.digraph.parent(k) == j]
        if len(children) != 1:
            raise CrossCheckMismatch(f"(−1)-曲线 F{j} 对应的 q{j} 第一邻域中有 {len(children)} 个点")
        if data.mu[children[0] - 1] != data.mu[j - 1] + 1:
            raise CrossCheckMismatch(f"q{children[0]} 的 μ 不等于 μ{j} + 1")
    return found


def _contract_matrix(matrix: List[List[int]], contracted: Tuple[int, ...]) -> List[List[int]]:
    """F̄_i·F̄_j = F_i·F_j + Σ_C (F_i·C)(F_j·C)"""
    n = len(matrix)
    result = [row[:] for row in matrix]
    for c in contracted:
        k = c - 1
        for i in range(n):
            for j in range(n):
                if i != k and j != k:
                    result[i][j] += matrix[i][k] * matrix[j][k]
    return result


def _restrict(coeffs, survivors: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(coeffs[i - 1] for i in survivors)


def rk_check(lattice: ResolutionLattice, contracted: Tuple[int, ...], z: Tuple[int, ...]) -> Tuple[Tuple[int, int, int], ...]:
    """对每个收缩的 k 返回 (k, z_k, Σ_{E_i·E_k=1} z_i)，两者应相等"""
    rows = []
    for k in contracted:
        neighbours = sum(z[i - 1] for i in range(1, lattice.n + 1) if i != k and lattice.s(i, k) == 1)
        rows.append((k, z[k - 1], neighbours))
    return tuple(rows)


def contract(
    w: WeightedDigraph,
    data: CanResData,
    lattice: ResolutionLattice,
    fiber: ExcCycle,
    fundamental: ExcCycle,
) -> ContractionResult:
    """一次收缩全部 (−1)-曲线，得到极小消解的格与圈"""
    contracted = minus_one_curves(w, data, lattice)
    matrix = fiber_lattice(data, lattice)
    for a in contracted:
        for b in contracted:
            if a < b and matrix[a - 1][b - 1] != 0:
                raise CrossCheckMismatch(f"(−1)-曲线 F{a} 与 F{b} 相交")

    survivors = tuple(i for i in range(1, data.n + 1) if i not in contracted)
    full = _contract_matrix(matrix, contracted)
    bar = [[full[i - 1][j - 1] for j in survivors] for i in survivors]

    for pos, i in enumerate(survivors):
        record = data.curves[i - 1] if data.curves else None
        unsplit = record is None or record.split is SplitStatus.NO
        if unsplit and record is not None and record.pa_F == 0 and bar[pos][pos] == -1:
            raise CrossCheckMismatch(f"收缩后 F̄{i} 成为新的 (−1)-曲线")

    rk = rk_check(lattice, contracted, fundamental.coeffs)
    for k, z_k, total in rk:
        if z_k != total:
            raise CrossCheckMismatch(f"z{k} = {z_k} ≠ 邻居系数和 {total}")

    bar_f, bar_z = minimal_cycles(survivors, bar, fiber, fundamental)
    predicates = corollary_predicates(w, fiber, fundamental, bar_f, bar_z)

    log_operation("minres", contracted=list(contracted), bar_F=list(bar_f.coeffs), bar_Z=list(bar_z.coeffs))
    return ContractionResult(
        contracted=contracted,
        survivors=survivors,
        bar_intersections=tuple(tuple(row) for row in bar),
        bar_F=bar_f,
        bar_Z=bar_z,
        rk=rk,
        predicates=predicates,
    )


def minimal_cycles(
    survivors: Tuple[int, ...],
    bar_matrix: List[List[int]],
    fiber: ExcCycle,
    fundamental: ExcCycle,
) -> Tuple[ExcCycle, ExcCycle]:
    """极小消解的纤维圈与基本圈：把 F、Z 限制到幸存曲线上"""
    f_coeffs = _restrict(fiber.coeffs, survivors)
    z_coeffs = _restrict(fundamental.coeffs, survivors)
    bar_f = ExcCycle(f_coeffs, support=survivors, self_intersection=cycle_self_intersection(f_coeffs, bar_matrix), pa=fiber.pa)
    bar_z = ExcCycle(
        z_coeffs,
        support=survivors,
        self_intersection=cycle_self_intersection(z_coeffs, bar_matrix),
        pa=fundamental.pa,
        witness=fundamental.witness,
    )
    if not bar_z.dominated_by(bar_f):
        raise CrossCheckMismatch("Z̄ 不满足 Z̄ ≤ F̄")
    if bar_z.self_intersection not in (-1, -2):
        raise CrossCheckMismatch(f"Z̄² = {bar_z.self_intersection}")
    return bar_f, bar_z


def corollary_predicates(
    w: WeightedDigraph,
    fiber: ExcCycle,
    fundamental: ExcCycle,
    bar_f: ExcCycle,
    bar_z: ExcCycle,
) -> Dict[str, bool]:
    """三个等价的判据，必须同时成立或同时不成立"""
    gap = fundamental.coeffs != fiber.coeffs
    proximate = w.digraph.proximate_to(1)
    a1 = w.alpha_tilde[0]
    predicates = {
        "gap_and_equal": gap and bar_f.coeffs == bar_z.coeffs,
        "unique_odd_proximate": proximate == [2] and a1 == w.alpha_tilde[1] and a1 % 2 == 1,
        "bar_square_minus_one": bar_f.self_intersection == -1 and bar_z.self_intersection == -1,
    }
    if len(set(predicates.values())) != 1:
        raise CrossCheckMismatch(f"极小消解判据不一致: {predicates}")
    return predicates


__all__ = [
    "ContractionResult",
    "minus_one_curves",
    "rk_check",
    "contract",
    "minimal_cycles",
    "corollary_predicates",
]
