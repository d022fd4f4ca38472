"""
结构分类

- 基本圈严格小于纤维圈的有向图判据（花瓣与"非常奇"顶点）
- 缺陷点及其缺陷层级
- ADE 有理二重点识别
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from core.canres import CanResData, D_divisor, SplitStatus, WeightedDigraph
from core.cycles import CyclesResult, ExcCycle, fundamental_cycle_inductive
from core.errors import CrossCheckMismatch
from core.lattice import ResolutionLattice, infinitesimal_order, petals
from utils.logger import log_operation


@dataclass(frozen=True)
class Classification:
    """分类结果"""
    gap: bool
    witness: Optional[int]
    very_odd: Tuple[int, ...]
    defective: Dict[int, int] = field(default_factory=dict)
    rdp: Optional[str] = None
    rational: bool = False
    pa_Z: Optional[int] = None
    dichotomy: Dict[int, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gap": self.gap,
            "witness": self.witness,
            "very_odd": list(self.very_odd),
            "defective": {str(i): k for i, k in sorted(self.defective.items())},
            "rdp": self.rdp,
            "rational": self.rational,
            "pa_Z": self.pa_Z,
        }


def very_odd(w: WeightedDigraph, data: CanResData, i: int) -> bool:
    """μ_i 为奇数且恰有一个花瓣长度为奇数"""
    if data.mu[i - 1] % 2 == 0:
        return False
    odd_petals = [p for p in petals(w.digraph, i) if len(p) % 2 == 1]
    return len(odd_petals) == 1


def gap_predicate_graph(w: WeightedDigraph, data: CanResData) -> bool:
    """用花瓣判断 F > Z

    q_1 必须非常奇；对每个非常奇的顶点，偶数长花瓣里位置为奇数的点、奇数长花瓣里位置为偶数的点
    必须非常奇，其余点必须不是非常奇；对新出现的非常奇顶点递归检查。
    """
    memo: Dict[int, bool] = {}

    def is_very_odd(i: int) -> bool:
        if i not in memo:
            memo[i] = very_odd(w, data, i)
        return memo[i]

    if not is_very_odd(1):
        return False
    stack = [1]
    visited = set()
    while stack:
        v = stack.pop()
        if v in visited:
            continue
        visited.add(v)
        for petal in petals(w.digraph, v):
            for pos, point in enumerate(petal, start=1):
                required = (pos % 2 == 1) if len(petal) % 2 == 0 else (pos % 2 == 0)
                if is_very_odd(point) != required:
                    return False
                if required:
                    stack.append(point)
    return True


def very_odd_vertices(w: WeightedDigraph, data: CanResData) -> Tuple[int, ...]:
    return tuple(i for i in range(1, w.n + 1) if very_odd(w, data, i))


def _children(w: WeightedDigraph, i: int) -> List[int]:
    return [j for j in range(i + 1, w.n + 1) if w.digraph.parent(j) == i]


def defective_base(w: WeightedDigraph, data: CanResData) -> Tuple[int, ...]:
    """存在 q_j >¹ q_i 使 α_j > α_i 的 q_i"""
    return tuple(
        i for i in range(1, w.n + 1)
        if any(data.alpha[j - 1] > data.alpha[i - 1] for j in _children(w, i))
    )


def defective_points(w: WeightedDigraph, data: CanResData, lattice: ResolutionLattice) -> Dict[int, int]:
    """缺陷点及其层级

    q_i 是 k-缺陷的，当存在 (k−1)-缺陷的 q_j >² q_i 且 α_j = α_i。
    结果与 {ε_i = 1, E_i² = −2} 以及 {D·E_i > 0} 交叉验证。
    """
    base = defective_base(w, data)
    levels: Dict[int, int] = {}
    for i in sorted(base, reverse=True):
        stacked = [
            levels[j] for j in levels
            if infinitesimal_order(w.digraph, i, j) == 2 and data.alpha[j - 1] == data.alpha[i - 1]
        ]
        levels[i] = 1 + max(stacked, default=0)

    by_curves = tuple(i for i in range(1, w.n + 1) if data.epsilon[i - 1] == 1 and lattice.s(i, i) == -2)
    divisor = D_divisor(data, lattice)
    by_divisor = tuple(i for i in range(1, w.n + 1) if divisor.pairings[i - 1] > 0)
    if not (tuple(sorted(base)) == by_curves == by_divisor):
        raise CrossCheckMismatch(f"缺陷点的三种刻画不一致: {base}, {by_curves}, {by_divisor}")
    return dict(sorted(levels.items()))


def stacked_successor(w: WeightedDigraph, data: CanResData, levels: Dict[int, int], i: int) -> Optional[int]:
    """层级为 k 的缺陷点 q_i 上方 2 阶、α 相同、层级 k−1 的缺陷点"""
    if levels.get(i, 0) < 2:
        return None
    candidates = [
        j for j, k in levels.items()
        if k == levels[i] - 1
        and infinitesimal_order(w.digraph, i, j) == 2
        and data.alpha[j - 1] == data.alpha[i - 1]
    ]
    return min(candidates) if candidates else None


def defect_dichotomy(w: WeightedDigraph, data: CanResData, i: int) -> str:
    """缺陷点满足且只满足以下之一：

    (i) α_i = α̃_i − 1
    (ii) α_i = α̃_i，且 q_i 与使其缺陷的 q_j 同时邻近于某个分歧的 q_k
    """
    alpha, alpha_tilde = data.alpha[i - 1], w.alpha_tilde[i - 1]
    if alpha == alpha_tilde - 1:
        return "i"
    if alpha == alpha_tilde:
        for j in _children(w, i):
            if data.alpha[j - 1] <= alpha:
                continue
            shared = set(w.digraph.targets(i)) & set(w.digraph.targets(j))
            if any(data.epsilon[k - 1] == 1 for k in shared):
                return "ii"
    raise CrossCheckMismatch(f"缺陷点 q{i} 不满足二分性质")


def dynkin_matrix(label: str) -> List[List[int]]:
    """A_n、D_n (n≥4)、E6、E7、E8 的相交矩阵（对角元 −2）"""
    kind, rank = label[0], int(label[1:])
    edges: List[Tuple[int, int]]
    if kind == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif kind == "D" and rank >= 4:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    elif kind == "E" and rank in (6, 7, 8):
        edges = [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]
    else:
        raise ValueError(f"未知的 Dynkin 类型: {label}")
    matrix = [[-2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in edges:
        matrix[a][b] = matrix[b][a] = 1
    return matrix


@lru_cache(maxsize=None)
def ade_signature(label: str) -> Tuple[int, Tuple[int, ...]]:
    """(分量数, 基本圈系数的有序多重集)，由归纳算法算出"""
    cycle = fundamental_cycle_inductive(dynkin_matrix(label))
    return len(cycle.coeffs), tuple(sorted(cycle.coeffs))


def ade_labels(rank: int) -> List[str]:
    labels = [f"A{rank}"]
    if rank >= 4:
        labels.append(f"D{rank}")
    if rank in (6, 7, 8):
        labels.append(f"E{rank}")
    return labels


def rdp_pattern(data: CanResData, lattice: ResolutionLattice) -> bool:
    """p_a(Z) = 0 的模式：分歧曲线 E² = −4，非分歧曲线 (E² = −1, γ = 2) 或 (E² = −2, γ = 0)"""
    for i in range(1, data.n + 1):
        e_sq, gamma = lattice.s(i, i), data.gamma[i - 1]
        if data.epsilon[i - 1] == 1:
            if e_sq != -4:
                return False
        elif (e_sq, gamma) not in ((-1, 2), (-2, 0)):
            return False
    return True


def rdp_recognize(
    data: CanResData,
    lattice: ResolutionLattice,
    fiber: ExcCycle,
    fundamental: ExcCycle,
) -> Tuple[Optional[str], bool]:
    """识别 ADE 类型

    Returns:
        (标签, 是否有理)。模式成立但有分裂无法判定的分量时返回 (None, True)。
    """
    if not rdp_pattern(data, lattice):
        return None, False
    if fiber.coeffs != fundamental.coeffs:
        raise CrossCheckMismatch("有理二重点的基本圈应等于纤维圈")
    if any(c.split is SplitStatus.UNDETERMINED for c in data.curves):
        return None, True

    coeffs: List[int] = []
    for record, z in zip(data.curves, fundamental.coeffs):
        coeffs.extend([z, z] if record.split is SplitStatus.YES else [z])
    signature = (len(coeffs), tuple(sorted(coeffs)))
    for label in ade_labels(len(coeffs)):
        if ade_signature(label) == signature:
            return label, True
    raise CrossCheckMismatch(f"有理模式成立但签名 {signature} 不在 ADE 表中")


def mod4_check(w: WeightedDigraph, witness: int) -> bool:
    """(α̃_1 + α̃_j) mod 4 = 2

    witness 是 Z 的见证点 j，即 Z 的系数首次小于 F 的曲线（见 CyclesResult.witness）；
    没有见证点时不应调用。
    """
    return (w.alpha_tilde[0] + w.alpha_tilde[witness - 1]) % 4 == 2


def classify(
    w: WeightedDigraph,
    data: CanResData,
    lattice: ResolutionLattice,
    cycles: CyclesResult,
) -> Classification:
    """汇总分类，并检查两种 F > Z 判据一致"""
    gap_graph = gap_predicate_graph(w, data)
    witness = cycles.witness
    if gap_graph != (witness is not None):
        raise CrossCheckMismatch(f"有向图判据 {gap_graph} 与见证点 {witness} 不一致")
    if witness is not None and not mod4_check(w, witness):
        raise CrossCheckMismatch("存在见证点但 α̃_1 + α̃_j ≢ 2 (mod 4)")

    defective = defective_points(w, data, lattice)
    dichotomy = {i: defect_dichotomy(w, data, i) for i in defective}
    label, rational = rdp_recognize(data, lattice, cycles.fiber, cycles.fundamental)
    if rational and (gap_graph or defective):
        raise CrossCheckMismatch("有理二重点不应有 F > Z 或缺陷点")

    result = Classification(
        gap=gap_graph,
        witness=witness,
        very_odd=very_odd_vertices(w, data),
        defective=defective,
        rdp=label,
        rational=rational,
        pa_Z=cycles.fundamental.pa,
        dichotomy=dichotomy,
    )
    log_operation("classify", gap=result.gap, defective=result.defective, rdp=result.rdp)
    return result


__all__ = [
    "Classification",
    "very_odd",
    "gap_predicate_graph",
    "very_odd_vertices",
    "defective_base",
    "defective_points",
    "stacked_successor",
    "defect_dichotomy",
    "dynkin_matrix",
    "ade_signature",
    "ade_labels",
    "rdp_pattern",
    "rdp_recognize",
    "mod4_check",
    "classify",
]
