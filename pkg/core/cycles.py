"""
纤维圈与基本圈

F_i 是 E_i 在典范消解上的原像（分裂时视为两半之和）。F_i 之间的相交数由
π*E_i = (1+ε_i)F_i 与 π*E_i·π*E_j = 2E_i·E_j 得到。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.canres import CanResData, SplitStatus, WeightedDigraph
from core.errors import CrossCheckMismatch, InternalDefect, SplitAmbiguity
from core.lattice import ResolutionLattice
from utils.logger import log_operation

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class ExcCycle:
    """例外圈 Σ c_i F_i

    Attributes:
        coeffs: 系数
        support: 系数对应的曲线下标（收缩后只剩幸存曲线）
        split: 对应分量是否分裂（系数同时作用于两半）
        self_intersection: 自交数
        pa: 算术亏格
        witness: 基本圈严格小于纤维圈时的见证点
    """
    coeffs: Tuple[int, ...]
    support: Tuple[int, ...] = ()
    split: Tuple[bool, ...] = ()
    self_intersection: Optional[int] = None
    pa: Optional[int] = None
    witness: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.support:
            object.__setattr__(self, "support", tuple(range(1, len(self.coeffs) + 1)))

    def coefficient(self, i: int) -> int:
        return self.coeffs[self.support.index(i)] if i in self.support else 0

    def dominated_by(self, other: "ExcCycle") -> bool:
        """逐项 ≤"""
        return all(self.coefficient(i) <= other.coefficient(i) for i in set(self.support) | set(other.support))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coeffs": list(self.coeffs),
            "support": list(self.support),
            "self_intersection": self.self_intersection,
            "pa": self.pa,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class CyclesResult:
    """cycles 阶段的汇总"""
    fiber: ExcCycle
    fundamental: ExcCycle
    lattice: Tuple[Tuple[int, ...], ...]
    inductive: Optional[Tuple[int, ...]] = None
    oracle_skipped: Optional[str] = None
    summation_genus: Optional[int] = None
    pairwise_genus: Dict[str, int] = field(default_factory=dict)

    @property
    def witness(self) -> Optional[int]:
        return self.fundamental.witness

    def to_dict(self) -> Dict[str, Any]:
        return {
            "F": self.fiber.to_dict(),
            "Z": self.fundamental.to_dict(),
            "F_lattice": [list(row) for row in self.lattice],
            "inductive_Z": list(self.inductive) if self.inductive is not None else None,
            "oracle_skipped": self.oracle_skipped,
        }


def fiber_lattice(data: CanResData, lattice: ResolutionLattice) -> IntMatrix:
    """F_i 的相交矩阵：F_i·F_j = (2−ε_i−ε_j)S_ij，F_i² = 2S_ii/(1+ε_i)²"""
    n = data.n
    eps = data.epsilon
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = lattice.s(i + 1, j + 1)
            if i == j:
                matrix[i][i] = 2 * s // (1 + eps[i]) ** 2
            else:
                matrix[i][j] = (2 - eps[i] - eps[j]) * s
    return matrix


def oracle_lattice(data: CanResData, lattice: ResolutionLattice) -> IntMatrix:
    """供归纳算法使用的 F 格

    Raises:
        SplitAmbiguity: 有 γ_i > 0 的分裂（或无法判定）分量
    """
    if not data.curves:
        raise InternalDefect("构造 F 格需要曲线记录")
    ambiguous = [
        c.index for c in data.curves
        if c.split in (SplitStatus.YES, SplitStatus.UNDETERMINED) and c.gamma_i > 0
    ]
    if ambiguous:
        raise SplitAmbiguity(f"分量 {ambiguous} 分裂且 γ > 0，两半与邻居的关联不确定")
    return fiber_lattice(data, lattice)


def pair(a: Sequence[int], b: Sequence[int], matrix: IntMatrix) -> int:
    """两个圈的相交数"""
    n = len(a)
    return sum(a[i] * matrix[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])


def cycle_self_intersection(coeffs: Sequence[int], matrix: IntMatrix) -> int:
    return pair(coeffs, coeffs, matrix)


def cycle_pa(coeffs: Sequence[int], matrix: IntMatrix, genera: Sequence[int]) -> int:
    """逐个加入分量，用 p_a(C+D) = p_a(C) + p_a(D) + C·D − 1 计算算术亏格"""
    n = len(coeffs)
    current = [0] * n
    genus: Optional[int] = None
    for i in range(n):
        for _ in range(coeffs[i]):
            if genus is None:
                genus = genera[i]
            else:
                genus = genus + genera[i] + sum(current[k] * matrix[k][i] for k in range(n)) - 1
            current[i] += 1
    if genus is None:
        raise ValueError("零圈没有算术亏格")
    return genus


def fiber_cycle(data: CanResData, lattice: ResolutionLattice) -> ExcCycle:
    """纤维圈 F = π*(E_1^*)，系数 m_1i(1+ε_i)"""
    coeffs = tuple(lattice.m(1, i) * (1 + data.epsilon[i - 1]) for i in range(1, data.n + 1))
    matrix = fiber_lattice(data, lattice)
    for k in range(data.n):
        expected = -(2 - data.epsilon[0]) if k == 0 else 0
        unit = [1 if r == k else 0 for r in range(data.n)]
        if pair(coeffs, unit, matrix) != expected:
            raise CrossCheckMismatch(f"F·F{k + 1} ≠ {expected}")
    square = cycle_self_intersection(coeffs, matrix)
    if square != -2:
        raise CrossCheckMismatch(f"F² = {square} ≠ −2")
    return ExcCycle(coeffs, split=_split_flags(data), self_intersection=square, pa=data.alpha[0] // 2 - 1)


def _split_flags(data: CanResData) -> Tuple[bool, ...]:
    return tuple(c.split is SplitStatus.YES for c in data.curves) if data.curves else ()


def gap_witnesses(data: CanResData, lattice: ResolutionLattice, parent_of) -> List[int]:
    """满足条件 (A) 的 j：ε_j = 0，q_j 在 q_1 的第一邻域，且 ε_i = 0 时 m_1i + m_ji 为偶数"""
    found = []
    for j in range(2, data.n + 1):
        if data.epsilon[j - 1] != 0 or parent_of(j) != 1:
            continue
        if all(
            (lattice.m(1, i) + lattice.m(j, i)) % 2 == 0
            for i in range(1, data.n + 1)
            if data.epsilon[i - 1] == 0
        ):
            found.append(j)
    return found


def fundamental_cycle_explicit(w: WeightedDigraph, data: CanResData, lattice: ResolutionLattice) -> ExcCycle:
    """基本圈的闭式公式"""
    witnesses = gap_witnesses(data, lattice, w.digraph.parent)
    if len(witnesses) > 1:
        raise CrossCheckMismatch(f"见证点不唯一: {witnesses}")
    matrix = fiber_lattice(data, lattice)
    if not witnesses:
        fiber = fiber_cycle(data, lattice)
        return ExcCycle(fiber.coeffs, split=fiber.split, self_intersection=-2, pa=fiber.pa)

    j = witnesses[0]
    coeffs = tuple(
        (1 + data.epsilon[i - 1]) * (lattice.m(1, i) + lattice.m(j, i)) // 2 for i in range(1, data.n + 1)
    )
    square = cycle_self_intersection(coeffs, matrix)
    if square != -1:
        raise CrossCheckMismatch(f"存在见证点时 Z² = {square} ≠ −1")
    return ExcCycle(
        coeffs,
        split=_split_flags(data),
        self_intersection=square,
        pa=cycle_genus(w, data, "Z", j),
        witness=j,
    )


def _laufer(matrix: IntMatrix, lowest_first: bool) -> Tuple[int, ...]:
    n = len(matrix)
    z = [1] * n
    order = range(n) if lowest_first else range(n - 1, -1, -1)
    for _ in range(100000):
        bad = next((j for j in order if sum(z[i] * matrix[i][j] for i in range(n)) > 0), None)
        if bad is None:
            return tuple(z)
        z[bad] += 1
    raise InternalDefect("归纳算法没有终止，相交矩阵可能不是负定的")


def fundamental_cycle_inductive(matrix: IntMatrix) -> ExcCycle:
    """归纳算法：从 Σ F_i 开始，只要 Z·F_j > 0 就加上 F_j

    分别按下标从小到大和从大到小选取 F_j，两种结果必须一致。
    """
    if not matrix:
        raise ValueError("相交矩阵为空")
    low = _laufer(matrix, lowest_first=True)
    high = _laufer(matrix, lowest_first=False)
    if low != high:
        raise CrossCheckMismatch(f"归纳算法依赖选取顺序: {low} ≠ {high}")
    return ExcCycle(low, self_intersection=cycle_self_intersection(low, matrix))


def cycle_genus(w: WeightedDigraph, data: CanResData, kind: str, witness: Optional[int] = None) -> int:
    """纤维圈或基本圈的算术亏格

    Args:
        kind: "F" 或 "Z"
        witness: 基本圈的见证点，F = Z 时为 None
    """
    pa_fiber = data.alpha[0] // 2 - 1
    if kind == "F" or witness is None:
        return pa_fiber
    if kind != "Z":
        raise ValueError(f"未知的圈类型: {kind}")
    total = w.alpha_tilde[0] + w.alpha_tilde[witness - 1] - 2
    if total % 4:
        raise CrossCheckMismatch(f"(α̃1 + α̃{witness} − 2) = {total} 不能被 4 整除")
    return total // 4


def summation_genus(data: CanResData, lattice: ResolutionLattice) -> int:
    """p_a(F) = ½ Σ m_1i(γ_i + (ε_i − 2)E_i² − 4)"""
    total = sum(
        lattice.m(1, i) * (data.gamma[i - 1] + (data.epsilon[i - 1] - 2) * lattice.s(i, i) - 4)
        for i in range(1, data.n + 1)
    )
    if total % 2:
        raise CrossCheckMismatch("求和公式给出非整数亏格")
    return total // 2


def component_genera(data: CanResData) -> List[int]:
    return [c.pa_F for c in data.curves]


def compute_cycles(w: WeightedDigraph, data: CanResData, lattice: ResolutionLattice) -> CyclesResult:
    """计算 F、Z，并与归纳算法和亏格公式交叉验证"""
    fiber = fiber_cycle(data, lattice)
    fundamental = fundamental_cycle_explicit(w, data, lattice)
    matrix = fiber_lattice(data, lattice)

    inductive = None
    skipped = None
    try:
        oracle = fundamental_cycle_inductive(oracle_lattice(data, lattice))
        inductive = oracle.coeffs
        if inductive != fundamental.coeffs:
            raise CrossCheckMismatch(f"闭式 Z = {fundamental.coeffs} 与归纳算法 {inductive} 不一致")
    except SplitAmbiguity as e:
        skipped = str(e)

    if not fundamental.dominated_by(fiber):
        raise CrossCheckMismatch("Z 不满足 Z ≤ F")
    if fundamental.witness is not None:
        difference = [f - z for f, z in zip(fiber.coeffs, fundamental.coeffs)]
        if difference[0] != 1:
            raise CrossCheckMismatch(f"F − Z 中 F1 的系数为 {difference[0]}，应为 1")

    by_sum = summation_genus(data, lattice)
    if by_sum != fiber.pa:
        raise CrossCheckMismatch(f"求和公式 p_a(F) = {by_sum} ≠ {fiber.pa}")
    genera = component_genera(data)
    pairwise = {}
    if genera:
        pairwise = {
            "F": cycle_pa(fiber.coeffs, matrix, genera),
            "Z": cycle_pa(fundamental.coeffs, matrix, genera),
        }
        if pairwise["F"] != fiber.pa or pairwise["Z"] != fundamental.pa:
            raise CrossCheckMismatch(f"逐项亏格 {pairwise} 与闭式 (F={fiber.pa}, Z={fundamental.pa}) 不一致")

    log_operation(
        "cycles",
        F=list(fiber.coeffs),
        Z=list(fundamental.coeffs),
        witness=fundamental.witness,
        oracle="skipped" if skipped else "ok",
    )
    return CyclesResult(
        fiber=fiber,
        fundamental=fundamental,
        lattice=tuple(tuple(row) for row in matrix),
        inductive=inductive,
        oracle_skipped=skipped,
        summation_genus=by_sum,
        pairwise_genus=pairwise,
    )


__all__ = [
    "ExcCycle",
    "CyclesResult",
    "fiber_lattice",
    "oracle_lattice",
    "pair",
    "cycle_self_intersection",
    "cycle_pa",
    "fiber_cycle",
    "gap_witnesses",
    "fundamental_cycle_explicit",
    "fundamental_cycle_inductive",
    "cycle_genus",
    "summation_genus",
    "component_genera",
    "compute_cycles",
]
