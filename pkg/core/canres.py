"""
典范消解的组合数据

从加权 Enriques 有向图推出 μ, ε, α, β, β̃, γ̃, γ 以及每条例外曲线在光滑二重覆盖上的数据。
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.errors import CompletenessViolation, Diagnostic, DigraphError, ParityViolation
from core.gamma import GammaData, GammaPoint
from core.lattice import EnriquesDigraph, ResolutionLattice, matrices, validate_digraph
from core.lattice import relabel as relabel_digraph
from utils.logger import log_operation

Vector = Tuple[int, ...]


class SplitStatus(Enum):
    """非分歧曲线的原像是否分裂成两条"""
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class WeightedDigraph:
    """带重数 α̃ 的 Enriques 有向图，可附带 Γ̃ 支撑点"""
    digraph: EnriquesDigraph
    alpha_tilde: Vector
    gamma_data: Optional[GammaData] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha_tilde", tuple(int(a) for a in self.alpha_tilde))

    @property
    def n(self) -> int:
        return self.digraph.n

    def relabel(self, perm: Dict[int, int]) -> "WeightedDigraph":
        """按 old → new 重编号"""
        alpha = [0] * self.n
        for old, new in perm.items():
            alpha[new - 1] = self.alpha_tilde[old - 1]
        gamma = self.gamma_data.relabel(perm) if self.gamma_data is not None else None
        return WeightedDigraph(relabel_digraph(self.digraph, perm), tuple(alpha), gamma)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = dict(self.digraph.to_dict())
        data["alpha_tilde"] = list(self.alpha_tilde)
        if self.gamma_data is not None:
            data["gamma_points"] = self.gamma_data.to_list()
        return data


@dataclass(frozen=True)
class CurveRecord:
    """一条例外曲线 E_i 及其原像 F_i 的数据"""
    index: int
    E_sq: int
    eps: int
    gamma_i: int
    split: SplitStatus
    F_sq: int
    pa_F: int
    halves: Optional[Tuple[int, int, int]] = None
    gamma_points: Optional[Tuple[GammaPoint, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "index": self.index,
            "E_sq": self.E_sq,
            "eps": self.eps,
            "gamma": self.gamma_i,
            "split": self.split.value,
            "F_sq": [self.halves[0], self.halves[1]] if self.halves else self.F_sq,
            "pa_F": self.pa_F,
        }
        if self.halves:
            data["halves_meet"] = self.halves[2]
        if self.gamma_points is not None:
            data["gamma_points"] = [p.to_dict() for p in self.gamma_points]
        return data


@dataclass(frozen=True)
class CanResData:
    """典范消解导出的全部向量"""
    mu: Vector
    epsilon: Vector
    alpha: Vector
    beta: Vector
    beta_tilde: Vector
    gamma_tilde: Vector
    gamma: Vector
    curves: Tuple[CurveRecord, ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return len(self.mu)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": list(self.mu),
            "epsilon": list(self.epsilon),
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "beta_tilde": list(self.beta_tilde),
            "gamma_tilde": list(self.gamma_tilde),
            "gamma": list(self.gamma),
            "curves": [c.to_dict() for c in self.curves],
        }


@dataclass(frozen=True)
class DDivisor:
    """伴随条件除子 D = Σ (α_i/2 − 1) E_i^*"""
    coeffs: Vector
    pairings: Vector

    def to_dict(self) -> Dict[str, Any]:
        return {"coeffs": list(self.coeffs), "pairings": list(self.pairings)}


def _row_times(vector: Sequence[int], matrix) -> Vector:
    n = len(vector)
    return tuple(int(sum(vector[k] * matrix[k, c] for k in range(n))) for c in range(n))


def derive_mu_eps(w: WeightedDigraph) -> Tuple[Vector, Vector]:
    """逐点计算 μ_i = α̃_i + Σ_{q_i→q_j} ε_j 与 ε_i = μ_i mod 2"""
    mu: List[int] = []
    eps: List[int] = []
    for i in range(1, w.n + 1):
        value = w.alpha_tilde[i - 1] + sum(eps[j - 1] for j in w.digraph.targets(i))
        mu.append(value)
        eps.append(value % 2)
    return tuple(mu), tuple(eps)


def alpha_tilde_from_mu(d: EnriquesDigraph, mu: Sequence[int]) -> Vector:
    """由 μ 反推 α̃"""
    if len(mu) != d.n:
        raise DigraphError(f"mu 的长度 {len(mu)} 与点数 {d.n} 不符")
    eps = [int(m) % 2 for m in mu]
    alpha = []
    for i in range(1, d.n + 1):
        value = int(mu[i - 1]) - sum(eps[j - 1] for j in d.targets(i))
        if value < 0:
            raise DigraphError(f"mu 在 q{i} 处给出负的 α̃")
        alpha.append(value)
    return tuple(alpha)


def _gamma(eps: Vector, gamma_tilde: Vector, lattice: ResolutionLattice) -> Vector:
    n = len(eps)
    result = []
    for i in range(1, n + 1):
        if eps[i - 1] == 1:
            result.append(0)
        else:
            result.append(
                gamma_tilde[i - 1] + sum(eps[j - 1] * lattice.s(i, j) for j in range(1, n + 1) if j != i)
            )
    return tuple(result)


def validate_gamma_data(w: WeightedDigraph, lattice: Optional[ResolutionLattice] = None) -> List[Diagnostic]:
    """检查 Γ̃ 支撑点：结点条件 (B|EiEj) 与次数和"""
    if w.gamma_data is None:
        return []
    lattice = lattice or matrices(w.digraph)
    problems: List[Diagnostic] = []
    gamma_tilde = _row_times(w.alpha_tilde, lattice.N.T)

    for point in w.gamma_data.points:
        on = point.on
        if not 1 <= len(on) <= 2 or len(set(on)) != len(on) or any(not 1 <= i <= w.n for i in on):
            problems.append(Diagnostic("gamma-curves", on, "支撑点必须位于 1 或 2 条不同的曲线上"))
            continue
        if point.conj_deg < 1 or any(m < 0 for m in point.mult):
            problems.append(Diagnostic("gamma-values", on, "重数必须非负，共轭次数必须为正"))
            continue
        if point.is_node:
            if lattice.s(on[0], on[1]) != 1:
                problems.append(Diagnostic("gamma-node", on, f"E{on[0]} 与 E{on[1]} 不相交"))
            if point.conj_deg != 1:
                problems.append(Diagnostic("gamma-node", on, "结点必须是有理点"))
            if point.meets_btilde and min(point.mult) != 1:
                problems.append(Diagnostic("B|EiEj", on, f"结点处重数 {list(point.mult)} 中没有 1"))
            if not point.meets_btilde and any(point.mult):
                problems.append(Diagnostic("B|EiEj", on, "B̃ 不经过的结点重数必须为 0"))
        elif not point.meets_btilde or point.mult[0] < 1:
            problems.append(Diagnostic("gamma-values", on, "单曲线上的支撑点必须与 B̃ 相交"))

    for i in range(1, w.n + 1):
        degree = w.gamma_data.degree_on(i)
        if degree != gamma_tilde[i - 1]:
            problems.append(Diagnostic("gamma-degree", (i,), f"Γ̃{i} 的次数 {degree} ≠ γ̃{i} = {gamma_tilde[i - 1]}"))
    return problems


def check_complete(w: WeightedDigraph) -> List[Diagnostic]:
    """检查 w 是否编码一个完整的典范消解

    Returns:
        诊断列表，空表示完整
    """
    problems = validate_digraph(w.digraph)
    if problems:
        return problems
    if len(w.alpha_tilde) != w.n:
        return [Diagnostic("weights", (), f"alpha_tilde 长度 {len(w.alpha_tilde)} 与点数 {w.n} 不符")]
    negative = [i for i, a in enumerate(w.alpha_tilde, start=1) if a < 0]
    if negative:
        return [Diagnostic("weights", tuple(negative), "重数必须非负")]

    lattice = matrices(w.digraph)
    mu, eps = derive_mu_eps(w)
    gamma_tilde = _row_times(w.alpha_tilde, lattice.N.T)
    gamma = _gamma(eps, gamma_tilde, lattice)

    for i in range(1, w.n + 1):
        if gamma_tilde[i - 1] < 0:
            problems.append(Diagnostic("proximity", (i,), f"邻近不等式在 q{i} 处不成立 (γ̃={gamma_tilde[i - 1]})"))
        if mu[i - 1] < 2:
            problems.append(Diagnostic("center", (i,), f"q{i} 不是分歧轨迹的奇点 (μ={mu[i - 1]})"))
        if eps[i - 1] == 1 and gamma_tilde[i - 1] != 0:
            problems.append(Diagnostic("branched-meets-btilde", (i,), f"分歧曲线 E{i} 与 B̃ 相交 (γ̃={gamma_tilde[i - 1]})"))
        if gamma[i - 1] % 2 != 0:
            problems.append(Diagnostic("gamma-parity", (i,), f"γ{i} = {gamma[i - 1]} 是奇数"))
        for j in range(i + 1, w.n + 1):
            if eps[i - 1] == eps[j - 1] == 1 and lattice.s(i, j) != 0:
                problems.append(Diagnostic("branched-adjacent", (i, j), f"分歧曲线 E{i} 与 E{j} 相交"))

    problems.extend(validate_gamma_data(w, lattice))
    return problems


def derive_vectors(w: WeightedDigraph) -> CanResData:
    """计算全部向量（不含曲线记录）

    Raises:
        CompletenessViolation: w 不是完整的典范消解
        ParityViolation: 奇偶性不变量不成立
    """
    problems = check_complete(w)
    if problems:
        raise CompletenessViolation(problems)

    lattice = matrices(w.digraph)
    mu, eps = derive_mu_eps(w)
    beta_tilde = _row_times(w.alpha_tilde, lattice.M)
    gamma_tilde = _row_times(w.alpha_tilde, lattice.N.T)
    alpha = tuple(m - e for m, e in zip(mu, eps))
    beta = tuple(b - e for b, e in zip(beta_tilde, eps))
    gamma = _gamma(eps, gamma_tilde, lattice)

    if any(v % 2 for v in alpha + beta + gamma):
        raise ParityViolation(f"α={alpha}, β={beta}, γ={gamma} 不全为偶数")
    if tuple(b % 2 for b in beta_tilde) != eps:
        raise ParityViolation("ε 与 β̃ mod 2 不一致")
    if _row_times(beta, lattice.N) != alpha:
        raise ParityViolation("α ≠ β·N")

    log_operation("canres", n=w.n, mu=list(mu), epsilon=list(eps))
    return CanResData(mu, eps, alpha, beta, beta_tilde, gamma_tilde, gamma)


def _split_status(i: int, w: WeightedDigraph, data: CanResData, lattice: ResolutionLattice) -> SplitStatus:
    if data.epsilon[i - 1] == 1:
        return SplitStatus.NO
    branched_neighbour = any(
        data.epsilon[j - 1] == 1 and lattice.s(i, j) == 1 for j in range(1, data.n + 1) if j != i
    )
    if branched_neighbour:
        return SplitStatus.NO
    if data.gamma[i - 1] == 0:
        return SplitStatus.YES
    if w.gamma_data is None:
        return SplitStatus.UNDETERMINED
    even = all(p.mult_on(i) % 2 == 0 for p in w.gamma_data.on_curve(i) if p.meets_btilde)
    return SplitStatus.YES if even else SplitStatus.NO


def curve_records(w: WeightedDigraph, data: CanResData, lattice: Optional[ResolutionLattice] = None) -> Tuple[CurveRecord, ...]:
    """每条例外曲线的记录"""
    lattice = lattice or matrices(w.digraph)
    records = []
    for i in range(1, data.n + 1):
        e_sq = lattice.s(i, i)
        eps = data.epsilon[i - 1]
        gamma_i = data.gamma[i - 1]
        numerator = 2 * e_sq
        denominator = (1 + eps) ** 2
        if numerator % denominator:
            raise ParityViolation(f"F{i}² = {numerator}/{denominator} 不是整数")
        split = _split_status(i, w, data, lattice)
        halves = None
        if split is SplitStatus.YES:
            halves = (e_sq - gamma_i // 2, e_sq - gamma_i // 2, gamma_i // 2)
        points = tuple(w.gamma_data.on_curve(i)) if w.gamma_data is not None else None
        records.append(
            CurveRecord(
                index=i,
                E_sq=e_sq,
                eps=eps,
                gamma_i=gamma_i,
                split=split,
                F_sq=numerator // denominator,
                pa_F=gamma_i // 2 + eps - 1,
                halves=halves,
                gamma_points=points,
            )
        )
    return tuple(records)


def with_curves(w: WeightedDigraph, data: CanResData, lattice: Optional[ResolutionLattice] = None) -> CanResData:
    """返回附带曲线记录的 CanResData"""
    return replace(data, curves=curve_records(w, data, lattice))


def D_divisor(data: CanResData, lattice: ResolutionLattice) -> DDivisor:
    """D 在 E^* 基下的系数以及 D·E_i"""
    coeffs = tuple(a // 2 - 1 for a in data.alpha)
    # E_i = Σ n_ij E_j^*，(E_i^*·E_j^*) = −δ_ij
    pairings = tuple(
        -sum(int(lattice.N[i, j]) * coeffs[j] for j in range(data.n)) for i in range(data.n)
    )
    return DDivisor(coeffs, pairings)


__all__ = [
    "SplitStatus",
    "WeightedDigraph",
    "CurveRecord",
    "CanResData",
    "DDivisor",
    "derive_mu_eps",
    "alpha_tilde_from_mu",
    "validate_gamma_data",
    "check_complete",
    "derive_vectors",
    "curve_records",
    "with_curves",
    "D_divisor",
]
