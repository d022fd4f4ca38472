"""
Enriques 有向图与消解格

Enriques 有向图记录逐次爆破的中心点以及它们之间的邻近关系
（q_j → q_i 表示 q_j 位于 E_i 的严格变换上）。由它可以得到四个等价的矩阵编码：

- Q: 邻近矩阵，q_ij = 1 当且仅当 q_j → q_i
- N = I − Q: E_i = Σ_j n_ij E_j^*
- M = N⁻¹: E_i^* = Σ_j m_ij E_j
- S = −N·Nᵀ: 例外曲线的相交矩阵

下标在所有输入输出中都从 1 开始。
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, eye, zeros

from core.errors import CrossCheckMismatch, Diagnostic, DigraphError
from utils.logger import logger


Arrow = Tuple[int, int]


@dataclass(frozen=True)
class EnriquesDigraph:
    """Enriques 有向图

    Attributes:
        n: 爆破的点数
        prox: (j, i) 对的集合，表示 q_j 邻近于 q_i
    """
    n: int
    prox: FrozenSet[Arrow] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "prox", frozenset((int(j), int(i)) for j, i in self.prox))

    def targets(self, j: int) -> List[int]:
        """q_j 邻近的所有点，升序"""
        return sorted(i for jj, i in self.prox if jj == j)

    def proximate_to(self, i: int) -> List[int]:
        """邻近于 q_i 的所有点，升序"""
        return sorted(j for j, ii in self.prox if ii == i)

    def out_degree(self, j: int) -> int:
        return sum(1 for jj, _ in self.prox if jj == j)

    def in_degree(self, i: int) -> int:
        return sum(1 for _, ii in self.prox if ii == i)

    def parent(self, j: int) -> Optional[int]:
        """q_j 位于哪个点的第一邻域，即邻近目标中下标最大的那个"""
        targets = self.targets(j)
        return targets[-1] if targets else None

    def to_dict(self) -> Dict[str, object]:
        """规范化的 JSON 表示（prox 按字典序排序）"""
        return {"n": self.n, "prox": [[j, i] for j, i in sorted(self.prox)]}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "EnriquesDigraph":
        return cls(n=int(data["n"]), prox=frozenset((int(a), int(b)) for a, b in data.get("prox", [])))


@dataclass(frozen=True)
class ResolutionLattice:
    """消解格的三个矩阵"""
    N: ImmutableMatrix
    M: ImmutableMatrix
    S: ImmutableMatrix

    @property
    def n(self) -> int:
        return self.N.shape[0]

    def m(self, i: int, j: int) -> int:
        """m_ij，下标从 1 开始"""
        return int(self.M[i - 1, j - 1])

    def s(self, i: int, j: int) -> int:
        """E_i·E_j"""
        return int(self.S[i - 1, j - 1])

    def rows(self, name: str) -> List[List[int]]:
        """把矩阵转成整数列表，便于序列化"""
        matrix = getattr(self, name)
        return [[int(v) for v in matrix.row(r)] for r in range(matrix.shape[0])]

    def to_e_star(self, coeffs_on_e: Sequence[int]) -> List[int]:
        """Σ c_i E_i 在 E^* 基下的系数，即 c·N"""
        row = ImmutableMatrix([list(coeffs_on_e)]) * self.N
        return [int(v) for v in row]

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """E 基下两个除子的相交数"""
        return int((ImmutableMatrix([list(a)]) * self.S * ImmutableMatrix(list(b)))[0, 0])

    def to_dict(self) -> Dict[str, object]:
        return {"N": self.rows("N"), "M": self.rows("M"), "S": self.rows("S")}


def e_star_pairing(a: Sequence[int], b: Sequence[int]) -> int:
    """E^* 基下的相交数，(E_i^*·E_j^*) = −δ_ij"""
    return -sum(x * y for x, y in zip(a, b))


def validate_digraph(d: EnriquesDigraph) -> List[Diagnostic]:
    """检查 Enriques 有向图的全部规则

    Returns:
        违反规则的诊断列表，空列表表示合法且连通
    """
    problems: List[Diagnostic] = []
    if d.n < 1:
        return [Diagnostic("size", (), f"点数必须为正，实际 {d.n}")]

    for j, i in sorted(d.prox):
        if not (1 <= i <= d.n and 1 <= j <= d.n):
            problems.append(Diagnostic("range", (j, i), "下标越界"))
        elif i >= j:
            problems.append(Diagnostic("order", (j, i), "箭头必须指向更早的点"))
    if problems:
        return problems

    for j in range(1, d.n + 1):
        targets = d.targets(j)
        if len(targets) > 2:
            problems.append(Diagnostic("out-degree", (j,), f"q{j} 邻近于 {len(targets)} 个点"))
        for a in targets:
            for b in targets:
                if a < b and (b, a) not in d.prox:
                    problems.append(
                        Diagnostic("closure", (j, a, b), f"q{j} 邻近于 q{a} 与 q{b}，但 q{b} 不邻近于 q{a}")
                    )

    for a in range(1, d.n + 1):
        for b in range(a + 1, d.n + 1):
            common = [j for j in range(1, d.n + 1) if (j, a) in d.prox and (j, b) in d.prox]
            if len(common) > 1:
                problems.append(
                    Diagnostic("common-proximate", (a, b), f"有多个点同时邻近于 q{a} 与 q{b}: {common}")
                )

    for j in range(2, d.n + 1):
        if d.out_degree(j) == 0:
            problems.append(Diagnostic("connectivity", (j,), f"q{j} 不邻近于任何点"))

    return problems


def ensure_valid(d: EnriquesDigraph) -> None:
    """非法时抛出 DigraphError"""
    problems = validate_digraph(d)
    if problems:
        raise DigraphError("Enriques 有向图非法", problems)


def proximity_matrix(d: EnriquesDigraph) -> ImmutableMatrix:
    """Q 矩阵"""
    q = zeros(d.n, d.n)
    for j, i in d.prox:
        q[i - 1, j - 1] = 1
    return ImmutableMatrix(q)


def _m_by_columns(d: EnriquesDigraph) -> ImmutableMatrix:
    """逐列构造 M: 第 j 列等于 e_j 加上 q_j 所邻近各点的列"""
    columns: List[List[int]] = []
    for j in range(1, d.n + 1):
        col = [0] * d.n
        col[j - 1] = 1
        for i in d.targets(j):
            col = [a + b for a, b in zip(col, columns[i - 1])]
        columns.append(col)
    return ImmutableMatrix(d.n, d.n, lambda r, c: columns[c][r])


def matrices(d: EnriquesDigraph) -> ResolutionLattice:
    """计算 N, M, S，并用两种方式交叉验证 M"""
    ensure_valid(d)
    q = proximity_matrix(d)
    n_matrix = ImmutableMatrix(eye(d.n) - q)

    m_series = zeros(d.n, d.n)
    power = eye(d.n)
    for _ in range(d.n):
        m_series += power
        power = power * q
    m_series = ImmutableMatrix(m_series)
    m_columns = _m_by_columns(d)
    if m_series != m_columns:
        raise CrossCheckMismatch("M 的级数计算与逐列计算不一致")
    if m_series * n_matrix != eye(d.n):
        raise CrossCheckMismatch("M·N ≠ I")

    s_matrix = ImmutableMatrix(-n_matrix * n_matrix.T)
    for i in range(1, d.n + 1):
        if s_matrix[i - 1, i - 1] != -1 - d.in_degree(i):
            raise CrossCheckMismatch(f"S 的第 {i} 个对角元与入度不符")

    return ResolutionLattice(N=n_matrix, M=m_series, S=s_matrix)


def digraph_from_S(S) -> EnriquesDigraph:
    """由相交矩阵 S 还原 Enriques 有向图

    从最后一行开始回代分解 −S = N·Nᵀ，N 为单位上三角且非对角元只能是 0 或 −1。
    """
    try:
        a = -ImmutableMatrix(S)
    except Exception as e:
        raise DigraphError(f"S 不是矩阵: {e}") from e
    n = a.shape[0]
    if n == 0 or a.shape[1] != n:
        raise DigraphError("S 必须是非空方阵")
    if a != a.T:
        raise DigraphError("S 不对称")
    if any(not v.is_integer for v in a):
        raise DigraphError("S 的元素必须是整数")

    entries = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        entries[i][i] = 1
        for j in range(n - 1, i, -1):
            value = int(a[i, j]) - sum(entries[i][k] * entries[j][k] for k in range(j + 1, n))
            if value not in (0, -1):
                raise DigraphError(f"S 不是消解型矩阵: n_{i + 1}{j + 1} = {value}")
            entries[i][j] = value
        if int(a[i, i]) != 1 + sum(entries[i][k] ** 2 for k in range(i + 1, n)):
            raise DigraphError(f"S 不是消解型矩阵: 第 {i + 1} 个对角元不匹配")

    prox = frozenset((j + 1, i + 1) for i in range(n) for j in range(i + 1, n) if entries[i][j] == -1)
    d = EnriquesDigraph(n=n, prox=prox)
    problems = validate_digraph(d)
    if problems:
        raise DigraphError("由 S 还原出的有向图非法", problems)
    return d


def infinitesimal_order(d: EnriquesDigraph, i: int, j: int) -> Optional[int]:
    """q_j 相对 q_i 的无穷近阶数，不是无穷近时返回 None"""
    order = 0
    current: Optional[int] = j
    while current is not None and current >= i:
        if current == i:
            return order
        current = d.parent(current)
        order += 1
    return None


def petals(d: EnriquesDigraph, i: int) -> List[List[int]]:
    """把邻近于 q_i 的点划分成花瓣

    每个花瓣是一条链：第一个点在 q_i 的第一邻域，后一个点在前一个点的第一邻域。
    """
    proximate = d.proximate_to(i)
    children: Dict[int, List[int]] = {}
    for j in proximate:
        children.setdefault(d.parent(j), []).append(j)

    chains: List[List[int]] = []
    for head in children.get(i, []):
        chain = [head]
        while children.get(chain[-1]):
            chain.append(children[chain[-1]][0])
        chains.append(chain)

    covered = sorted(j for chain in chains for j in chain)
    if covered != proximate:
        raise CrossCheckMismatch(f"q{i} 的花瓣没有覆盖全部邻近点")
    return chains


def relabel(d: EnriquesDigraph, perm: Dict[int, int]) -> EnriquesDigraph:
    """按置换 old → new 重新编号"""
    if sorted(perm) != list(range(1, d.n + 1)) or sorted(perm.values()) != list(range(1, d.n + 1)):
        raise DigraphError("重编号必须是 1..n 的置换")
    result = EnriquesDigraph(n=d.n, prox=frozenset((perm[j], perm[i]) for j, i in d.prox))
    ensure_valid(result)
    return result


def find_isomorphism(
    d1: EnriquesDigraph,
    d2: EnriquesDigraph,
    weights1: Optional[Sequence[int]] = None,
    weights2: Optional[Sequence[int]] = None,
) -> Optional[Dict[int, int]]:
    """回溯搜索保持邻近关系（及可选权重）的同构 π: d1 → d2，π(1) = 1"""
    if d1.n != d2.n or len(d1.prox) != len(d2.prox):
        return None
    n = d1.n

    def signature(d: EnriquesDigraph, weights: Optional[Sequence[int]], v: int) -> Tuple[int, int, int]:
        return (d.in_degree(v), d.out_degree(v), weights[v - 1] if weights is not None else 0)

    sig1 = {v: signature(d1, weights1, v) for v in range(1, n + 1)}
    sig2 = {v: signature(d2, weights2, v) for v in range(1, n + 1)}
    mapping: Dict[int, int] = {}
    used = set()

    def consistent(v: int, u: int) -> bool:
        for a, b in mapping.items():
            if ((v, a) in d1.prox) != ((u, b) in d2.prox):
                return False
            if ((a, v) in d1.prox) != ((b, u) in d2.prox):
                return False
        return True

    def extend(v: int) -> bool:
        if v > n:
            return True
        candidates = [1] if v == 1 else range(2, n + 1)
        for u in candidates:
            if u in used or sig1[v] != sig2[u] or not consistent(v, u):
                continue
            mapping[v] = u
            used.add(u)
            if extend(v + 1):
                return True
            del mapping[v]
            used.discard(u)
        return False

    if extend(1):
        logger.debug(f"找到同构: {mapping}")
        return dict(mapping)
    return None


__all__ = [
    "EnriquesDigraph",
    "ResolutionLattice",
    "e_star_pairing",
    "validate_digraph",
    "ensure_valid",
    "proximity_matrix",
    "matrices",
    "digraph_from_S",
    "infinitesimal_order",
    "petals",
    "relabel",
    "find_isomorphism",
]
