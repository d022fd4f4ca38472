"""
平面曲线的嵌入消解

从一个无平方因子的有理系数芽出发，反复爆破总分歧轨迹 B̃ + Σ ε_i E_i 的奇点，
直到它光滑，输出典范消解的加权 Enriques 有向图与 Γ̃ 支撑点。

每个待处理的点用局部方程 g(x, y) 表示，{x=0} 为 u 轴，{y=0} 为 v 轴，
两条轴上可能各有一条例外曲线经过。中心的顺序：按爆破的先后广度优先；
同一条新曲线上先取第一张图卡中按有理坐标升序排列的点，再取第二张图卡的原点。
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, List, Optional, Set, Tuple

from sympy import Poly, Rational, symbols

from core.canres import WeightedDigraph, check_complete
from core.errors import BlowupLimitExceeded, CrossCheckMismatch, IrrationalCenter
from core.gamma import GammaData, GammaPoint
from core.lattice import EnriquesDigraph
from planecurve.poly import Y, BivariatePoly, germ_check, order_at_zero
from utils.logger import log_operation, logger

IRRATIONAL_SUGGESTION = "在复数域上解析类型不变：可把切方向中的平方和换成平方差（例如 x^2+y^2 → x^2-y^2）后重试"


@dataclass(frozen=True)
class ChartGerm:
    """图卡原点处的局部方程

    Attributes:
        poly: 严格变换的局部方程
        point_id: 该点所在的例外曲线（初始点为 None）
        axis_u: 沿 {x=0} 经过的例外曲线
        axis_v: 沿 {y=0} 经过的例外曲线
        direction: 该点在 point_id 曲线上第一张图卡中的坐标 v，v=∞ 的点与初始点为 None
    """
    poly: BivariatePoly
    point_id: Optional[int] = None
    axis_u: Optional[int] = None
    axis_v: Optional[int] = None
    direction: Optional[Rational] = None

    @property
    def curves_through(self) -> Tuple[int, ...]:
        return tuple(sorted(c for c in (self.axis_u, self.axis_v) if c is not None))


@dataclass(frozen=True)
class ConjugateCluster:
    """新例外曲线上坐标不是有理数的一簇共轭点"""
    curve: int
    factor: Poly
    mult: int
    singular: bool

    @property
    def degree(self) -> int:
        return self.factor.degree()

    def describe(self) -> str:
        v = symbols("v")
        return str(self.factor.as_expr().subs(Y, v)).replace("**", "^")


@dataclass(frozen=True)
class BlowupResult:
    """一次爆破的结果"""
    index: int
    alpha_tilde: int
    points: Tuple[ChartGerm, ...]
    clusters: Tuple[ConjugateCluster, ...]


def blow_up(germ: ChartGerm, index: int) -> BlowupResult:
    """在图卡原点爆破，得到新曲线 E_index 上需要关注的点

    第一张图卡 (x, y) → (u, uv) 覆盖 E 上除 v=∞ 以外的点，第二张图卡 (x, y) → (uv, v)
    只取原点，即 v=∞ 的方向。
    """
    g = germ.poly
    m = g.multiplicity()
    chart_a = g.chart_x(m)
    chart_b = g.chart_y(m)

    restriction = chart_a.restrict_x0()
    roots = set()
    clusters: List[ConjugateCluster] = []
    if restriction.degree() > 0:
        singular_locus = _gcd_all(
            restriction,
            chart_a.diff_x().restrict_x0(),
            chart_a.diff_y().restrict_x0(),
        )
        _, factors = restriction.factor_list()
        for factor, exponent in factors:
            if factor.degree() == 1:
                a, b = factor.all_coeffs()
                roots.add(-b / a)
            else:
                singular = not singular_locus.is_zero and singular_locus.degree() > 0 and singular_locus.rem(factor).is_zero
                clusters.append(ConjugateCluster(index, factor, int(exponent), bool(singular)))
    if germ.axis_v is not None:
        roots.add(0)

    points: List[ChartGerm] = []
    for c in sorted(roots):
        axis_v = germ.axis_v if c == 0 else None
        points.append(ChartGerm(chart_a.shift_y(c), index, index, axis_v, Rational(c)))
    if chart_b.value_at_origin() == 0 or germ.axis_u is not None:
        points.append(ChartGerm(chart_b, index, germ.axis_u, index))

    return BlowupResult(index, m, tuple(points), tuple(clusters))


def _gcd_all(first: Poly, *others: Poly) -> Poly:
    result = first
    for other in others:
        if not other.is_zero:
            result = result.gcd(other)
    return result


@dataclass
class ResolutionState:
    """消解过程的状态机"""
    max_blowups: int = 64
    alpha_tilde: List[int] = field(default_factory=list)
    epsilon: List[int] = field(default_factory=list)
    prox: Set[Tuple[int, int]] = field(default_factory=set)
    gamma_points: List[GammaPoint] = field(default_factory=list)
    pending_points: List[ChartGerm] = field(default_factory=list)
    pending_clusters: List[ConjugateCluster] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.alpha_tilde)

    def eps_of(self, curve: Optional[int]) -> int:
        return 0 if curve is None else self.epsilon[curve - 1]

    def branch_multiplicity(self, germ: ChartGerm) -> int:
        """总分歧轨迹在该点的重数"""
        return germ.poly.multiplicity() + self.eps_of(germ.axis_u) + self.eps_of(germ.axis_v)

    def apply(self, germ: ChartGerm) -> BlowupResult:
        """爆破一个中心并更新状态"""
        if self.n >= self.max_blowups:
            raise BlowupLimitExceeded(f"爆破次数超过上限 {self.max_blowups}")
        index = self.n + 1
        result = blow_up(germ, index)
        eps = (result.alpha_tilde + self.eps_of(germ.axis_u) + self.eps_of(germ.axis_v)) % 2
        self.alpha_tilde.append(result.alpha_tilde)
        self.epsilon.append(eps)
        for target in germ.curves_through:
            self.prox.add((index, target))
        self.pending_points.extend(result.points)
        self.pending_clusters.extend(result.clusters)
        logger.debug(
            f"爆破 q{index}: 重数 {result.alpha_tilde}, ε={eps}, 邻近于 {list(germ.curves_through)}"
        )
        return result


def singular_centers(state: ResolutionState) -> List[ChartGerm]:
    """处理上一轮爆破产生的点，返回下一轮要爆破的中心

    总分歧轨迹在该点重数 ≥ 2 的点是中心；其余 B̃ 经过的点和例外曲线的交点记入 Γ̃ 支撑点。

    Raises:
        IrrationalCenter: 需要爆破的点坐标不是有理数
    """
    for cluster in state.pending_clusters:
        if cluster.singular or state.eps_of(cluster.curve) == 1:
            raise IrrationalCenter(cluster.describe(), cluster.curve, IRRATIONAL_SUGGESTION)
        state.gamma_points.append(
            GammaPoint((cluster.curve,), True, (cluster.mult,), cluster.degree)
        )

    centers: List[ChartGerm] = []
    for germ in state.pending_points:
        if state.branch_multiplicity(germ) >= 2:
            centers.append(germ)
            continue
        meets = germ.poly.value_at_origin() == 0
        if not meets and len(germ.curves_through) < 2:
            continue
        on: List[int] = []
        mult: List[int] = []
        if germ.axis_u is not None:
            on.append(germ.axis_u)
            mult.append(order_at_zero(germ.poly.restrict_x0()) or 0)
        if germ.axis_v is not None:
            on.append(germ.axis_v)
            mult.append(order_at_zero(germ.poly.restrict_y0()) or 0)
        state.gamma_points.append(GammaPoint(tuple(on), meets, tuple(mult)))

    state.pending_points = []
    state.pending_clusters = []
    return centers


def canonical_resolution_trace(f: BivariatePoly, max_blowups: int = 64) -> WeightedDigraph:
    """运行典范消解，返回附带 Γ̃ 数据的加权有向图

    Raises:
        GermError: f 不是奇异芽
        IrrationalCenter: 需要爆破非有理点
        BlowupLimitExceeded: 超过爆破上限
    """
    mult = germ_check(f)
    log_operation("trace", poly=str(f), mult=mult)

    state = ResolutionState(max_blowups=max_blowups)
    state.pending_points = [ChartGerm(f)]
    queue: Deque[ChartGerm] = deque()
    while True:
        queue.extend(singular_centers(state))
        if not queue:
            break
        while queue:
            state.apply(queue.popleft())

    digraph = EnriquesDigraph(n=state.n, prox=frozenset(state.prox))
    weighted = WeightedDigraph(digraph, tuple(state.alpha_tilde), GammaData(tuple(state.gamma_points)))
    problems = check_complete(weighted)
    if problems:
        raise CrossCheckMismatch("消解轨迹未通过完整性检查: " + "; ".join(str(p) for p in problems))

    log_operation("trace", n=state.n, alpha_tilde=list(state.alpha_tilde), epsilon=list(state.epsilon))
    return weighted


__all__ = [
    "IRRATIONAL_SUGGESTION",
    "ChartGerm",
    "ConjugateCluster",
    "BlowupResult",
    "blow_up",
    "ResolutionState",
    "singular_centers",
    "canonical_resolution_trace",
]
