"""
随机实例生成

供性质测试和 selftest 使用：随机 Enriques 有向图、随机完整的加权有向图、随机分支乘积多项式。
所有函数只依赖传入的 random.Random，同一个种子给出同一组实例。
"""
import random
from typing import Iterator, List, Optional, Set, Tuple

from core.canres import WeightedDigraph, check_complete, derive_mu_eps
from core.gamma import simple_points
from core.lattice import EnriquesDigraph, matrices


def random_digraph(rng: random.Random, n: int, satellite_probability: float = 0.3) -> EnriquesDigraph:
    """逐点构造：新点均匀选择父点，并以给定概率同时成为卫星点"""
    prox: Set[Tuple[int, int]] = set()
    for j in range(2, n + 1):
        parent = rng.randint(1, j - 1)
        prox.add((j, parent))
        if rng.random() < satellite_probability:
            candidates = [
                s for (p, s) in sorted(prox)
                if p == parent and not any((k, parent) in prox and (k, s) in prox for k in range(1, j))
            ]
            if candidates:
                prox.add((j, rng.choice(candidates)))
    return EnriquesDigraph(n=n, prox=frozenset(prox))


def _random_alpha(rng: random.Random, d: EnriquesDigraph) -> List[int]:
    """从后往前取 α̃，保证邻近不等式；尽量让每个中心都是分歧轨迹的奇点"""
    for attempt in range(20):
        alpha = [0] * d.n
        floor = 0 if attempt < 19 else 2
        for i in range(d.n, 0, -1):
            lower = sum(alpha[j - 1] for j in d.proximate_to(i))
            alpha[i - 1] = max(lower, floor) + rng.randint(0, 3)
        mu, _ = derive_mu_eps(WeightedDigraph(d, tuple(alpha)))
        if min(mu) >= 2:
            return alpha
    return alpha


def complete(d: EnriquesDigraph, alpha: List[int], max_n: int) -> Optional[WeightedDigraph]:
    """补点直到得到完整的典范消解

    分歧曲线若仍与 B̃ 相交，在其上加一个 α̃=1 的自由点；两条分歧曲线相交，在交点加一个 α̃=0 的卫星点。
    点数超过 max_n 时返回 None。
    """
    prox = set(d.prox)
    alpha = list(alpha)
    while True:
        current = EnriquesDigraph(n=len(alpha), prox=frozenset(prox))
        weighted = WeightedDigraph(current, tuple(alpha))
        lattice = matrices(current)
        _, eps = derive_mu_eps(weighted)
        n = current.n
        gamma_tilde = [
            alpha[i - 1] - sum(alpha[j - 1] for j in current.proximate_to(i)) for i in range(1, n + 1)
        ]

        step = None
        for i in range(1, n + 1):
            if eps[i - 1] == 1 and gamma_tilde[i - 1] > 0:
                step = ([(n + 1, i)], 1)
                break
        if step is None:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if eps[i - 1] == eps[j - 1] == 1 and lattice.s(i, j) == 1:
                        step = ([(n + 1, j), (n + 1, i)], 0)
                        break
                if step is not None:
                    break
        if step is None:
            result = WeightedDigraph(current, tuple(alpha), simple_points(gamma_tilde))
            return result if not check_complete(result) else None
        if n + 1 > max_n:
            return None
        arrows, weight = step
        prox.update(arrows)
        alpha.append(weight)


def random_weighted_digraph(
    rng: random.Random,
    max_base_n: int = 6,
    max_n: int = 12,
    satellite_probability: float = 0.3,
) -> Optional[WeightedDigraph]:
    """随机完整加权有向图，附带合成的 Γ̃ 简单点；补点后超过 max_n 返回 None"""
    base_n = rng.randint(1, max(1, min(max_base_n, max_n)))
    d = random_digraph(rng, base_n, satellite_probability)
    return complete(d, _random_alpha(rng, d), max_n)


def random_branch_product(rng: random.Random) -> str:
    """1 到 3 个不同分支 y^a ± c·x^b（或坐标轴）的乘积"""
    pool = set()
    target = rng.randint(1, 3)
    while len(pool) < target:
        choice = rng.random()
        if choice < 0.15:
            pool.add("x")
        elif choice < 0.3:
            pool.add("y")
        else:
            a, b, c = rng.randint(1, 4), rng.randint(1, 5), rng.randint(1, 3)
            sign = rng.choice(["+", "-"])
            pool.add(f"y^{a}{sign}{c}*x^{b}")
    return "*".join(f"({branch})" for branch in sorted(pool))


def example_chain(g: int, k: int) -> WeightedDigraph:
    """n = 2k 个点的链 q_i >¹ q_{i−1}，α̃ 全为 2g+1"""
    n = 2 * k
    prox = frozenset((i, i - 1) for i in range(2, n + 1))
    return WeightedDigraph(EnriquesDigraph(n=n, prox=prox), tuple([2 * g + 1] * n))


def random_instances(
    seed: int,
    count: int,
    max_n: int = 12,
    satellite_probability: float = 0.3,
) -> Iterator[Tuple[int, WeightedDigraph]]:
    """按种子产生 count 个随机完整实例，返回 (实例种子, 实例)"""
    produced = 0
    offset = 0
    while produced < count:
        instance_seed = seed + offset
        offset += 1
        w = random_weighted_digraph(random.Random(instance_seed), max_n=max_n, satellite_probability=satellite_probability)
        if w is None:
            continue
        produced += 1
        yield instance_seed, w


__all__ = [
    "random_digraph",
    "complete",
    "random_weighted_digraph",
    "random_branch_product",
    "example_chain",
    "random_instances",
]
