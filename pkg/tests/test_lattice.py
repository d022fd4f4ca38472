"""
测试 Enriques 有向图与消解格
"""
import unittest

from sympy import ImmutableMatrix, eye

from core.errors import DigraphError
from core.lattice import (
    EnriquesDigraph,
    digraph_from_S,
    e_star_pairing,
    ensure_valid,
    find_isomorphism,
    infinitesimal_order,
    matrices,
    petals,
    proximity_matrix,
    relabel,
    validate_digraph,
)
from tests.fixtures import EXPECTED, load


def rules(d: EnriquesDigraph):
    return {p.rule for p in validate_digraph(d)}


class TestMatrices(unittest.TestCase):
    """测试 N, M, S"""

    def setUp(self):
        self.fx_b = load("fx_b").digraph

    def test_fx_b_matrices(self):
        """FX-B 的 M 与 S 与已知结果一致"""
        lattice = matrices(self.fx_b)
        self.assertEqual(lattice.rows("M"), EXPECTED["fx_b"]["M"])
        self.assertEqual(lattice.rows("S"), EXPECTED["fx_b"]["S"])

    def test_inverse_and_gram(self):
        """M·N = I，S = −N·Nᵀ"""
        lattice = matrices(self.fx_b)
        self.assertEqual(lattice.M * lattice.N, eye(4))
        self.assertEqual(lattice.S, -lattice.N * lattice.N.T)
        self.assertEqual(lattice.N, ImmutableMatrix(eye(4) - proximity_matrix(self.fx_b)))

    def test_self_intersection_is_minus_one_minus_indegree(self):
        """E_i² = −1 − #{j: q_j → q_i}"""
        d = load("fx_c").digraph
        lattice = matrices(d)
        for i in range(1, d.n + 1):
            self.assertEqual(lattice.s(i, i), -1 - d.in_degree(i))

    def test_fx_a(self):
        """FX-A 的 M 与 S"""
        lattice = matrices(load("fx_a").digraph)
        self.assertEqual(lattice.rows("M"), EXPECTED["fx_a"]["M"])
        self.assertEqual(lattice.rows("S"), EXPECTED["fx_a"]["S"])

    def test_e_star_conversion(self):
        """E_1 = E_1^* − E_2^*，E^* 基下 (E_i^*)² = −1"""
        lattice = matrices(load("fx_a").digraph)
        self.assertEqual(lattice.to_e_star([1, 0]), [1, -1])
        self.assertEqual(e_star_pairing([1, -1], [1, -1]), -2)
        self.assertEqual(lattice.pairing([1, 0], [1, 0]), -2)

    def test_single_point(self):
        """n=1: S = (−1)"""
        lattice = matrices(EnriquesDigraph(n=1))
        self.assertEqual(lattice.rows("S"), [[-1]])


class TestValidation(unittest.TestCase):
    """测试有向图规则"""

    def test_fixtures_are_valid(self):
        """六个 fixture 都合法"""
        for name in ("fx_a", "fx_b", "fx_c", "fx_d", "fx_e", "fx_f"):
            self.assertEqual(validate_digraph(load(name).digraph), [], name)

    def test_arrow_must_point_down(self):
        """箭头必须指向更早的点"""
        self.assertIn("order", rules(EnriquesDigraph(n=2, prox=frozenset({(1, 2)}))))

    def test_out_of_range(self):
        self.assertIn("range", rules(EnriquesDigraph(n=2, prox=frozenset({(3, 1)}))))

    def test_out_degree(self):
        """一个点最多邻近于两个点"""
        d = EnriquesDigraph(n=4, prox=frozenset({(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)}))
        self.assertIn("out-degree", rules(d))

    def test_closure(self):
        """q4 邻近于 q2 与 q3 时 q3 必须邻近于 q2"""
        d = EnriquesDigraph(n=4, prox=frozenset({(2, 1), (3, 1), (4, 2), (4, 3)}))
        self.assertIn("closure", rules(d))

    def test_common_proximate(self):
        """两个点至多有一个公共的邻近点"""
        d = EnriquesDigraph(n=4, prox=frozenset({(2, 1), (3, 1), (3, 2), (4, 1), (4, 2)}))
        self.assertIn("common-proximate", rules(d))

    def test_connectivity(self):
        self.assertIn("connectivity", rules(EnriquesDigraph(n=2)))

    def test_ensure_valid_raises_with_diagnostics(self):
        """非法有向图抛出 DigraphError 并带诊断"""
        with self.assertRaises(DigraphError) as ctx:
            ensure_valid(EnriquesDigraph(n=2))
        self.assertEqual(ctx.exception.diagnostics[0].rule, "connectivity")
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_canonical_json(self):
        """prox 按字典序输出"""
        d = EnriquesDigraph(n=4, prox=frozenset({(4, 3), (2, 1), (4, 1), (3, 1)}))
        self.assertEqual(d.to_dict(), {"n": 4, "prox": [[2, 1], [3, 1], [4, 1], [4, 3]]})
        self.assertEqual(EnriquesDigraph.from_dict(d.to_dict()), d)


class TestFromS(unittest.TestCase):
    """测试由 S 还原有向图"""

    def test_round_trip_fixtures(self):
        """digraph_from_S(matrices(d).S) = d"""
        for name in ("fx_a", "fx_b", "fx_c", "fx_f"):
            d = load(name).digraph
            self.assertEqual(digraph_from_S(matrices(d).S), d, name)

    def test_rejects_non_resolution_matrix(self):
        with self.assertRaises(DigraphError):
            digraph_from_S([[-1, 2], [2, -1]])

    def test_rejects_asymmetric(self):
        with self.assertRaises(DigraphError):
            digraph_from_S([[-2, 1], [0, -1]])


class TestStructure(unittest.TestCase):
    """测试父点、无穷近阶数与花瓣"""

    def setUp(self):
        self.fx_c = load("fx_c").digraph

    def test_parent(self):
        self.assertIsNone(self.fx_c.parent(1))
        self.assertEqual(self.fx_c.parent(3), 2)
        self.assertEqual(self.fx_c.parent(6), 3)

    def test_infinitesimal_order(self):
        self.assertEqual(infinitesimal_order(self.fx_c, 1, 1), 0)
        self.assertEqual(infinitesimal_order(self.fx_c, 1, 3), 2)
        self.assertEqual(infinitesimal_order(self.fx_c, 1, 5), 3)
        self.assertEqual(infinitesimal_order(self.fx_c, 2, 6), 2)
        self.assertIsNone(infinitesimal_order(self.fx_c, 4, 5))

    def test_petals(self):
        """花瓣是覆盖全部邻近点的链"""
        self.assertEqual(petals(self.fx_c, 2), [[3, 7], [4]])
        self.assertEqual(petals(self.fx_c, 1), [[2, 3, 6]])
        self.assertEqual(petals(self.fx_c, 3), [[5], [6], [7]])
        self.assertEqual(petals(self.fx_c, 4), [])


class TestRelabel(unittest.TestCase):
    """测试重编号与同构"""

    def test_swap_and_recover(self):
        fx_b = load("fx_b").digraph
        swapped = relabel(fx_b, {1: 1, 2: 3, 3: 2, 4: 4})
        self.assertEqual(swapped.prox, frozenset({(2, 1), (3, 1), (4, 1), (4, 2)}))
        self.assertEqual(find_isomorphism(fx_b, swapped), {1: 1, 2: 3, 3: 2, 4: 4})

    def test_relabel_must_keep_order(self):
        """把箭头翻转的重编号被拒绝"""
        with self.assertRaises(DigraphError):
            relabel(load("fx_a").digraph, {1: 2, 2: 1})

    def test_weights_distinguish(self):
        """权重不同的有向图不同构"""
        fx_b, fx_d = load("fx_b"), load("fx_d")
        self.assertIsNotNone(find_isomorphism(fx_b.digraph, fx_d.digraph))
        self.assertIsNone(find_isomorphism(fx_b.digraph, fx_d.digraph, fx_b.alpha_tilde, fx_d.alpha_tilde))

    def test_different_sizes(self):
        self.assertIsNone(find_isomorphism(load("fx_a").digraph, load("fx_b").digraph))


if __name__ == "__main__":
    unittest.main()
