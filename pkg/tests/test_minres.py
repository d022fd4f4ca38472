"""
测试极小消解
"""
import unittest

from core.generators import example_chain
from core.minres import contract, minus_one_curves, rk_check
from tests.fixtures import EXPECTED, FIXTURES, load, stages


def minres(w):
    data, lattice, cycles = stages(w)
    return contract(w, data, lattice, cycles.fiber, cycles.fundamental)


class TestContraction(unittest.TestCase):
    """测试收缩"""

    def test_contracted_sets(self):
        """收缩的曲线恰好是 ε=1 且 E²=−2 的曲线"""
        for name in FIXTURES:
            w = load(name)
            data, lattice, _ = stages(w)
            self.assertEqual(minus_one_curves(w, data, lattice), EXPECTED[name]["contracted"], name)

    def test_fx_a(self):
        """FX-A 收缩 F1 后 F̄2² = −1"""
        result = minres(load("fx_a"))
        self.assertEqual(result.contracted, (1,))
        self.assertEqual(result.survivors, (2,))
        self.assertEqual([list(row) for row in result.bar_intersections], [[-1]])
        self.assertEqual(result.bar_F.coeffs, (1,))
        self.assertEqual(result.bar_Z.coeffs, (1,))
        self.assertEqual(result.bar_F.support, (2,))

    def test_fx_a_predicates(self):
        """FX-A 的三个判据同时成立"""
        result = minres(load("fx_a"))
        self.assertEqual(
            result.predicates,
            {"gap_and_equal": True, "unique_odd_proximate": True, "bar_square_minus_one": True},
        )

    def test_fx_b(self):
        """FX-B 收缩 F3，判据同时不成立"""
        result = minres(load("fx_b"))
        self.assertEqual(result.survivors, (1, 2, 4))
        self.assertEqual([list(row) for row in result.bar_intersections], [[-2, 1, 1], [1, -2, 0], [1, 0, -1]])
        self.assertEqual(result.bar_F.coeffs, (2, 1, 2))
        self.assertEqual(result.bar_Z.coeffs, (1, 1, 1))
        self.assertEqual(result.bar_F.self_intersection, -2)
        self.assertEqual(result.bar_Z.self_intersection, -1)
        self.assertFalse(any(result.predicates.values()))

    def test_fx_d(self):
        """FX-D 与 FX-B 一样收缩 F3"""
        result = minres(load("fx_d"))
        self.assertEqual(result.contracted, (3,))
        self.assertEqual(result.survivors, (1, 2, 4))
        self.assertEqual(result.bar_F.coeffs, (2, 1, 2))
        self.assertEqual(result.bar_Z.coeffs, (1, 1, 1))

    def test_bar_cycles_of_fixtures(self):
        for name in FIXTURES:
            expected = EXPECTED[name]
            if "bar_F" not in expected:
                continue
            result = minres(load(name))
            self.assertEqual(result.contracted, expected["contracted"], name)
            self.assertEqual(result.bar_F.coeffs, expected["bar_F"], name)
            self.assertEqual(result.bar_Z.coeffs, expected["bar_Z"], name)

    def test_nothing_to_contract(self):
        """没有 (−1)-曲线时极小消解就是典范消解"""
        result = minres(load("fx_c"))
        self.assertEqual(result.contracted, ())
        self.assertEqual(result.bar_F.coeffs, EXPECTED["fx_c"]["F"])

    def test_rk(self):
        """z_k 等于邻居系数之和"""
        w = load("fx_a")
        data, lattice, cycles = stages(w)
        self.assertEqual(rk_check(lattice, (1,), cycles.fundamental.coeffs), ((1, 1, 1),))

    def test_report_omits_rk(self):
        self.assertEqual(
            list(minres(load("fx_b")).to_dict()),
            ["contracted", "survivors", "bar_intersections", "bar_F", "bar_Z", "predicates"],
        )


class TestChainFamily(unittest.TestCase):
    """链状族的极小消解"""

    def test_bar_cycles_are_reduced(self):
        """收缩奇数下标后 F̄ = Z̄ = Σ F̄_{2i}，且 F̄² = Z̄² = −1"""
        for g in (1, 2):
            for k in (1, 2, 3):
                result = minres(example_chain(g, k))
                self.assertEqual(result.contracted, tuple(range(1, 2 * k, 2)))
                self.assertEqual(result.bar_F.coeffs, (1,) * k)
                self.assertEqual(result.bar_Z.coeffs, (1,) * k)
                self.assertEqual(result.bar_F.self_intersection, -1)
                self.assertTrue(all(result.predicates.values()))


if __name__ == "__main__":
    unittest.main()
