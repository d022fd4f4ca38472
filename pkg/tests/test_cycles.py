"""
测试纤维圈、基本圈与归纳算法
"""
import unittest

import pytest

from core.classify import dynkin_matrix
from core.cycles import (
    ExcCycle,
    cycle_pa,
    fiber_lattice,
    fundamental_cycle_inductive,
    oracle_lattice,
)
from core.errors import SplitAmbiguity
from core.generators import example_chain
from tests.fixtures import EXPECTED, FIXTURES, load, stages


class TestFixtureCycles(unittest.TestCase):
    """fixture 上的 F 与 Z"""

    def test_fiber_and_fundamental(self):
        for name in FIXTURES:
            expected = EXPECTED[name]
            _, _, cycles = stages(load(name))
            self.assertEqual(cycles.fiber.coeffs, expected["F"], name)
            self.assertEqual(cycles.fundamental.coeffs, expected["Z"], name)
            self.assertEqual(cycles.witness, expected["witness"], name)

    def test_squares(self):
        """F² = −2；有见证点时 Z² = −1"""
        for name in FIXTURES:
            _, _, cycles = stages(load(name))
            self.assertEqual(cycles.fiber.self_intersection, -2, name)
            expected = -1 if cycles.witness is not None else -2
            self.assertEqual(cycles.fundamental.self_intersection, expected, name)

    def test_fx_a_lattice(self):
        """FX-A 的 F 格"""
        data, lattice, cycles = stages(load("fx_a"))
        self.assertEqual(fiber_lattice(data, lattice), [[-1, 1], [1, -2]])
        self.assertEqual([list(row) for row in cycles.lattice], [[-1, 1], [1, -2]])

    def test_genera(self):
        """FX-A: p_a(F) = 0, p_a(Z) = 1；FX-B: p_a(F) = 2"""
        _, _, cycles = stages(load("fx_a"))
        self.assertEqual((cycles.fiber.pa, cycles.fundamental.pa), (0, 1))
        self.assertEqual(cycles.summation_genus, 0)
        _, _, cycles = stages(load("fx_b"))
        self.assertEqual(cycles.fiber.pa, 2)
        self.assertEqual(cycles.pairwise_genus["F"], 2)

    def test_oracle_agrees(self):
        """归纳算法与闭式公式一致"""
        for name in ("fx_a", "fx_b", "fx_c", "fx_d", "fx_f"):
            _, _, cycles = stages(load(name))
            self.assertIsNone(cycles.oracle_skipped, name)
            self.assertEqual(cycles.inductive, cycles.fundamental.coeffs, name)

    def test_oracle_skipped_on_undetermined_split(self):
        """FX-E 的分裂无法判定，归纳算法被跳过"""
        data, lattice, cycles = stages(load("fx_e"))
        self.assertIsNotNone(cycles.oracle_skipped)
        self.assertIsNone(cycles.inductive)
        with self.assertRaises(SplitAmbiguity):
            oracle_lattice(data, lattice)

    def test_report_keys(self):
        _, _, cycles = stages(load("fx_a"))
        self.assertEqual(list(cycles.to_dict()), ["F", "Z", "F_lattice", "inductive_Z", "oracle_skipped"])


class TestInductiveAlgorithm(unittest.TestCase):
    """测试归纳算法本身"""

    def test_dynkin_fundamental_cycles(self):
        """ADE 的基本圈是最高根"""
        self.assertEqual(fundamental_cycle_inductive(dynkin_matrix("A3")).coeffs, (1, 1, 1))
        self.assertEqual(sorted(fundamental_cycle_inductive(dynkin_matrix("D5")).coeffs), [1, 1, 1, 2, 2])
        self.assertEqual(sorted(fundamental_cycle_inductive(dynkin_matrix("E8")).coeffs), [2, 2, 3, 3, 4, 4, 5, 6])

    def test_self_intersection(self):
        self.assertEqual(fundamental_cycle_inductive(dynkin_matrix("E6")).self_intersection, -2)

    def test_empty_matrix(self):
        with self.assertRaises(ValueError):
            fundamental_cycle_inductive([])


class TestCyclePa(unittest.TestCase):
    """测试逐项亏格"""

    def test_fx_a(self):
        matrix = [[-1, 1], [1, -2]]
        self.assertEqual(cycle_pa((1, 1), matrix, [0, 1]), 1)
        self.assertEqual(cycle_pa((2, 1), matrix, [0, 1]), 0)

    def test_zero_cycle(self):
        with self.assertRaises(ValueError):
            cycle_pa((0, 0), [[-1, 1], [1, -2]], [0, 1])

    def test_domination(self):
        self.assertTrue(ExcCycle((1, 1)).dominated_by(ExcCycle((2, 1))))
        self.assertFalse(ExcCycle((1, 2)).dominated_by(ExcCycle((2, 1))))


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_chain_family(g, k):
    """链状族：F = (2,1)×k，Z = (1,1) + (2,1)×(k−1)，见证点 q2"""
    _, _, cycles = stages(example_chain(g, k))
    assert cycles.fiber.coeffs == (2, 1) * k
    assert cycles.fundamental.coeffs == (1, 1) + (2, 1) * (k - 1)
    assert cycles.witness == 2
    assert cycles.fiber.pa == g - 1
    assert cycles.fundamental.pa == g


if __name__ == "__main__":
    unittest.main()
