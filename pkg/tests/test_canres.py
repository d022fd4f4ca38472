"""
测试典范消解的向量、曲线记录与有向图 JSON 读写
"""
import json
import tempfile
import unittest
from pathlib import Path

from core.canres import (
    SplitStatus,
    alpha_tilde_from_mu,
    check_complete,
    derive_vectors,
    with_curves,
)
from core.digraph_io import digraph_from_json, digraph_to_json, dumps, load_digraph
from core.errors import CompletenessViolation, DigraphError
from tests.fixtures import EXPECTED, FIXTURES, load


def resolve_data(w):
    return with_curves(w, derive_vectors(w))


class TestVectors(unittest.TestCase):
    """测试 μ, ε, α, β, γ̃, γ"""

    def test_fixture_vectors(self):
        """全部 fixture 的向量与手算结果一致"""
        keys = ("mu", "epsilon", "alpha", "beta_tilde", "beta", "gamma_tilde", "gamma")
        for name in FIXTURES:
            data = derive_vectors(load(name))
            for key in keys:
                if key in EXPECTED[name]:
                    self.assertEqual(getattr(data, key), EXPECTED[name][key], f"{name}.{key}")

    def test_parity(self):
        """α, β, γ 全为偶数，ε ≡ β̃ mod 2"""
        for name in FIXTURES:
            data = derive_vectors(load(name))
            self.assertTrue(all(v % 2 == 0 for v in data.alpha + data.beta + data.gamma), name)
            self.assertEqual(tuple(b % 2 for b in data.beta_tilde), data.epsilon, name)

    def test_alpha_tilde_from_mu(self):
        """由 μ 反推 α̃"""
        d = load("fx_b").digraph
        self.assertEqual(alpha_tilde_from_mu(d, (7, 4, 3, 4)), (7, 3, 2, 2))

    def test_alpha_tilde_from_mu_wrong_length(self):
        with self.assertRaises(DigraphError):
            alpha_tilde_from_mu(load("fx_b").digraph, (7, 4))


class TestCompleteness(unittest.TestCase):
    """测试完整性检查"""

    def test_fixtures_complete(self):
        for name in FIXTURES:
            self.assertEqual(check_complete(load(name)), [], name)

    def test_branched_curve_meets_btilde(self):
        """单点 α̃=3：分歧曲线与 B̃ 相交"""
        w = digraph_from_json({"n": 1, "prox": [], "alpha_tilde": [3]})
        rules = [d.rule for d in check_complete(w)]
        self.assertIn("branched-meets-btilde", rules)
        with self.assertRaises(CompletenessViolation) as ctx:
            derive_vectors(w)
        self.assertEqual(ctx.exception.exit_code, 4)

    def test_not_a_center(self):
        """μ < 2 的点不是奇点"""
        w = digraph_from_json({"n": 1, "prox": [], "alpha_tilde": [1]})
        self.assertIn("center", [d.rule for d in check_complete(w)])

    def test_proximity_inequality(self):
        """γ̃ 为负时邻近不等式不成立"""
        w = digraph_from_json({"n": 2, "prox": [[2, 1]], "alpha_tilde": [2, 4]})
        self.assertIn("proximity", [d.rule for d in check_complete(w)])

    def test_gamma_degree(self):
        """Γ̃ 支撑点的次数和必须等于 γ̃"""
        data = {"n": 2, "prox": [[2, 1]], "alpha_tilde": [3, 3], "gamma_points": [{"on": [2], "mult": 1}]}
        diagnostics = check_complete(digraph_from_json(data))
        self.assertEqual([d.rule for d in diagnostics], ["gamma-degree"])
        self.assertEqual(diagnostics[0].indices, (2,))

    def test_node_without_intersection(self):
        """结点所在的两条曲线必须相交"""
        data = {
            "n": 4, "prox": [[2, 1], [3, 1], [4, 1], [4, 3]], "alpha_tilde": [7, 3, 2, 2],
            "gamma_points": [{"on": [2, 3], "meets_btilde": False, "mult": 0}],
        }
        self.assertIn("gamma-node", [d.rule for d in check_complete(digraph_from_json(data))])


class TestCurveRecords(unittest.TestCase):
    """测试 F_i 的数据"""

    def test_fx_a_curves(self):
        """FX-A: F1² = −1, p_a = 0；F2² = −2, p_a = 1"""
        curves = resolve_data(load("fx_a")).curves
        self.assertEqual([(c.F_sq, c.pa_F) for c in curves], [(-1, 0), (-2, 1)])
        self.assertEqual(curves[1].split, SplitStatus.NO)

    def test_split_undetermined_without_points(self):
        """γ_i > 0 且没有 Γ̃ 数据时无法判断是否分裂"""
        curves = resolve_data(load("fx_e")).curves
        self.assertEqual(curves[0].split, SplitStatus.UNDETERMINED)

    def test_split_with_tangent_point(self):
        """B̃ 在唯一交点处与 E1 相切，原像分裂成两条"""
        w = digraph_from_json(
            {"n": 1, "prox": [], "alpha_tilde": [2], "gamma_points": [{"on": [1], "mult": 2}]}
        )
        curve = resolve_data(w).curves[0]
        self.assertEqual(curve.split, SplitStatus.YES)
        self.assertEqual(curve.halves, (-2, -2, 1))
        self.assertEqual(curve.to_dict()["F_sq"], [-2, -2])
        self.assertEqual(curve.to_dict()["halves_meet"], 1)

    def test_no_split_with_transversal_points(self):
        w = digraph_from_json(
            {"n": 1, "prox": [], "alpha_tilde": [2], "gamma_points": [{"on": [1], "mult": 1}, {"on": [1], "mult": 1}]}
        )
        self.assertEqual(resolve_data(w).curves[0].split, SplitStatus.NO)

    def test_branched_curves_never_split(self):
        for name in FIXTURES:
            data = resolve_data(load(name))
            for curve in data.curves:
                if curve.eps == 1:
                    self.assertEqual(curve.split, SplitStatus.NO, f"{name} E{curve.index}")


class TestDigraphJson(unittest.TestCase):
    """测试 JSON 读写"""

    def test_mu_input(self):
        """给出 mu 时换算成 α̃"""
        w = digraph_from_json({"n": 4, "prox": [[2, 1], [3, 1], [4, 1], [4, 3]], "mu": [7, 4, 3, 4]})
        self.assertEqual(w.alpha_tilde, (7, 3, 2, 2))

    def test_weights_exclusive(self):
        """alpha_tilde 与 mu 必须恰好给出一个"""
        with self.assertRaises(DigraphError):
            digraph_from_json({"n": 1, "prox": [], "alpha_tilde": [2], "mu": [2]})
        with self.assertRaises(DigraphError):
            digraph_from_json({"n": 1, "prox": []})

    def test_schema_violation(self):
        with self.assertRaises(DigraphError) as ctx:
            digraph_from_json({"n": 1, "prox": [], "alpha_tilde": [2], "extra": True})
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_invalid_digraph(self):
        """validate=False 时非法有向图也能读入"""
        data = {"n": 2, "prox": [], "alpha_tilde": [2, 2]}
        with self.assertRaises(DigraphError):
            digraph_from_json(data)
        self.assertEqual(digraph_from_json(data, validate=False).n, 2)

    def test_unreadable_file(self):
        with self.assertRaises(DigraphError):
            load_digraph("/nonexistent/resdouble.json")

    def test_malformed_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text("{\"n\": 1,", encoding="utf-8")
            with self.assertRaises(DigraphError):
                load_digraph(path)

    def test_canonical_output(self):
        """输出与 fixture 文件内容一致"""
        w = load("fx_b")
        self.assertEqual(digraph_to_json(w), {"n": 4, "prox": [[2, 1], [3, 1], [4, 1], [4, 3]], "alpha_tilde": [7, 3, 2, 2]})
        self.assertEqual(json.loads(dumps(digraph_to_json(w))), digraph_to_json(w))
        self.assertTrue(dumps({}).endswith("\n"))


if __name__ == "__main__":
    unittest.main()
