"""
测试多项式解析、芽校验与局部相交数
"""
import unittest

from core.errors import GermError, InputError, PolySyntaxError
from planecurve.poly import BivariatePoly, germ_check, germ_diagnostics, intersection_number, parse_poly


class TestParsePoly(unittest.TestCase):
    """测试 parse_poly"""

    def test_expand_exactly(self):
        """展开后的项与系数精确"""
        f = parse_poly("y*(y^2-x^3)")
        self.assertEqual(f.terms, {(0, 3): 1, (3, 1): -1})

    def test_rational_coefficients(self):
        f = parse_poly("x^2/2 + y^3")
        self.assertEqual(f.terms[(2, 0)] * 2, 1)

    def test_unknown_symbol_position(self):
        """未知字符报告位置"""
        with self.assertRaises(PolySyntaxError) as ctx:
            parse_poly("x^2+z")
        self.assertEqual(ctx.exception.position, 4)
        self.assertEqual(ctx.exception.exit_code, 2)

    def test_empty(self):
        with self.assertRaises(PolySyntaxError) as ctx:
            parse_poly("   ")
        self.assertEqual(ctx.exception.position, 0)

    def test_dangling_operator(self):
        with self.assertRaises(PolySyntaxError):
            parse_poly("x^2+")

    def test_multiplicity(self):
        self.assertEqual(parse_poly("x^3+y^5").multiplicity(), 3)
        self.assertEqual(parse_poly("x*y").multiplicity(), 2)
        self.assertEqual(str(parse_poly("x^2+y^3")).count("^"), 2)


class TestGermCheck(unittest.TestCase):
    """测试芽校验"""

    def test_smooth_origin(self):
        """重数 1 的芽不是奇点"""
        with self.assertRaises(GermError) as ctx:
            germ_check(parse_poly("x"))
        self.assertEqual([d.rule for d in ctx.exception.diagnostics], ["singular"])

    def test_not_square_free(self):
        rules = [d.rule for d in germ_diagnostics(parse_poly("x^2"))]
        self.assertIn("square-free", rules)

    def test_origin_not_on_curve(self):
        rules = [d.rule for d in germ_diagnostics(parse_poly("1+x^2+y^2"))]
        self.assertIn("origin", rules)

    def test_zero(self):
        self.assertEqual([d.rule for d in germ_diagnostics(BivariatePoly.zero())], ["zero"])

    def test_node_is_singular(self):
        """结点重数为 2"""
        self.assertEqual(germ_check(parse_poly("x*y")), 2)


class TestIntersectionNumber(unittest.TestCase):
    """测试 ord_x Res_y"""

    def test_tangent_parabola(self):
        self.assertEqual(intersection_number(parse_poly("y-x^2"), parse_poly("y")), 2)

    def test_cusp_and_tangent(self):
        """尖点与切线的相交数为 3"""
        self.assertEqual(intersection_number(parse_poly("y^2-x^3"), parse_poly("y")), 3)

    def test_two_cusps(self):
        """两条不同的尖点：按 Noether 公式 2·2 + 2 = 6"""
        self.assertEqual(intersection_number(parse_poly("y^2-x^3"), parse_poly("y^2-2*x^3")), 6)

    def test_common_component(self):
        with self.assertRaises(InputError):
            intersection_number(parse_poly("y"), parse_poly("y*(y-x)"))

    def test_leading_coefficient_vanishes(self):
        with self.assertRaises(InputError):
            intersection_number(parse_poly("x"), parse_poly("y"))


if __name__ == "__main__":
    unittest.main()
