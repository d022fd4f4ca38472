"""
有理系数二元多项式

对 sympy.Poly 的薄封装：系数域固定为 QQ，变量固定为 x, y。
爆破后的局部坐标 (u, v) 仍然记作 (x, y)，{x=0} 与 {y=0} 分别称为 u 轴与 v 轴。
"""
import re
from typing import Dict, List, Optional, Tuple

from sympy import QQ, Poly, Rational, gcd, resultant, symbols
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from core.errors import Diagnostic, GermError, InputError, PolySyntaxError


X, Y = symbols("x y")

_ALLOWED = re.compile(r"[xy0-9+\-*/^()\s]")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)

Monomial = Tuple[int, int]


class BivariatePoly:
    """QQ 上的 x, y 二元多项式"""

    __slots__ = ("_poly",)

    def __init__(self, poly: Poly):
        self._poly = poly

    @classmethod
    def from_expr(cls, expr) -> "BivariatePoly":
        return cls(Poly(expr, X, Y, domain=QQ))

    @classmethod
    def from_terms(cls, terms: Dict[Monomial, object]) -> "BivariatePoly":
        cleaned = {(int(i), int(j)): Rational(c) for (i, j), c in terms.items() if c != 0}
        if not cleaned:
            return cls.zero()
        return cls(Poly.from_dict(cleaned, X, Y, domain=QQ))

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls(Poly(0, X, Y, domain=QQ))

    @property
    def poly(self) -> Poly:
        return self._poly

    @property
    def terms(self) -> Dict[Monomial, Rational]:
        """非零项 {(deg_x, deg_y): 系数}"""
        if self._poly.is_zero:
            return {}
        return {(int(i), int(j)): Rational(c) for (i, j), c in self._poly.as_dict().items() if c != 0}

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    def multiplicity(self) -> Optional[int]:
        """原点处的重数（最低总次数），零多项式返回 None"""
        terms = self.terms
        if not terms:
            return None
        return min(i + j for i, j in terms)

    def value_at_origin(self) -> Rational:
        return self.terms.get((0, 0), Rational(0))

    def total_degree(self) -> int:
        return self._poly.total_degree()

    def diff_x(self) -> "BivariatePoly":
        return BivariatePoly(self._poly.diff(X))

    def diff_y(self) -> "BivariatePoly":
        return BivariatePoly(self._poly.diff(Y))

    def restrict_x0(self) -> Poly:
        """限制到 u 轴 {x=0}，得到 y 的一元多项式"""
        return _univariate({j: c for (i, j), c in self.terms.items() if i == 0}, Y)

    def restrict_y0(self) -> Poly:
        """限制到 v 轴 {y=0}，得到 x 的一元多项式"""
        return _univariate({i: c for (i, j), c in self.terms.items() if j == 0}, X)

    def chart_x(self, m: int) -> "BivariatePoly":
        """(x, y) → (u, uv) 后除以 u^m"""
        return BivariatePoly.from_terms(_shifted(self.terms, m, lambda i, j: (i + j - m, j)))

    def chart_y(self, m: int) -> "BivariatePoly":
        """(x, y) → (uv, v) 后除以 v^m"""
        return BivariatePoly.from_terms(_shifted(self.terms, m, lambda i, j: (i, i + j - m)))

    def shift_y(self, c) -> "BivariatePoly":
        """g(x, y + c)"""
        if c == 0:
            return self
        return BivariatePoly.from_expr(self._poly.as_expr().subs(Y, Y + Rational(c)))

    def gcd(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly(gcd(self._poly, other._poly))

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly(self._poly + other._poly)

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly(self._poly - other._poly)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly(self._poly * other._poly)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self) -> str:
        return str(self._poly.as_expr()).replace("**", "^")

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"


def _univariate(coeffs: Dict[int, Rational], var) -> Poly:
    if not coeffs:
        return Poly(0, var, domain=QQ)
    return Poly.from_dict({(k,): v for k, v in coeffs.items()}, var, domain=QQ)


def _shifted(terms: Dict[Monomial, Rational], m: int, move) -> Dict[Monomial, Rational]:
    moved: Dict[Monomial, Rational] = {}
    for (i, j), c in terms.items():
        a, b = move(i, j)
        if a < 0 or b < 0:
            raise ValueError(f"除去的例外幂次 {m} 超过了重数")
        moved[(a, b)] = c
    return moved


def order_at_zero(p: Poly) -> Optional[int]:
    """一元多项式在 0 处的零点阶数，零多项式返回 None"""
    if p.is_zero:
        return None
    return min(m[0] for m in p.monoms())


def parse_poly(text: str) -> BivariatePoly:
    """解析 x, y 的多项式表达式

    支持整数与有理数字面量、+ - * / ^ 和括号，展开是精确的。

    Raises:
        PolySyntaxError: 语法错误或未知符号，带出错位置
    """
    for position, char in enumerate(text):
        if not _ALLOWED.match(char):
            raise PolySyntaxError(f"未知符号 {char!r}", position)
    if not text.strip():
        raise PolySyntaxError("表达式为空", 0)

    try:
        expr = parse_expr(text, local_dict={"x": X, "y": Y}, transformations=_TRANSFORMATIONS, evaluate=True)
    except SyntaxError as e:
        offset = e.offset - 1 if e.offset else None
        if offset is not None:
            offset = max(0, min(offset, len(text)))
        raise PolySyntaxError(f"语法错误: {e.msg}", offset) from e
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise PolySyntaxError(f"无法解析表达式: {e}") from e

    unknown = sorted(str(s) for s in expr.free_symbols - {X, Y})
    if unknown:
        name = unknown[0]
        match = re.search(rf"(?<![a-z]){re.escape(name)}", text)
        raise PolySyntaxError(f"未知符号 {name!r}", match.start() if match else None)

    try:
        return BivariatePoly.from_expr(expr.expand())
    except Exception as e:
        raise PolySyntaxError(f"不是 x, y 的多项式: {text}") from e


def germ_diagnostics(f: BivariatePoly) -> List[Diagnostic]:
    """检查 f 是否定义一个奇异的既约曲线芽"""
    if f.is_zero:
        return [Diagnostic("zero", (), "零多项式")]
    problems: List[Diagnostic] = []
    if f.value_at_origin() != 0:
        problems.append(Diagnostic("origin", (), "曲线不经过原点"))
    common = f.gcd(f.diff_x()).gcd(f.diff_y())
    if common.total_degree() > 0:
        problems.append(Diagnostic("square-free", (), f"f 不是无平方因子的，公共因子 {common}"))
    mult = f.multiplicity()
    if f.value_at_origin() == 0 and mult < 2:
        problems.append(Diagnostic("singular", (), f"原点不是奇点（重数 {mult}）"))
    return problems


def germ_check(f: BivariatePoly) -> int:
    """校验芽并返回原点处的重数

    Raises:
        GermError: 零多项式、非既约或原点非奇异
    """
    problems = germ_diagnostics(f)
    if problems:
        raise GermError("; ".join(d.message for d in problems), problems)
    return f.multiplicity()


def intersection_number(f: BivariatePoly, g: BivariatePoly) -> int:
    """原点处的局部相交数 ord_x Res_y(f, g)

    要求 f, g 对 y 的首项系数在 x=0 处不为零，且在 x=0 上只有原点一个公共点。
    """
    if f.is_zero or g.is_zero:
        raise InputError("相交数要求非零多项式")
    pf = f.poly
    pg = g.poly
    for p in (pf, pg):
        lead = Poly(p.as_expr(), Y).LC()
        if Poly(lead, X, domain=QQ).eval(0) == 0:
            raise InputError("y 的首项系数在 x=0 处为零，结式会计入无穷远交点")
    common = gcd(f.restrict_x0(), g.restrict_x0())
    if common.degree() > 0 and common.monoms() != [(common.degree(),)]:
        raise InputError("x=0 上存在原点以外的公共点")
    res = Poly(resultant(pf.as_expr(), pg.as_expr(), Y), X, domain=QQ)
    order = order_at_zero(res)
    if order is None:
        raise InputError("f 与 g 有公共分量")
    return order


__all__ = [
    "X",
    "Y",
    "BivariatePoly",
    "order_at_zero",
    "parse_poly",
    "germ_diagnostics",
    "germ_check",
    "intersection_number",
]
