from planecurve.poly import BivariatePoly, germ_check, intersection_number, parse_poly
from planecurve.resolution import canonical_resolution_trace

__all__ = ["BivariatePoly", "parse_poly", "germ_check", "intersection_number", "canonical_resolution_trace"]
