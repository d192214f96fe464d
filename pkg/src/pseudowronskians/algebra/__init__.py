"""Exact arithmetic: big rationals, parameter polynomials, the rational
function field, polynomials in z, gauge functions and fraction-free
determinants.

Big rationals are `fractions.Fraction` throughout: the standard library type
already keeps denominators positive and fractions reduced, which is exactly
the normal form required here.
"""
from .parampoly import ParamPoly, pochhammer, poly_gcd
from .ratfunc import RatFunc
from .zpoly import Base, NotProportional, RatZ, ZeroPolynomial, ZPoly
from .proportion import proportionality_factor
from .determinant import ShapeError, crosscheck, determinant, determinant_bareiss, determinant_laplace
from .gauge import AffineExponent, GaugeFunction, gauge_log_derivative, gauge_wronskian

__all__ = [
    "AffineExponent",
    "Base",
    "GaugeFunction",
    "NotProportional",
    "ParamPoly",
    "RatFunc",
    "RatZ",
    "ShapeError",
    "ZPoly",
    "ZeroPolynomial",
    "crosscheck",
    "determinant",
    "determinant_bareiss",
    "determinant_laplace",
    "gauge_log_derivative",
    "gauge_wronskian",
    "poly_gcd",
    "pochhammer",
]
