"""Rational functions in the parameter symbols, as reduced num/den pairs.

The denominator is never zero, shares no factor with the numerator, and is
normalised to its canonical associate (integer-primitive with positive
leading coefficient in graded lex order), so equal rational functions have
equal representations.
"""
from __future__ import annotations

from fractions import Fraction

from .parampoly import ParamPoly, poly_gcd


class RatFunc:
    """Quotient of two `ParamPoly` values, kept in reduced normal form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ParamPoly.one() if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = ParamPoly.one()
        elif den.is_constant():
            if not den.is_one():
                num = num * (1 / den.constant_value())
                den = ParamPoly.one()
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.is_constant():
                num = num * (1 / den.constant_value())
                den = ParamPoly.one()
            else:
                canon = den.primitive_normal()
                scale = den.leading()[1] / canon.leading()[1]
                num = num * (1 / scale)
                den = canon
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(ParamPoly.zero())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(ParamPoly.one())

    @staticmethod
    def const(q) -> "RatFunc":
        return RatFunc(ParamPoly.const(q))

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num.constant_value()

    def is_poly(self) -> bool:
        return self.den.is_one()

    # -- arithmetic -------------------------------------------------------

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            out = object.__new__(RatFunc)
            out.num, out.den = self.num * other.num, self.den
            return out
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        return other / self

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    # -- substitutions ----------------------------------------------------

    def shift(self, dalpha=0, dbeta=0) -> "RatFunc":
        if not dalpha and not dbeta:
            return self
        return RatFunc(self.num.shift(dalpha, dbeta), self.den.shift(dalpha, dbeta))

    def negate_vars(self, alpha=False, beta=False) -> "RatFunc":
        return RatFunc(self.num.negate_vars(alpha, beta), self.den.negate_vars(alpha, beta))

    def eval(self, alpha=0, beta=0, omega=0) -> Fraction:
        d = self.den.eval(alpha, beta, omega)
        if not d:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.eval(alpha, beta, omega) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _as_poly(x) -> ParamPoly:
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a parameter polynomial")


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, ParamPoly)):
        return RatFunc(_as_poly(x))
    return NotImplemented
