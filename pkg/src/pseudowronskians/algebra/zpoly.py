"""Polynomials and rational functions in the variable z over `RatFunc`.

`ZPoly` is a dense coefficient list indexed by the z exponent, with the
leading coefficient nonzero.  `RatZ` is a num/den pair of `ZPoly` used
wherever differentiation forces denominators (log derivatives, potentials).
`proportionality_factor` decides whether two such objects agree up to a
parameter-only constant times a monomial in z, 1-z, 1+z, and returns that
factorisation exactly.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .parampoly import ParamPoly
from .ratfunc import RatFunc


class ZeroPolynomial(ValueError):
    """An operation that needs nonzero input received the zero polynomial."""


class NotProportional(ValueError):
    """Two polynomials are not equal up to constant times monomial.

    Carries both offending objects for diagnosis.
    """

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, ParamPoly)):
        return RatFunc(x if isinstance(x, ParamPoly) else ParamPoly.const(x))
    raise TypeError(f"cannot interpret {x!r} as a coefficient")


class ZPoly:
    """Dense polynomial in z with `RatFunc` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = list(coeffs) if coeffs else []
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "ZPoly":
        return ZPoly()

    @staticmethod
    def const(c) -> "ZPoly":
        return ZPoly([_as_ratfunc(c)])

    @staticmethod
    def one() -> "ZPoly":
        return ZPoly.const(1)

    @staticmethod
    def z() -> "ZPoly":
        return ZPoly([RatFunc.zero(), RatFunc.one()])

    @staticmethod
    def monomial(exp: int, c=1) -> "ZPoly":
        return ZPoly([RatFunc.zero()] * exp + [_as_ratfunc(c)])

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    @property
    def degree(self) -> int:
        """Degree in z; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, exp: int) -> RatFunc:
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return RatFunc.zero()

    def leading(self) -> RatFunc:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic -------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __neg__(self):
        return ZPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ZPoly(out)

    def __sub__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly, RatFunc)):
            return self.scale(other)
        if not isinstance(other, ZPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZPoly.zero()
        out = [RatFunc.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = ZPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "ZPoly":
        c = _as_ratfunc(c)
        if c.is_zero():
            return ZPoly.zero()
        return ZPoly([a * c for a in self.coeffs])

    def shift_z(self, k: int) -> "ZPoly":
        """Multiply by z**k."""
        if not self.coeffs or k == 0:
            return self
        return ZPoly([RatFunc.zero()] * k + self.coeffs)

    def derivative(self) -> "ZPoly":
        return ZPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    # -- substitutions ----------------------------------------------------

    def shift_params(self, dalpha=0, dbeta=0) -> "ZPoly":
        if not dalpha and not dbeta:
            return self
        return ZPoly([c.shift(dalpha, dbeta) for c in self.coeffs])

    def negate_vars(self, alpha=False, beta=False) -> "ZPoly":
        return ZPoly([c.negate_vars(alpha, beta) for c in self.coeffs])

    def subs_neg_z(self) -> "ZPoly":
        """Substitute z -> -z."""
        return ZPoly([-c if i % 2 else c for i, c in enumerate(self.coeffs)])

    def eval_const(self, value) -> RatFunc:
        """Exact evaluation at a rational value of z (parameters stay symbolic)."""
        value = _as_ratfunc(value)
        out = RatFunc.zero()
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def eval(self, z, alpha=0, beta=0, omega=0) -> Fraction:
        """Exact evaluation at rational z and parameter values."""
        z = Fraction(z)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * z + c.eval(alpha, beta, omega)
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c.is_zero():
                continue
            if exp == 0:
                parts.append(f"({c})")
            elif exp == 1:
                parts.append(f"({c})*z")
            else:
                parts.append(f"({c})*z^{exp}")
        return " + ".join(parts)

    __repr__ = __str__


class Base(Enum):
    """Monomial bases that may carry the exponents of a proportionality."""

    Z = "z"
    ONE_MINUS_Z = "1-z"
    ONE_PLUS_Z = "1+z"

    def poly(self) -> ZPoly:
        if self is Base.Z:
            return ZPoly.z()
        if self is Base.ONE_MINUS_Z:
            return ZPoly([RatFunc.one(), -RatFunc.one()])
        return ZPoly([RatFunc.one(), RatFunc.one()])

    def __str__(self):
        return self.value


class RatZ:
    """Rational function in z: a num/den pair of `ZPoly`, not auto-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: ZPoly, den: ZPoly | None = None):
        den = ZPoly.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ZPoly.one()
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> "RatZ":
        return RatZ(ZPoly.zero())

    @staticmethod
    def from_poly(p: ZPoly) -> "RatZ":
        return RatZ(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatZ):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __neg__(self):
        return RatZ(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, ZPoly):
            other = RatZ(other)
        if not isinstance(other, RatZ):
            return NotImplemented
        if self.den == other.den:
            return RatZ(self.num + other.num, self.den)
        return RatZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, ZPoly):
            other = RatZ(other)
        if not isinstance(other, RatZ):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly, RatFunc)):
            return RatZ(self.num.scale(other), self.den)
        if isinstance(other, ZPoly):
            other = RatZ(other)
        if not isinstance(other, RatZ):
            return NotImplemented
        return RatZ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def derivative(self) -> "RatZ":
        """d/dz by the quotient rule."""
        n, d = self.num, self.den
        return RatZ(n.derivative() * d - n * d.derivative(), d * d)

    def shift_params(self, dalpha=0, dbeta=0) -> "RatZ":
        return RatZ(self.num.shift_params(dalpha, dbeta), self.den.shift_params(dalpha, dbeta))

    def constant_value(self) -> RatFunc:
        """The value of a z-independent rational function, checked exactly."""
        if self.num.is_zero():
            return RatFunc.zero()
        lead_n, lead_d = self.num.leading(), self.den.leading()
        c = lead_n / lead_d
        if self.num != self.den.scale(c):
            raise ValueError("rational function depends on z")
        return c

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"[{self.num}] / [{self.den}]"

    __repr__ = __str__


def strip_base(p: ZPoly, base: Base) -> tuple[int, ZPoly]:
    """Largest v with base**v dividing p, and the cofactor p / base**v."""
    if p.is_zero():
        raise ZeroPolynomial("cannot strip factors from the zero polynomial")
    if base is Base.Z:
        v = 0
        while v < len(p.coeffs) and p.coeffs[v].is_zero():
            v += 1
        return v, ZPoly(p.coeffs[v:])
    root = Fraction(1) if base is Base.ONE_MINUS_Z else Fraction(-1)
    v = 0
    while True:
        if p.eval_const(root):
            return v, p
        # p = (z - root) * s + p(root) with p(root) = 0; base = ±(z - root)
        s = [RatFunc.zero()] * p.degree
        acc = RatFunc.zero()
        for i in range(p.degree, 0, -1):
            acc = acc * root + p.coeffs[i]
            s[i - 1] = acc
        if base is Base.ONE_MINUS_Z:
            s = [-c for c in s]
        p = ZPoly(s)
        v += 1


