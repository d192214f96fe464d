"""Exact multivariate polynomials in the parameter symbols alpha, beta, omega.

A `ParamPoly` is a sparse map from exponent triples (a, b, w) to nonzero
`Fraction` coefficients.  The monomial order used for leading terms,
normalisation and printing is graded lexicographic with alpha > beta > omega.
GCDs are computed with a multivariate subresultant polynomial remainder
sequence, separating content and primitive part in the main variable; the
canonical associate returned by `poly_gcd` is integer-primitive with a
positive leading coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

NVARS = 3
VAR_NAMES = ("a", "b", "w")  # printed names for alpha, beta, omega
_ZERO_EXP = (0, 0, 0)


def _order_key(exp):
    # graded lexicographic, alpha > beta > omega
    return (exp[0] + exp[1] + exp[2], exp)


class ParamPoly:
    """Immutable sparse polynomial over Q in alpha, beta, omega."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # Takes ownership of `terms`; callers must not mutate it afterwards.
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "ParamPoly":
        return ParamPoly()

    @staticmethod
    def const(q) -> "ParamPoly":
        q = Fraction(q)
        return ParamPoly({_ZERO_EXP: q} if q else {})

    @staticmethod
    def one() -> "ParamPoly":
        return ParamPoly.const(1)

    @staticmethod
    def variable(index: int) -> "ParamPoly":
        exp = tuple(1 if i == index else 0 for i in range(NVARS))
        return ParamPoly({exp: Fraction(1)})

    @staticmethod
    def alpha() -> "ParamPoly":
        return ParamPoly.variable(0)

    @staticmethod
    def beta() -> "ParamPoly":
        return ParamPoly.variable(1)

    @staticmethod
    def omega() -> "ParamPoly":
        return ParamPoly.variable(2)

    @staticmethod
    def affine(a, b, q) -> "ParamPoly":
        """a*alpha + b*beta + q."""
        terms = {}
        for exp, c in (((1, 0, 0), Fraction(a)), ((0, 1, 0), Fraction(b))):
            if c:
                terms[exp] = c
        q = Fraction(q)
        if q:
            terms[_ZERO_EXP] = q
        return ParamPoly(terms)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def is_one(self) -> bool:
        return self.terms.get(_ZERO_EXP) == 1 and len(self.terms) == 1

    def degree_in(self, index: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(exp[index] for exp in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def leading(self) -> tuple[tuple[int, int, int], Fraction]:
        """Leading (exponent, coefficient) in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_order_key)
        return exp, self.terms[exp]

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == ParamPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return ParamPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return ParamPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return ParamPoly.zero()
            return ParamPoly({e: c * q for e, c in self.terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = ParamPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions ------------------------------------------------

    def shift(self, dalpha=0, dbeta=0) -> "ParamPoly":
        """Substitute alpha -> alpha + dalpha, beta -> beta + dbeta."""
        out = self
        if dalpha:
            out = out._taylor_shift(0, Fraction(dalpha))
        if dbeta:
            out = out._taylor_shift(1, Fraction(dbeta))
        return out

    def _taylor_shift(self, var: int, c: Fraction) -> "ParamPoly":
        # Horner evaluation of the coefficient list in `var` at var + c.
        if not self.terms:
            return self
        buckets: dict[int, dict] = {}
        for exp, q in self.terms.items():
            e = list(exp)
            d = e[var]
            e[var] = 0
            buckets.setdefault(d, {})[tuple(e)] = q
        out: dict = {}
        for d in range(max(buckets), -1, -1):
            new: dict = {}
            for exp, q in out.items():  # out * (var + c)
                e = list(exp)
                e[var] += 1
                e = tuple(e)
                new[e] = new.get(e, 0) + q
                if c:
                    s = new.get(exp, 0) + q * c
                    if s:
                        new[exp] = s
                    elif exp in new:
                        del new[exp]
            for exp, q in buckets.get(d, {}).items():
                s = new.get(exp, 0) + q
                if s:
                    new[exp] = s
                elif exp in new:
                    del new[exp]
            out = new
        return ParamPoly({e: Fraction(q) for e, q in out.items() if q})

    def negate_vars(self, alpha=False, beta=False) -> "ParamPoly":
        """Substitute alpha -> -alpha and/or beta -> -beta."""
        out = {}
        for (a, b, w), c in self.terms.items():
            sign = (-1 if (alpha and a % 2) else 1) * (-1 if (beta and b % 2) else 1)
            out[(a, b, w)] = c * sign
        return ParamPoly(out)

    def eval(self, alpha=0, beta=0, omega=0) -> Fraction:
        """Exact evaluation at rational parameter values."""
        alpha, beta, omega = Fraction(alpha), Fraction(beta), Fraction(omega)
        total = Fraction(0)
        for (a, b, w), c in self.terms.items():
            total += c * alpha ** a * beta ** b * omega ** w
        return total

    # -- division and gcd ----------------------------------------------

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        """Quotient self/other when the division is exact, term by term."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            return self * (1 / other.constant_value())
        rem = dict(self.terms)
        le, lc = other.leading()
        quot = {}
        while rem:
            e = max(rem, key=_order_key)
            qe = (e[0] - le[0], e[1] - le[1], e[2] - le[2])
            if min(qe) < 0:
                raise ValueError(f"inexact polynomial division: {self} / {other}")
            qc = rem[e] / lc
            quot[qe] = qc
            for oe, oc in other.terms.items():
                t = (qe[0] + oe[0], qe[1] + oe[1], qe[2] + oe[2])
                s = rem.get(t, Fraction(0)) - qc * oc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return ParamPoly(quot)

    def divides(self, other: "ParamPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    def primitive_normal(self) -> "ParamPoly":
        """Canonical associate: integer coefficients with content 1 and a
        positive leading coefficient."""
        if not self.terms:
            return self
        denom = int_lcm(*(c.denominator for c in self.terms.values()))
        numer = int_gcd(*(c.numerator for c in self.terms.values()))
        scale = Fraction(denom, numer)
        if self.leading()[1] < 0:
            scale = -scale
        return self * scale

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_order_key, reverse=True):
            c = self.terms[exp]
            mon = "*".join(
                f"{VAR_NAMES[i]}^{e}" if e > 1 else VAR_NAMES[i]
                for i, e in enumerate(exp)
                if e
            )
            if not mon:
                piece = str(c)
            elif c == 1:
                piece = mon
            elif c == -1:
                piece = f"-{mon}"
            else:
                piece = f"{c}*{mon}"
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    __repr__ = __str__


def pochhammer(base: ParamPoly, k: int, direction: str = "rising") -> ParamPoly:
    """Rising or falling factorial of length k: base(base±1)...(base±(k-1))."""
    if k < 0:
        raise ValueError("pochhammer length must be >= 0")
    if direction not in ("rising", "falling"):
        raise ValueError("direction must be 'rising' or 'falling'")
    step = 1 if direction == "rising" else -1
    out = ParamPoly.one()
    for j in range(k):
        out = out * (base + step * j)
    return out


# ---------------------------------------------------------------------------
# Multivariate gcd via subresultant polynomial remainder sequences.
#
# Polynomials are viewed recursively: pick the first variable (alpha before
# beta before omega) that occurs, write the polynomial as a dense coefficient
# list in that variable with ParamPoly coefficients free of it, split off the
# content, and run the subresultant PRS on the primitive parts.
# ---------------------------------------------------------------------------


def _to_univar(f: ParamPoly, v: int) -> list[ParamPoly]:
    """Dense coefficient list of f in variable v (index = exponent)."""
    deg = f.degree_in(v)
    coeffs = [dict() for _ in range(deg + 1)]
    for exp, c in f.terms.items():
        rest = list(exp)
        d = rest[v]
        rest[v] = 0
        coeffs[d][tuple(rest)] = c
    return [ParamPoly(t) for t in coeffs]


def _from_univar(coeffs: list[ParamPoly], v: int) -> ParamPoly:
    out = {}
    for d, c in enumerate(coeffs):
        for exp, q in c.terms.items():
            e = list(exp)
            e[v] += d
            out[tuple(e)] = q
    return ParamPoly(out)


def _u_strip(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def _u_mul_ground(f, g: ParamPoly):
    return [c * g for c in f]


def _u_prem(f, g):
    """Pseudo-remainder of dense lists f, g (g nonzero)."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    lc_g = g[-1]
    r = list(f)
    n = df - dg + 1
    while True:
        dr = len(r) - 1
        if dr < dg:
            break
        lc_r = r[-1]
        r = _u_mul_ground(r[:-1], lc_g)
        shifted_deg = dr - dg
        for i in range(dg):
            r[shifted_deg + i] = r[shifted_deg + i] - lc_r * g[i]
        r = _u_strip(r)
        n -= 1
        if not r:
            break
    scale = lc_g ** n if n > 0 else ParamPoly.one()
    return _u_mul_ground(r, scale) if n > 0 else r


def _u_content(f) -> ParamPoly:
    c = ParamPoly.zero()
    for coeff in f:
        c = poly_gcd(c, coeff)
        if c.is_one():
            break
    return c


def _u_primitive(f):
    c = _u_content(f)
    if c.is_zero() or c.is_one():
        return c, list(f)
    return c, [x.exact_div(c) for x in f]


def _u_subresultant_gcd(f, g):
    """Primitive gcd of primitive dense lists f, g via the subresultant PRS."""
    if len(f) < len(g):
        f, g = g, f
    if len(g) == 1:
        # primitive and constant in the main variable, so a unit here
        return [ParamPoly.one()]
    m = len(g) - 1
    d = (len(f) - 1) - m
    sign = ParamPoly.const((-1) ** (d + 1))
    h = _u_mul_ground(_u_prem(f, g), sign.constant_value())
    lc = g[-1]
    c = -(lc ** d)
    while h:
        k = len(h) - 1
        f, g, m, d = g, h, k, m - k
        b = (-lc) * c ** d
        h = [coef.exact_div(b) for coef in _u_prem(f, g)]
        lc = g[-1]
        if d > 1:
            c = ((-lc) ** d).exact_div(c ** (d - 1))
        else:
            c = -lc
    return _u_primitive(g)[1]


def poly_gcd(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """GCD of two parameter polynomials, in canonical associate form."""
    if f.is_zero():
        return g.primitive_normal()
    if g.is_zero():
        return f.primitive_normal()
    if f.is_constant() or g.is_constant():
        return ParamPoly.one()
    for v in range(NVARS):
        if f.degree_in(v) > 0 or g.degree_in(v) > 0:
            break
    fu, gu = _to_univar(f, v), _to_univar(g, v)
    cf, fp = _u_primitive(fu)
    cg, gp = _u_primitive(gu)
    cont = poly_gcd(cf, cg)
    if len(fu) == 1 or len(gu) == 1:
        # one argument is free of the main variable: only content survives
        prim = ParamPoly.one()
    else:
        prim = _from_univar(_u_subresultant_gcd(fp, gp), v)
    return (cont * prim).primitive_normal()
