"""Internal packed-integer polynomials for the heavy symbolic kernels.

A polynomial in alpha, beta, omega, z is held as a rational scale times a
dict of integer coefficients keyed by a packed exponent: four 16-bit fields
(alpha, beta, omega, z) in one int.  Keys add under multiplication and
plain int comparison is a monomial order, which is all that multiplication,
exact division and elimination need.  The public `ZPoly`/`RatFunc` types
convert to and from this form at the boundaries of the hot paths.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

from .parampoly import ParamPoly
from .ratfunc import RatFunc
from .zpoly import Base, ZPoly

FIELD = 16
SHIFT_A = 3 * FIELD
SHIFT_B = 2 * FIELD
SHIFT_W = FIELD
MASK = (1 << FIELD) - 1
_KEY_Z = 1  # packed key of the monomial z


def pack(a: int, b: int, w: int, zz: int) -> int:
    return (a << SHIFT_A) | (b << SHIFT_B) | (w << SHIFT_W) | zz


def unpack(key: int) -> tuple[int, int, int, int]:
    return key >> SHIFT_A, (key >> SHIFT_B) & MASK, (key >> SHIFT_W) & MASK, key & MASK


def ip_mul(f: dict, g: dict) -> dict:
    if not f or not g:
        return {}
    if len(f) > len(g):
        f, g = g, f
    out: dict = {}
    get = out.get
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def ip_add(f: dict, g: dict, fscale: int = 1, gscale: int = 1) -> dict:
    out = {k: c * fscale for k, c in f.items()} if fscale != 1 else dict(f)
    get = out.get
    for k, c in g.items():
        s = get(k, 0) + c * gscale
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def ip_sub(f: dict, g: dict) -> dict:
    return ip_add(f, g, 1, -1)


def ip_exact_div(f: dict, g: dict) -> dict:
    """Quotient f/g for an exact division, term by term."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    kg = max(g)
    cg = g[kg]
    eg = unpack(kg)
    rem = dict(f)
    quot: dict = {}
    while rem:
        kr = max(rem)
        cr = rem[kr]
        if any(x < y for x, y in zip(unpack(kr), eg)) or cr % cg:
            raise ValueError("inexact polynomial division in elimination")
        kq = kr - kg
        cq = cr // cg
        quot[kq] = cq
        for k, c in g.items():
            t = kq + k
            s = rem.get(t, 0) - cq * c
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return quot


class FPoly:
    """scale * (integer polynomial); the workhorse of the hot paths."""

    __slots__ = ("scale", "terms")

    def __init__(self, scale: Fraction, terms: dict):
        self.scale = scale if terms else Fraction(1)
        self.terms = terms

    @staticmethod
    def zero() -> "FPoly":
        return FPoly(Fraction(1), {})

    @staticmethod
    def one() -> "FPoly":
        return FPoly(Fraction(1), {0: 1})

    @staticmethod
    def from_zpoly(p: ZPoly) -> "FPoly":
        denom = 1
        for c in p.coeffs:
            if not c.den.is_one():
                raise ValueError("coefficient has a polynomial denominator")
            for q in c.num.terms.values():
                denom = int_lcm(denom, q.denominator)
        terms = {}
        for zz, c in enumerate(p.coeffs):
            for (a, b, w), q in c.num.terms.items():
                terms[pack(a, b, w, zz)] = int(q * denom)
        return FPoly(Fraction(1, denom), terms)

    def to_zpoly(self) -> ZPoly:
        buckets: dict[int, dict] = {}
        for key, c in self.terms.items():
            a, b, w, zz = unpack(key)
            buckets.setdefault(zz, {})[(a, b, w)] = c * self.scale
        if not buckets:
            return ZPoly.zero()
        coeffs = [RatFunc.zero()] * (max(buckets) + 1)
        for zz, t in buckets.items():
            coeffs[zz] = RatFunc(ParamPoly(t))
        return ZPoly(coeffs)

    def is_zero(self) -> bool:
        return not self.terms

    def normalized(self) -> "FPoly":
        """Pull the integer content into the scale."""
        if not self.terms:
            return FPoly(Fraction(1), {})
        g = 0
        for c in self.terms.values():
            g = int_gcd(g, c)
            if g == 1:
                return self
        return FPoly(self.scale * g, {k: c // g for k, c in self.terms.items()})

    def __mul__(self, other: "FPoly") -> "FPoly":
        return FPoly(self.scale * other.scale, ip_mul(self.terms, other.terms))

    def __add__(self, other: "FPoly") -> "FPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        s, t = self.scale, other.scale
        common = Fraction(int_gcd(s.numerator, t.numerator), int_lcm(s.denominator, t.denominator))
        fs = int(s / common)
        gs = int(t / common)
        return FPoly(common, ip_add(self.terms, other.terms, fs, gs))

    def __sub__(self, other: "FPoly") -> "FPoly":
        return self + other.scale_by(-1)

    def scale_by(self, q) -> "FPoly":
        q = Fraction(q)
        if not q:
            return FPoly.zero()
        return FPoly(self.scale * q, self.terms)

    def diff_z(self) -> "FPoly":
        out = {}
        for key, c in self.terms.items():
            zz = key & MASK
            if zz:
                out[key - 1] = c * zz
        return FPoly(self.scale, out)

    def shift_z(self, k: int) -> "FPoly":
        if k == 0 or not self.terms:
            return self
        return FPoly(self.scale, {key + k: c for key, c in self.terms.items()})

    def z_degree(self) -> int:
        return max(key & MASK for key in self.terms) if self.terms else -1


def base_valuation_and_strip(fp: FPoly, base: Base) -> tuple[int, FPoly]:
    """Largest v with base**v dividing fp, and the cofactor."""
    if not fp.terms:
        raise ZeroDivisionError("zero polynomial has no base valuation")
    if base is Base.Z:
        v = min(key & MASK for key in fp.terms)
        if v == 0:
            return 0, fp
        return v, FPoly(fp.scale, {key - v: c for key, c in fp.terms.items()})
    root = 1 if base is Base.ONE_MINUS_Z else -1
    zl = _to_zlist(fp.terms)
    v = 0
    while True:
        q = _div_linear(zl, root)
        if q is None:
            break
        if base is Base.ONE_MINUS_Z:
            q = [{k: -c for k, c in d.items()} for d in q]
        zl = q
        v += 1
    return v, FPoly(fp.scale, _from_zlist(zl))


def _to_zlist(terms: dict) -> list[dict]:
    deg = max(key & MASK for key in terms)
    out: list[dict] = [dict() for _ in range(deg + 1)]
    for key, c in terms.items():
        zz = key & MASK
        out[zz][key - zz] = c
    while out and not out[-1]:
        out.pop()
    return out


def _from_zlist(zl: list[dict]) -> dict:
    out = {}
    for zz, d in enumerate(zl):
        for key, c in d.items():
            out[key + zz] = c
    return out


def _div_linear(zl: list[dict], root: int):
    """Quotient of the z-list by (z - root) if the remainder is zero."""
    if not zl:
        return None
    acc: dict = {}
    quot: list[dict] = [dict() for _ in range(len(zl) - 1)]
    for i in range(len(zl) - 1, 0, -1):
        if root == 1:
            acc = ip_add(acc, zl[i])
        else:
            acc = ip_add({k: -c for k, c in acc.items()}, zl[i])
        quot[i - 1] = acc
    rem = ip_add(acc if root == 1 else {k: -c for k, c in acc.items()}, zl[0])
    if rem:
        return None
    return quot
