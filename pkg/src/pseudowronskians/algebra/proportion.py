"""Deciding p = c * prod(base**e) * q exactly, with c free of z.

The inputs are polynomials or num/den pairs in z; the work happens on the
packed-integer form: strip the valuation of every base from all four
polynomials, cross-multiply, and compare against the constant read off the
leading coefficients.  Exponents may be negative; the constant is returned
as a reduced rational function of the parameters.
"""
from __future__ import annotations

from fractions import Fraction

from .fastpoly import MASK, FPoly, base_valuation_and_strip, ip_mul, unpack
from .parampoly import ParamPoly
from .ratfunc import RatFunc
from .zpoly import Base, NotProportional, RatZ, ZeroPolynomial, ZPoly


def _pair(p) -> tuple[ZPoly, ZPoly]:
    if isinstance(p, ZPoly):
        return p, ZPoly.one()
    if isinstance(p, RatZ):
        return p.num, p.den
    raise TypeError(f"expected ZPoly or RatZ, got {p!r}")


def _clear_coeff_dens(num: ZPoly, den: ZPoly) -> tuple[ZPoly, ZPoly]:
    """Multiply both parts by any parameter-polynomial coefficient
    denominators so the packed-integer form exists."""
    dens = []
    for part in (num, den):
        for c in part.coeffs:
            if not c.den.is_one() and all(c.den != d for d in dens):
                dens.append(c.den)
    for d in dens:
        num = num.scale(d)
        den = den.scale(d)
    return num, den


def _leading_z_coeff(terms: dict) -> dict:
    zdeg = max(key & MASK for key in terms)
    return {key - zdeg: c for key, c in terms.items() if key & MASK == zdeg}


def _to_parampoly(terms: dict, scale: Fraction) -> ParamPoly:
    out = {}
    for key, c in terms.items():
        a, b, w, zz = unpack(key)
        if zz:
            raise ValueError("constant factor depends on z")
        out[(a, b, w)] = c * scale
    return ParamPoly(out)


def proportionality_core(
    fpn: FPoly, fpd: FPoly, fqn: FPoly, fqd: FPoly, bases, diag=("p", "q")
) -> tuple[RatFunc, dict[Base, int]]:
    exps: dict[Base, int] = {}
    for base in bases:
        vpn, fpn = base_valuation_and_strip(fpn, base)
        vpd, fpd = base_valuation_and_strip(fpd, base)
        vqn, fqn = base_valuation_and_strip(fqn, base)
        vqd, fqd = base_valuation_and_strip(fqd, base)
        exps[base] = (vpn - vpd) - (vqn - vqd)
    left = fpn * fqd
    right = fqn * fpd
    if left.z_degree() != right.z_degree():
        raise NotProportional("degree mismatch after stripping bases", *diag)
    lead_left = _leading_z_coeff(left.terms)
    lead_right = _leading_z_coeff(right.terms)
    if ip_mul(left.terms, lead_right) != ip_mul(right.terms, lead_left):
        raise NotProportional("coefficient mismatch", *diag)
    c = RatFunc(
        _to_parampoly(lead_left, left.scale), _to_parampoly(lead_right, right.scale)
    )
    return c, exps


def proportionality_factor(p, q, bases=(Base.Z,)) -> tuple[RatFunc, dict[Base, int]]:
    """Solve p = c * prod(base**e) * q exactly, with c free of z.

    Both arguments may be polynomials or num/den pairs; exponents may be
    negative.  Raises `ZeroPolynomial` on zero input and `NotProportional`
    (carrying both inputs) if no such factorisation exists.
    """
    pn, pd = _clear_coeff_dens(*_pair(p))
    qn, qd = _clear_coeff_dens(*_pair(q))
    if pn.is_zero() or qn.is_zero():
        raise ZeroPolynomial("proportionality with a zero polynomial")
    return proportionality_core(
        FPoly.from_zpoly(pn),
        FPoly.from_zpoly(pd),
        FPoly.from_zpoly(qn),
        FPoly.from_zpoly(qd),
        bases,
        diag=(p, q),
    )
