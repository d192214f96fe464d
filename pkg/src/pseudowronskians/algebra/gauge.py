"""Quasi-polynomial gauge functions and their Wronskians.

A `GaugeFunction` is

    z**(e_z) * (1-z)**(e_omz) * (1+z)**(e_opz) * exp(c*z) * rat(z)

where each exponent is an exact affine expression a*alpha + b*beta + q with
rational a, b, q, the exponential coefficient c is rational, and rat is a
rational function of z.  Differentiation in z keeps the gauge part fixed
and maps rat to rat' + rat * glog, where glog is the logarithmic derivative
of the gauge part; that closure is what makes exact Wronskians of whole
seed families affordable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .parampoly import ParamPoly
from .ratfunc import RatFunc
from .zpoly import Base, RatZ, ZPoly

_BASES = (Base.Z, Base.ONE_MINUS_Z, Base.ONE_PLUS_Z)


@dataclass(frozen=True)
class AffineExponent:
    """Exact exponent a*alpha + b*beta + q."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    const: Fraction = Fraction(0)

    @staticmethod
    def of(alpha=0, beta=0, const=0) -> "AffineExponent":
        return AffineExponent(Fraction(alpha), Fraction(beta), Fraction(const))

    def __add__(self, other):
        return AffineExponent(
            self.alpha + other.alpha, self.beta + other.beta, self.const + other.const
        )

    def __sub__(self, other):
        return AffineExponent(
            self.alpha - other.alpha, self.beta - other.beta, self.const - other.const
        )

    def __neg__(self):
        return AffineExponent(-self.alpha, -self.beta, -self.const)

    def scale(self, q) -> "AffineExponent":
        q = Fraction(q)
        return AffineExponent(self.alpha * q, self.beta * q, self.const * q)

    def is_zero(self) -> bool:
        return not (self.alpha or self.beta or self.const)

    def integer_value(self):
        """The exponent as an int if it is a constant integer, else None."""
        if self.alpha or self.beta or self.const.denominator != 1:
            return None
        return int(self.const)

    def as_parampoly(self) -> ParamPoly:
        return ParamPoly.affine(self.alpha, self.beta, self.const)

    def shift(self, dalpha=0, dbeta=0) -> "AffineExponent":
        return AffineExponent(
            self.alpha, self.beta, self.const + self.alpha * dalpha + self.beta * dbeta
        )

    def __str__(self):
        return str(self.as_parampoly())


_ZERO_EXP = AffineExponent()


@dataclass(frozen=True)
class GaugeFunction:
    """Gauge monomial times exponential times a rational function of z."""

    e_z: Fraction = Fraction(0)  # coefficient c in exp(c*z)
    exp_z: AffineExponent = _ZERO_EXP
    exp_omz: AffineExponent = _ZERO_EXP
    exp_opz: AffineExponent = _ZERO_EXP
    rat: RatZ = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.rat is None:
            object.__setattr__(self, "rat", RatZ(ZPoly.one()))

    @property
    def e_pow(self) -> dict[Base, AffineExponent]:
        """The base -> exponent map of the gauge monomial."""
        return {
            Base.Z: self.exp_z,
            Base.ONE_MINUS_Z: self.exp_omz,
            Base.ONE_PLUS_Z: self.exp_opz,
        }

    def exponent(self, base: Base) -> AffineExponent:
        return self.e_pow[base]

    def bases(self) -> tuple[Base, ...]:
        return tuple(b for b in _BASES if not self.exponent(b).is_zero())

    # -- algebra ----------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, GaugeFunction):
            return NotImplemented
        return GaugeFunction(
            self.e_z + other.e_z,
            self.exp_z + other.exp_z,
            self.exp_omz + other.exp_omz,
            self.exp_opz + other.exp_opz,
            self.rat * other.rat,
        )

    def gauge_power(self, m: int) -> "GaugeFunction":
        """The pure gauge part raised to an integer power, rat part 1."""
        return GaugeFunction(
            self.e_z * m,
            self.exp_z.scale(m),
            self.exp_omz.scale(m),
            self.exp_opz.scale(m),
            RatZ(ZPoly.one()),
        )

    def with_rat(self, rat: RatZ) -> "GaugeFunction":
        return GaugeFunction(self.e_z, self.exp_z, self.exp_omz, self.exp_opz, rat)

    def mul_base_power(self, base: Base, exp: AffineExponent) -> "GaugeFunction":
        if base is Base.Z:
            return GaugeFunction(self.e_z, self.exp_z + exp, self.exp_omz, self.exp_opz, self.rat)
        if base is Base.ONE_MINUS_Z:
            return GaugeFunction(self.e_z, self.exp_z, self.exp_omz + exp, self.exp_opz, self.rat)
        return GaugeFunction(self.e_z, self.exp_z, self.exp_omz, self.exp_opz + exp, self.rat)

    def derivative(self) -> "GaugeFunction":
        """d/dz; the gauge part is untouched and rat picks up rat*glog."""
        glog = gauge_log_derivative(self)
        return self.with_rat(self.rat.derivative() + self.rat * glog)

    def shift_params(self, dalpha=0, dbeta=0) -> "GaugeFunction":
        return GaugeFunction(
            self.e_z,
            self.exp_z.shift(dalpha, dbeta),
            self.exp_omz.shift(dalpha, dbeta),
            self.exp_opz.shift(dalpha, dbeta),
            self.rat.shift_params(dalpha, dbeta),
        )

    def subs_neg_z(self) -> "GaugeFunction":
        """Formal z -> -z: flips the exponential and the rational part.

        The power bases are mapped z**e -> z**e and (1-z) <-> (1+z); the
        constant phases (-1)**e that a literal substitution would produce
        are dropped.
        """
        return GaugeFunction(
            -self.e_z,
            self.exp_z,
            self.exp_opz,
            self.exp_omz,
            RatZ(self.rat.num.subs_neg_z(), self.rat.den.subs_neg_z()),
        )

    def equals(self, other: "GaugeFunction") -> bool:
        """Exact equality, allowing integer exponent transfers into rat."""
        factor = self.proportionality(other)
        return factor is not None and factor.is_one()

    def proportionality(self, other: "GaugeFunction"):
        """The constant c with self = c * other, or None.

        Exponents must agree up to integer constants (those move into the
        rational parts); the exponential coefficients must agree exactly.
        """
        if self.e_z != other.e_z:
            return None
        if self.rat.is_zero() or other.rat.is_zero():
            return RatFunc.zero() if self.rat.is_zero() and other.rat.is_zero() else None
        ln, ld = self.rat.num, self.rat.den
        rn, rd = other.rat.num, other.rat.den
        for base in _BASES:
            diff = self.exponent(base) - other.exponent(base)
            k = diff.integer_value()
            if k is None:
                return None
            # self's extra base**k joins its rational part
            if k > 0:
                ln = ln * base.poly() ** k
            elif k < 0:
                ld = ld * base.poly() ** (-k)
        left = ln * rd
        right = rn * ld
        if left.degree != right.degree:
            return None
        c = left.leading() / right.leading()
        for a, b in zip(left.coeffs, right.coeffs):
            if not (a * c.den == b * c.num):
                return None
        return c


def gauge_log_derivative(g: GaugeFunction) -> RatZ:
    """d/dz log of the gauge part: c + e_z/z - e_omz/(1-z) + e_opz/(1+z)."""
    den = ZPoly.one()
    for base in g.bases():
        den = den * base.poly()
    num = den.scale(ParamPoly.const(g.e_z)) if g.e_z else ZPoly.zero()
    for base in g.bases():
        cof = ZPoly.one()
        for other in g.bases():
            if other is not base:
                cof = cof * other.poly()
        coeff = g.exponent(base).as_parampoly()
        if base is Base.ONE_MINUS_Z:
            coeff = -coeff
        num = num + cof.scale(coeff)
    return RatZ(num, den)


def _basis_product(bases) -> "FPoly":
    from .fastpoly import FPoly

    out = FPoly.one()
    for b in bases:
        out = out * FPoly.from_zpoly(b.poly())
    return out


def wronskian_row(s: GaugeFunction, m: int, bases) -> tuple:
    """Cleared derivative row of one seed in an m-seed Wronskian.

    Writing the seed as gauge * num/den, its j-th derivative equals
    gauge * t_j / (den**(j+1) * B**j) where B is the product of the given
    power bases and the t_j obey a polynomial recurrence.  The returned
    entries are t_j * (den*B)**(m-1-j); dividing the final determinant by
    den**m * B**(m-1) per row undoes the clearing.
    """
    from .fastpoly import FPoly

    big_b = _basis_product(bases)
    big_b_prime = big_b.diff_z()
    glog_num = big_b.scale_by(s.e_z) if s.e_z else FPoly.zero()
    for base in bases:
        cof = _basis_product(tuple(b for b in bases if b is not base))
        coeff = s.exponent(base)
        sign = -1 if base is Base.ONE_MINUS_Z else 1
        contrib = FPoly.from_zpoly(
            ZPoly.const(RatFunc(coeff.as_parampoly() * sign))
        )
        glog_num = glog_num + cof * contrib
    num, den = s.rat.num, s.rat.den
    dens = [c.den for part in (num, den) for c in part.coeffs if not c.den.is_one()]
    for extra in dens:
        num = num.scale(extra)
        den = den.scale(extra)
    d = FPoly.from_zpoly(den)
    d_prime = d.diff_z()
    t = FPoly.from_zpoly(num)
    ts = [t]
    for j in range(m - 1):
        t = (
            t.diff_z() * d * big_b
            - t.scale_by(j + 1) * d_prime * big_b
            - t.scale_by(j) * d * big_b_prime
            + t * glog_num * d
        )
        ts.append(t.normalized())
    clear = d * big_b
    row = []
    power = FPoly.one()
    for j in range(m - 1, -1, -1):
        row.append(ts[j] * power)
        power = power * clear
    row.reverse()
    return tuple(row), d


def gauge_wronskian(seeds) -> GaugeFunction:
    """Wronskian in z of gauge functions, returned as a gauge function.

    The rows of the Wronskian matrix are produced by `wronskian_row`, the
    determinant is exact, and the row-clearing factors end up in the
    denominator of the rational part.
    """
    from .determinant import determinant_fpoly
    from .fastpoly import FPoly

    seeds = list(seeds)
    if not seeds:
        raise ValueError("gauge_wronskian needs at least one seed")
    m = len(seeds)
    bases = tuple(
        b for b in _BASES if any(not s.exponent(b).is_zero() for s in seeds)
    )
    rows = []
    clear_den = FPoly.one()
    big_b = _basis_product(bases)
    for s in seeds:
        row, d = wronskian_row(s, m, bases)
        rows.append(row)
        clear_den = clear_den * _fpow(d, m) * _fpow(big_b, m - 1)
    det = determinant_fpoly(rows)
    e_z = Fraction(0)
    exp_z = exp_omz = exp_opz = _ZERO_EXP
    for s in seeds:
        e_z += s.e_z
        exp_z += s.exp_z
        exp_omz += s.exp_omz
        exp_opz += s.exp_opz
    return GaugeFunction(
        e_z, exp_z, exp_omz, exp_opz, RatZ(det.to_zpoly(), clear_den.to_zpoly())
    )


def _fpow(f, n: int):
    from .fastpoly import FPoly

    out = FPoly.one()
    for _ in range(n):
        out = out * f
    return out
