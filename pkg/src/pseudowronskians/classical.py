"""Symbolic generalized Laguerre and Jacobi polynomials, the four seed
families of the two primary potentials, and their formal energies.

Polynomial coefficients come from the closed-form products

    L_n^A(sz)   : coeff of z^k is (-s)^k / (k! (n-k)!) * (A+k+1)...(A+n)
    P_n^(A,B)(sz) = sum_k (n+A+B+1)_k (A+k+1)_(n-k) / (k! (n-k)! 2^k) (sz-1)^k

with the superscripts A, B allowed to be +/-alpha (+/-beta) plus any integer
shift, so parameter-shifted and sign-flipped variants cost nothing extra.

Seed functions are gauge functions built from these polynomials.  For each
model there is one family psi indexed over all integers (eigenstates for
n >= 0, their conjugates for n < 0) and one family phi (shadow for n >= 0,
conjugate shadow for n < 0); index -(n+1) always carries polynomial degree n.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .algebra import AffineExponent, GaugeFunction, ParamPoly, RatFunc, RatZ, ZPoly, pochhammer


class InvalidDegree(ValueError):
    """A polynomial constructor was asked for a negative degree."""


class Model(str, Enum):
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"

    def __str__(self):
        return self.value


class Family(str, Enum):
    PSI = "psi"
    PHI = "phi"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SeedSpec:
    """One seed function: model, family, and an index of either sign."""

    model: Model
    family: Family
    index: int

    @property
    def degree(self) -> int:
        """Degree of the attached polynomial: n for index n >= 0 or -(n+1)."""
        return self.index if self.index >= 0 else -self.index - 1

    def __str__(self):
        return f"{self.family.value}_{self.index}"


@dataclass(frozen=True)
class Energy:
    """Formal eigenvalue as an exact parameter polynomial."""

    value: ParamPoly
    model: Model

    def __post_init__(self):
        v = self.value
        if self.model is Model.LAGUERRE:
            ok = v.degree_in(2) <= 1 and v.degree_in(0) <= 1 and v.degree_in(1) <= 0
        else:
            ok = v.degree_in(2) <= 0 and v.total_degree() <= 2
        if not ok:
            raise ValueError(f"energy out of shape for {self.model}: {v}")


def laguerre(n: int, alpha_shift: int = 0, arg_sign: int = 1, negate_alpha: bool = False) -> ZPoly:
    """Generalized Laguerre polynomial L_n^(±alpha+shift)(±z), exactly."""
    if n < 0:
        raise InvalidDegree(f"degree {n} < 0")
    sup = ParamPoly.affine(-1 if negate_alpha else 1, 0, alpha_shift)
    coeffs = []
    for k in range(n + 1):
        c = pochhammer(sup + (k + 1), n - k, "rising") * Fraction(
            (-arg_sign) ** k, factorial(k) * factorial(n - k)
        )
        coeffs.append(RatFunc(c))
    return ZPoly(coeffs)


def jacobi(
    n: int,
    alpha_shift: int = 0,
    beta_shift: int = 0,
    arg_sign: int = 1,
    negate_alpha: bool = False,
    negate_beta: bool = False,
) -> ZPoly:
    """Jacobi polynomial P_n^(±alpha+s1, ±beta+s2)(±z), exactly."""
    if n < 0:
        raise InvalidDegree(f"degree {n} < 0")
    a = ParamPoly.affine(-1 if negate_alpha else 1, 0, alpha_shift)
    b = ParamPoly.affine(0, -1 if negate_beta else 1, beta_shift)
    out = ZPoly.zero()
    for k in range(n + 1):
        scalar = (
            pochhammer(a + b + (n + 1), k, "rising")
            * pochhammer(a + (k + 1), n - k, "rising")
            * Fraction(1, factorial(k) * factorial(n - k) * 2 ** k)
        )
        # (arg_sign*z - 1)**k expanded binomially
        powers = [
            RatFunc(scalar * (comb(k, j) * arg_sign ** j * (-1) ** (k - j)))
            for j in range(k + 1)
        ]
        out = out + ZPoly(powers)
    return out


_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def seed(spec: SeedSpec) -> GaugeFunction:
    """The quasi-polynomial seed function for a spec, in the variable z."""
    n = spec.degree
    conj = spec.index < 0
    if spec.model is Model.LAGUERRE:
        if spec.family is Family.PSI:
            neg = conj  # conjugates flip the sign of alpha everywhere
        else:
            neg = not conj  # shadows carry -alpha, conjugate shadows +alpha
        poly = laguerre(n, arg_sign=-1 if conj else 1, negate_alpha=neg)
        return GaugeFunction(
            e_z=_HALF if conj else -_HALF,
            exp_z=AffineExponent.of(-_HALF if neg else _HALF, 0, _QUARTER),
            rat=RatZ(poly),
        )
    if spec.family is Family.PSI:
        neg_a = neg_b = conj
    else:
        neg_a, neg_b = not conj, conj
    poly = jacobi(n, negate_alpha=neg_a, negate_beta=neg_b)
    return GaugeFunction(
        e_z=Fraction(0),
        exp_omz=AffineExponent.of(-_HALF if neg_a else _HALF, 0, _QUARTER),
        exp_opz=AffineExponent.of(0, -_HALF if neg_b else _HALF, _QUARTER),
        rat=RatZ(poly),
    )


def energy(spec: SeedSpec) -> Energy:
    """Formal eigenvalue of a seed, exact in the parameters.

    The psi family at index nu has the dispersion value of quantum number
    nu; the phi family sits at the alpha-shifted spectral point nu - alpha.
    """
    nu = spec.index
    alpha, beta, omega = ParamPoly.alpha(), ParamPoly.beta(), ParamPoly.omega()
    if spec.model is Model.LAGUERRE:
        if spec.family is Family.PSI:
            value = omega * (2 * nu)
        else:
            value = (ParamPoly.const(nu) - alpha) * omega * 2
    else:
        if spec.family is Family.PSI:
            value = (alpha + beta + (nu + 1)) * (4 * nu)
        else:
            value = (alpha * (-1) + nu) * (beta + (nu + 1)) * 4
    return Energy(value, spec.model)
