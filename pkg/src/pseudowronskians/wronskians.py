"""Laguerre and Jacobi pseudo-Wronskians, their equivalence relations, the
gauge-Wronskian oracle and the extended potentials.

A universal character (a pair of Maya diagrams) selects one seed function
per entry: the psi diagram indexes the extended spectrum, the phi diagram
the extended shadow spectrum.  The pseudo-Wronskian is the determinant of
the matrix whose rows are the gauge-stripped derivatives of those seeds,
one row per seed in tuple order (psi entries descending, then phi entries
descending), one column per derivative order.  Rows for negative indices
and for the shadow family carry power prefactors that clear all
denominators, so the determinant is a genuine polynomial in z.

Shifting the origin of either Maya diagram produces a different determinant
describing the same extension; `canonicalize` predicts, and
`verify_equivalence` checks exactly, the monomial exponents, parameter
shifts and constant that relate any character to its flat representative.
`oracle_check` validates the determinant construction itself against an
independent symbolic Wronskian of the actual seed functions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import (
    Base,
    ParamPoly,
    RatFunc,
    RatZ,
    ZPoly,
    determinant,
    gauge_wronskian,
    pochhammer,
    proportionality_factor,
)
from .classical import Family, Model, SeedSpec, energy, jacobi, laguerre, seed
from .maya import MayaDiagram, UniversalCharacter, canonical_flat

MODEL_BASES = {
    Model.LAGUERRE: (Base.Z,),
    Model.JACOBI: (Base.ONE_MINUS_Z, Base.ONE_PLUS_Z),
}

ROW_CONVENTION = (
    "rows: psi entries descending then phi entries descending; "
    "columns: derivative order 0..m+r-1"
)


class DegenerateChain(ValueError):
    """Chains with a repeated index within one family are not supported."""


class OracleMismatch(AssertionError):
    """The symbolic Wronskian oracle disagrees with the determinant."""


class PotentialMismatch(AssertionError):
    """Two potentials of one shape class do not differ by the energy shift."""


def seed_specs(model: Model, uc: UniversalCharacter) -> list[SeedSpec]:
    """The seeds of the mixed chain, in row order."""
    return [SeedSpec(model, Family.PSI, n) for n in uc.psi.entries] + [
        SeedSpec(model, Family.PHI, l) for l in uc.phi.entries
    ]


@lru_cache(maxsize=None)
def _entry(model: Model, family: Family, index: int, i: int, size: int) -> ZPoly:
    """Matrix entry of one seed at derivative order i in a size x size matrix."""
    clear = size - 1 - i
    if model is Model.LAGUERRE:
        if family is Family.PSI:
            if index >= 0:
                if i > index:
                    return ZPoly.zero()
                sign = Fraction(-1 if i % 2 else 1)
                return laguerre(index - i, alpha_shift=i).scale(sign)
            n = -index - 1
            scalar = pochhammer(ParamPoly.const(n + 1), i, "rising")
            poly = laguerre(n + i, alpha_shift=-i, negate_alpha=True, arg_sign=-1)
            return poly.scale(scalar).shift_z(clear)
        if index >= 0:
            scalar = pochhammer(ParamPoly.affine(-1, 0, index), i, "falling")
            poly = laguerre(index, alpha_shift=-i, negate_alpha=True)
            return poly.scale(scalar).shift_z(clear)
        l = -index - 1
        return laguerre(l, alpha_shift=i, arg_sign=-1)
    one_m = Base.ONE_MINUS_Z.poly()
    one_p = Base.ONE_PLUS_Z.poly()
    if family is Family.PSI:
        if index >= 0:
            if i > index:
                return ZPoly.zero()
            scalar = pochhammer(ParamPoly.affine(1, 1, index + 1), i, "rising") * Fraction(
                1, 2 ** i
            )
            return jacobi(index - i, alpha_shift=i, beta_shift=i).scale(scalar)
        n = -index - 1
        scalar = pochhammer(ParamPoly.const(n + 1), i, "rising") * Fraction((-2) ** i)
        poly = jacobi(n + i, alpha_shift=-i, beta_shift=-i, negate_alpha=True, negate_beta=True)
        return poly.scale(scalar) * (one_m * one_p) ** clear
    if index >= 0:
        scalar = pochhammer(ParamPoly.affine(-1, 0, index), i, "falling") * Fraction(
            (-1) ** i
        )
        poly = jacobi(index, alpha_shift=-i, beta_shift=i, negate_alpha=True)
        return poly.scale(scalar) * one_m ** clear
    l = -index - 1
    scalar = pochhammer(ParamPoly.affine(0, -1, l), i, "falling")
    poly = jacobi(l, alpha_shift=i, beta_shift=-i, negate_beta=True)
    return poly.scale(scalar) * one_p ** clear


@dataclass(frozen=True)
class PseudoWronskianMatrix:
    model: Model
    uc: UniversalCharacter
    entries: tuple[tuple[ZPoly, ...], ...]
    row_labels: tuple[SeedSpec, ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def build_matrix(model: Model, uc: UniversalCharacter) -> PseudoWronskianMatrix:
    """The (m+r) x (m+r) matrix whose determinant is the pseudo-Wronskian."""
    specs = seed_specs(model, uc)
    size = len(specs)
    for diagram in (uc.psi, uc.phi):
        if len(set(diagram.entries)) != diagram.size:
            raise DegenerateChain(f"repeated index in {diagram}")
    rows = tuple(
        tuple(_entry(model, s.family, s.index, i, size) for i in range(size))
        for s in specs
    )
    return PseudoWronskianMatrix(model, uc, rows, tuple(specs))


@lru_cache(maxsize=4096)
def _pw_cached(model: Model, uc: UniversalCharacter) -> ZPoly:
    return determinant(build_matrix(model, uc).entries)


def pseudo_wronskian(model: Model, uc: UniversalCharacter) -> ZPoly:
    """Determinant of `build_matrix`; a polynomial in z, nonzero when the
    indices are distinct."""
    return _pw_cached(model, uc)


@dataclass(frozen=True)
class CanonicalForm:
    canonical: UniversalCharacter
    alpha_shift: int
    beta_shift: int
    exps: dict[Base, int]


def canonicalize(model: Model, uc: UniversalCharacter) -> CanonicalForm:
    """Flatten both diagrams and predict the equivalence data exactly.

    The source determinant equals

        constant * prod(base**exp) * canonical determinant at shifted
        parameters,

    where the alpha shift is (flattening shifts of phi) - (flattening
    shifts of psi) and, for the Jacobi model, the beta shift is minus their
    sum.  The predicted exponents depend only on the Durfee data of the
    source character.
    """
    psi_flat, s_psi = canonical_flat(uc.psi)
    phi_flat, s_phi = canonical_flat(uc.phi)
    kbar = len(uc.psi.neg)
    kappa = len(uc.phi.pos)
    kappabar = len(uc.phi.neg)
    deltabar1 = s_phi - kappabar  # first truncated row length of phi
    e1 = (kbar + kappa) * (kbar + kappa - 1) - (deltabar1 + kappa) * (deltabar1 + kappa - 1)
    if model is Model.LAGUERRE:
        exps = {Base.Z: e1}
        beta_shift = 0
    else:
        e2 = (kbar + kappabar) * (kbar + kappabar - 1)
        exps = {Base.ONE_MINUS_Z: e1, Base.ONE_PLUS_Z: e2}
        beta_shift = -(s_psi + s_phi)
    return CanonicalForm(
        UniversalCharacter(psi_flat, phi_flat), s_phi - s_psi, beta_shift, exps
    )


@dataclass(frozen=True)
class EquivalenceReport:
    model: Model
    source: UniversalCharacter
    canonical: UniversalCharacter
    alpha_shift: int
    beta_shift: int
    exps: dict[Base, int]
    constant: RatFunc
    verified: bool
    convention: str = ROW_CONVENTION


def verify_equivalence(model: Model, uc: UniversalCharacter) -> EquivalenceReport:
    """Compute both determinants and the exact factorisation between them.

    `verified` is True when the computed exponents match the predictions of
    `canonicalize`; the proportionality itself is exact or the call raises
    `NotProportional` with both polynomials attached.
    """
    form = canonicalize(model, uc)
    pw_src = pseudo_wronskian(model, uc)
    pw_can = pseudo_wronskian(model, form.canonical).shift_params(
        form.alpha_shift, form.beta_shift
    )
    constant, exps = proportionality_factor(pw_src, pw_can, MODEL_BASES[model])
    return EquivalenceReport(
        model=model,
        source=uc,
        canonical=form.canonical,
        alpha_shift=form.alpha_shift,
        beta_shift=form.beta_shift,
        exps=exps,
        constant=constant,
        verified=exps == form.exps,
    )


@dataclass(frozen=True)
class OracleReport:
    model: Model
    uc: UniversalCharacter
    constant: RatFunc
    exps: dict[Base, int]


@lru_cache(maxsize=None)
def _oracle_row(model: Model, family: Family, index: int, size: int):
    """Cleared symbolic-derivative row of one seed, reused across chains."""
    from .algebra.gauge import wronskian_row

    return wronskian_row(seed(SeedSpec(model, family, index)), size, MODEL_BASES[model])[0]


def oracle_check(model: Model, uc: UniversalCharacter, bound: int = 6) -> OracleReport:
    """Check the determinant against a symbolic Wronskian of the seeds.

    The seeds are differentiated generically (no closed-form derivative
    identities), their Wronskian in z is taken exactly, the gauge monomial
    is stripped, and the remaining rational part must equal the
    pseudo-Wronskian up to a constant times a monomial in the model bases.
    """
    from .algebra.determinant import determinant_fpoly
    from .algebra.fastpoly import FPoly
    from .algebra.proportion import proportionality_core

    if uc.total > bound:
        raise ValueError(f"chain of {uc.total} seeds exceeds the oracle bound {bound}")
    bases = MODEL_BASES[model]
    pw = pseudo_wronskian(model, uc)
    if uc.total == 0:
        return OracleReport(model, uc, RatFunc.one(), {b: 0 for b in bases})
    size = uc.total
    rows = [_oracle_row(model, s.family, s.index, size) for s in seed_specs(model, uc)]
    det = determinant_fpoly(rows)
    # every seed has a polynomial rational part, so the cleared denominator
    # is the basis product to the power size-1 per row
    den = FPoly.one()
    basis = FPoly.one()
    for b in bases:
        basis = basis * FPoly.from_zpoly(b.poly())
    for _ in range(size * (size - 1)):
        den = den * basis
    try:
        constant, exps = proportionality_core(
            det, den, FPoly.from_zpoly(pw), FPoly.one(), bases, diag=(uc, pw)
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise OracleMismatch(f"oracle disagrees for {model} {uc}: {exc}") from exc
    return OracleReport(model, uc, constant, exps)


# ---------------------------------------------------------------------------
# Extended potentials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PotentialExpr:
    model: Model
    uc: UniversalCharacter
    value: RatZ  # the full potential as an exact rational function of z


def base_potential(model: Model) -> RatZ:
    """The primary potential written in the variable z."""
    alpha, beta, omega = ParamPoly.alpha(), ParamPoly.beta(), ParamPoly.omega()
    quarter = Fraction(1, 4)
    if model is Model.LAGUERRE:
        # omega*z/2 + omega*(alpha^2 - 1/4)/(2 z) - omega*(alpha + 1)
        centrifugal = omega * (alpha * alpha - quarter)
        num = ZPoly(
            [
                RatFunc(centrifugal),
                RatFunc(omega * (alpha + 1) * (-2)),
                RatFunc(omega),
            ]
        )
        return RatZ(num, ZPoly.monomial(1, 2))
    # 2(alpha^2 - 1/4)/(1-z) + 2(beta^2 - 1/4)/(1+z) - (alpha+beta+1)^2
    a2 = (alpha * alpha - quarter) * 2
    b2 = (beta * beta - quarter) * 2
    well = (alpha + beta + 1) ** 2
    one_p = Base.ONE_PLUS_Z.poly()
    one_m = Base.ONE_MINUS_Z.poly()
    num = (
        one_p.scale(a2)
        + one_m.scale(b2)
        - (one_m * one_p).scale(well)
    )
    return RatZ(num, one_m * one_p)


def _chain_rule_polys(model: Model) -> tuple[ZPoly, ZPoly]:
    """A, B with d^2/dx^2 f(z(x)) = A f'' + B f', i.e. A = (dz/dx)^2, B = z''."""
    if model is Model.LAGUERRE:
        omega = ParamPoly.omega()
        return ZPoly([RatFunc.zero(), RatFunc(omega * 2)]), ZPoly.const(RatFunc(omega))
    one_m2 = Base.ONE_MINUS_Z.poly() * Base.ONE_PLUS_Z.poly()
    return one_m2.scale(4), ZPoly([RatFunc.zero(), RatFunc.const(-4)])


def extended_potential(model: Model, uc: UniversalCharacter) -> PotentialExpr:
    """The potential of the chain: base potential minus 2 (log W(x))''.

    W as a function of x is the Jacobian power (dz/dx)**(m(m-1)/2) times the
    z-Wronskian of the seeds.  Its logarithmic z-derivative splits into a
    gauge piece over z resp. (1-z)(1+z), which also absorbs the Jacobian
    power and the row-clearing denominator, plus det'/det for the cleared
    Wronskian determinant; both pieces are pushed through the chain rule
    separately so denominators never multiply up.
    """
    size = uc.total
    if size == 0:
        return PotentialExpr(model, uc, base_potential(model))
    from .algebra.determinant import determinant_fpoly
    from .algebra.fastpoly import FPoly, base_valuation_and_strip

    specs = seed_specs(model, uc)
    rows = [_oracle_row(model, s.family, s.index, size) for s in specs]
    det = determinant_fpoly(rows)
    # pull the base-monomial content of the determinant into the gauge part,
    # which keeps the polynomial whose log derivative we differentiate small
    vals = {}
    for base in MODEL_BASES[model]:
        vals[base], det = base_valuation_and_strip(det, base)
    det = det.normalized()
    seeds = [seed(s) for s in specs]
    jac_half = Fraction(size * (size - 1), 4)  # (jacobian exponent)/2
    cleared = size * (size - 1)  # power of the basis product pulled out per matrix
    achain, bchain = (FPoly.from_zpoly(p) for p in _chain_rule_polys(model))
    if model is Model.LAGUERRE:
        base_exp = jac_half - cleared + vals[Base.Z]
        slope = sum((s.exp_z.as_parampoly() for s in seeds), ParamPoly.const(base_exp))
        e_z = sum(s.e_z for s in seeds)
        u1_num = FPoly.from_zpoly(ZPoly([RatFunc(slope), RatFunc.const(e_z)]))
        u1_den = FPoly.from_zpoly(ZPoly.z())
    else:
        a = sum(
            (s.exp_omz.as_parampoly() for s in seeds),
            ParamPoly.const(jac_half - cleared + vals[Base.ONE_MINUS_Z]),
        )
        b = sum(
            (s.exp_opz.as_parampoly() for s in seeds),
            ParamPoly.const(jac_half - cleared + vals[Base.ONE_PLUS_Z]),
        )
        u1_num = FPoly.from_zpoly(
            Base.ONE_PLUS_Z.poly().scale(-a) + Base.ONE_MINUS_Z.poly().scale(b)
        )
        u1_den = FPoly.from_zpoly(Base.ONE_MINUS_Z.poly() * Base.ONE_PLUS_Z.poly())
    # each log piece contributes achain*u' + bchain*u with u = n/d, i.e.
    # [achain*(n'd - nd') + bchain*n*d] / d**2
    corr_num = FPoly.zero()
    corr_den = FPoly.one()
    for n, d in ((u1_num, u1_den), (det.diff_z(), det)):
        dn = n.diff_z() * d - n * d.diff_z()
        piece_num = achain * dn + bchain * (n * d)
        piece_den = d * d
        corr_num = corr_num * piece_den + piece_num * corr_den
        corr_den = corr_den * piece_den
    base = base_potential(model)
    base_num = FPoly.from_zpoly(base.num)
    base_den = FPoly.from_zpoly(base.den)
    value_num = base_num * corr_den - corr_num.scale_by(2) * base_den
    value_den = base_den * corr_den
    value_num = value_num.normalized()
    value_den = value_den.normalized()
    return PotentialExpr(model, uc, RatZ(value_num.to_zpoly(), value_den.to_zpoly()))


@dataclass(frozen=True)
class PotentialReport:
    model: Model
    uc: UniversalCharacter
    canonical: UniversalCharacter
    alpha_shift: int
    beta_shift: int
    energy_shift: ParamPoly
    verified: bool


def verify_potential_equivalence(model: Model, uc: UniversalCharacter) -> PotentialReport:
    """The source potential minus the shifted canonical potential must be a
    constant equal to the dispersion value at minus the psi flattening count."""
    from .algebra.fastpoly import FPoly

    form = canonicalize(model, uc)
    _, s_psi = canonical_flat(uc.psi)
    expected = energy(SeedSpec(model, Family.PSI, -s_psi)).value
    v_src = extended_potential(model, uc).value
    v_can = extended_potential(model, form.canonical).value.shift_params(
        form.alpha_shift, form.beta_shift
    )
    n1, d1 = FPoly.from_zpoly(v_src.num), FPoly.from_zpoly(v_src.den)
    n2, d2 = FPoly.from_zpoly(v_can.num), FPoly.from_zpoly(v_can.den)
    diff_num = n1 * d2 - n2 * d1
    shift_f = FPoly.from_zpoly(ZPoly.const(RatFunc(expected)))
    if not (diff_num - shift_f * (d1 * d2)).is_zero():
        raise PotentialMismatch(
            f"potential difference for {model} {uc} is not the energy shift {expected}"
        )
    return PotentialReport(
        model, uc, form.canonical, form.alpha_shift, form.beta_shift, expected, True
    )


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def all_characters(max_total: int, lo: int, hi: int):
    """Every universal character with m + r <= max_total and indices in
    [lo, hi], in a fixed deterministic order."""
    pool = range(lo, hi + 1)
    for m in range(max_total + 1):
        for psi in combinations(pool, m):
            for r in range(max_total - m + 1):
                for phi in combinations(pool, r):
                    yield UniversalCharacter.from_indices(psi, phi)


def random_characters(seed_value: int, count: int, max_family_size: int, lo: int, hi: int):
    """Deterministic pseudo-random universal characters for property sweeps."""
    rng = random.Random(seed_value)
    out = []
    for _ in range(count):
        m = rng.randint(0, max_family_size)
        r = rng.randint(0, max_family_size)
        psi = rng.sample(range(lo, hi + 1), m)
        phi = rng.sample(range(lo, hi + 1), r)
        out.append(UniversalCharacter.from_indices(psi, phi))
    return out


def _map_tasks(func, tasks, workers):
    """Run tasks serially or on a process pool; results keep task order."""
    if not workers or workers <= 1 or len(tasks) < 4:
        return [func(t) for t in tasks]
    import multiprocessing

    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        chunk = max(1, len(tasks) // (workers * 8))
        return pool.map(func, tasks, chunksize=chunk)


def _oracle_task(task):
    model, uc, bound = task
    report = oracle_check(model, uc, bound)
    if uc.total and pseudo_wronskian(model, uc).is_zero():
        raise OracleMismatch(f"zero pseudo-Wronskian for {model} {uc}")
    return report.exps


def oracle_sweep(model: Model, max_total=4, lo=-3, hi=4, bound=6, workers=None) -> int:
    """Run `oracle_check` over every character in the box; returns the count.

    Any mismatch raises; results aggregate in the deterministic enumeration
    order regardless of the worker count.
    """
    tasks = [(model, uc, bound) for uc in all_characters(max_total, lo, hi)]
    return len(_map_tasks(_oracle_task, tasks, workers))


def _equivalence_task(task):
    model, uc = task
    return verify_equivalence(model, uc)


def equivalence_sweep(model: Model, chars, workers=None) -> list[EquivalenceReport]:
    """`verify_equivalence` over the given characters, in their order."""
    tasks = [(model, uc) for uc in chars]
    return _map_tasks(_equivalence_task, tasks, workers)


def _potential_task(task):
    model, uc = task
    return verify_potential_equivalence(model, uc)


def potential_sweep(model: Model, max_total=3, lo=-3, hi=3, workers=None) -> int:
    """`verify_potential_equivalence` over every character in the box."""
    tasks = [(model, uc) for uc in all_characters(max_total, lo, hi)]
    return len(_map_tasks(_potential_task, tasks, workers))
