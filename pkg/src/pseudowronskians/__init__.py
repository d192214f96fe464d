"""Exact-arithmetic Laguerre and Jacobi pseudo-Wronskians indexed by pairs
of Maya diagrams, with symbolic verification of their equivalence relations.
"""
from .algebra import (
    AffineExponent,
    Base,
    GaugeFunction,
    NotProportional,
    ParamPoly,
    RatFunc,
    RatZ,
    ShapeError,
    ZPoly,
    ZeroPolynomial,
    determinant,
    determinant_bareiss,
    determinant_laplace,
    gauge_log_derivative,
    gauge_wronskian,
    pochhammer,
    proportionality_factor,
)
from .classical import Energy, Family, InvalidDegree, Model, SeedSpec, energy, jacobi, laguerre, seed
from .maya import (
    DuplicateIndex,
    DurfeeSymbol,
    InvalidDurfee,
    MayaDiagram,
    NotPositive,
    Partition,
    UniversalCharacter,
    canonical_flat,
    conjugate,
    durfee_from_maya,
    maya_from_durfee,
    maya_from_entries,
    orbit,
    orbit_maya,
    partition_of,
    render_maya,
    render_young,
    shift_left,
    shift_right,
)
from .wronskians import (
    CanonicalForm,
    DegenerateChain,
    EquivalenceReport,
    OracleMismatch,
    OracleReport,
    PotentialExpr,
    PotentialMismatch,
    PotentialReport,
    PseudoWronskianMatrix,
    all_characters,
    base_potential,
    build_matrix,
    canonicalize,
    extended_potential,
    oracle_check,
    pseudo_wronskian,
    random_characters,
    seed_specs,
    verify_equivalence,
    verify_potential_equivalence,
)

__version__ = "0.1.0"
