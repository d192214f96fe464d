"""Exact determinants of ZPoly matrices.

Entries are first cleared of all denominators row by row (rational-number
denominators and, if present, parameter-polynomial ones) and converted to
packed-integer polynomials; the scalars pulled out are divided back into
the result, so the determinant is exact.

Two engines are provided.  `determinant_bareiss` is fraction-free Bareiss
elimination with exact divisions by the previous pivot and sparsest-pivot
row swaps.  `determinant_laplace` expands by minors over column subsets,
computing every shared minor once; on the matrices that arise here its
products pair one small factor with one large one and it skips structural
zeros, which makes it the faster engine at every size, so the public
`determinant` uses it throughout.  Inside a `crosscheck()` block both
engines run on every matrix up to the given dimension and must agree
exactly.
"""
from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from math import lcm as int_lcm

from .fastpoly import FPoly, ip_exact_div, ip_mul, pack
from .parampoly import ParamPoly
from .ratfunc import RatFunc
from .zpoly import ZPoly


class ShapeError(ValueError):
    """The input matrix is not square."""


_UNIT = {0: 1}


def _clear_matrix(mat):
    """Row-cleared integer matrix plus the scalar divisor that was pulled out."""
    rows = []
    frac_scale = Fraction(1)
    poly_scale = ParamPoly.one()
    for row in mat:
        row = list(row)
        dens = []
        for e in row:
            for c in e.coeffs:
                if not c.den.is_one() and all(c.den != d for d in dens):
                    dens.append(c.den)
        for d in dens:
            row = [e.scale(d) for e in row]
            poly_scale = poly_scale * d
        fps = [FPoly.from_zpoly(e) for e in row]
        denom = int_lcm(*(fp.scale.denominator for fp in fps)) if fps else 1
        ints = []
        for fp in fps:
            mult = int(fp.scale * denom)
            ints.append({k: c * mult for k, c in fp.terms.items()} if mult != 1 else fp.terms)
        frac_scale *= denom
        rows.append(ints)
    return rows, frac_scale, poly_scale


def _fpoly_rows(rows):
    """Clear FPoly rows to integer rows, returning the pulled-out scalar."""
    out = []
    frac_scale = Fraction(1)
    for row in rows:
        denom = int_lcm(*(fp.scale.denominator for fp in row)) if row else 1
        ints = []
        for fp in row:
            mult = int(fp.scale * denom)
            ints.append({k: c * mult for k, c in fp.terms.items()} if mult != 1 else fp.terms)
        frac_scale *= denom
        out.append(ints)
    return out, frac_scale


def _det_bareiss_int(rows) -> dict:
    n = len(rows)
    if n == 0:
        return dict(_UNIT)
    m = [list(r) for r in rows]
    sign = 1
    prev = dict(_UNIT)
    for k in range(n - 1):
        # choose the sparsest available pivot to limit fill-in
        best = None
        for i in range(k, n):
            if m[i][k] and (best is None or len(m[i][k]) < len(m[best][k])):
                best = i
        if best is None:
            return {}
        if best != k:
            m[k], m[best] = m[best], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = ip_mul(pivot, m[i][j])
                sub = ip_mul(m[i][k], m[k][j])
                for key, c in sub.items():
                    s = elt.get(key, 0) - c
                    if s:
                        elt[key] = s
                    else:
                        elt.pop(key, None)
                if k:
                    elt = ip_exact_div(elt, prev)
                m[i][j] = elt
            m[i][k] = {}
        prev = pivot
    det = m[n - 1][n - 1]
    if sign < 0:
        det = {k: -c for k, c in det.items()}
    return det


def _det_laplace_int(rows) -> dict:
    """Expansion by minors, sharing minors across column subsets."""
    n = len(rows)
    minors = {0: dict(_UNIT)}
    for k in range(n):
        row = rows[k]
        new: dict[int, dict] = {}
        for mask, minor in minors.items():
            if not minor:
                continue
            below = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    below += 1
                    continue
                entry = row[j]
                if entry:
                    term = ip_mul(minor, entry)
                    negate = (k + below) % 2 == 1
                    acc = new.get(mask | bit)
                    if acc is None:
                        new[mask | bit] = (
                            {key: -c for key, c in term.items()} if negate else term
                        )
                    else:
                        get = acc.get
                        for key, c in term.items():
                            if negate:
                                c = -c
                            s = get(key, 0) + c
                            if s:
                                acc[key] = s
                            else:
                                acc.pop(key, None)
        minors = new
        if not minors:
            return {}
    return minors.get((1 << n) - 1, {})


class _CrossCheck:
    enabled = False
    max_dim = 5
    matrices_checked = 0


@contextmanager
def crosscheck(max_dim: int = 5):
    """Run both engines on every determinant up to `max_dim` inside the block.

    A disagreement raises immediately; the number of matrices compared is
    reported through the yielded state object.
    """
    prev = (_CrossCheck.enabled, _CrossCheck.max_dim, _CrossCheck.matrices_checked)
    _CrossCheck.enabled = True
    _CrossCheck.max_dim = max_dim
    _CrossCheck.matrices_checked = 0
    try:
        yield _CrossCheck
    finally:
        _CrossCheck.enabled, _CrossCheck.max_dim, _CrossCheck.matrices_checked = prev


def _validate(mat):
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ShapeError(f"matrix is {n} rows but a row has {len(row)} entries")
    return n


def _det_int(rows) -> dict:
    if _CrossCheck.enabled and len(rows) <= _CrossCheck.max_dim:
        b = _det_bareiss_int(rows)
        l = _det_laplace_int(rows)
        if b != l:
            raise AssertionError("Bareiss and Laplace determinants disagree")
        _CrossCheck.matrices_checked += 1
        return b
    return _det_laplace_int(rows)


def _finish(det_int: dict, frac_scale: Fraction, poly_scale: ParamPoly) -> ZPoly:
    out = FPoly(Fraction(1) / frac_scale, det_int).to_zpoly()
    if not poly_scale.is_one():
        out = out.scale(RatFunc(ParamPoly.one(), poly_scale))
    return out


def determinant(mat) -> ZPoly:
    """Exact determinant of a square ZPoly matrix (0x0 gives 1)."""
    n = _validate(mat)
    if n == 0:
        return ZPoly.one()
    rows, frac_scale, poly_scale = _clear_matrix(mat)
    return _finish(_det_int(rows), frac_scale, poly_scale)


def determinant_fpoly(rows) -> FPoly:
    """Determinant of a square matrix of FPoly entries (internal fast path)."""
    n = len(rows)
    if n == 0:
        return FPoly.one()
    ints, frac_scale = _fpoly_rows(rows)
    return FPoly(Fraction(1) / frac_scale, _det_int(ints))


def determinant_bareiss(mat) -> ZPoly:
    n = _validate(mat)
    if n == 0:
        return ZPoly.one()
    rows, frac_scale, poly_scale = _clear_matrix(mat)
    return _finish(_det_bareiss_int(rows), frac_scale, poly_scale)


def determinant_laplace(mat) -> ZPoly:
    n = _validate(mat)
    if n == 0:
        return ZPoly.one()
    rows, frac_scale, poly_scale = _clear_matrix(mat)
    return _finish(_det_laplace_int(rows), frac_scale, poly_scale)
