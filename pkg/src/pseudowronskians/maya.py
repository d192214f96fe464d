"""Maya diagrams, partitions, Durfee symbols and origin-shifting rules.

A Maya diagram is an infinite row of boxes labelled by the integers, filled
far to the left and empty far to the right.  It is pinned down by finite
data: the filled boxes at non-negative positions (``pos``) and the empty
boxes at negative positions (``neg``).  Both are stored as strictly
decreasing tuples, so that ``pos + neg`` reads exactly like the defining
tuple

    (n_1, ..., n_k, nbar_kbar, ..., nbar_1)

with n_1 > ... > n_k >= 0 > nbar_kbar > ... > nbar_1.

Sliding the origin of the row one box at a time changes this tuple by the
unit shift rules (`shift_left`, `shift_right`) but leaves the underlying
Young diagram unchanged.  The set of diagrams reachable this way is a shape
class; `orbit` walks it from the flat representative (no negative entries)
to the co-flat one (no non-negative entries).  `DurfeeSymbol` records a
diagram relative to the k x kbar rectangle spanned by the origin: truncated
column heights on one side and truncated row lengths on the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby


class DuplicateIndex(ValueError):
    """A Maya diagram was built from a tuple with repeated entries."""


class NotPositive(ValueError):
    """The operation needs a diagram without negative entries."""


class InvalidDurfee(ValueError):
    """Durfee data must be weakly decreasing lists of non-negative integers."""


def _strictly_decreasing(t):
    return all(a > b for a, b in zip(t, t[1:]))


def _weakly_decreasing(t):
    return all(a >= b for a, b in zip(t, t[1:]))


@dataclass(frozen=True)
class MayaDiagram:
    """A Maya diagram as the pair of tuples described in the module docstring."""

    pos: tuple[int, ...] = ()
    neg: tuple[int, ...] = ()

    def __post_init__(self):
        if any(n < 0 for n in self.pos) or any(n >= 0 for n in self.neg):
            raise ValueError("pos entries must be >= 0 and neg entries < 0")
        if not _strictly_decreasing(self.pos) or not _strictly_decreasing(self.neg):
            raise ValueError("entries must be strictly decreasing")

    @property
    def entries(self) -> tuple[int, ...]:
        """The defining tuple, all entries in decreasing order."""
        return self.pos + self.neg

    @property
    def size(self) -> int:
        return len(self.pos) + len(self.neg)

    @property
    def is_flat(self) -> bool:
        return not self.neg

    def is_filled(self, position: int) -> bool:
        """Whether the box at ``position`` carries a particle."""
        if position >= 0:
            return position in self.pos
        return position not in self.neg

    def __str__(self):
        return "(" + ",".join(str(n) for n in self.entries) + ")"


@dataclass(frozen=True)
class Partition:
    """Integer partition; trailing zeros are allowed and kept."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError("parts must be non-negative")
        if not _weakly_decreasing(self.parts):
            raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def reduced(self) -> "Partition":
        """Drop the trailing string of zeros."""
        parts = self.parts
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        return Partition(parts[:n])

    def __str__(self):
        return "(" + _group_powers(self.parts) + ")" if self.parts else "()"


def _group_powers(parts) -> str:
    out = []
    for value, run in groupby(parts):
        count = len(list(run))
        out.append(f"{value}^{count}" if count > 1 else f"{value}")
    return ",".join(out)


@dataclass(frozen=True)
class DurfeeSymbol:
    """Truncated column heights ``d`` and truncated row lengths ``dbar``.

    ``d`` has one entry per non-negative Maya entry (k of them) and ``dbar``
    one per negative entry (kbar); the symbol determines the diagram and the
    origin placement uniquely.
    """

    d: tuple[int, ...] = ()
    dbar: tuple[int, ...] = ()

    def __post_init__(self):
        for t in (self.d, self.dbar):
            if any(x < 0 for x in t) or not _weakly_decreasing(t):
                raise InvalidDurfee(f"not a weakly decreasing list of naturals: {t}")

    @property
    def k(self) -> int:
        return len(self.d)

    @property
    def kbar(self) -> int:
        return len(self.dbar)

    def __str__(self):
        left = _group_powers(self.d) if self.d else "∅"
        right = _group_powers(self.dbar) if self.dbar else "∅"
        return f"[{left} | {right}]"


@dataclass(frozen=True)
class UniversalCharacter:
    """A pair of independent Maya diagrams indexing a mixed chain of seeds."""

    psi: MayaDiagram = MayaDiagram()
    phi: MayaDiagram = MayaDiagram()

    @classmethod
    def from_indices(cls, psi_entries, phi_entries) -> "UniversalCharacter":
        return cls(maya_from_entries(psi_entries), maya_from_entries(phi_entries))

    @property
    def total(self) -> int:
        return self.psi.size + self.phi.size

    def __str__(self):
        return f"{self.psi} ⊗ {self.phi}"


def maya_from_entries(entries) -> MayaDiagram:
    """Build the diagram for an arbitrary tuple of distinct integers."""
    entries = list(entries)
    if len(set(entries)) != len(entries):
        raise DuplicateIndex(f"repeated entry in {entries}")
    pos = tuple(sorted((n for n in entries if n >= 0), reverse=True))
    neg = tuple(sorted((n for n in entries if n < 0), reverse=True))
    return MayaDiagram(pos, neg)


def partition_of(m: MayaDiagram) -> Partition:
    """Partition of a flat diagram: part i is n_i - m + i (1-based)."""
    if m.neg:
        raise NotPositive(f"diagram has negative entries: {m}")
    count = len(m.pos)
    return Partition(tuple(n - count + i + 1 for i, n in enumerate(m.pos)))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; reduces trailing zeros first."""
    parts = p.reduced().parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1)))


def durfee_from_maya(m: MayaDiagram) -> DurfeeSymbol:
    """Durfee symbol of a diagram: d_i = n_i - k + i, dbar_j = -(nbar_j+1) - kbar + j."""
    k, kbar = len(m.pos), len(m.neg)
    d = tuple(n - k + i + 1 for i, n in enumerate(m.pos))
    # neg is stored descending, nbar_1 is its last element
    dbar = tuple(-(m.neg[kbar - j] + 1) - kbar + j for j in range(1, kbar + 1))
    return DurfeeSymbol(d, dbar)


def maya_from_durfee(ds: DurfeeSymbol) -> MayaDiagram:
    """Inverse of `durfee_from_maya`."""
    k, kbar = ds.k, ds.kbar
    pos = tuple(ds.d[j - 1] + k - j for j in range(1, k + 1))
    nbar = [-(ds.dbar[j - 1] + kbar - j) - 1 for j in range(1, kbar + 1)]
    return MayaDiagram(pos, tuple(reversed(nbar)))


def shift_left(m: MayaDiagram) -> MayaDiagram:
    """One left-descending move of the origin.

    All entries drop by one; a new entry -1 appears unless the diagram had a
    zero entry, in which case that entry disappears instead.
    """
    if m.pos and m.pos[-1] == 0:
        return MayaDiagram(tuple(n - 1 for n in m.pos[:-1]), tuple(n - 1 for n in m.neg))
    return MayaDiagram(tuple(n - 1 for n in m.pos), (-1,) + tuple(n - 1 for n in m.neg))


def shift_right(m: MayaDiagram) -> MayaDiagram:
    """One right-ascending move of the origin; inverse of `shift_left`.

    All entries grow by one; a new entry 0 appears unless the diagram had a
    -1 entry, in which case that entry disappears instead.
    """
    if m.neg and m.neg[0] == -1:
        return MayaDiagram(tuple(n + 1 for n in m.pos), tuple(n + 1 for n in m.neg[1:]))
    return MayaDiagram(tuple(n + 1 for n in m.pos) + (0,), tuple(n + 1 for n in m.neg))


def canonical_flat(m: MayaDiagram) -> tuple[MayaDiagram, int]:
    """Apply right-ascending shifts until no negative entries remain.

    Returns the flat diagram and the number of shifts, which equals -nbar_1.
    """
    count = 0
    while m.neg:
        m = shift_right(m)
        count += 1
    return m, count


def orbit_maya(m: MayaDiagram) -> list[MayaDiagram]:
    """The shift chain from the flat representative down to the co-flat one."""
    cur, _ = canonical_flat(m)
    out = [cur]
    while cur.pos:
        cur = shift_left(cur)
        out.append(cur)
    return out


def orbit(m: MayaDiagram) -> list[DurfeeSymbol]:
    """Durfee symbols along `orbit_maya`, from [lambda|∅] to [∅|lambda-bar]."""
    return [durfee_from_maya(x) for x in orbit_maya(m)]


def render_maya(m: MayaDiagram, lo: int | None = None, hi: int | None = None) -> str:
    """ASCII row of the diagram: ● filled, ○ empty, '|' marks the origin.

    Boxes from ``lo`` to ``hi`` inclusive are drawn; the defaults pad one box
    beyond the extreme entries (and always show positions -2..1).
    """
    if lo is None:
        lo = min(m.neg[-1] - 1 if m.neg else -2, -2)
    if hi is None:
        hi = max(m.pos[0] + 1 if m.pos else 1, 1)
    cells = []
    for p in range(lo, hi + 1):
        if p == 0:
            cells.append("|")
        cells.append("●" if m.is_filled(p) else "○")
    return " ".join(cells)


def render_young(m: MayaDiagram) -> str:
    """Punctured Young diagram as rows of cells plus an origin annotation.

    Row j (from the top) has one ``[]`` cell per column of height >= j; the
    origin sits at the inner corner of the k x kbar Durfee rectangle, which
    is spelled out underneath together with the Durfee symbol.
    """
    flat, _ = canonical_flat(m)
    shape = conjugate(partition_of(flat))
    ds = durfee_from_maya(m)
    lines = ["[]" * row for row in shape.parts]
    if not lines:
        lines = ["(empty diagram)"]
    lines.append(f"origin: corner of the {ds.k} x {ds.kbar} Durfee rectangle")
    lines.append(f"Durfee symbol: {ds}")
    return "\n".join(lines)
