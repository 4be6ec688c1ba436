"""Exact rank computation over the rationals, two independent ways.

rank_fraction_free eliminates on integer rows without ever leaving the
integers (the classic one-step fraction-free scheme whose divisions are
exact). RationalRowSpace is the naive alternative, an incrementally
maintained echelon basis over Fraction, used both as a cross-check oracle
and for span-membership queries. No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["rank_fraction_free", "rank_rational", "RationalRowSpace"]


def rank_fraction_free(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Every update is (pivot*entry - factor*pivot_row_entry) // previous_pivot
    with an exact division, so entries stay integers of modest size.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    nrows = len(m)
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        sel = next((i for i in range(row, nrows) if m[i][col]), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        piv = m[row][col]
        top = m[row]
        for i in range(row + 1, nrows):
            ri = m[i]
            f = ri[col]
            if f == 0 and piv == prev:
                continue
            for j in range(col, ncols):
                ri[j] = (piv * ri[j] - f * top[j]) // prev
        prev = piv
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


class RationalRowSpace:
    """Row space over the rationals, kept in reduced echelon form.

    add() returns whether the row enlarged the space; contains() answers
    membership without mutating. Vectors are sequences of ints or Fractions.
    """

    def __init__(self, ncols: int):
        if ncols < 0:
            raise ValueError("negative column count")
        self.ncols = ncols
        self._rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, unit-pivot row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _residual(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError(f"expected {self.ncols} columns, got {len(vec)}")
        v = [Fraction(x) for x in vec]
        for lead, row in self._rows:
            f = v[lead]
            if f:
                for j in range(lead, self.ncols):
                    v[j] -= f * row[j]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self._residual(vec))

    def add(self, vec: Sequence) -> bool:
        v = self._residual(vec)
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return False
        inv = v[lead]
        row = [x / inv for x in v]
        # keep rows sorted by pivot column and reduce the ones above
        for other_lead, other in self._rows:
            f = other[lead]
            if f:
                for j in range(lead, self.ncols):
                    other[j] -= f * row[j]
        self._rows.append((lead, row))
        self._rows.sort(key=lambda lr: lr[0])
        return True

    def extend(self, rows: Iterable[Sequence]) -> int:
        added = 0
        for r in rows:
            if self.add(r):
                added += 1
        return added


def rank_rational(rows: Iterable[Sequence]) -> int:
    """Oracle rank: plain Gaussian elimination over Fraction."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    space = RationalRowSpace(len(rows[0]))
    space.extend(rows)
    return space.rank
