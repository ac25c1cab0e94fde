from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

__all__ = ["SparseEchelon", "exact_rank"]

Row = Dict[int, Fraction]


class SparseEchelon:
    """Incremental row echelon form over Q with sparse rows.

    Rows are dicts column -> nonzero Fraction.  Insertion reduces the new
    row against existing pivots (plain rational elimination, first-nonzero
    column pivoting) and normalizes the pivot coefficient to 1.  The pivot
    column set of a row space is intrinsic, so ranks, pivot columns and
    `residual` representatives do not depend on insertion order.
    """

    def __init__(self) -> None:
        self.pivot_rows: Dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def pivot_columns(self) -> List[int]:
        return sorted(self.pivot_rows)

    def _forward(self, row: Row) -> Row:
        """Eliminate leading columns while they hit pivots; stops at the
        first pivot-free leading column (or empties the row)."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            pivot = self.pivot_rows.get(lead)
            if pivot is None:
                return row
            coef = row.pop(lead)
            for c, v in pivot.items():
                if c == lead:
                    continue
                s = row.get(c, Fraction(0)) - coef * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
        return row

    def add_row(self, row: Row) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        res = self._forward(row)
        if not res:
            return False
        lead = min(res)
        inv = Fraction(1) / res[lead]
        self.pivot_rows[lead] = {c: v * inv for c, v in res.items()}
        return True

    def contains(self, row: Row) -> bool:
        """Whether the row lies in the span.  (The leading column of any
        span element is a pivot column, so forward elimination decides.)"""
        return not self._forward(dict(row))

    def residual(self, row: Row) -> Row:
        """Canonical representative of `row` modulo the span: every pivot
        column is eliminated, only pivot-free columns remain."""
        row = {c: v for c, v in row.items() if v}
        out: Row = {}
        while row:
            lead = min(row)
            coef = row.pop(lead)
            pivot = self.pivot_rows.get(lead)
            if pivot is None:
                out[lead] = coef
                continue
            for c, v in pivot.items():
                if c == lead:
                    continue
                s = row.get(c, Fraction(0)) - coef * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
        return out


def exact_rank(matrix: Iterable[Sequence[Fraction]]) -> int:
    """Rank over Q of a dense rectangular matrix, by plain rational Gaussian
    elimination with first-nonzero pivoting."""
    ech = SparseEchelon()
    width: Optional[int] = None
    for r in matrix:
        r = list(r)
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise ValueError("matrix rows have unequal lengths")
        ech.add_row({j: Fraction(v) for j, v in enumerate(r) if v})
    return ech.rank
