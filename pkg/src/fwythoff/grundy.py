"""Dense Sprague-Grundy tables for the game family, by brute-force mex recursion.

Tables cover a rectangular strip of canonical positions ``(a, b)`` with
``0 <= a <= min(b, a_max)`` and ``a <= b <= b_max``.  The strip is closed
under followers: every move from a stored position lands on a stored
position, so a table is self-contained for lookups, winning-move queries
and the verification passes built on top.

Cells are filled row by row (``a`` ascending, then ``b``), which visits
every position after all of its followers.  The inner loop is compiled
with numba; a 2000 x 2000 square table for f-wythoff fills in a few
seconds.  The misere convention is handled by seeding the terminal
position ``(0, 0)`` with value 1 (the mex over the single edge to the
appended sink of the misere game graph) instead of 0; move generation is
identical under both conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from numba import njit

from .games import Convention, Position, Variant, canonicalize, legal_moves

#: cells of the backing rectangle allowed by default (~256 MiB of int32)
DEFAULT_CELL_BUDGET = 64_000_000

_VARIANT_CODE = {
    Variant.WYTHOFF: 0,
    Variant.F_WYTHOFF: 1,
    Variant.FR_WYTHOFF: 2,
    Variant.FE_WYTHOFF: 3,
}


class OutOfRangeError(LookupError):
    """Raised when a queried position lies outside a table's strip."""


class CapacityError(ValueError):
    """Raised when a requested strip exceeds the configured cell budget."""


@dataclass(frozen=True, eq=False)
class GrundyTable:
    """Immutable Grundy values over one strip of one (variant, convention).

    ``values`` has shape ``(a_max + 1, b_max + 1)``; entry ``[a, b]`` with
    ``a <= b`` holds the Grundy value of ``(a, b)`` and the unused lower
    triangle is filled with -1.
    """

    variant: Variant
    convention: Convention
    a_max: int
    b_max: int
    values: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrundyTable):
            return NotImplemented
        return (
            self.variant is other.variant
            and self.convention is other.convention
            and self.a_max == other.a_max
            and self.b_max == other.b_max
            and np.array_equal(self.values, other.values)
        )


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not present in ``values``."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


@njit(cache=True)
def _fill(values, a_max, b_max, variant, terminal, marks):  # pragma: no cover
    # marks is a stamp buffer: marks[v] == stamp means value v is taken by
    # some follower of the current cell.  Grundy values are bounded by the
    # follower count, so the mex scan always ends inside the buffer.
    stamp = 0
    for a in range(a_max + 1):
        for b in range(a, b_max + 1):
            if a == 0 and b == 0:
                values[0, 0] = terminal
                continue
            stamp += 1
            # single-pile take from the larger pile: the full row prefix
            for j in range(min(a, b)):
                marks[values[j, a]] = stamp
            for j in range(a, b):
                marks[values[a, j]] = stamp
            # single-pile take from the smaller pile (fr allows it only
            # when the piles are equal, where the row prefix covers it)
            if variant != 2 or a == b:
                for i in range(a):
                    marks[values[i, b]] = stamp
            # both-pile takes run down the diagonal of constant b - a
            d = b - a
            if variant == 0:
                for m in range(a):
                    marks[values[m, m + d]] = stamp
            elif a >= 1:
                # ratio-preserving segment: floor(d/m) must stay floor(d/a)
                q = d // a
                m_lo = d + 1 if q == 0 else d // (q + 1) + 1
                if m_lo < 1:
                    m_lo = 1
                for m in range(m_lo, a):
                    marks[values[m, m + d]] = stamp
            # extended takes: k from the smaller pile, 1 <= l <= k from the
            # larger; per landing row a2 the legal columns are contiguous
            if variant == 3 and a >= 2:
                r = b // a
                for a2 in range(1, a):
                    lo = b - (a - a2)
                    if lo < r * a2:
                        lo = r * a2
                    hi = b - 1
                    if hi > (r + 1) * a2 - 1:
                        hi = (r + 1) * a2 - 1
                    for b2 in range(lo, hi + 1):
                        marks[values[a2, b2]] = stamp
            g = 0
            while marks[g] == stamp:
                g += 1
            values[a, b] = g


def _scratch_size(variant: Variant, a_max: int, b_max: int) -> int:
    # upper bound on follower count + 1 for any cell in the strip
    size = b_max + 3 * a_max + 8
    if variant is Variant.FE_WYTHOFF:
        size += a_max * a_max // 4 + a_max
    return size


def compute_table(
    variant: Variant,
    convention: Convention,
    a_max: int,
    b_max: int,
    max_cells: int = DEFAULT_CELL_BUDGET,
) -> GrundyTable:
    """Fill the Grundy strip for ``(variant, convention)`` bottom-up."""
    if a_max < 0 or a_max > b_max:
        raise ValueError(f"need 0 <= a_max <= b_max, got ({a_max}, {b_max})")
    cells = (a_max + 1) * (b_max + 1)
    if cells > max_cells:
        raise CapacityError(
            f"strip of {cells} cells exceeds the budget of {max_cells}"
        )
    values = np.full((a_max + 1, b_max + 1), -1, dtype=np.int32)
    marks = np.zeros(_scratch_size(variant, a_max, b_max), dtype=np.int64)
    terminal = 1 if convention is Convention.MISERE else 0
    _fill(values, a_max, b_max, _VARIANT_CODE[variant], terminal, marks)
    values.setflags(write=False)
    return GrundyTable(variant, convention, a_max, b_max, values)


def grundy(t: GrundyTable, p) -> int:
    """Stored Grundy value at ``p``; symmetric in the two raw coordinates."""
    small, large = canonicalize(*p)
    if small > t.a_max or large > t.b_max:
        raise OutOfRangeError(
            f"position ({small}, {large}) outside strip "
            f"(a_max={t.a_max}, b_max={t.b_max})"
        )
    return int(t.values[small, large])


def row_values(t: GrundyTable, a: int) -> np.ndarray:
    """Grundy values ``G(a, j)`` for ``j = 0 .. b_max``, as one array.

    The part with ``j < a`` comes from the symmetric cells ``(j, a)``.
    """
    if a < 0 or a > t.a_max:
        raise OutOfRangeError(f"row {a} outside strip (a_max={t.a_max})")
    return np.concatenate([t.values[:a, a], t.values[a, a:]])


def winning_moves(t: GrundyTable, p) -> list[tuple]:
    """Legal moves from ``p`` whose result has value 0 under ``t``'s convention.

    Empty exactly when ``p`` itself has value 0.
    """
    p = canonicalize(*p)
    grundy(t, p)  # range check on the position itself
    return [(m, q) for m, q in legal_moves(t.variant, p) if grundy(t, q) == 0]


def positions_with_value(t: GrundyTable, g: int) -> list[Position]:
    """All strip positions with Grundy value ``g``, sorted by (small, large)."""
    hits = np.argwhere(t.values == g)
    return [Position(int(a), int(b)) for a, b in hits]


def p_positions(t: GrundyTable) -> list[Position]:
    """All strip positions with Grundy value 0, sorted by (small, large)."""
    return positions_with_value(t, 0)
