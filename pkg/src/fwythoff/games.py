"""Rules for a family of two-pile take-away games built around Wythoff's game.

A position is an unordered pair of pile sizes, kept canonical as
``(small, large)`` with ``small <= large``.  Four rule sets share this
position space and differ only in which moves are legal:

* ``wythoff`` -- remove any positive number of tokens from one pile, or
  the same positive number from both piles.
* ``f-wythoff`` -- as above, except a both-pile removal must leave the
  integer ratio ``large // small`` unchanged (so it can never empty the
  smaller pile).
* ``fr-wythoff`` -- f-wythoff restricted: while the piles differ, a
  single-pile removal may only target the larger pile.
* ``fe-wythoff`` -- f-wythoff extended: additionally remove ``k`` tokens
  from the smaller pile and ``1 <= l <= k`` from the larger one, again
  keeping the integer ratio unchanged and the smaller pile nonempty.

Every legal move strictly decreases the total number of tokens, so all
play terminates at ``(0, 0)``.  The winning convention (normal or
misere) never changes move legality; it only matters to the Grundy
solver.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional


class Variant(str, Enum):
    """The four rule sets; values double as CLI/wire names."""

    WYTHOFF = "wythoff"
    F_WYTHOFF = "f-wythoff"
    FR_WYTHOFF = "fr-wythoff"
    FE_WYTHOFF = "fe-wythoff"


class Convention(str, Enum):
    NORMAL = "normal"
    MISERE = "misere"


class MoveKind(str, Enum):
    TAKE_ONE = "one"
    TAKE_BOTH = "both"
    TAKE_EXTENDED = "ext"


class Pile(str, Enum):
    SMALLER = "smaller"
    LARGER = "larger"


class Position(NamedTuple):
    small: int
    large: int

    @property
    def total(self) -> int:
        return self.small + self.large


class MoveSpec(NamedTuple):
    kind: MoveKind
    k: int
    pile: Optional[Pile] = None  # TAKE_ONE only
    l: Optional[int] = None  # TAKE_EXTENDED only


class UndefinedRatioError(ValueError):
    """Raised when the integer ratio is requested with an empty smaller pile."""


class IllegalMoveError(ValueError):
    """Raised by ``apply_move`` when a move violates the variant's rules."""


def take_one(pile: Pile, k: int) -> MoveSpec:
    return MoveSpec(MoveKind.TAKE_ONE, k, pile=pile)


def take_both(k: int) -> MoveSpec:
    return MoveSpec(MoveKind.TAKE_BOTH, k)


def take_extended(k: int, l: int) -> MoveSpec:
    return MoveSpec(MoveKind.TAKE_EXTENDED, k, l=l)


def canonicalize(a: int, b: int) -> Position:
    """Sort a raw pile pair into the canonical ``(small, large)`` form."""
    if a < 0 or b < 0:
        raise ValueError(f"pile sizes must be nonnegative, got ({a}, {b})")
    return Position(a, b) if a <= b else Position(b, a)


def ratio(p: Position) -> int:
    """Integer ratio ``large // small`` of a canonical position."""
    if p.small == 0:
        raise UndefinedRatioError(f"ratio of {tuple(p)} is undefined: smaller pile is empty")
    return p.large // p.small


def is_terminal(p: Position) -> bool:
    """True only at (0, 0); every other position has a legal move in all variants."""
    return p.small == 0 and p.large == 0


def legal_moves(variant: Variant, p: Position) -> list[tuple[MoveSpec, Position]]:
    """All legal moves from canonical ``p``, with their resulting positions.

    Moves reaching the same resulting position are deduplicated; the move
    kept is the first in enumeration order (single-pile takes before
    both-pile takes before extended takes), and for equal piles the two
    single-pile directions collapse into one entry labelled ``larger``.
    """
    small, large = p
    out: list[tuple[MoveSpec, Position]] = []
    seen: set[Position] = set()

    def add(move: MoveSpec, q: Position) -> None:
        if q not in seen:
            seen.add(q)
            out.append((move, q))

    for k in range(1, large + 1):
        add(take_one(Pile.LARGER, k), canonicalize(small, large - k))
    if small < large and variant is not Variant.FR_WYTHOFF:
        # fr-wythoff forbids the smaller pile while the piles differ; for
        # equal piles the loop above already covers both directions.
        for k in range(1, small + 1):
            add(take_one(Pile.SMALLER, k), canonicalize(small - k, large))

    if variant is Variant.WYTHOFF:
        for k in range(1, small + 1):
            add(take_both(k), Position(small - k, large - k))
    elif small >= 2:
        r = large // small
        for k in range(1, small):
            # the ratio of (small-k, large-k) grows with k, so stop at the
            # first change instead of scanning all k
            if (large - k) // (small - k) != r:
                break
            add(take_both(k), Position(small - k, large - k))

    if variant is Variant.FE_WYTHOFF and small >= 2:
        r = large // small
        for k in range(1, small):
            m = small - k
            # l must keep large - l inside [r*m, (r+1)*m - 1]
            lo = max(1, large - (r + 1) * m + 1)
            hi = min(k, large - r * m)
            for l in range(lo, hi + 1):
                add(take_extended(k, l), Position(m, large - l))
    return out


def apply_move(variant: Variant, p: Position, move: MoveSpec) -> Position:
    """Validate ``move`` against the variant's rules and return the result."""
    small, large = p
    kind, k = move.kind, move.k
    if k < 1:
        raise IllegalMoveError(f"must remove at least one token, got k={k}")

    if kind is MoveKind.TAKE_ONE:
        if move.pile is None:
            raise IllegalMoveError("single-pile move must name a pile")
        if variant is Variant.FR_WYTHOFF and small < large and move.pile is Pile.SMALLER:
            raise IllegalMoveError("single-pile takes must come from the larger pile")
        size = small if move.pile is Pile.SMALLER else large
        if k > size:
            raise IllegalMoveError(f"cannot remove {k} tokens from a pile of {size}")
        if move.pile is Pile.SMALLER:
            return canonicalize(small - k, large)
        return canonicalize(small, large - k)

    if kind is MoveKind.TAKE_BOTH:
        if variant is Variant.WYTHOFF:
            if k > small:
                raise IllegalMoveError(f"cannot remove {k} tokens from a pile of {small}")
            return Position(small - k, large - k)
        if k >= small:
            raise IllegalMoveError("a both-pile take must leave the smaller pile nonempty")
        if (large - k) // (small - k) != large // small:
            raise IllegalMoveError("a both-pile take must preserve the integer ratio")
        return Position(small - k, large - k)

    if kind is MoveKind.TAKE_EXTENDED:
        if variant is not Variant.FE_WYTHOFF:
            raise IllegalMoveError(f"extended takes are not part of {variant.value}")
        l = move.l
        if l is None or l < 1 or l > k:
            raise IllegalMoveError("an extended take needs 1 <= l <= k")
        if k >= small:
            raise IllegalMoveError("an extended take must leave the smaller pile nonempty")
        if (large - l) // (small - k) != large // small:
            raise IllegalMoveError("an extended take must preserve the integer ratio")
        return Position(small - k, large - l)

    raise IllegalMoveError(f"unknown move kind {kind!r}")
