"""Exact integer generators for the golden-ratio position sets.

Everything here runs on plain integers; no floating point is allowed in
this module.  With ``phi = (1 + sqrt(5)) / 2`` and ``n >= 0``,

    floor(phi * n) = (n + isqrt(5 * n**2)) // 2

because ``phi * n = (n + sqrt(5 * n**2)) / 2`` and ``sqrt(5 * n**2)`` is
irrational for ``n >= 1``.  The identity ``phi**2 = phi + 1`` then gives
``floor(phi**2 * n) = floor(phi * n) + n``.  The computed value ``v`` is
certified by the integer inequality

    (2*v - n)**2 <= 5*n**2 < (2*v - n + 2)**2

which pins ``v`` as the exact floor.  Python integers are unbounded, so
there is no overflow regime; inputs are limited only by memory.

The closed-form position families all share one shape: a short explicit
prefix followed by the translated pairs
``(floor(phi*n) + m, floor(phi**2 * n) + m)``.  ``ClosedSet`` encodes
exactly that, and a registry holds the six families used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .games import Position
from .report import ReportItem, Status


def floor_phi(n: int) -> int:
    """``floor(phi * n)`` computed exactly via the integer square root."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return (n + math.isqrt(5 * n * n)) // 2


def floor_phi2(n: int) -> int:
    """``floor(phi**2 * n)``, which equals ``floor_phi(n) + n``."""
    return floor_phi(n) + n


class BeattyPair(NamedTuple):
    n: int
    a: int  # floor(phi * n)
    b: int  # floor(phi**2 * n) = a + n


def beatty_pair(n: int) -> BeattyPair:
    a = floor_phi(n)
    return BeattyPair(n, a, a + n)


def is_floor_phi_value(x: int) -> bool:
    """True when ``x = floor(phi * n)`` for some ``n >= 1``.

    The only candidate index is ``n = floor(x / phi) + 1``; membership is
    decided by recomputing the floor, all in exact arithmetic.
    """
    if x < 1:
        return False
    n = (math.isqrt(5 * x * x) - x) // 2 + 1
    return floor_phi(n) == x


@dataclass(frozen=True)
class ClosedSet:
    """An explicit finite prefix plus a translated Beatty tail.

    The tail contributes ``(floor_phi(n) + offset, floor_phi2(n) + offset)``
    for ``n >= start``.
    """

    label: str
    exceptional: tuple[Position, ...]
    offset: int
    start: int = 0

    def generate(self, bound: int) -> list[Position]:
        """All members with large coordinate <= ``bound``, sorted."""
        if bound < 0:
            raise ValueError(f"bound must be nonnegative, got {bound}")
        out = [p for p in self.exceptional if p.large <= bound]
        n = self.start
        while True:
            a = floor_phi(n)
            b = a + n
            if b + self.offset > bound:
                break
            out.append(Position(a + self.offset, b + self.offset))
            n += 1
        return sorted(out)


# The misere value-1 family includes the terminal: (0, 0) takes misere
# value 1 (mex over the single edge to the appended sink), and it extends
# the translated tail that starts at (1, 1).
CLOSED_SETS = {
    "P-normal": ClosedSet("P-normal", (Position(0, 0),), 1),
    "G1-normal": ClosedSet("G1-normal", (Position(0, 1),), 2),
    "G2-normal": ClosedSet("G2-normal", (Position(0, 2), Position(1, 3)), 4),
    "P-misere": ClosedSet("P-misere", (Position(0, 1),), 2),
    "G1-misere": ClosedSet("G1-misere", (Position(0, 0),), 1),
    "P-wythoff": ClosedSet("P-wythoff", (), 0),
}


def closed_set(label: str, bound: int) -> list[Position]:
    """Members of the named closed-form family with large coordinate <= bound."""
    try:
        spec = CLOSED_SETS[label]
    except KeyError:
        known = ", ".join(sorted(CLOSED_SETS))
        raise KeyError(f"unknown closed set {label!r}; known: {known}") from None
    return spec.generate(bound)


def check_complementarity(bound: int) -> ReportItem:
    """Verify the two Beatty sequences partition ``1 .. bound``.

    The sequences ``floor(phi * i)`` and ``floor(phi**2 * i)`` for
    ``i >= 1`` must be disjoint and jointly cover every positive integer
    up to the bound.
    """
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    name = f"beatty-complementarity:{bound}"
    owner = bytearray(bound + 1)  # 0 unseen, 1 lower sequence, 2 upper
    for tag, step in ((1, floor_phi), (2, floor_phi2)):
        i = 1
        while True:
            v = step(i)
            if v > bound:
                break
            if owner[v]:
                return ReportItem(
                    name,
                    Status.FAIL,
                    counterexample={"value": v, "already_in_sequence": int(owner[v])},
                    parameters={"bound": bound},
                )
            owner[v] = tag
            i += 1
    for v in range(1, bound + 1):
        if not owner[v]:
            return ReportItem(
                name,
                Status.FAIL,
                counterexample={"value": v, "missing_from": "both sequences"},
                parameters={"bound": bound},
            )
    return ReportItem(name, Status.PASS, parameters={"bound": bound})


def check_ratio_lemma(n: int, k: int, i: int) -> bool:
    """Both shifted quotients around the n-th Beatty pair equal 1.

    Checks ``(b + k + i) // (a + k + i) == (b + i) // (a + i) == 1`` for
    ``a = floor_phi(n)`` and ``b = floor_phi2(n)``.
    """
    if n < 1 or k < 1 or i < 1:
        raise ValueError("n, k and i must all be positive")
    a = floor_phi(n)
    b = a + n
    return (b + k + i) // (a + k + i) == 1 and (b + i) // (a + i) == 1
