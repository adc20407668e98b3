"""Mechanical verifiers for the theorems and probes for the conjectures.

Each function inspects finished Grundy tables and returns structured
``ReportItem`` results.  Verdict semantics under a finite strip:

* existence claims report ``inconclusive``, never ``fail``, when the
  witness may simply lie beyond the bound;
* distinctness claims report a hard ``fail`` on any violation, since a
  counterexample inside the strip is conclusive (``check_diagonal``
  documents the one place where repeats are expected data instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .beatty import ClosedSet, floor_phi, floor_phi2, is_floor_phi_value
from .games import Convention, Pile, Position, Variant, take_both, take_one
from .grundy import GrundyTable, grundy, mex, positions_with_value, row_values, winning_moves
from .report import ReportItem, Status


class BoundMismatchError(ValueError):
    """Raised when a verifier is asked to compare incompatible strips."""


@dataclass(frozen=True)
class KSequence:
    """Strip positions of one Grundy value, ordered by smaller coordinate.

    ``entries`` is guaranteed complete for every small coordinate below
    ``complete_below``: each row up to there showed the value somewhere in
    its in-strip portion, so (rows holding each value at most once) no
    member with a smaller first coordinate can hide beyond the strip.
    Entries at or above the threshold are dropped.
    """

    k: int
    entries: tuple[Position, ...]
    a_max: int
    b_max: int
    complete_below: int

    def __post_init__(self) -> None:
        smalls = [p.small for p in self.entries]
        if any(x >= y for x, y in zip(smalls, smalls[1:])):
            raise ValueError("k-sequence smaller coordinates must strictly increase")


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Additive periodicity evidence for one row: G(a, n+p) = G(a, n) + p."""

    row: int
    preperiod: int
    period: int
    validated_upto: int


class TranslationFit(NamedTuple):
    """Outcome of the translation probe: tail offset, tail start, prefix."""

    offset: int
    start: int
    prefix: tuple[Position, ...]


def _strip_positions_with_value(t: GrundyTable, g: int, bound: int) -> set[Position]:
    return {p for p in positions_with_value(t, g) if p.large <= bound}


def verify_characterization(
    t: GrundyTable, s: ClosedSet, g: int, bound: Optional[int] = None
) -> ReportItem:
    """Exact set equality between the value-``g`` cells and a closed form.

    Both sides are restricted to the strip (and to ``bound`` when given).
    The counterexample is the first member of the symmetric difference,
    expected side first.
    """
    if bound is None:
        bound = t.b_max
    if bound > t.b_max:
        raise BoundMismatchError(
            f"bound {bound} exceeds table bound {t.b_max}"
        )
    actual = _strip_positions_with_value(t, g, bound)
    expected = {p for p in s.generate(bound) if p.small <= t.a_max}
    name = f"characterization:{s.label}:g{g}"
    params = {
        "label": s.label,
        "g": g,
        "bound": bound,
        "variant": t.variant.value,
        "convention": t.convention.value,
        "expected_size": len(expected),
        "actual_size": len(actual),
    }
    if actual == expected:
        return ReportItem(name, Status.PASS, parameters=params)
    missing = sorted(expected - actual)
    spurious = sorted(actual - expected)
    witness = missing[0] if missing else spurious[0]
    params["counterexample_side"] = (
        "expected-but-absent" if missing else "present-but-unexpected"
    )
    return ReportItem(name, Status.FAIL, counterexample=witness, parameters=params)


def k_sequence(t: GrundyTable, k: int) -> KSequence:
    """Collect the value-``k`` positions, truncated where the strip may leak.

    Rows are scanned over their full in-strip portion (columns
    ``0 .. b_max``, using symmetry below the diagonal).  The first row
    that does not show ``k`` anywhere marks the truncation point: members
    with that small coordinate or larger could lie beyond ``b_max``.
    """
    if k < 0:
        raise ValueError(f"grundy value must be nonnegative, got {k}")
    complete_below = t.a_max + 1
    for a in range(t.a_max + 1):
        if not (row_values(t, a) == k).any():
            complete_below = a
            break
    entries = tuple(
        p for p in positions_with_value(t, k) if p.small < complete_below
    )
    return KSequence(k, entries, t.a_max, t.b_max, complete_below)


def check_mex_recursion(seq: KSequence) -> ReportItem:
    """Each smaller coordinate is the mex of all earlier coordinates."""
    if not seq.entries:
        raise ValueError("k-sequence is empty")
    name = f"mex-recursion:k{seq.k}"
    seen: set[int] = set()
    for n, (a, b) in enumerate(seq.entries):
        if n >= 1:
            expected = mex(seen)
            if a != expected:
                return ReportItem(
                    name,
                    Status.FAIL,
                    counterexample={"index": n, "position": Position(a, b), "expected_small": expected},
                    parameters={"k": seq.k, "entries": len(seq.entries)},
                )
        seen.add(a)
        seen.add(b)
    return ReportItem(
        name, Status.PASS, parameters={"k": seq.k, "entries": len(seq.entries)}
    )


def check_cover_intersect(seq: KSequence, bound: int) -> ReportItem:
    """Coordinates cover every integer up to a sound bound, overlap <= 2.

    The sound bound is capped by the sequence's completeness threshold:
    below it, any covering member and any intersection witness must have
    been collected, so a cover gap is a real failure and the intersection
    count cannot undercount.
    """
    if not seq.entries:
        raise ValueError("k-sequence is empty")
    name = f"cover-intersect:k{seq.k}"
    effective = min(bound, seq.complete_below - 1)
    a_vals = {p.small for p in seq.entries}
    b_vals = {p.large for p in seq.entries}
    params = {
        "k": seq.k,
        "bound": bound,
        "effective_bound": effective,
        "entries": len(seq.entries),
    }
    for c in range(effective + 1):
        if c not in a_vals and c not in b_vals:
            return ReportItem(
                name, Status.FAIL, counterexample={"uncovered": c}, parameters=params
            )
    overlap = sorted(v for v in a_vals & b_vals if v <= effective)
    params["intersection"] = overlap
    if len(overlap) > 2:
        return ReportItem(
            name,
            Status.FAIL,
            counterexample={"intersection": overlap},
            parameters=params,
        )
    return ReportItem(name, Status.PASS, parameters=params)


def _first_duplicate(values: np.ndarray, offset: int = 0):
    seen: dict[int, int] = {}
    for j, v in enumerate(values):
        v = int(v)
        if v in seen:
            return v, seen[v] + offset, j + offset
        seen[v] = j
    return None


def check_row(
    t: GrundyTable, a: int, g_max: int, require_distinct: bool = True
) -> ReportItem:
    """Row ``a`` holds pairwise distinct values and every value up to ``g_max``.

    A duplicate is a hard failure (when distinctness is asserted for the
    variant); values not yet seen may live beyond the strip, so gaps are
    inconclusive and listed under ``missing``.
    """
    row = row_values(t, a)
    name = f"row:a{a}"
    params = {
        "row": a,
        "g_max": g_max,
        "require_distinct": require_distinct,
        "b_max": t.b_max,
        "variant": t.variant.value,
    }
    if require_distinct:
        dup = _first_duplicate(row)
        if dup is not None:
            value, j1, j2 = dup
            return ReportItem(
                name,
                Status.FAIL,
                counterexample={"value": value, "columns": [j1, j2]},
                parameters=params,
            )
    missing = np.setdiff1d(np.arange(g_max + 1), row).tolist()
    if missing:
        params["missing"] = missing
        return ReportItem(name, Status.INCONCLUSIVE, parameters=params)
    return ReportItem(name, Status.PASS, parameters=params)


def check_diagonal(t: GrundyTable, a: int, g_max: int) -> ReportItem:
    """Coverage of every value up to ``g_max`` along the diagonal ``G(b, a+b)``.

    The scan starts at ``b = 1``: the ``b = 0`` cell belongs to the
    single-pile row and already repeats interior values (``G(0, 0) =
    G(1, 1)`` on the main diagonal, ``G(0, 1) = G(3, 4)`` beside it).

    Value distinctness differs by offset.  Interior cells of the main
    diagonal are pairwise connected by both-pile takes (the quotient is 1
    throughout), so a duplicate there is an engine bug and fails hard.
    Off-diagonal cells are not move-connected and genuinely repeat values,
    already inside the 10x10 table (``G(1, 2) = G(4, 5) = 3``); for
    ``a >= 1`` duplicates are therefore recorded under ``duplicates``
    rather than failing, and coverage is the operative claim.
    """
    if a < 0 or a > t.b_max:
        raise ValueError(f"diagonal offset {a} outside strip")
    start = 1
    b_hi = min(t.a_max, t.b_max - a)
    rows = np.arange(start, b_hi + 1)
    diag = t.values[rows, rows + a]
    name = f"diagonal:a{a}"
    params = {
        "offset": a,
        "g_max": g_max,
        "scanned_from": int(start),
        "scanned_to": int(b_hi),
        "variant": t.variant.value,
    }
    dup = _first_duplicate(diag, offset=start)
    if dup is not None:
        value, b1, b2 = dup
        if a == 0:
            return ReportItem(
                name,
                Status.FAIL,
                counterexample={"value": value, "b": [b1, b2]},
                parameters=params,
            )
        params["duplicates"] = {"value": value, "b": [b1, b2]}
    missing = np.setdiff1d(np.arange(g_max + 1), diag).tolist()
    if missing:
        params["missing"] = missing
        return ReportItem(name, Status.INCONCLUSIVE, parameters=params)
    return ReportItem(name, Status.PASS, parameters=params)


def detect_additive_period(
    t: GrundyTable, a: int, min_window: int = 128
) -> Optional[PeriodicityCertificate]:
    """Smallest ``(p, then N)`` with ``G(a, n + p) = G(a, n) + p`` for n >= N.

    A candidate only counts when it stays valid across a window of length
    at least ``max(2 * p, min_window)``, which suppresses spurious short
    periods near the end of the row.  Returns ``None`` when no candidate
    validates within the strip.
    """
    row = row_values(t, a).astype(np.int64)
    length = row.size
    p = 1
    while length - p >= max(2 * p, min_window):
        bad = np.nonzero(row[p:] - row[: length - p] != p)[0]
        preperiod = 0 if bad.size == 0 else int(bad[-1]) + 1
        window = length - p - preperiod
        if window >= max(2 * p, min_window):
            return PeriodicityCertificate(
                row=a, preperiod=preperiod, period=p, validated_upto=t.b_max
            )
        p += 1
    return None


def compare_miserability(tn: GrundyTable, tm: GrundyTable) -> ReportItem:
    """Classify how the normal and misere values of one variant relate.

    * ``strongly-miserable``: every value in {0, 1} swaps (G + G' = 1) and
      every value >= 2 agrees.
    * ``miserable``: disagreements exist but all of them are 0/1 swaps.
    * ``neither``: some disagreement is not a 0/1 swap (hard fail).
    """
    if tn.variant is not tm.variant:
        raise ValueError("tables must describe the same variant")
    if tn.convention is not Convention.NORMAL or tm.convention is not Convention.MISERE:
        raise ValueError("expected a normal table and a misere table")
    if (tn.a_max, tn.b_max) != (tm.a_max, tm.b_max):
        raise BoundMismatchError(
            f"strip mismatch: {(tn.a_max, tn.b_max)} vs {(tm.a_max, tm.b_max)}"
        )
    g = tn.values
    gm = tm.values
    canonical = g >= 0
    low = canonical & (g <= 1)
    swap = low & (gm == 1 - g)
    agree = canonical & (gm == g)
    mis_viol = canonical & ~(agree | swap)
    strong_viol = (low & ~swap) | (canonical & ~low & ~agree)
    name = f"miserability:{tn.variant.value}"
    params = {
        "variant": tn.variant.value,
        "a_max": tn.a_max,
        "b_max": tn.b_max,
        "strong_violations": int(strong_viol.sum()),
    }
    if strong_viol.any():
        a, b = map(int, np.argwhere(strong_viol)[0])
        params["first_strong_violation"] = {
            "position": Position(a, b),
            "normal": int(g[a, b]),
            "misere": int(gm[a, b]),
        }
    if mis_viol.any():
        a, b = map(int, np.argwhere(mis_viol)[0])
        params["classification"] = "neither"
        return ReportItem(
            name,
            Status.FAIL,
            counterexample={
                "position": Position(a, b),
                "normal": int(g[a, b]),
                "misere": int(gm[a, b]),
            },
            parameters=params,
        )
    params["classification"] = (
        "miserable" if strong_viol.any() else "strongly-miserable"
    )
    return ReportItem(name, Status.PASS, parameters=params)


def redundancy_witness(k: int, t: GrundyTable) -> ReportItem:
    """Both constructed witnesses admit exactly one winning move for this ``k``.

    On the fr-wythoff table: from ``(2, 3 + k)`` the only winning move
    removes ``k`` from the larger pile, and from the diagonal witness
    built over index ``n`` in {2, 3} (chosen so that ``floor_phi(n) + k``
    lies in the lower Beatty sequence) the only winning move removes
    ``k`` from both piles.  Uniqueness is established by exhaustive scan.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if t.variant is not Variant.FR_WYTHOFF or t.convention is not Convention.NORMAL:
        raise ValueError("witness check runs on the normal fr-wythoff table")
    name = f"redundancy-witness:k{k}"

    single = Position(2, 3 + k)
    n = 2 if is_floor_phi_value(3 + k) else 3
    diag_small = floor_phi(n) + 1 + k
    diagonal = Position(diag_small, diag_small + n)
    diag_target = Position(floor_phi(n) + 1, floor_phi2(n) + 1)
    params = {
        "k": k,
        "n": n,
        "single_pile_witness": single,
        "diagonal_witness": diagonal,
    }

    def fail(claim: str, position: Position, found: list) -> ReportItem:
        return ReportItem(
            name,
            Status.FAIL,
            counterexample={
                "claim": claim,
                "position": position,
                "winning_moves": [
                    {"move": f"{m.kind.value} {m.pile.value if m.pile else ''} k={m.k} l={m.l}",
                     "result": q}
                    for m, q in found
                ],
            },
            parameters=params,
        )

    if not is_floor_phi_value(floor_phi(n) + k):
        return fail("chosen index lands in the lower beatty sequence", diagonal, [])

    wins = winning_moves(t, single)
    if len(wins) != 1 or wins[0][0] != take_one(Pile.LARGER, k) or wins[0][1] != Position(2, 3):
        return fail("unique single-pile winning move", single, wins)

    wins = winning_moves(t, diagonal)
    if len(wins) != 1 or wins[0][0] != take_both(k) or wins[0][1] != diag_target:
        return fail("unique both-pile winning move", diagonal, wins)

    if grundy(t, single) == 0 or grundy(t, diagonal) == 0:
        return fail("witnesses must be n-positions", single, wins)

    return ReportItem(name, Status.PASS, parameters=params)


def translation_probe(
    seq: KSequence, m_max: int = 64, n0_max: int = 8
) -> Optional[TranslationFit]:
    """Fit ``entries[n] = (floor_phi(n - n0) + m, floor_phi2(n - n0) + m)``.

    Searches tail starts ``n0 = 0 .. n0_max`` and offsets ``m <= m_max``;
    returns the fit with the shortest exceptional prefix, or ``None``.
    The tail start forces ``m``: the first tail member must be ``(m, m)``.
    """
    entries = seq.entries
    if len(entries) < 10:
        raise ValueError("translation probe needs at least 10 entries")
    for n0 in range(min(n0_max, len(entries) - 1) + 1):
        head = entries[n0]
        if head.small != head.large or head.small > m_max:
            continue
        m = head.small
        tail = entries[n0:]
        if all(
            p == (floor_phi(i) + m, floor_phi2(i) + m) for i, p in enumerate(tail)
        ):
            return TranslationFit(offset=m, start=n0, prefix=tuple(entries[:n0]))
    return None
