"""Command-line interface: compute, verify, probe, export, play.

Exit status convention: 0 when every reported check passed or was
inconclusive, 1 when any check failed, 2 on usage errors.  All output is
deterministic unless ``--timestamps`` is requested on report-producing
subcommands.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import analysis, beatty, reportio
from .games import (
    Convention,
    IllegalMoveError,
    MoveKind,
    MoveSpec,
    Pile,
    Position,
    Variant,
    apply_move,
    canonicalize,
    is_terminal,
    legal_moves,
    take_both,
    take_extended,
    take_one,
)
from .grundy import (
    GrundyTable,
    compute_table,
    positions_with_value,
    winning_moves,
)
from .report import ReportItem, Status, exit_code

_CHECKS_BY_VARIANT = {
    Variant.WYTHOFF: ("pposns", "miserability", "row"),
    Variant.F_WYTHOFF: (
        "pposns",
        "value1",
        "value2",
        "misere-p",
        "misere-1",
        "miserability",
        "row",
        "mex-recursion",
        "cover-intersect",
    ),
    Variant.FR_WYTHOFF: (
        "pposns",
        "value1",
        "misere-p",
        "misere-1",
        "miserability",
        "row",
        "preservation",
        "witness",
    ),
    Variant.FE_WYTHOFF: (
        "pposns",
        "value1",
        "misere-p",
        "misere-1",
        "miserability",
        "row",
        "preservation",
    ),
}
_ALL_CHECKS = (
    "pposns",
    "value1",
    "value2",
    "misere-p",
    "misere-1",
    "miserability",
    "row",
    "mex-recursion",
    "cover-intersect",
    "preservation",
    "witness",
)


def _emit(data: bytes, output: Optional[str]) -> None:
    if output and output != "-":
        Path(output).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _variant(args) -> Variant:
    return Variant(args.variant)


def _convention(args) -> Convention:
    return Convention(args.convention)


def _cmd_table(args, parser) -> int:
    if args.size is not None:
        if args.a_max is not None or args.b_max is not None:
            parser.error("--size conflicts with --a-max/--b-max")
        a_max = b_max = args.size
    elif args.a_max is not None and args.b_max is not None:
        a_max, b_max = args.a_max, args.b_max
        if a_max > b_max:
            parser.error("--a-max must not exceed --b-max")
    else:
        parser.error("specify --size or both --a-max and --b-max")
    t = compute_table(_variant(args), _convention(args), a_max, b_max)
    _emit(reportio.export_table(t, args.format), args.output)
    return 0


def _p_set_label(variant: Variant) -> str:
    return "P-wythoff" if variant is Variant.WYTHOFF else "P-normal"


def _run_checks(args, parser, variant: Variant, names) -> list[ReportItem]:
    bound = args.bound
    tables: dict[Convention, GrundyTable] = {}

    def table(convention: Convention, want_variant: Variant = variant) -> GrundyTable:
        key = (want_variant, convention)
        if key not in tables:
            tables[key] = compute_table(want_variant, convention, bound, bound)
        return tables[key]

    items: list[ReportItem] = []
    for name in names:
        if name == "pposns":
            spec = beatty.CLOSED_SETS[_p_set_label(variant)]
            items.append(
                analysis.verify_characterization(table(Convention.NORMAL), spec, 0)
            )
        elif name == "value1":
            items.append(
                analysis.verify_characterization(
                    table(Convention.NORMAL), beatty.CLOSED_SETS["G1-normal"], 1
                )
            )
        elif name == "value2":
            items.append(
                analysis.verify_characterization(
                    table(Convention.NORMAL), beatty.CLOSED_SETS["G2-normal"], 2
                )
            )
        elif name == "misere-p":
            items.append(
                analysis.verify_characterization(
                    table(Convention.MISERE), beatty.CLOSED_SETS["P-misere"], 0
                )
            )
        elif name == "misere-1":
            items.append(
                analysis.verify_characterization(
                    table(Convention.MISERE), beatty.CLOSED_SETS["G1-misere"], 1
                )
            )
        elif name == "miserability":
            items.append(
                analysis.compare_miserability(
                    table(Convention.NORMAL), table(Convention.MISERE)
                )
            )
        elif name == "row":
            distinct = variant is not Variant.FR_WYTHOFF
            for a in range(min(args.rows, bound) + 1):
                items.append(
                    analysis.check_row(
                        table(Convention.NORMAL), a, args.g_max, require_distinct=distinct
                    )
                )
        elif name in ("mex-recursion", "cover-intersect"):
            for k in range(args.k_max + 1):
                seq = analysis.k_sequence(table(Convention.NORMAL), k)
                if name == "mex-recursion":
                    items.append(analysis.check_mex_recursion(seq))
                else:
                    items.append(analysis.check_cover_intersect(seq, bound))
        elif name == "preservation":
            own = table(Convention.NORMAL)
            base = table(Convention.NORMAL, Variant.F_WYTHOFF)
            for g in (0, 1):
                mine = set(positions_with_value(own, g))
                theirs = set(positions_with_value(base, g))
                check = ReportItem(
                    f"preservation:{variant.value}:g{g}",
                    Status.PASS if mine == theirs else Status.FAIL,
                    counterexample=None
                    if mine == theirs
                    else {"position": sorted(mine ^ theirs)[0]},
                    parameters={"g": g, "bound": bound, "baseline": "f-wythoff"},
                )
                items.append(check)
        elif name == "witness":
            needed = beatty.floor_phi(3) + 4 + args.witness_k_max
            if bound < needed:
                parser.error(
                    f"--bound {bound} too small for witness k up to "
                    f"{args.witness_k_max} (need at least {needed})"
                )
            for k in range(1, args.witness_k_max + 1):
                items.append(analysis.redundancy_witness(k, table(Convention.NORMAL)))
        else:  # pragma: no cover - guarded by argparse choices
            parser.error(f"unknown check {name!r}")
    return items


def _cmd_verify(args, parser) -> int:
    variant = _variant(args)
    allowed = _CHECKS_BY_VARIANT[variant]
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        for name in names:
            if name not in _ALL_CHECKS:
                parser.error(f"unknown check {name!r} (known: {', '.join(_ALL_CHECKS)})")
            if name not in allowed:
                parser.error(f"check {name!r} is not defined for variant {variant.value}")
    else:
        names = list(allowed)
    items = _run_checks(args, parser, variant, names)
    data = reportio.write_report(
        items,
        variant=variant,
        convention=Convention.NORMAL,
        bounds=(args.bound, args.bound),
        timestamps=args.timestamps,
    )
    _emit(data, args.output)
    return exit_code(items)


def _cmd_periodicity(args, parser) -> int:
    variant, convention = _variant(args), _convention(args)
    if args.rows > args.b_max:
        parser.error("--rows must not exceed --b-max")
    t = compute_table(variant, convention, args.rows, args.b_max)
    items = []
    for a in range(args.rows + 1):
        cert = analysis.detect_additive_period(t, a, min_window=args.min_window)
        name = f"additive-period:row{a}"
        if cert is None:
            items.append(
                ReportItem(
                    name,
                    Status.INCONCLUSIVE,
                    parameters={"row": a, "b_max": args.b_max, "min_window": args.min_window},
                )
            )
        else:
            items.append(
                ReportItem(
                    name,
                    Status.PASS,
                    parameters={
                        "row": a,
                        "preperiod": cert.preperiod,
                        "period": cert.period,
                        "validated_upto": cert.validated_upto,
                        "min_window": args.min_window,
                    },
                )
            )
    data = reportio.write_report(
        items,
        variant=variant,
        convention=convention,
        bounds=(args.rows, args.b_max),
        timestamps=args.timestamps,
    )
    _emit(data, args.output)
    return exit_code(items)


def _cmd_diagonal(args, parser) -> int:
    variant, convention = _variant(args), _convention(args)
    if args.offsets > args.size:
        parser.error("--offsets must not exceed --size")
    t = compute_table(variant, convention, args.size, args.size)
    items = [
        analysis.check_diagonal(t, a, args.g_max) for a in range(args.offsets + 1)
    ]
    data = reportio.write_report(
        items,
        variant=variant,
        convention=convention,
        bounds=(args.size, args.size),
        timestamps=args.timestamps,
    )
    _emit(data, args.output)
    return exit_code(items)


def _cmd_probe_translation(args, parser) -> int:
    variant, convention = _variant(args), _convention(args)
    t = compute_table(variant, convention, args.bound, args.bound)
    seq = analysis.k_sequence(t, args.g)
    name = f"translation:g{args.g}"
    params = {
        "g": args.g,
        "bound": args.bound,
        "m_max": args.m_max,
        "n0_max": args.n0_max,
        "entries": len(seq.entries),
    }
    try:
        fit = analysis.translation_probe(seq, m_max=args.m_max, n0_max=args.n0_max)
    except ValueError as exc:
        parser.error(f"{exc}; raise --bound")
    if fit is None:
        params["note"] = "no translation found within the search ranges"
        items = [ReportItem(name, Status.INCONCLUSIVE, parameters=params)]
    else:
        params.update(
            offset=fit.offset, start=fit.start, prefix=list(fit.prefix)
        )
        items = [ReportItem(name, Status.PASS, parameters=params)]
    data = reportio.write_report(
        items,
        variant=variant,
        convention=convention,
        bounds=(args.bound, args.bound),
        timestamps=args.timestamps,
    )
    _emit(data, args.output)
    return exit_code(items)


def _parse_position(text: str, parser) -> Position:
    try:
        a, b = (int(part) for part in text.replace(",", " ").split())
        return canonicalize(a, b)
    except (ValueError, TypeError):
        parser.error(f"cannot parse position {text!r}; expected e.g. '2,3'")


def _parse_player_move(tokens: list[str]) -> MoveSpec:
    kind = tokens[0]
    if kind == "one" and len(tokens) == 3:
        pile = {"smaller": Pile.SMALLER, "larger": Pile.LARGER}.get(tokens[1])
        if pile is None:
            raise ValueError(f"unknown pile {tokens[1]!r}; use smaller or larger")
        return take_one(pile, int(tokens[2]))
    if kind == "both" and len(tokens) == 2:
        return take_both(int(tokens[1]))
    if kind == "ext" and len(tokens) == 3:
        return take_extended(int(tokens[1]), int(tokens[2]))
    raise ValueError('expected "one smaller|larger <k>", "both <k>" or "ext <k> <l>"')


def _describe(move: MoveSpec) -> str:
    if move.kind is MoveKind.TAKE_ONE:
        return f"one {move.pile.value} {move.k}"
    if move.kind is MoveKind.TAKE_BOTH:
        return f"both {move.k}"
    return f"ext {move.k} {move.l}"


def _engine_move(t: GrundyTable, p: Position) -> tuple[MoveSpec, Position]:
    wins = winning_moves(t, p)
    if wins:
        # deterministic tie-break: minimal resulting total, then smallest pair
        return min(wins, key=lambda mq: (mq[1].total, mq[1]))
    fallback = take_one(Pile.LARGER, 1)
    for move, q in legal_moves(t.variant, p):
        if move == fallback:
            return move, q
    return legal_moves(t.variant, p)[0]


def _announce(last_mover: str, convention: Convention) -> str:
    if convention is Convention.NORMAL:
        winner = last_mover
    else:
        winner = "engine" if last_mover == "you" else "you"
    return (
        f"{last_mover} made the last move: {winner} "
        f"{'win' if winner == 'you' else 'wins'} ({convention.value} play)."
    )


def _cmd_play(args, parser) -> int:
    variant, convention = _variant(args), _convention(args)
    p = _parse_position(args.position, parser)
    out = sys.stdout
    out.write(
        f"{variant.value} ({convention.value} play). "
        f"position: ({p.small}, {p.large}). you move first.\n"
    )
    out.write('moves: "one smaller|larger <k>", "both <k>", "ext <k> <l>", or "quit".\n')
    if is_terminal(p):
        out.write("the position is already terminal; nothing to play.\n")
        return 0
    t = compute_table(variant, convention, p.large, p.large)
    while True:
        out.write("> ")
        out.flush()
        line = sys.stdin.readline()
        if not line or line.strip().lower() in ("quit", "q"):
            out.write("quit.\n")
            return 0
        tokens = line.strip().lower().split()
        if not tokens:
            continue
        try:
            move = _parse_player_move(tokens)
            q = apply_move(variant, p, move)
        except (ValueError, IllegalMoveError) as exc:
            out.write(f"invalid move: {exc}\n")
            continue
        p = q
        out.write(f"you: {_describe(move)} -> ({p.small}, {p.large})\n")
        if is_terminal(p):
            out.write(_announce("you", convention) + "\n")
            return 0
        move, p = _engine_move(t, p)
        out.write(f"engine: {_describe(move)} -> ({p.small}, {p.large})\n")
        if is_terminal(p):
            out.write(_announce("engine", convention) + "\n")
            return 0


def _add_common_report_args(sub) -> None:
    sub.add_argument("--output", default=None, help="write to this path instead of stdout")
    sub.add_argument(
        "--timestamps",
        action="store_true",
        help="include a generation timestamp in the report (off by default)",
    )


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwythoff",
        description="Sprague-Grundy tables, theorem verifiers and conjecture "
        "probes for the f-wythoff game family.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    variants = [v.value for v in Variant]
    conventions = [c.value for c in Convention]

    table = subs.add_parser("table", help="compute and export a grundy table")
    table.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    table.add_argument("--convention", choices=conventions, default=Convention.NORMAL.value)
    table.add_argument("--size", type=_nonneg, default=None, help="square strip bound")
    table.add_argument("--a-max", type=_nonneg, default=None)
    table.add_argument("--b-max", type=_nonneg, default=None)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--output", default=None)
    table.set_defaults(func=_cmd_table)

    verify = subs.add_parser("verify", help="run theorem verifiers and emit a report")
    verify.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    verify.add_argument("--bound", type=_nonneg, default=128, help="square strip bound")
    verify.add_argument(
        "--checks",
        default=None,
        help="comma-separated subset of: " + ", ".join(_ALL_CHECKS),
    )
    verify.add_argument("--rows", type=_nonneg, default=16, help="verify rows 0..N")
    verify.add_argument("--g-max", type=_nonneg, default=20, help="row coverage target")
    verify.add_argument("--k-max", type=_nonneg, default=10, help="k-sequence checks for k=0..N")
    verify.add_argument(
        "--witness-k-max", type=_nonneg, default=10, help="redundancy witnesses for k=1..N"
    )
    _add_common_report_args(verify)
    verify.set_defaults(func=_cmd_verify)

    periodicity = subs.add_parser(
        "periodicity", help="detect additive periods over a row range"
    )
    periodicity.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    periodicity.add_argument("--convention", choices=conventions, default=Convention.NORMAL.value)
    periodicity.add_argument("--rows", type=_nonneg, default=20, help="probe rows 0..N")
    periodicity.add_argument("--b-max", type=_nonneg, default=1024)
    periodicity.add_argument("--min-window", type=_nonneg, default=128)
    _add_common_report_args(periodicity)
    periodicity.set_defaults(func=_cmd_periodicity)

    diagonal = subs.add_parser("diagonal", help="probe diagonal value coverage")
    diagonal.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    diagonal.add_argument("--convention", choices=conventions, default=Convention.NORMAL.value)
    diagonal.add_argument("--size", type=_nonneg, default=512, help="square strip bound")
    diagonal.add_argument("--offsets", type=_nonneg, default=16, help="diagonals 0..N")
    diagonal.add_argument("--g-max", type=_nonneg, default=100)
    _add_common_report_args(diagonal)
    diagonal.set_defaults(func=_cmd_diagonal)

    probe = subs.add_parser(
        "probe-translation", help="search a translated closed form for one value"
    )
    probe.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    probe.add_argument("--convention", choices=conventions, default=Convention.NORMAL.value)
    probe.add_argument("--g", type=_nonneg, required=True, help="grundy value to probe")
    probe.add_argument("--bound", type=_nonneg, default=512, help="square strip bound")
    probe.add_argument("--m-max", type=_nonneg, default=64)
    probe.add_argument("--n0-max", type=_nonneg, default=8)
    _add_common_report_args(probe)
    probe.set_defaults(func=_cmd_probe_translation)

    play = subs.add_parser("play", help="interactive demonstration game")
    play.add_argument("--variant", choices=variants, default=Variant.F_WYTHOFF.value)
    play.add_argument("--convention", choices=conventions, default=Convention.NORMAL.value)
    play.add_argument("--position", default="2,3", help="starting piles, e.g. '2,3'")
    play.set_defaults(func=_cmd_play)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
