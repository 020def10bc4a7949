"""Command-line interface.

Exit codes: 0 on success (ambiguous selections are results, not errors),
2 on malformed input, 3 when an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents, report
from .errors import GameError, InvariantViolation
from .fuzz import run_fuzz
from .game import Game
from .presets import PRESETS, get_preset
from .selection import FallbackPolicy, describe_outcome, select
from .synthesis import (
    SubsidyQuery,
    compare,
    format_deletion_set,
    minimal_deletion_sets,
    predict,
    subsidy_margins,
    subsidy_threshold,
)

EXIT_BAD_INPUT = 2
EXIT_INVARIANT = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_game(path: str) -> tuple[Game, tuple[str, ...] | None]:
    return documents.parse_game_document(_read(path))


def _profile(text: str) -> tuple[str, ...]:
    return tuple(t.strip() for t in text.split(","))


def _status_quo(args, doc_sq) -> tuple[str, ...]:
    if args.status_quo:
        return _profile(args.status_quo)
    if doc_sq is None:
        raise GameError("no status quo: pass --status-quo or set status_quo in the game document")
    return doc_sq


def _policy(args) -> FallbackPolicy:
    return FallbackPolicy.parse(args.policy) if args.policy is not None else FallbackPolicy()


def cmd_analyze(args) -> None:
    game, _ = _load_game(args.game)
    print(report.analyze(game, args.include_mixed, args.format, args.efficiency), end="")


def cmd_select(args) -> None:
    game, sq = _load_game(args.game)
    q = _status_quo(args, sq)
    outcome = select(game, q, _policy(args), include_mixed=args.include_mixed)
    print(describe_outcome(game, outcome))


def cmd_intervene(args) -> None:
    game, sq = _load_game(args.game)
    iv = documents.parse_intervention(_read(args.intervention), game)
    after = iv.apply(game)
    text = documents.serialize_game(after)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    if args.then == "select":
        rep = predict(game, _status_quo(args, sq), iv, _policy(args))
        if not args.output:
            print()
        print(report.format_prediction(rep), end="")


def cmd_synthesize(args) -> None:
    game, sq = _load_game(args.game)
    q = _status_quo(args, sq)
    if args.subsidy_targets:
        query = SubsidyQuery(q, _profile(args.subsidy_targets))
        margins = subsidy_margins(game, query)
        s = subsidy_threshold(game, query)
        for name, t, m in zip(game.players, query.targets, margins):
            print(f"player {name}: target {t}, break-even subsidy {m}")
        print(f"uniform threshold s* = {s}")
        print(f"status quo survives for s <= {s} and is destroyed for s > {s}")
        return
    search = minimal_deletion_sets(game, q, args.require_unique_efficient, args.max_size)
    for d in search.sets:
        print(format_deletion_set(game, d))
    for note in search.notes:
        print(f"note: {note}")


def cmd_compare(args) -> None:
    game, sq = _load_game(args.game)
    q = _status_quo(args, sq)
    ivs = [documents.parse_intervention(_read(p), game) for p in args.interventions]
    print(compare(game, q, ivs, _policy(args)).render(args.format), end="")


def cmd_reproduce(args) -> None:
    print(report.walkthrough(), end="")


def cmd_fuzz(args) -> int:
    result = run_fuzz(args.seed, args.trials, args.max_players, args.max_actions)
    print(result.summary(), end="")
    return EXIT_INVARIANT if result.violations else 0


def cmd_preset(args) -> None:
    if args.list:
        for name in sorted(PRESETS):
            p = get_preset(name)
            print(f"{name}: {p.description} [interventions: {', '.join(p.interventions)}]")
        return
    if not args.name:
        raise GameError("preset name required (or --list)")
    try:
        p = get_preset(args.name)
    except KeyError as exc:
        raise GameError(exc.args[0]) from None
    if args.intervention:
        if args.intervention not in p.interventions:
            raise GameError(f"preset {p.name} has no intervention {args.intervention!r}")
        print(documents.serialize_intervention(p.interventions[args.intervention], p.game), end="")
    else:
        print(documents.serialize_game(p.game, p.status_quo), end="")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inertia", description="Equilibrium selection under status-quo inertia")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, policy=True, sq=True):
        if sq:
            p.add_argument("--status-quo", help="comma-separated action labels, one per player")
        if policy:
            p.add_argument("--policy", help="comma-separated refinements (default: unique-efficient)")

    p = sub.add_parser("analyze", help="equilibria and efficiency report")
    p.add_argument("game")
    p.add_argument("--include-mixed", action="store_true", help="support enumeration (2 players only)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--efficiency", choices=("pareto", "utilitarian"), default="pareto")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("select", help="selected equilibrium given a status quo")
    p.add_argument("game")
    common(p)
    p.add_argument("--include-mixed", action="store_true")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("intervene", help="apply an intervention and print the new game")
    p.add_argument("game")
    p.add_argument("intervention")
    p.add_argument("--then", choices=("select",))
    p.add_argument("--output", help="write the intervened game here instead of stdout")
    common(p)
    p.set_defaults(func=cmd_intervene)

    p = sub.add_parser("synthesize", help="break-even subsidies or minimal deletion sets")
    p.add_argument("game")
    common(p, policy=False)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--subsidy-targets", help="comma-separated target action per player")
    mode.add_argument("--deletions", action="store_true")
    p.add_argument("--require-unique-efficient", action="store_true")
    p.add_argument("--max-size", type=int, default=3)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("compare", help="comparison table over interventions")
    p.add_argument("game")
    p.add_argument("interventions", nargs="*")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("reproduce-paper", help="coordination example walkthrough")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("fuzz", help="seeded random checks of inertia")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--max-players", type=int, default=3)
    p.add_argument("--max-actions", type=int, default=3)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("preset", help="print a preset game or intervention document")
    p.add_argument("name", nargs="?")
    p.add_argument("--intervention")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (GameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
