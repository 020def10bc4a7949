"""Intervention design: break-even subsidies, minimal deletions, predictions and comparisons."""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equilibria import EfficiencyReport, efficient_equilibria, enumerate_pure_nash, is_pure_nash
from .errors import (
    DimensionMismatch,
    InvariantViolation,
    StatusQuoNotEquilibrium,
    TargetEqualsStatusQuoAction,
    UnknownAction,
    WouldEmptyActionSet,
)
from .game import Game, PureProfile
from .interventions import Intervention, PriceOnly, apply_deletion, apply_price, subsidy_schedule
from .rational import fmt_vector
from .selection import (
    DEFAULT_POLICY,
    INERTIA,
    Ambiguous,
    FallbackPolicy,
    Selected,
    SelectionOutcome,
    describe_outcome,
    select,
    status_quo_survives,
)


def _require_equilibrium(game: Game, status_quo: Sequence[str]) -> None:
    if not status_quo_survives(game, status_quo):
        raise StatusQuoNotEquilibrium(
            f"{game.format_profile(status_quo)} is not a pure Nash equilibrium of the game"
        )


@dataclass(frozen=True)
class SubsidyQuery:
    status_quo: PureProfile
    targets: tuple[str, ...]


def _check_query(game: Game, query: SubsidyQuery) -> None:
    _require_equilibrium(game, query.status_quo)
    if len(query.targets) != game.n_players:
        raise DimensionMismatch(f"need {game.n_players} targets, got {len(query.targets)}")
    for k, (t, q) in enumerate(zip(query.targets, query.status_quo)):
        if not game.has_action(k, t):
            raise UnknownAction(f"{t!r} is not an action of player {game.players[k]}")
        if t == q:
            raise TargetEqualsStatusQuoAction(
                f"target for player {game.players[k]} is its status-quo action {q!r}"
            )


def subsidy_margins(game: Game, query: SubsidyQuery) -> tuple[Fraction, ...]:
    """Per-player break-even subsidy: u_i(q) - u_i(target_i, q_-i).

    Player i's subsidy s_i keeps the status quo an equilibrium iff s_i is at
    most its margin.
    """
    _check_query(game, query)
    q = query.status_quo
    base = game.payoff(q)
    return tuple(
        base[k] - game.payoff(game.deviate(q, k, t))[k] for k, t in enumerate(query.targets)
    )


def subsidy_threshold(game: Game, query: SubsidyQuery) -> Fraction:
    """Largest uniform subsidy on the target actions under which the status quo survives.

    The closed form is re-checked against Nash membership at the threshold
    and one unit above it.
    """
    s = min(subsidy_margins(game, query))
    at = apply_price(game, subsidy_schedule(game, query.targets, s))
    above = apply_price(game, subsidy_schedule(game, query.targets, s + 1))
    if not is_pure_nash(at, query.status_quo) or is_pure_nash(above, query.status_quo):
        raise InvariantViolation(f"subsidy threshold {s} failed its Nash re-check")
    return s


def subsidy_intervention(game: Game, targets: Sequence[str], amount, label: str | None = None) -> PriceOnly:
    return PriceOnly(subsidy_schedule(game, tuple(targets), amount), label)


DeletionSet = tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class DeletionSearch:
    sets: tuple[DeletionSet, ...]
    notes: tuple[str, ...] = ()


def _apply_deletions(game: Game, deletions: DeletionSet) -> Game | None:
    try:
        for k, a in deletions:
            game = apply_deletion(game, k, a)
    except WouldEmptyActionSet:
        return None
    return game


def minimal_deletion_sets(
    game: Game,
    status_quo: Sequence[str],
    require_unique_efficient: bool = False,
    max_size: int = 3,
) -> DeletionSearch:
    """Inclusion-minimal sets of deletions after which the status quo is no longer an equilibrium.

    Subsets of (player, action) pairs are searched exhaustively up to
    ``max_size``. With ``require_unique_efficient`` the minimal sets are
    filtered to those whose residual game has a unique efficient pure
    equilibrium.
    """
    status_quo = tuple(status_quo)
    _require_equilibrium(game, status_quo)
    pairs = [(k, a) for k in range(game.n_players) for a in game.actions[k]]
    minimal: list[DeletionSet] = []
    residuals: dict[DeletionSet, Game] = {}
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(pairs, size):
            if any(set(m) <= set(combo) for m in minimal):
                continue
            residual = _apply_deletions(game, combo)
            if residual is None or status_quo_survives(residual, status_quo):
                continue
            minimal.append(combo)
            residuals[combo] = residual
    notes = []
    if not minimal:
        notes.append(
            "no admissible deletion set: every status-quo action is its player's only action"
            if all(len(game.actions[k]) == 1 for k in range(game.n_players))
            else f"no deletion set of size <= {max_size} destroys the status quo"
        )
    result = minimal
    if require_unique_efficient:
        result = []
        for combo in minimal:
            rep = efficient_equilibria(residuals[combo], enumerate_pure_nash(residuals[combo]))
            if rep.unique_efficient is not None:
                result.append(combo)
        if minimal and not result:
            notes.append("no minimal deletion set leaves a unique efficient equilibrium")
    return DeletionSearch(tuple(result), tuple(notes))


def format_deletion_set(game: Game, deletions: DeletionSet) -> str:
    return "{" + ", ".join(f"({game.players[k]},{a})" for k, a in deletions) + "}"


@dataclass(frozen=True)
class PredictionReport:
    intervention: Intervention | None
    game: Game
    status_quo: PureProfile
    survives: bool
    selection: SelectionOutcome
    efficiency: EfficiencyReport
    results: tuple[str, ...]
    notes: tuple[str, ...]
    trace: tuple[str, ...]


def _class_name(intervention: Intervention | None) -> str:
    return "baseline" if intervention is None else intervention.title


def predict(
    game: Game,
    status_quo: Sequence[str],
    intervention: Intervention | None,
    policy: FallbackPolicy = DEFAULT_POLICY,
) -> PredictionReport:
    """Apply an intervention and predict the selected outcome.

    ``results`` names the general results whose hypotheses were verified:
    ``persistence`` (the status quo survives and is kept), its price-only and
    addition special cases, and ``deletion-transition`` /
    ``replacement-transition`` / ``transition`` when the status quo is
    destroyed and a unique efficient equilibrium exists.
    """
    status_quo = tuple(status_quo)
    after = game if intervention is None else intervention.apply(game)
    feasible = after.is_feasible(status_quo)
    survives = feasible and is_pure_nash(after, status_quo)
    outcome = select(after, status_quo, policy)
    eff = efficient_equilibria(after, enumerate_pure_nash(after))
    sq = after.format_profile(status_quo)
    results: list[str] = []
    notes: list[str] = []
    trace = [f"status quo q⁻ = {sq}"]
    if intervention is not None:
        trace.append(f"intervention: {intervention.title}: {intervention.describe(game)}")
    if survives:
        results.append("persistence")
        if isinstance(intervention, PriceOnly):
            results.append("price-only-limit")
        elif intervention is not None and intervention.kind == "add":
            results.append("addition-limit")
        notes.append(f"{sq} remains a Nash equilibrium, so inertia keeps it selected")
        trace.append(f"{sq} ∈ NE(G_I): inertia preserves {sq}")
    else:
        why = "infeasible" if not feasible else "no longer a Nash equilibrium"
        notes.append(f"{sq} is {why} after the intervention")
        trace.append(f"{sq} ∉ NE(G_I) ({why}): transition becomes possible")
        if eff.unique_efficient is not None:
            q_star = after.format_profile(eff.unique_efficient)
            kind = intervention.kind if intervention is not None else None
            results.append(
                {"delete": "deletion-transition", "replace": "replacement-transition"}.get(kind, "transition")
            )
            notes.append(f"unique efficient equilibrium q* = {q_star}")
            trace.append(f"unique efficient equilibrium exists: selection moves to {q_star}")
        else:
            notes.append(
                f"no unique efficient equilibrium ({len(eff.efficient)} efficient of {len(eff.candidates)}); "
                f"fallback policy [{policy}] decides"
            )
            trace.append(f"no unique efficient equilibrium: policy [{policy}] gives {describe_outcome(after, outcome)}")
    if survives and not (isinstance(outcome, Selected) and outcome.reason == INERTIA):
        raise InvariantViolation("surviving status quo was not kept by inertia")
    return PredictionReport(
        intervention, after, status_quo, survives, outcome, eff, tuple(results), tuple(notes), tuple(trace)
    )


COMPARE_COLUMNS = ("class", "change", "q⁻ survives", "selected outcome", "payoffs at outcome")


@dataclass(frozen=True)
class ComparisonRow:
    cls: str
    change: str
    survives: bool
    outcome: str
    payoffs: str
    report: PredictionReport

    def cells(self) -> tuple[str, ...]:
        return (self.cls, self.change, str(self.survives).lower(), self.outcome, self.payoffs)


def _welfare(game: Game, outcome: SelectionOutcome) -> str:
    if isinstance(outcome, Selected):
        return fmt_vector(game.payoff(outcome.profile))
    if isinstance(outcome, Ambiguous) and outcome.candidates:
        vectors = [game.payoff(c) for c in outcome.candidates]
        spans = []
        for k in range(game.n_players):
            lo, hi = min(v[k] for v in vectors), max(v[k] for v in vectors)
            spans.append(str(lo) if lo == hi else f"{lo}..{hi}")
        return "(" + ",".join(spans) + ")"
    return "-"


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple[ComparisonRow, ...]

    def render(self, format: str = "text") -> str:
        return render_table(COMPARE_COLUMNS, [r.cells() for r in self.rows], format)


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]], format: str = "text") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(c)) for c in col) for col in zip(headers, *rows)]
    lines = [" | ".join(str(c).ljust(w) for c, w in zip(line, widths)).rstrip() for line in [headers, *rows]]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def compare(
    game: Game,
    status_quo: Sequence[str],
    interventions: Sequence[Intervention],
    policy: FallbackPolicy = DEFAULT_POLICY,
) -> ComparisonTable:
    """One prediction row per intervention, preceded by the unintervened baseline."""
    rows = []
    for iv in [None, *interventions]:
        rep = predict(game, status_quo, iv, policy)
        change = "none" if iv is None else iv.describe(game)
        rows.append(
            ComparisonRow(
                _class_name(iv),
                change,
                rep.survives,
                describe_outcome(rep.game, rep.selection),
                _welfare(rep.game, rep.selection),
                rep,
            )
        )
    return ComparisonTable(tuple(rows))

