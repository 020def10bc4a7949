"""Plain-text reports: game listings, equilibrium analyses and the coordination-example walkthrough."""

from __future__ import annotations

from .equilibria import EquilibriumSet, efficient_equilibria, enumerate_mixed_nash_2p, enumerate_pure_nash
from .game import Game, MixedProfile, expected_payoff
from .presets import get_preset
from .rational import fmt_vector
from .selection import describe_outcome, select
from .synthesis import PredictionReport, compare, predict, render_table


def format_mixed(game: Game, profile: MixedProfile) -> str:
    parts = []
    for k, s in enumerate(profile):
        probs = " ".join(f"{a}={p}" for a, p in zip(game.actions[k], s.probs))
        parts.append(f"{game.players[k]}: {probs}")
    return "; ".join(parts)


def format_game(game: Game) -> str:
    lines = [f"players: {', '.join(game.players)}"]
    lines.append("actions: " + " | ".join(f"{p}: {' '.join(a)}" for p, a in zip(game.players, game.actions)))
    lines.append("payoffs:")
    for profile, vec in zip(game.profiles(), game.table):
        lines.append(f"  {game.format_profile(profile)} -> {fmt_vector(vec)}")
    return "\n".join(lines) + "\n"


def equilibrium_set(game: Game, include_mixed: bool) -> EquilibriumSet:
    if include_mixed and game.n_players == 2:
        return enumerate_mixed_nash_2p(game)
    return EquilibriumSet(enumerate_pure_nash(game))


def analyze_rows(game: Game, include_mixed: bool = False, criterion: str = "pareto") -> list[tuple[str, str, str]]:
    """Rows of (kind, equilibrium, payoffs) for every equilibrium, plus efficiency verdicts."""
    eqs = equilibrium_set(game, include_mixed)
    eff = efficient_equilibria(game, eqs.pure, criterion)
    rows = []
    for p in eqs.pure:
        tag = "pure, efficient" if p in eff.efficient else "pure"
        rows.append((tag, game.format_profile(p), fmt_vector(game.payoff(p))))
    for m in eqs.mixed:
        values = tuple(expected_payoff(game, m, k) for k in range(game.n_players))
        rows.append(("mixed", format_mixed(game, m), fmt_vector(values)))
    for comp in eqs.degenerate:
        sup = "; ".join(f"{game.players[k]}: {' '.join(s)}" for k, s in enumerate(comp.supports))
        rows.append(("degenerate", sup, f"{len(comp.extreme_points)} extreme points"))
    return rows


def analyze(game: Game, include_mixed: bool = False, format: str = "text", criterion: str = "pareto") -> str:
    rows = analyze_rows(game, include_mixed, criterion)
    if format == "csv":
        return render_table(("kind", "equilibrium", "payoffs"), rows, "csv")
    eqs = equilibrium_set(game, include_mixed)
    eff = efficient_equilibria(game, eqs.pure, criterion)
    out = [format_game(game), "equilibria:"]
    out.append(render_table(("kind", "equilibrium", "payoffs"), rows) if rows else "  none\n")
    unique = game.format_profile(eff.unique_efficient) if eff.unique_efficient else "none"
    out.append(
        f"efficient ({eff.criterion.value}): {' '.join(game.format_profile(p) for p in eff.efficient) or 'none'}\n"
        f"unique efficient: {unique}\n"
    )
    return "\n".join(out)


def format_prediction(rep: PredictionReport) -> str:
    lines = [
        f"survives: {str(rep.survives).lower()}",
        f"selection: {describe_outcome(rep.game, rep.selection)}",
        f"results: {', '.join(rep.results) or 'none'}",
        "notes:",
        *(f"  - {n}" for n in rep.notes),
        "trace:",
        *(f"  {i + 1}. {step}" for i, step in enumerate(rep.trace)),
    ]
    return "\n".join(lines) + "\n"


def walkthrough() -> str:
    """Full walkthrough of the coordination example; output is deterministic."""
    preset = get_preset("coordination")
    game, q = preset.game, preset.status_quo
    out = ["# Coordination game under status-quo inertia", ""]
    out.append(format_game(game))
    out.append("## Equilibria")
    out.append(analyze(game, include_mixed=True).split("equilibria:\n", 1)[1])
    out.append("## Selection at the status quo")
    out.append(f"status quo {game.format_profile(q)} -> {describe_outcome(game, select(game, q))}\n")
    out.append("## Interventions")
    scenarios = [preset.interventions[k] for k in ("small-subsidy", "addition", "replacement")]
    for iv in scenarios:
        rep = predict(game, q, iv)
        out.append(f"### {iv.title}: {iv.describe(game)}")
        out.append(format_prediction(rep))
    out.append("## Comparison")
    out.append(compare(game, q, scenarios).render())
    return "\n".join(out)
