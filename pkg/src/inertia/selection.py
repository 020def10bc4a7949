"""Equilibrium selection with status-quo inertia.

``select`` keeps the inherited profile whenever it is still a pure Nash
equilibrium. Otherwise the pure equilibria of the game are passed through an
ordered chain of refinements; the first refinement that leaves a single
candidate decides, and anything left unresolved is reported as ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .equilibria import (
    efficient_equilibria,
    enumerate_mixed_nash_2p,
    enumerate_pure_nash,
    is_pure_nash,
    pareto_dominates,
)
from .errors import UnknownRefinement
from .game import Game, MixedProfile, PureProfile

INERTIA = "inertia"


class Refinement(str, Enum):
    UNIQUE_EFFICIENT = "unique-efficient"
    PAYOFF_DOMINANCE = "payoff-dominance"
    RISK_DOMINANCE_2X2 = "risk-dominance-2x2"
    UTILITARIAN = "utilitarian"


@dataclass(frozen=True)
class FallbackPolicy:
    stages: tuple[Refinement, ...] = (Refinement.UNIQUE_EFFICIENT,)

    def __post_init__(self):
        try:
            stages = tuple(Refinement(s) for s in self.stages)
        except ValueError as exc:
            names = ", ".join(r.value for r in Refinement)
            raise UnknownRefinement(f"{exc}; known refinements: {names}") from None
        if len(set(stages)) != len(stages):
            raise UnknownRefinement(f"refinement listed twice in {[s.value for s in stages]}")
        object.__setattr__(self, "stages", stages)

    @classmethod
    def parse(cls, text: str) -> FallbackPolicy:
        """Parse a comma-separated list of refinement names; an empty string is the empty policy."""
        names = [t.strip() for t in text.split(",") if t.strip()]
        return cls(tuple(names))

    def __str__(self):
        return ",".join(s.value for s in self.stages)


DEFAULT_POLICY = FallbackPolicy()


@dataclass(frozen=True)
class Selected:
    profile: PureProfile
    reason: str


@dataclass(frozen=True)
class Ambiguous:
    candidates: tuple[PureProfile, ...]
    stage: Refinement | None
    mixed_candidates: tuple[MixedProfile, ...] = ()


@dataclass(frozen=True)
class NoEquilibrium:
    pass


SelectionOutcome = Union[Selected, Ambiguous, NoEquilibrium]


def risk_dominant_2x2(game: Game) -> PureProfile | None:
    """Risk-dominant equilibrium of a 2x2 game with two strict equilibria.

    The two equilibria must not share a row or a column. The one with the
    larger product of unilateral deviation losses wins; ties and games
    failing the precondition give None.
    """
    if game.shape != (2, 2):
        return None
    strict = [p for p in game.profiles() if _is_strict(game, p)]
    if len(strict) != 2 or strict[0][0] == strict[1][0] or strict[0][1] == strict[1][1]:
        return None
    products = [_loss_product(game, p) for p in strict]
    if products[0] == products[1]:
        return None
    return strict[0] if products[0] > products[1] else strict[1]


def _is_strict(game: Game, profile: PureProfile) -> bool:
    current = game.payoff(profile)
    for k in range(game.n_players):
        for a in game.actions[k]:
            if a != profile[k] and game.payoff(game.deviate(profile, k, a))[k] >= current[k]:
                return False
    return True


def _loss_product(game: Game, profile: PureProfile) -> Fraction:
    current = game.payoff(profile)
    product = Fraction(1)
    for k in range(2):
        other = next(a for a in game.actions[k] if a != profile[k])
        product *= current[k] - game.payoff(game.deviate(profile, k, other))[k]
    return product


def _refine(game: Game, stage: Refinement, candidates: tuple[PureProfile, ...]) -> tuple[PureProfile, ...]:
    if stage is Refinement.UNIQUE_EFFICIENT:
        return efficient_equilibria(game, candidates).efficient
    if stage is Refinement.UTILITARIAN:
        return efficient_equilibria(game, candidates, "utilitarian").efficient
    if stage is Refinement.PAYOFF_DOMINANCE:
        pay = {c: game.payoff(c) for c in candidates}
        for c in candidates:
            if all(pareto_dominates(pay[c], pay[d]) for d in candidates if d != c):
                return (c,)
        return candidates
    if stage is Refinement.RISK_DOMINANCE_2X2:
        winner = risk_dominant_2x2(game)
        if winner is not None and winner in candidates:
            return (winner,)
        return candidates
    raise UnknownRefinement(stage)


def status_quo_survives(game: Game, status_quo: Sequence[str]) -> bool:
    """Whether the status quo is feasible and still a pure Nash equilibrium of ``game``."""
    return game.is_feasible(status_quo) and is_pure_nash(game, status_quo)


def select(
    game: Game,
    status_quo: Sequence[str],
    policy: FallbackPolicy = DEFAULT_POLICY,
    include_mixed: bool = False,
) -> SelectionOutcome:
    """Select an equilibrium of ``game`` given the inherited ``status_quo``.

    A status quo naming actions absent from ``game`` (e.g. after a deletion)
    is treated as no longer an equilibrium. With ``include_mixed`` on a
    two-player game, strictly mixed equilibria are attached to an
    ambiguous outcome; they are never selected.
    """
    status_quo = tuple(status_quo)
    if status_quo_survives(game, status_quo):
        return Selected(status_quo, INERTIA)
    candidates = enumerate_pure_nash(game)
    mixed: tuple[MixedProfile, ...] = ()
    if include_mixed and game.n_players == 2:
        mixed = enumerate_mixed_nash_2p(game).mixed
    if not candidates:
        return Ambiguous((), None, mixed) if mixed else NoEquilibrium()
    stage = None
    for stage in policy.stages:
        candidates = _refine(game, stage, candidates)
        if len(candidates) == 1:
            return Selected(candidates[0], stage.value)
    return Ambiguous(candidates, stage, mixed)


def describe_outcome(game: Game, outcome: SelectionOutcome) -> str:
    if isinstance(outcome, Selected):
        return f"{game.format_profile(outcome.profile)} [{outcome.reason}]"
    if isinstance(outcome, Ambiguous):
        cands = " ".join(game.format_profile(c) for c in outcome.candidates) or "none pure"
        stage = outcome.stage.value if outcome.stage else "empty policy"
        text = f"ambiguous at {stage}: {cands}"
        if outcome.mixed_candidates:
            text += f" (+{len(outcome.mixed_candidates)} mixed)"
        return text
    return "no pure equilibrium"


def outcome_profiles(outcome: SelectionOutcome) -> Iterable[PureProfile]:
    if isinstance(outcome, Selected):
        return (outcome.profile,)
    if isinstance(outcome, Ambiguous):
        return outcome.candidates
    return ()
