"""Seeded fuzzing of the inertia results over random games.

Every trial draws a game (1 to ``max_players`` players, 1 to ``max_actions``
actions each) from its own SplitMix64 stream, picks a pure equilibrium as
status quo (trials without one are skipped) and checks:

* price: random transfer schedules; whenever the status quo is still an
  equilibrium, ``select`` keeps it by inertia;
* addition: a new action whose payoffs to its owner are all strictly below
  that player's minimum payoff never changes the selection;
* deletion: deleting a status-quo action makes the status quo infeasible and
  ``select`` never reports it as kept by inertia;
* any: one random intervention of a random kind; whenever the status quo
  survives, inertia keeps it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .equilibria import enumerate_pure_nash, is_pure_nash
from .game import Game
from .interventions import (
    Addition,
    Deletion,
    PayoffSlice,
    PriceOnly,
    Replacement,
    TransferSchedule,
)
from .random_games import SplitMix64, random_game_from
from .selection import INERTIA, Selected, select

CHECKS = ("price", "addition", "deletion", "any")


@dataclass
class FuzzResult:
    seed: int
    trials: int
    skipped: int = 0
    checks: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    survived: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    violations: list[str] = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            f"fuzz seed={self.seed} trials={self.trials} skipped(no pure equilibrium)={self.skipped}",
        ]
        for name in CHECKS:
            lines.append(f"  {name:<9} checks={self.checks[name]} status-quo-survived={self.survived[name]}")
        lines.append(f"violations={len(self.violations)}")
        lines.extend(f"  {v}" for v in self.violations[:20])
        return "\n".join(lines) + "\n"


def _random_vector(rng: SplitMix64, n: int, low: int, high: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(low, high)) for _ in range(n))


def _random_schedule(rng: SplitMix64, game: Game) -> TransferSchedule:
    transfers = {}
    for p in game.profiles():
        if rng.next() % 2:
            transfers[p] = _random_vector(rng, game.n_players, -3, 3)
    return TransferSchedule(transfers)


def _random_slice(rng: SplitMix64, game: Game, player: int, low: int, high: int, own_high: int | None = None):
    entries = {}
    others = [acts for k, acts in enumerate(game.actions) if k != player]
    for key in itertools.product(*others):
        vec = list(_random_vector(rng, game.n_players, low, high))
        if own_high is not None:
            vec[player] = Fraction(rng.randint(own_high - 4, own_high))
        entries[key] = tuple(vec)
    return PayoffSlice(entries)


def _random_intervention(rng: SplitMix64, game: Game):
    kind = rng.randint(0, 3)
    player = rng.randint(0, game.n_players - 1)
    if kind == 0:
        return PriceOnly(_random_schedule(rng, game))
    if kind == 1:
        return Addition(player, "new", _random_slice(rng, game, player, -6, 6))
    if kind == 2:
        if len(game.actions[player]) == 1:
            return PriceOnly(TransferSchedule())
        return Deletion(player, rng.choice(game.actions[player]))
    return Replacement(player, rng.choice(game.actions[player]), "new", _random_slice(rng, game, player, -6, 6))


class _Trial:
    def __init__(self, result: FuzzResult, trial_seed: int, game: Game, status_quo):
        self.result = result
        self.trial_seed = trial_seed
        self.game = game
        self.q = status_quo

    def inertia(self, name: str, after: Game) -> None:
        self.result.checks[name] += 1
        if not (after.is_feasible(self.q) and is_pure_nash(after, self.q)):
            return
        self.result.survived[name] += 1
        outcome = select(after, self.q)
        if outcome != Selected(self.q, INERTIA):
            self.violation(name, f"status quo survived but select returned {outcome}")

    def violation(self, name: str, msg: str) -> None:
        self.result.violations.append(f"[{name}] trial seed {self.trial_seed:#x}: {msg}")


def run_fuzz(seed: int, trials: int, max_players: int = 3, max_actions: int = 3) -> FuzzResult:
    master = SplitMix64(seed)
    result = FuzzResult(seed, trials)
    for _ in range(trials):
        trial_seed = master.next()
        rng = SplitMix64(trial_seed)
        n = rng.randint(1, max_players)
        sizes = [rng.randint(1, max_actions) for _ in range(n)]
        game = random_game_from(rng, sizes)
        equilibria = enumerate_pure_nash(game)
        if not equilibria:
            result.skipped += 1
            continue
        t = _Trial(result, trial_seed, game, rng.choice(equilibria))

        t.inertia("price", PriceOnly(_random_schedule(rng, game)).apply(game))

        player = rng.randint(0, n - 1)
        floor = min(vec[player] for vec in game.table)
        low_slice = _random_slice(rng, game, player, -6, 6, own_high=int(floor) - 1)
        after = Addition(player, "new", low_slice).apply(game)
        t.inertia("addition", after)
        if not is_pure_nash(after, t.q):
            t.violation("addition", "dominated addition destroyed the status quo")

        for k in range(n):
            if len(game.actions[k]) < 2:
                continue
            result.checks["deletion"] += 1
            after = Deletion(k, t.q[k]).apply(game)
            outcome = select(after, t.q)
            if after.is_feasible(t.q) or (isinstance(outcome, Selected) and outcome.reason == INERTIA):
                t.violation("deletion", f"deleting {t.q[k]} for player {k + 1} kept the status quo")

        t.inertia("any", _random_intervention(rng, game).apply(game))
    return result
