"""Deterministic random games for fuzzing and oracle tests.

The generator is SplitMix64 with its standard constants, so any
implementation can reproduce a corpus from the seed alone:

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

A bounded integer in [low, high] is ``low + output % (high - low + 1)``.
Payoffs are drawn profile by profile in canonical order and, within a
profile, player by player. Action labels are ``a0, a1, ...`` and player
names ``1, 2, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .game import Game

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        """Uniform-ish integer in [low, high] (modulo reduction)."""
        if high < low:
            raise ValueError(f"empty range [{low}, {high}]")
        return low + self.next() % (high - low + 1)

    def choice(self, items: Sequence):
        return items[self.next() % len(items)]


@dataclass(frozen=True)
class RandomGameConfig:
    seed: int
    players: int = 2
    actions: int | tuple[int, ...] = 2
    low: int = -5
    high: int = 5

    def __post_init__(self):
        if self.players < 1:
            raise ValueError("need at least one player")
        sizes = self.action_counts()
        if len(sizes) != self.players or any(a < 1 for a in sizes):
            raise ValueError(f"bad action counts {self.actions!r} for {self.players} players")
        if self.high < self.low:
            raise ValueError(f"empty payoff range [{self.low}, {self.high}]")

    def action_counts(self) -> tuple[int, ...]:
        if isinstance(self.actions, int):
            return (self.actions,) * self.players
        return tuple(self.actions)


def random_game(config: RandomGameConfig) -> Game:
    return random_game_from(SplitMix64(config.seed), config.action_counts(), config.low, config.high)


def random_game_from(rng: SplitMix64, sizes: Sequence[int], low: int = -5, high: int = 5) -> Game:
    """Draw a game from an existing stream (advances ``rng``)."""
    n = len(sizes)
    actions = tuple(tuple(f"a{i}" for i in range(m)) for m in sizes)
    total = 1
    for m in sizes:
        total *= m
    table = tuple(tuple(Fraction(rng.randint(low, high)) for _ in range(n)) for _ in range(total))
    players = tuple(str(k + 1) for k in range(n))
    return Game(players, actions, table)
