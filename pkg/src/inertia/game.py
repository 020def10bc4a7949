"""Finite normal-form games with exact rational payoffs.

A :class:`Game` stores one payoff vector per pure profile, densely, in
lexicographic order (player index first, then action index within a player).
Profiles are plain tuples of action labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateActionLabel,
    EmptyActionSet,
    InfeasibleProfile,
    InvalidMixedStrategy,
    MissingPayoffEntry,
)
from .rational import RationalLike, to_rational

PureProfile = tuple[str, ...]
PayoffVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Game:
    players: tuple[str, ...]
    actions: tuple[tuple[str, ...], ...]
    table: tuple[PayoffVector, ...]
    _index: tuple[dict[str, int], ...] = field(init=False, repr=False, compare=False)
    _strides: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.players) < 1:
            raise EmptyActionSet("a game needs at least one player")
        if len(self.actions) != len(self.players):
            raise DimensionMismatch(
                f"{len(self.players)} players but {len(self.actions)} action lists"
            )
        if len(set(self.players)) != len(self.players):
            raise DuplicateActionLabel(f"duplicate player name in {self.players}")
        index = []
        for name, acts in zip(self.players, self.actions):
            if not acts:
                raise EmptyActionSet(f"player {name} has no actions")
            if len(set(acts)) != len(acts):
                dup = next(a for a in acts if acts.count(a) > 1)
                raise DuplicateActionLabel(f"player {name} lists action {dup!r} twice")
            index.append({a: i for i, a in enumerate(acts)})
        strides = [1] * len(self.actions)
        for k in range(len(self.actions) - 2, -1, -1):
            strides[k] = strides[k + 1] * len(self.actions[k + 1])
        size = strides[0] * len(self.actions[0])
        if len(self.table) != size:
            raise DimensionMismatch(f"expected {size} payoff entries, got {len(self.table)}")
        n = len(self.players)
        for vec in self.table:
            if len(vec) != n or not all(isinstance(v, Fraction) for v in vec):
                raise DimensionMismatch(f"payoff entry {vec!r} is not a {n}-vector of Fractions")
        object.__setattr__(self, "_index", tuple(index))
        object.__setattr__(self, "_strides", tuple(strides))

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.actions)

    def action_index(self, player: int, label: str) -> int:
        try:
            return self._index[player][label]
        except KeyError:
            raise InfeasibleProfile(
                f"{label!r} is not an action of player {self.players[player]}"
            ) from None

    def has_action(self, player: int, label: str) -> bool:
        return label in self._index[player]

    def is_feasible(self, profile: Sequence[str]) -> bool:
        return len(profile) == self.n_players and all(
            a in idx for a, idx in zip(profile, self._index)
        )

    def flat_index(self, profile: Sequence[str]) -> int:
        if len(profile) != self.n_players:
            raise InfeasibleProfile(
                f"profile {tuple(profile)} has {len(profile)} actions, game has {self.n_players} players"
            )
        return sum(self.action_index(k, a) * s for k, (a, s) in enumerate(zip(profile, self._strides)))

    def payoff(self, profile: Sequence[str]) -> PayoffVector:
        """Payoff vector at a pure profile; raises InfeasibleProfile for unknown labels."""
        return self.table[self.flat_index(profile)]

    def profiles(self) -> Iterator[PureProfile]:
        """All pure profiles in canonical order."""
        return itertools.product(*self.actions)

    def payoff_map(self) -> dict[PureProfile, PayoffVector]:
        return dict(zip(self.profiles(), self.table))

    def others(self, profile: Sequence[str], player: int) -> PureProfile:
        return tuple(profile[:player]) + tuple(profile[player + 1:])

    def deviate(self, profile: Sequence[str], player: int, action: str) -> PureProfile:
        return tuple(profile[:player]) + (action,) + tuple(profile[player + 1:])

    def format_profile(self, profile: Sequence[str]) -> str:
        return "(" + ",".join(profile) + ")"


def build_game(
    actions: Sequence[Sequence[str]],
    payoffs: Mapping[Sequence[str], Sequence[RationalLike]],
    players: Sequence[str] | None = None,
) -> Game:
    """Build and validate a game from per-player action lists and a payoff mapping.

    ``payoffs`` must contain exactly one entry per pure profile; each value is
    an n-vector of ints, Fractions or rational strings. Player names default
    to ``"1"``, ``"2"``, ...
    """
    actions = tuple(tuple(a) for a in actions)
    if players is None:
        players = tuple(str(i + 1) for i in range(len(actions)))
    for name, acts in zip(players, actions):
        if not acts:
            raise EmptyActionSet(f"player {name} has no actions")
        if len(set(acts)) != len(acts):
            dup = next(a for a in acts if acts.count(a) > 1)
            raise DuplicateActionLabel(f"player {name} lists action {dup!r} twice")
    given = {tuple(k): v for k, v in payoffs.items()}
    n = len(actions)
    table = []
    for profile in itertools.product(*actions):
        try:
            vec = given.pop(profile)
        except KeyError:
            raise MissingPayoffEntry(profile) from None
        if len(vec) != n:
            raise DimensionMismatch(
                f"payoff at ({','.join(profile)}) has {len(vec)} values, expected {n}"
            )
        table.append(tuple(to_rational(v) for v in vec))
    if given:
        extra = sorted(given)[0]
        raise InfeasibleProfile(f"payoff given for infeasible profile {extra}")
    return Game(tuple(players), actions, tuple(table))


@dataclass(frozen=True)
class MixedStrategy:
    """Exact probability vector over one player's actions, in action order."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(to_rational(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise InvalidMixedStrategy("empty strategy")
        if any(p < 0 for p in probs):
            raise InvalidMixedStrategy(f"negative probability in {probs}")
        if sum(probs) != 1:
            raise InvalidMixedStrategy(f"probabilities sum to {sum(probs)}, not 1")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)

    @classmethod
    def pure(cls, size: int, index: int) -> MixedStrategy:
        return cls(tuple(Fraction(int(i == index)) for i in range(size)))


MixedProfile = tuple[MixedStrategy, ...]


def mixed_profile(strategies: Sequence[Sequence[RationalLike]]) -> MixedProfile:
    return tuple(MixedStrategy(tuple(s)) for s in strategies)


def degenerate_profile(game: Game, profile: Sequence[str]) -> MixedProfile:
    """The mixed profile putting all mass on ``profile``."""
    return tuple(
        MixedStrategy.pure(len(acts), game.action_index(k, a))
        for k, (acts, a) in enumerate(zip(game.actions, profile))
    )


def check_dimensions(game: Game, mixed: MixedProfile) -> None:
    if len(mixed) != game.n_players:
        raise DimensionMismatch(f"{len(mixed)} strategies for {game.n_players} players")
    for k, (s, acts) in enumerate(zip(mixed, game.actions)):
        if len(s.probs) != len(acts):
            raise DimensionMismatch(
                f"player {game.players[k]} has {len(acts)} actions, strategy has {len(s.probs)}"
            )


def action_values(game: Game, mixed: MixedProfile, player: int) -> tuple[Fraction, ...]:
    """Expected payoff to ``player`` of each of its pure actions against the others' mixtures."""
    check_dimensions(game, mixed)
    values = [Fraction(0)] * len(game.actions[player])
    supports = [
        [(i, p) for i, p in enumerate(s.probs) if p > 0] if k != player else None
        for k, s in enumerate(mixed)
    ]
    strides = game._strides
    for own in range(len(game.actions[player])):
        ranges = [[(own, Fraction(1))] if k == player else supports[k] for k in range(game.n_players)]
        total = Fraction(0)
        for combo in itertools.product(*ranges):
            prob = Fraction(1)
            flat = 0
            for k, (i, p) in enumerate(combo):
                prob *= p
                flat += i * strides[k]
            total += prob * game.table[flat][player]
        values[own] = total
    return tuple(values)


def expected_payoff(game: Game, mixed: MixedProfile, player: int) -> Fraction:
    """Exact expected payoff to ``player`` under a mixed profile."""
    values = action_values(game, mixed, player)
    return sum((p * v for p, v in zip(mixed[player].probs, values)), Fraction(0))
