"""The four intervention operators.

Each operator returns a new :class:`~inertia.game.Game`; the input game is
never modified. Interventions target a single player; multi-player reforms
are expressed as sequences of operators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import ClassVar, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    DuplicateAction,
    IncompleteSlice,
    InfeasibleProfile,
    InfeasibleTransferKey,
    UnknownAction,
    WouldEmptyActionSet,
)
from .game import Game, PureProfile
from .rational import RationalLike, to_rational


def _vector(values: Sequence[RationalLike], n: int, where: str) -> tuple[Fraction, ...]:
    if len(values) != n:
        raise DimensionMismatch(f"{where}: expected {n} values, got {len(values)}")
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class TransferSchedule:
    """Profile-keyed transfers; profiles absent from the map receive zero."""

    transfers: Mapping[PureProfile, tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): tuple(to_rational(x) for x in v) for k, v in self.transfers.items()}
        object.__setattr__(self, "transfers", clean)

    def __hash__(self):
        return hash(tuple(sorted(self.transfers.items())))

    def is_zero(self) -> bool:
        return all(x == 0 for v in self.transfers.values() for x in v)


@dataclass(frozen=True)
class PayoffSlice:
    """Payoffs for every profile involving a new action of one player.

    Keys are the other players' actions in player order (the new action's
    owner skipped); values are full payoff vectors.
    """

    entries: Mapping[PureProfile, tuple[Fraction, ...]]

    def __post_init__(self):
        clean = {tuple(k): tuple(to_rational(x) for x in v) for k, v in self.entries.items()}
        object.__setattr__(self, "entries", clean)

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))


@dataclass(frozen=True)
class PriceOnly:
    schedule: TransferSchedule
    label: str | None = None
    kind: ClassVar[str] = "price"
    title: ClassVar[str] = "price-only"

    def apply(self, game: Game) -> Game:
        return apply_price(game, self.schedule)

    def describe(self, game: Game) -> str:
        if self.label:
            return self.label
        nonzero = sum(1 for v in self.schedule.transfers.values() if any(v))
        return f"transfers at {nonzero} profile(s)"


@dataclass(frozen=True)
class Deletion:
    player: int
    action: str
    kind: ClassVar[str] = "delete"
    title: ClassVar[str] = "deletion"

    def apply(self, game: Game) -> Game:
        return apply_deletion(game, self.player, self.action)

    def describe(self, game: Game) -> str:
        return f"delete {self.action} for player {game.players[self.player]}"


@dataclass(frozen=True)
class Addition:
    player: int
    action: str
    slice: PayoffSlice
    kind: ClassVar[str] = "add"
    title: ClassVar[str] = "addition"

    def apply(self, game: Game) -> Game:
        return apply_addition(game, self.player, self.action, self.slice)

    def describe(self, game: Game) -> str:
        return f"add {self.action} for player {game.players[self.player]}"


@dataclass(frozen=True)
class Replacement:
    player: int
    old: str
    new: str
    slice: PayoffSlice
    kind: ClassVar[str] = "replace"
    title: ClassVar[str] = "replacement"

    def apply(self, game: Game) -> Game:
        return apply_replacement(game, self.player, self.old, self.new, self.slice)

    def describe(self, game: Game) -> str:
        return f"replace {self.old} by {self.new} for player {game.players[self.player]}"


Intervention = Union[PriceOnly, Deletion, Addition, Replacement]


def apply_price(game: Game, schedule: TransferSchedule) -> Game:
    """Add transfers to payoffs; action sets are left as they are."""
    table = list(game.table)
    for profile, t in schedule.transfers.items():
        if not game.is_feasible(profile):
            raise InfeasibleTransferKey(f"transfer keyed on infeasible profile {profile}")
        if len(t) != game.n_players:
            raise DimensionMismatch(f"transfer at {profile} has {len(t)} values")
        i = game.flat_index(profile)
        table[i] = tuple(u + x for u, x in zip(table[i], t))
    return Game(game.players, game.actions, tuple(table))


def _check_player(game: Game, player: int) -> None:
    if not 0 <= player < game.n_players:
        raise UnknownAction(f"no player with index {player}")


def apply_deletion(game: Game, player: int, action: str) -> Game:
    """Remove one action of one player; payoffs are restricted to the surviving profiles."""
    _check_player(game, player)
    if not game.has_action(player, action):
        raise UnknownAction(f"{action!r} is not an action of player {game.players[player]}")
    if len(game.actions[player]) == 1:
        raise WouldEmptyActionSet(
            f"deleting {action!r} would leave player {game.players[player]} without actions"
        )
    actions = list(game.actions)
    actions[player] = tuple(a for a in game.actions[player] if a != action)
    table = tuple(game.payoff(p) for p in itertools.product(*actions))
    return Game(game.players, tuple(actions), table)


def _slice_table(game: Game, player: int, new_actions, slice_: PayoffSlice):
    others_actions = [acts for k, acts in enumerate(new_actions) if k != player]
    expected = set(itertools.product(*others_actions))
    extra = set(slice_.entries) - expected
    if extra:
        raise InfeasibleProfile(f"slice keyed on infeasible profile {sorted(extra)[0]}")
    for key in expected:
        if key not in slice_.entries:
            raise IncompleteSlice(f"slice has no entry for the others playing ({','.join(key)})")
        if len(slice_.entries[key]) != game.n_players:
            raise DimensionMismatch(f"slice entry at {key} has {len(slice_.entries[key])} values")


def _rebuild(game: Game, player: int, actions, new: str, slice_: PayoffSlice) -> Game:
    table = []
    for p in itertools.product(*actions):
        if p[player] == new:
            table.append(slice_.entries[game.others(p, player)])
        else:
            table.append(game.payoff(p))
    return Game(game.players, tuple(actions), tuple(table))


def apply_addition(game: Game, player: int, action: str, slice_: PayoffSlice) -> Game:
    """Append a new action for ``player``; its payoffs come from the slice."""
    _check_player(game, player)
    if game.has_action(player, action):
        raise DuplicateAction(f"player {game.players[player]} already has action {action!r}")
    actions = list(game.actions)
    actions[player] = game.actions[player] + (action,)
    _slice_table(game, player, actions, slice_)
    return _rebuild(game, player, actions, action, slice_)


def apply_replacement(game: Game, player: int, old: str, new: str, slice_: PayoffSlice) -> Game:
    """Delete ``old`` and append ``new`` for ``player`` in one step.

    Equal to deletion followed by addition, but also allowed when ``old`` is
    the player's only action, since the action set never becomes empty.
    """
    _check_player(game, player)
    if not game.has_action(player, old):
        raise UnknownAction(f"{old!r} is not an action of player {game.players[player]}")
    if game.has_action(player, new):
        raise DuplicateAction(f"player {game.players[player]} already has action {new!r}")
    actions = list(game.actions)
    actions[player] = tuple(a for a in game.actions[player] if a != old) + (new,)
    _slice_table(game, player, actions, slice_)
    return _rebuild(game, player, actions, new, slice_)


def apply_intervention(game: Game, intervention: Intervention) -> Game:
    return intervention.apply(game)


def subsidy_schedule(
    game: Game, targets: Sequence[str], amount: RationalLike | Sequence[RationalLike]
) -> TransferSchedule:
    """Schedule granting player i ``amount`` (or ``amount[i]``) wherever i plays ``targets[i]``."""
    if isinstance(amount, (list, tuple)):
        amounts = [to_rational(a) for a in amount]
    else:
        amounts = [to_rational(amount)] * game.n_players
    if len(targets) != game.n_players or len(amounts) != game.n_players:
        raise DimensionMismatch("need one target and one amount per player")
    for k, t in enumerate(targets):
        if not game.has_action(k, t):
            raise UnknownAction(f"{t!r} is not an action of player {game.players[k]}")
    transfers = {}
    for p in game.profiles():
        vec = tuple(amounts[k] if p[k] == targets[k] else Fraction(0) for k in range(game.n_players))
        if any(vec):
            transfers[p] = vec
    return TransferSchedule(transfers)
