"""Nash equilibrium enumeration, verification and efficiency classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CandidateNotEquilibrium, InfeasiblePartialProfile, NotTwoPlayers
from .game import (
    Game,
    MixedProfile,
    MixedStrategy,
    PureProfile,
    action_values,
    check_dimensions,
)
from .linalg import polytope_vertices


def best_responses(game: Game, player: int, others: Sequence[str]) -> tuple[str, ...]:
    """All maximizers of ``player``'s payoff against the fixed actions of everyone else.

    ``others`` lists the other players' actions in player order, skipping
    ``player``. Ties are all returned, in action order.
    """
    if len(others) != game.n_players - 1:
        raise InfeasiblePartialProfile(
            f"expected {game.n_players - 1} actions for the other players, got {len(others)}"
        )
    for k, a in enumerate(others):
        j = k if k < player else k + 1
        if not game.has_action(j, a):
            raise InfeasiblePartialProfile(f"{a!r} is not an action of player {game.players[j]}")
    values = [
        game.payoff(tuple(others[:player]) + (a,) + tuple(others[player:]))[player]
        for a in game.actions[player]
    ]
    best = max(values)
    return tuple(a for a, v in zip(game.actions[player], values) if v == best)


def is_pure_nash(game: Game, profile: Sequence[str]) -> bool:
    """True iff no player has a strictly profitable unilateral deviation."""
    current = game.payoff(profile)
    for k in range(game.n_players):
        for a in game.actions[k]:
            if game.payoff(game.deviate(profile, k, a))[k] > current[k]:
                return False
    return True


def enumerate_pure_nash(game: Game) -> tuple[PureProfile, ...]:
    return tuple(p for p in game.profiles() if is_pure_nash(game, p))


def is_mixed_nash(game: Game, mixed: MixedProfile) -> bool:
    check_dimensions(game, mixed)
    for k, strategy in enumerate(mixed):
        values = action_values(game, mixed, k)
        best = max(values)
        if any(values[i] != best for i in strategy.support):
            return False
    return True


@dataclass(frozen=True)
class DegenerateComponent:
    """A support pair whose equilibria form a continuum.

    Only the supports (as action labels) and the extreme points of the
    component are reported, never a parameterization.
    """

    supports: tuple[tuple[str, ...], tuple[str, ...]]
    extreme_points: tuple[MixedProfile, ...]


@dataclass(frozen=True)
class EquilibriumSet:
    pure: tuple[PureProfile, ...]
    mixed: tuple[MixedProfile, ...] = ()
    degenerate: tuple[DegenerateComponent, ...] = ()

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate)


def _half_polytope(
    own: Sequence[Sequence[Fraction]], support_mine: Sequence[int], support_theirs: Sequence[int]
):
    """Mixtures of the opponent, on ``support_theirs``, that make every action
    in ``support_mine`` optimal for the player whose payoff matrix is ``own``.

    ``own[i][j]`` is the player's payoff for own action i against opponent
    action j. Variables are the opponent probabilities on its support followed
    by the player's value.
    """
    m = len(own)
    size = len(support_theirs)
    nvars = size + 1
    eq_a = [[own[i][j] for j in support_theirs] + [Fraction(-1)] for i in support_mine]
    eq_b = [Fraction(0)] * len(support_mine)
    eq_a.append([Fraction(1)] * size + [Fraction(0)])
    eq_b.append(Fraction(1))
    ineq_a = []
    for pos in range(size):
        row = [Fraction(0)] * nvars
        row[pos] = Fraction(1)
        ineq_a.append(row)
    for i in range(m):
        if i not in support_mine:
            ineq_a.append([-own[i][j] for j in support_theirs] + [Fraction(1)])
    ineq_b = [Fraction(0)] * len(ineq_a)
    return polytope_vertices(eq_a, eq_b, ineq_a, ineq_b, nvars)


def _embed(size: int, support: Sequence[int], probs: Sequence[Fraction]) -> MixedStrategy:
    full = [Fraction(0)] * size
    for i, p in zip(support, probs):
        full[i] = p
    return MixedStrategy(tuple(full))


def _mixed_key(profile: MixedProfile):
    return tuple(s.probs for s in profile)


def _nonempty_subsets(n: int):
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def enumerate_mixed_nash_2p(game: Game) -> EquilibriumSet:
    """All equilibria of a two-player game by exhaustive support enumeration.

    Every pair of non-empty supports is tried. For each pair the indifference
    and normalization equations of both players are solved exactly, together
    with non-negativity and the no-better-action-outside-the-support
    constraints. A pair with a single solution contributes an isolated
    equilibrium; a pair admitting a continuum is reported as a
    :class:`DegenerateComponent` with its extreme points.
    """
    if game.n_players != 2:
        raise NotTwoPlayers(f"support enumeration needs 2 players, game has {game.n_players}")
    rows, cols = game.shape
    a = [[game.table[i * cols + j][0] for j in range(cols)] for i in range(rows)]
    b_t = [[game.table[i * cols + j][1] for i in range(rows)] for j in range(cols)]
    found: dict = {}
    degenerate = []
    for sup_r in _nonempty_subsets(rows):
        for sup_c in _nonempty_subsets(cols):
            ys = _half_polytope(a, sup_r, sup_c)
            if ys is None:
                continue
            xs = _half_polytope(b_t, sup_c, sup_r)
            if xs is None:
                continue
            points = []
            for x in xs:
                for y in ys:
                    profile = (_embed(rows, sup_r, x[:-1]), _embed(cols, sup_c, y[:-1]))
                    points.append(profile)
                    found[_mixed_key(profile)] = profile
            if len(points) > 1:
                labels = (
                    tuple(game.actions[0][i] for i in sup_r),
                    tuple(game.actions[1][j] for j in sup_c),
                )
                degenerate.append(DegenerateComponent(labels, tuple(points)))
    pure = []
    mixed = []
    for key in sorted(found):
        profile = found[key]
        if all(len(s.support) == 1 for s in profile):
            pure.append(tuple(game.actions[k][s.support[0]] for k, s in enumerate(profile)))
        else:
            mixed.append(profile)
    pure.sort(key=lambda p: tuple(game.action_index(k, x) for k, x in enumerate(p)))
    return EquilibriumSet(tuple(pure), tuple(mixed), tuple(degenerate))


def pareto_dominates(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """Weak Pareto dominance: at least as good for all, strictly better for one."""
    return all(x >= y for x, y in zip(u, v)) and any(x > y for x, y in zip(u, v))


class Efficiency(str, Enum):
    PARETO = "pareto"
    UTILITARIAN = "utilitarian"


@dataclass(frozen=True)
class EfficiencyReport:
    candidates: tuple[PureProfile, ...]
    efficient: tuple[PureProfile, ...]
    criterion: Efficiency = Efficiency.PARETO
    unique_efficient: PureProfile | None = field(default=None)


def efficient_equilibria(
    game: Game,
    candidates: Iterable[Sequence[str]],
    criterion: Efficiency | str = Efficiency.PARETO,
) -> EfficiencyReport:
    """Efficient members of a set of pure equilibria.

    Under ``pareto`` a candidate is efficient when no other candidate weakly
    Pareto-dominates it; under ``utilitarian`` when it maximizes the sum of
    payoffs among the candidates.
    """
    criterion = Efficiency(criterion)
    cands = tuple(dict.fromkeys(tuple(c) for c in candidates))
    for c in cands:
        if not is_pure_nash(game, c):
            raise CandidateNotEquilibrium(f"{game.format_profile(c)} is not a Nash equilibrium")
    pay = {c: game.payoff(c) for c in cands}
    if criterion is Efficiency.PARETO:
        efficient = tuple(c for c in cands if not any(pareto_dominates(pay[d], pay[c]) for d in cands))
    else:
        best = max((sum(pay[c]) for c in cands), default=None)
        efficient = tuple(c for c in cands if sum(pay[c]) == best)
    unique = efficient[0] if len(efficient) == 1 else None
    return EfficiencyReport(cands, efficient, criterion, unique)
