import itertools
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from inertia.game import Game, build_game  # noqa: E402
from inertia.presets import coordination_game  # noqa: E402


@pytest.fixture
def coord():
    return coordination_game()


@pytest.fixture
def incomparable():
    """Two pure equilibria paying (2,1) and (1,2)."""
    return build_game(
        [["a", "b"], ["a", "b"]],
        {("a", "a"): (2, 1), ("a", "b"): (0, 0), ("b", "a"): (0, 0), ("b", "b"): (1, 2)},
    )


@st.composite
def games(draw, max_players=3, max_actions=3, min_players=1, min_actions=1, low=-4, high=4):
    n = draw(st.integers(min_players, max_players))
    sizes = draw(st.lists(st.integers(min_actions, max_actions), min_size=n, max_size=n))
    total = 1
    for s in sizes:
        total *= s
    values = draw(st.lists(st.integers(low, high), min_size=total * n, max_size=total * n))
    actions = tuple(tuple(f"a{i}" for i in range(s)) for s in sizes)
    table = tuple(tuple(Fraction(v) for v in values[i * n:(i + 1) * n]) for i in range(total))
    return Game(tuple(str(k + 1) for k in range(n)), actions, table)


@st.composite
def games_with_equilibrium(draw, **kw):
    from inertia.equilibria import enumerate_pure_nash

    game = draw(games(**kw).filter(lambda g: bool(enumerate_pure_nash(g))))
    q = draw(st.sampled_from(enumerate_pure_nash(game)))
    return game, q


def all_profiles(game):
    return list(itertools.product(*game.actions))


_acceptance: dict = {}


def record_acceptance(number: int, title: str, passed: bool) -> None:
    _acceptance[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, passed = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")
