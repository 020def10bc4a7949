"""Named games and interventions.

``coordination`` is the two-action old/new coordination game with the
old-old profile as status quo. ``climate``, ``platform`` and ``finance`` are
the same game under domain-flavoured names. ``fragmented`` is a 3x3 game in
which deleting the incumbent action leaves two payoff-incomparable
equilibria, while replacing it with a common standard leaves a unique
efficient one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import Game, PureProfile, build_game
from .interventions import Addition, Deletion, Intervention, PayoffSlice, Replacement
from .synthesis import subsidy_intervention

COORDINATION_PAYOFFS = {
    ("O", "O"): (3, 3),
    ("O", "N"): (0, 1),
    ("N", "O"): (1, 0),
    ("N", "N"): (5, 5),
}


def coordination_game() -> Game:
    return build_game([["O", "N"], ["O", "N"]], COORDINATION_PAYOFFS)


def fragmented_game() -> Game:
    return build_game(
        [["O", "A", "B"], ["O", "A", "B"]],
        {
            ("O", "O"): (3, 3), ("O", "A"): (0, 0), ("O", "B"): (0, 0),
            ("A", "O"): (1, 0), ("A", "A"): (4, 2), ("A", "B"): (0, 0),
            ("B", "O"): (1, 0), ("B", "A"): (0, 0), ("B", "B"): (2, 4),
        },
    )


@dataclass(frozen=True)
class Preset:
    name: str
    game: Game
    status_quo: PureProfile
    interventions: dict[str, Intervention]
    description: str


def small_subsidy(game: Game) -> Intervention:
    """Subsidy of 1 to each player for playing N: below the break-even of 2."""
    return subsidy_intervention(game, ("N", "N"), 1, "subsidy 1 on N for every player")


def large_subsidy(game: Game) -> Intervention:
    return subsidy_intervention(game, ("N", "N"), 3, "subsidy 3 on N for every player")


# pays off only when player 2 coordinates on N, so (O,O) survives
ATTRACTIVE_ADDITION = Addition(0, "N'", PayoffSlice({("O",): (0, 0), ("N",): (6, 6)}))
# beats O against O, so (O,O) is destroyed
ADVERSARIAL_ADDITION = Addition(0, "N'", PayoffSlice({("O",): (4, 0), ("N",): (0, 0)}))
COORDINATING_REPLACEMENT = Replacement(0, "O", "N'", PayoffSlice({("O",): (4, 4), ("N",): (0, 1)}))
DELETE_OLD = Deletion(0, "O")

STANDARD_REPLACEMENT = Replacement(
    0, "O", "S", PayoffSlice({("O",): (5, 5), ("A",): (0, 0), ("B",): (0, 0)})
)


def _coordination(name: str, description: str) -> Preset:
    g = coordination_game()
    return Preset(
        name,
        g,
        ("O", "O"),
        {
            "small-subsidy": small_subsidy(g),
            "large-subsidy": large_subsidy(g),
            "addition": ATTRACTIVE_ADDITION,
            "adversarial-addition": ADVERSARIAL_ADDITION,
            "deletion": DELETE_OLD,
            "replacement": COORDINATING_REPLACEMENT,
        },
        description,
    )


def get_preset(name: str) -> Preset:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}") from None
    return factory()


PRESETS = {
    "coordination": lambda: _coordination("coordination", "old/new coordination game, status quo (O,O)"),
    "climate": lambda: _coordination("climate", "fossil (O) versus clean (N) production systems"),
    "platform": lambda: _coordination("platform", "incumbent (O) versus open (N) platform architecture"),
    "finance": lambda: _coordination("finance", "legacy (O) versus regulated (N) contract forms"),
    "fragmented": lambda: Preset(
        "fragmented",
        fragmented_game(),
        ("O", "O"),
        {"deletion": DELETE_OLD, "replacement": STANDARD_REPLACEMENT},
        "deleting O leaves two rival standards; replacing O with S coordinates on S",
    ),
}
