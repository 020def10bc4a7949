"""Nash equilibria, interventions and equilibrium selection under status-quo inertia."""

from .equilibria import (
    DegenerateComponent,
    EfficiencyReport,
    EquilibriumSet,
    best_responses,
    efficient_equilibria,
    enumerate_mixed_nash_2p,
    enumerate_pure_nash,
    is_mixed_nash,
    is_pure_nash,
)
from .game import Game, MixedStrategy, build_game, degenerate_profile, expected_payoff, mixed_profile
from .interventions import (
    Addition,
    Deletion,
    PayoffSlice,
    PriceOnly,
    Replacement,
    TransferSchedule,
    apply_addition,
    apply_deletion,
    apply_price,
    apply_replacement,
)
from .selection import (
    Ambiguous,
    FallbackPolicy,
    NoEquilibrium,
    Refinement,
    Selected,
    risk_dominant_2x2,
    select,
)
from .synthesis import SubsidyQuery, compare, minimal_deletion_sets, predict, subsidy_threshold

__version__ = "0.1.0"
