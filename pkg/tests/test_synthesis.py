from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import games_with_equilibrium
from oracles import brute_pure_nash, raw
from inertia.equilibria import is_pure_nash
from inertia.errors import StatusQuoNotEquilibrium, TargetEqualsStatusQuoAction, UnknownAction
from inertia.game import build_game
from inertia.interventions import Deletion, PriceOnly, TransferSchedule, apply_deletion, apply_price, subsidy_schedule
from inertia.presets import (
    ADVERSARIAL_ADDITION,
    ATTRACTIVE_ADDITION,
    COORDINATING_REPLACEMENT,
    get_preset,
)
from inertia.selection import INERTIA, Ambiguous, Selected
from inertia.synthesis import (
    COMPARE_COLUMNS,
    SubsidyQuery,
    compare,
    minimal_deletion_sets,
    predict,
    subsidy_intervention,
    subsidy_margins,
    subsidy_threshold,
)

F = Fraction
QUERY = SubsidyQuery(("O", "O"), ("N", "N"))


def two_by_two(oo, on, no, nn):
    return build_game([["O", "N"], ["O", "N"]], {("O", "O"): oo, ("O", "N"): on, ("N", "O"): no, ("N", "N"): nn})


class TestSubsidyThreshold:
    def test_coordination(self, coord):
        assert subsidy_threshold(coord, QUERY) == 2

    def test_zero_margin(self):
        g = two_by_two((2, 2), (0, 2), (2, 0), (1, 1))
        assert subsidy_threshold(g, QUERY) == 0

    def test_asymmetric_margins(self):
        g = two_by_two((3, 9), (0, 2), (1, 0), (0, 0))
        assert subsidy_margins(g, QUERY) == (2, 7)
        assert subsidy_threshold(g, QUERY) == 2

    def test_status_quo_must_be_equilibrium(self, coord):
        with pytest.raises(StatusQuoNotEquilibrium):
            subsidy_threshold(coord, SubsidyQuery(("O", "N"), ("N", "O")))

    def test_target_must_differ(self, coord):
        with pytest.raises(TargetEqualsStatusQuoAction):
            subsidy_threshold(coord, SubsidyQuery(("O", "O"), ("N", "O")))

    def test_unknown_target(self, coord):
        with pytest.raises(UnknownAction):
            subsidy_threshold(coord, SubsidyQuery(("O", "O"), ("X", "N")))

    @pytest.mark.parametrize("s", [F(k, 2) for k in range(0, 9)])
    def test_scan(self, coord, s):
        g = apply_price(coord, subsidy_schedule(coord, ("N", "N"), s))
        assert is_pure_nash(g, ("O", "O")) == (s <= 2)

    @settings(max_examples=150)
    @given(games_with_equilibrium(min_actions=2), st.data())
    def test_break_even_is_exact(self, gq, data):
        game, q = gq
        targets = tuple(
            data.draw(st.sampled_from([a for a in game.actions[k] if a != q[k]])) for k in range(game.n_players)
        )
        s = subsidy_threshold(game, SubsidyQuery(q, targets))
        for eps in (F(0), F(-1, 3)):
            g = apply_price(game, subsidy_schedule(game, targets, s + eps))
            assert q in brute_pure_nash(*raw(g))
        g = apply_price(game, subsidy_schedule(game, targets, s + F(1, 1000)))
        assert q not in brute_pure_nash(*raw(g))


class TestMinimalDeletions:
    def test_coordination(self, coord):
        assert minimal_deletion_sets(coord, ("O", "O")).sets == (((0, "O"),), ((1, "O"),))

    def test_coordination_unique_efficient(self, coord):
        search = minimal_deletion_sets(coord, ("O", "O"), require_unique_efficient=True)
        assert search.sets == (((0, "O"),), ((1, "O"),))
        for d in search.sets:
            residual = apply_deletion(coord, *d[0])
            assert brute_pure_nash(*raw(residual)) == [("N", "N")]

    def test_only_actions(self):
        g = build_game([["x"], ["y"]], {("x", "y"): (1, 1)})
        search = minimal_deletion_sets(g, ("x", "y"))
        assert search.sets == ()
        assert search.notes

    def test_filter_drops_ambiguous_residuals(self):
        preset = get_preset("fragmented")
        search = minimal_deletion_sets(preset.game, preset.status_quo, require_unique_efficient=True)
        assert ((0, "O"),) not in search.sets
        assert ((0, "O"),) in minimal_deletion_sets(preset.game, preset.status_quo).sets

    def test_requires_equilibrium(self, coord):
        with pytest.raises(StatusQuoNotEquilibrium):
            minimal_deletion_sets(coord, ("O", "N"))

    @settings(max_examples=100)
    @given(games_with_equilibrium(max_actions=3))
    def test_minimality(self, gq):
        game, q = gq
        for d in minimal_deletion_sets(game, q).sets:
            for drop in range(len(d)):
                g = game
                for k, a in d[:drop] + d[drop + 1:]:
                    g = apply_deletion(g, k, a)
                assert g.is_feasible(q) and is_pure_nash(g, q)


class TestPredict:
    def test_small_subsidy(self, coord):
        rep = predict(coord, ("O", "O"), subsidy_intervention(coord, ("N", "N"), 1))
        assert rep.survives
        assert rep.selection == Selected(("O", "O"), INERTIA)
        assert "price-only-limit" in rep.results

    def test_attractive_addition(self, coord):
        rep = predict(coord, ("O", "O"), ATTRACTIVE_ADDITION)
        assert rep.survives
        assert rep.selection == Selected(("O", "O"), INERTIA)
        assert "addition-limit" in rep.results
        # the addition does create a better equilibrium that inertia ignores
        assert ("N'", "N") in brute_pure_nash(*raw(rep.game))

    def test_adversarial_addition(self, coord):
        rep = predict(coord, ("O", "O"), ADVERSARIAL_ADDITION)
        assert not rep.survives

    def test_replacement(self, coord):
        rep = predict(coord, ("O", "O"), COORDINATING_REPLACEMENT)
        assert not rep.survives
        assert rep.selection == Selected(("N", "N"), "unique-efficient")
        assert rep.results == ("replacement-transition",)
        assert rep.efficiency.unique_efficient == ("N", "N")

    def test_deletion(self, coord):
        rep = predict(coord, ("O", "O"), Deletion(0, "O"))
        assert rep.selection == Selected(("N", "N"), "unique-efficient")
        assert rep.results == ("deletion-transition",)

    @settings(max_examples=150)
    @given(games_with_equilibrium(), st.data())
    def test_report_consistency(self, gq, data):
        game, q = gq
        transfers = {
            p: tuple(data.draw(st.integers(-3, 3)) for _ in range(game.n_players))
            for p in data.draw(st.lists(st.sampled_from(list(game.profiles())), max_size=4))
        }
        rep = predict(game, q, PriceOnly(TransferSchedule(transfers)))
        assert rep.survives == (q in brute_pure_nash(*raw(rep.game)))
        if rep.survives:
            assert rep.selection == Selected(q, INERTIA)


class TestCompare:
    def test_three_scenarios(self, coord):
        ivs = [subsidy_intervention(coord, ("N", "N"), 1), ATTRACTIVE_ADDITION, COORDINATING_REPLACEMENT]
        table = compare(coord, ("O", "O"), ivs)
        assert [r.survives for r in table.rows[1:]] == [True, True, False]
        assert table.rows[0].cls == "baseline"
        assert [r.payoffs for r in table.rows] == ["(3,3)", "(3,3)", "(3,3)", "(5,5)"]

    def test_empty(self, coord):
        table = compare(coord, ("O", "O"), [])
        assert len(table.rows) == 1

    def test_identity_price_matches_baseline(self, coord):
        base, row = compare(coord, ("O", "O"), [PriceOnly(TransferSchedule())]).rows
        assert (row.survives, row.outcome, row.payoffs) == (base.survives, base.outcome, base.payoffs)

    def test_headers(self, coord):
        text = compare(coord, ("O", "O"), []).render("csv")
        assert text.splitlines()[0] == ",".join(COMPARE_COLUMNS)
        assert COMPARE_COLUMNS == ("class", "change", "q⁻ survives", "selected outcome", "payoffs at outcome")

    def test_ambiguous_row_reports_range(self):
        preset = get_preset("fragmented")
        table = compare(preset.game, preset.status_quo, [preset.interventions["deletion"]])
        assert table.rows[1].payoffs == "(2..4,2..4)"


def test_replacement_beats_deletion_preset():
    preset = get_preset("fragmented")
    deleted = predict(preset.game, preset.status_quo, preset.interventions["deletion"])
    replaced = predict(preset.game, preset.status_quo, preset.interventions["replacement"])
    assert not deleted.survives and not replaced.survives
    assert isinstance(deleted.selection, Ambiguous)
    assert set(deleted.selection.candidates) == {("A", "A"), ("B", "B")}
    assert replaced.selection == Selected(("S", "O"), "unique-efficient")
