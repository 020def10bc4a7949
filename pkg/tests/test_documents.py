import json

import pytest
from hypothesis import given, settings

from conftest import games
from inertia.documents import (
    parse_game,
    parse_game_document,
    parse_intervention,
    serialize_game,
    serialize_intervention,
)
from inertia.errors import DocumentSyntaxError, SchemaError
from inertia.interventions import Addition, Deletion, PriceOnly, Replacement
from inertia.presets import get_preset
from inertia.random_games import RandomGameConfig, random_game

COORDINATION_DOC = {
    "players": ["1", "2"],
    "actions": [["O", "N"], ["O", "N"]],
    "payoffs": [
        {"profile": ["O", "O"], "u": ["3", "3"]},
        {"profile": ["O", "N"], "u": ["0", "1"]},
        {"profile": ["N", "O"], "u": ["1", "0"]},
        {"profile": ["N", "N"], "u": ["5", "5"]},
    ],
    "status_quo": ["O", "O"],
}


def doc(**changes):
    d = json.loads(json.dumps(COORDINATION_DOC))
    d.update(changes)
    return json.dumps(d)


class TestGameDocuments:
    def test_coordination_document(self, coord):
        game, sq = parse_game_document(doc())
        assert game == coord
        assert sq == ("O", "O")

    def test_integers_accepted(self, coord):
        d = json.loads(doc())
        d["payoffs"][0]["u"] = [3, 3]
        assert parse_game(json.dumps(d)) == coord

    @pytest.mark.parametrize("bad", ["3/0", "2/4", "1/-2", "0.5", "x"])
    def test_bad_rationals(self, bad):
        d = json.loads(doc())
        d["payoffs"][0]["u"][0] = bad
        with pytest.raises(SchemaError) as exc:
            parse_game(json.dumps(d))
        assert exc.value.field == "payoffs.0.u.0"

    def test_float_rejected(self):
        d = json.loads(doc())
        d["payoffs"][0]["u"][0] = 0.5
        with pytest.raises(SchemaError):
            parse_game(json.dumps(d))

    def test_unknown_field(self):
        with pytest.raises(SchemaError) as exc:
            parse_game(doc(colour="red"))
        assert exc.value.field == "colour"

    def test_missing_payoff(self):
        d = json.loads(doc())
        del d["payoffs"][3]
        with pytest.raises(SchemaError, match=r"\(N,N\)"):
            parse_game(json.dumps(d))

    def test_duplicate_entry(self):
        d = json.loads(doc())
        d["payoffs"].append(d["payoffs"][0])
        with pytest.raises(SchemaError):
            parse_game(json.dumps(d))

    def test_infeasible_status_quo(self):
        with pytest.raises(SchemaError) as exc:
            parse_game(doc(status_quo=["X", "O"]))
        assert exc.value.field == "status_quo"

    def test_syntax_error_position(self):
        text = '{\n  "players": ["1",\n}'
        with pytest.raises(DocumentSyntaxError) as exc:
            parse_game(text)
        assert (exc.value.line, exc.value.column) == (3, 1)

    def test_duplicate_key(self):
        with pytest.raises(SchemaError):
            parse_game('{"players": ["1"], "players": ["2"], "actions": [["a"]], "payoffs": []}')

    def test_serialized_form(self, coord):
        text = serialize_game(coord, ("O", "O"))
        assert json.loads(text) == COORDINATION_DOC

    @settings(max_examples=300)
    @given(games(max_players=3, max_actions=3, low=-50, high=50))
    def test_round_trip(self, game):
        text = serialize_game(game)
        assert parse_game(text) == game
        assert serialize_game(parse_game(text)) == text

    def test_round_trip_rationals(self):
        game = parse_game(doc(payoffs=[
            {"profile": ["O", "O"], "u": ["-7/3", "1/2"]},
            {"profile": ["O", "N"], "u": ["0", "1"]},
            {"profile": ["N", "O"], "u": ["1", "0"]},
            {"profile": ["N", "N"], "u": ["5", "5"]},
        ]))
        assert parse_game(serialize_game(game)) == game

    def test_thousand_random_documents(self):
        for seed in range(1000):
            cfg = RandomGameConfig(seed, players=1 + seed % 3, actions=1 + (seed // 3) % 3, low=-20, high=20)
            game = random_game(cfg)
            assert parse_game(serialize_game(game)) == game


class TestInterventionDocuments:
    def test_kinds(self, coord):
        price = parse_intervention('{"kind": "price", "transfers": [{"profile": ["N", "O"], "t": ["1", "0"]}]}', coord)
        assert isinstance(price, PriceOnly)
        assert price.apply(coord).payoff(("N", "O")) == (2, 0)
        delete = parse_intervention('{"kind": "delete", "player": "2", "action": "O"}', coord)
        assert delete == Deletion(1, "O")
        add = parse_intervention(
            '{"kind": "add", "player": "1", "action": "Z",'
            ' "slice": [{"others": ["O"], "u": ["4", "0"]}, {"others": ["N"], "u": ["0", "0"]}]}',
            coord,
        )
        assert isinstance(add, Addition) and add.apply(coord).payoff(("Z", "O")) == (4, 0)
        rep = parse_intervention(
            '{"kind": "replace", "player": "1", "old": "O", "new": "Z",'
            ' "slice": [{"others": ["O"], "u": ["4", "4"]}, {"others": ["N"], "u": ["0", "1"]}]}',
            coord,
        )
        assert isinstance(rep, Replacement) and rep.apply(coord).actions[0] == ("N", "Z")

    def test_unknown_kind(self, coord):
        with pytest.raises(SchemaError):
            parse_intervention('{"kind": "tax"}', coord)

    def test_unknown_player(self, coord):
        with pytest.raises(SchemaError) as exc:
            parse_intervention('{"kind": "delete", "player": "3", "action": "O"}', coord)
        assert exc.value.field == "player"

    def test_extra_field(self, coord):
        with pytest.raises(SchemaError):
            parse_intervention('{"kind": "delete", "player": "1", "action": "O", "why": "x"}', coord)

    @pytest.mark.parametrize("name", ["coordination", "fragmented"])
    def test_preset_round_trip(self, name):
        p = get_preset(name)
        for iv in p.interventions.values():
            again = parse_intervention(serialize_intervention(iv, p.game), p.game)
            assert again.apply(p.game) == iv.apply(p.game)
