"""JSON documents for games and interventions.

Rationals travel as strings (``"p/q"`` in lowest terms with q > 0, or a
bare integer) so no value ever passes through floating point; plain JSON
integers are accepted on input. Unknown fields are rejected.

Game document::

    {
      "players": ["1", "2"],
      "actions": [["O", "N"], ["O", "N"]],
      "payoffs": [{"profile": ["O", "O"], "u": ["3", "3"]}, ...],
      "status_quo": ["O", "O"]
    }

Intervention documents carry ``kind`` plus a payload::

    {"kind": "price", "transfers": [{"profile": ["N", "O"], "t": ["1", "0"]}]}
    {"kind": "delete", "player": "1", "action": "O"}
    {"kind": "add", "player": "1", "action": "N'", "slice": [{"others": ["O"], "u": ["0", "0"]}, ...]}
    {"kind": "replace", "player": "1", "old": "O", "new": "N'", "slice": [...]}

Players are referred to by name.
"""

from __future__ import annotations

import json
from typing import Annotated, Literal, Optional, Union

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, StrictInt, StrictStr, TypeAdapter, ValidationError

from .errors import DocumentSyntaxError, GameError, SchemaError
from .game import Game, PureProfile, build_game
from .interventions import (
    Addition,
    Deletion,
    Intervention,
    PayoffSlice,
    PriceOnly,
    Replacement,
    TransferSchedule,
)
from .rational import parse_rational, to_rational


def _check_rational(value):
    if isinstance(value, str):
        parse_rational(value)
    return value


Rational = Annotated[Union[StrictStr, StrictInt], AfterValidator(_check_rational)]


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class PayoffEntry(_Doc):
    profile: list[StrictStr]
    u: list[Rational]


class GameDocument(_Doc):
    players: list[StrictStr] = Field(min_length=1)
    actions: list[list[StrictStr]]
    payoffs: list[PayoffEntry]
    status_quo: Optional[list[StrictStr]] = None


class TransferEntry(_Doc):
    profile: list[StrictStr]
    t: list[Rational]


class SliceEntry(_Doc):
    others: list[StrictStr]
    u: list[Rational]


class PriceDocument(_Doc):
    kind: Literal["price"]
    transfers: list[TransferEntry] = Field(default_factory=list)
    label: Optional[StrictStr] = None


class DeleteDocument(_Doc):
    kind: Literal["delete"]
    player: StrictStr
    action: StrictStr


class AddDocument(_Doc):
    kind: Literal["add"]
    player: StrictStr
    action: StrictStr
    slice: list[SliceEntry]


class ReplaceDocument(_Doc):
    kind: Literal["replace"]
    player: StrictStr
    old: StrictStr
    new: StrictStr
    slice: list[SliceEntry]


InterventionDocument = Annotated[
    Union[PriceDocument, DeleteDocument, AddDocument, ReplaceDocument], Field(discriminator="kind")
]
_intervention_adapter: TypeAdapter = TypeAdapter(InterventionDocument)


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise SchemaError(k, "field given twice")
        out[k] = v
    return out


def _load_json(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None


def _schema_error(exc: ValidationError) -> SchemaError:
    err = exc.errors()[0]
    field = ".".join(str(p) for p in err["loc"]) or "<document>"
    return SchemaError(field, err["msg"])


def parse_game_document(text: str) -> tuple[Game, PureProfile | None]:
    """Parse a game document; returns the game and its optional status quo."""
    data = _load_json(text)
    try:
        doc = GameDocument.model_validate(data)
    except ValidationError as exc:
        raise _schema_error(exc) from None
    return document_to_game(doc), (tuple(doc.status_quo) if doc.status_quo is not None else None)


def document_to_game(doc: GameDocument) -> Game:
    if len(doc.actions) != len(doc.players):
        raise SchemaError("actions", f"{len(doc.actions)} action lists for {len(doc.players)} players")
    payoffs = {}
    for i, entry in enumerate(doc.payoffs):
        key = tuple(entry.profile)
        if key in payoffs:
            raise SchemaError(f"payoffs.{i}.profile", f"duplicate entry for ({','.join(key)})")
        payoffs[key] = [to_rational(v) for v in entry.u]
    try:
        game = build_game(doc.actions, payoffs, doc.players)
    except GameError as exc:
        raise SchemaError("payoffs" if "payoff" in str(exc) else "actions", str(exc)) from exc
    if doc.status_quo is not None and not game.is_feasible(doc.status_quo):
        raise SchemaError("status_quo", f"profile {doc.status_quo} is not feasible")
    return game


def parse_game(text: str) -> Game:
    return parse_game_document(text)[0]


def game_to_document(game: Game, status_quo: PureProfile | None = None) -> GameDocument:
    return GameDocument(
        players=list(game.players),
        actions=[list(a) for a in game.actions],
        payoffs=[
            PayoffEntry(profile=list(p), u=[str(x) for x in vec]) for p, vec in zip(game.profiles(), game.table)
        ],
        status_quo=list(status_quo) if status_quo is not None else None,
    )


def serialize_game(game: Game, status_quo: PureProfile | None = None) -> str:
    doc = game_to_document(game, status_quo)
    return json.dumps(doc.model_dump(exclude_none=True), indent=2, ensure_ascii=False) + "\n"


def _player_index(game: Game, name: str) -> int:
    try:
        return game.players.index(name)
    except ValueError:
        raise SchemaError("player", f"no player named {name!r} (players: {', '.join(game.players)})") from None


def _slice(entries: list[SliceEntry]) -> PayoffSlice:
    out = {}
    for i, e in enumerate(entries):
        key = tuple(e.others)
        if key in out:
            raise SchemaError(f"slice.{i}.others", f"duplicate entry for ({','.join(key)})")
        out[key] = tuple(to_rational(v) for v in e.u)
    return PayoffSlice(out)


def parse_intervention(text: str, game: Game) -> Intervention:
    """Parse an intervention document against the game it will be applied to."""
    data = _load_json(text)
    try:
        doc = _intervention_adapter.validate_python(data)
    except ValidationError as exc:
        raise _schema_error(exc) from None
    return document_to_intervention(doc, game)


def document_to_intervention(doc, game: Game) -> Intervention:
    if isinstance(doc, PriceDocument):
        transfers = {}
        for i, e in enumerate(doc.transfers):
            key = tuple(e.profile)
            if key in transfers:
                raise SchemaError(f"transfers.{i}.profile", f"duplicate entry for ({','.join(key)})")
            transfers[key] = tuple(to_rational(v) for v in e.t)
        return PriceOnly(TransferSchedule(transfers), doc.label)
    k = _player_index(game, doc.player)
    if isinstance(doc, DeleteDocument):
        return Deletion(k, doc.action)
    if isinstance(doc, AddDocument):
        return Addition(k, doc.action, _slice(doc.slice))
    return Replacement(k, doc.old, doc.new, _slice(doc.slice))


def _slice_entries(s: PayoffSlice) -> list[dict]:
    return [{"others": list(k), "u": [str(x) for x in v]} for k, v in s.entries.items()]


def serialize_intervention(intervention: Intervention, game: Game) -> str:
    if isinstance(intervention, PriceOnly):
        data: dict = {
            "kind": "price",
            "transfers": [
                {"profile": list(p), "t": [str(x) for x in t]} for p, t in intervention.schedule.transfers.items()
            ],
        }
        if intervention.label:
            data["label"] = intervention.label
    else:
        data = {"kind": intervention.kind, "player": game.players[intervention.player]}
        if isinstance(intervention, Deletion):
            data["action"] = intervention.action
        elif isinstance(intervention, Addition):
            data["action"] = intervention.action
            data["slice"] = _slice_entries(intervention.slice)
        else:
            data["old"] = intervention.old
            data["new"] = intervention.new
            data["slice"] = _slice_entries(intervention.slice)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
