"""JSON schemas for transactions, models, chunk files, and reports.

Model file::

    {"schema_version": 1, "name": "demo",
     "transactions": [{"name": "tx1", "inputs": [{"pos": "a", "key": "x1"}],
                       "outputs": [{"pos": "d", "datum": 1,
                                    "validator": {"node": "accept_all"}}]}],
     "probe_candidates": ["tx1", ...]}        # names or inline transactions

Chunk file: either a bare JSON array of inline transactions, or::

    {"schema_version": 1,
     "model": {...} | "model_file": "relative/path.json",
     "transactions": ["tx1", {...inline...}, ...]}

Keys and datums are JSON scalars.  Every dump is deterministic: sorted keys,
fixed separators, atom sets sorted.
"""

from __future__ import annotations

import json
import os
from typing import TYPE_CHECKING, Any, Optional

from .ieutxo import IeutxoModel, Input, Output, Transaction

if TYPE_CHECKING:
    from .atoms import Permutation
from .scripts import (
    AcceptAll,
    And,
    DatumEquals,
    InputPositionIn,
    KeyEquals,
    Not,
    Or,
    RejectAll,
    Script,
    SpendsAtMostNInputs,
    script_to_obj,
)

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """The file does not match the documented schema."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_pretty(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# Permutations


def perm_to_obj(perm: "Permutation") -> dict:
    return {a: b for a, b in perm.graph()}


def perm_from_obj(obj: Any) -> "Permutation":
    from .atoms import Permutation

    if not isinstance(obj, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in obj.items()
    ):
        raise ParseError("permutation must be an object of atom-to-atom entries")
    try:
        return Permutation(obj)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Scripts


def script_from_obj(obj: Any) -> Script:
    if not isinstance(obj, dict) or "node" not in obj:
        raise ParseError(f"validator must be an object with a 'node': {obj!r}")
    node = obj["node"]
    try:
        if node == "accept_all":
            return AcceptAll()
        if node == "reject_all":
            return RejectAll()
        if node == "key_equals":
            return KeyEquals(_scalar(obj["key"], "key"))
        if node == "datum_equals":
            return DatumEquals(_scalar(obj["datum"], "datum"))
        if node == "input_position_in":
            positions = obj["positions"]
            if not isinstance(positions, list) or not all(
                isinstance(p, str) and p for p in positions
            ):
                raise ParseError("positions must be a list of nonempty strings")
            return InputPositionIn(frozenset(positions))
        if node == "spends_at_most_n_inputs":
            limit = obj["limit"]
            if not isinstance(limit, int) or limit < 0:
                raise ParseError("limit must be a nonnegative integer")
            return SpendsAtMostNInputs(limit)
        if node == "not":
            return Not(script_from_obj(obj["body"]))
        if node == "and":
            return And(script_from_obj(obj["left"]), script_from_obj(obj["right"]))
        if node == "or":
            return Or(script_from_obj(obj["left"]), script_from_obj(obj["right"]))
        if node == "acs_compose":
            raise ParseError(
                "acs_compose validators reference a live instance and cannot "
                "be loaded from JSON"
            )
    except KeyError as exc:
        raise ParseError(f"validator node {node!r} misses field {exc}") from None
    raise ParseError(f"unknown validator node {node!r}")


def _scalar(value: Any, what: str) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    raise ParseError(f"{what} must be a JSON scalar, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# Transactions


def tx_to_obj(tx: Transaction, name: Optional[str] = None) -> dict:
    obj: dict = {
        "inputs": [{"pos": i.position, "key": _scalar_out(i.key)} for i in tx.inputs],
        "outputs": [
            {
                "pos": o.position,
                "datum": _scalar_out(o.datum),
                "validator": script_to_obj(o.validator),
            }
            for o in tx.outputs
        ],
    }
    if name is not None:
        obj["name"] = name
    return obj


def _scalar_out(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    from .atoms import value_label

    return {"label": value_label(value)}


def tx_from_obj(obj: Any) -> Transaction:
    if not isinstance(obj, dict):
        raise ParseError(f"transaction must be an object, got {type(obj).__name__}")
    inputs = []
    for item in obj.get("inputs", ()):
        if not isinstance(item, dict) or not isinstance(item.get("pos"), str) or not item["pos"]:
            raise ParseError(f"bad input: {item!r}")
        inputs.append(Input(item["pos"], _scalar(item.get("key"), "key")))
    outputs = []
    for item in obj.get("outputs", ()):
        if not isinstance(item, dict) or not isinstance(item.get("pos"), str) or not item["pos"]:
            raise ParseError(f"bad output: {item!r}")
        outputs.append(
            Output(
                item["pos"],
                _scalar(item.get("datum"), "datum"),
                script_from_obj(item.get("validator", {"node": "accept_all"})),
            )
        )
    return Transaction(inputs, outputs)


# ---------------------------------------------------------------------------
# Models


def model_to_obj(model: IeutxoModel, names: Optional[dict] = None) -> dict:
    names = names or {}
    obj = {
        "schema_version": SCHEMA_VERSION,
        "name": model.name,
        "transactions": [
            tx_to_obj(tx, names.get(tx)) for tx in model.transactions
        ],
    }
    if model.probe_candidates is not None:
        obj["probe_candidates"] = [tx_to_obj(tx) for tx in model.probe_candidates]
    return obj


def model_from_obj(obj: Any) -> tuple[IeutxoModel, dict]:
    """Returns the model plus the name->transaction table for reference files."""
    if not isinstance(obj, dict):
        raise ParseError("model file must be a JSON object")
    name = obj.get("name", "model")
    if not isinstance(name, str):
        raise ParseError("model name must be a string")
    named: dict = {}
    txs = []
    for item in obj.get("transactions", ()):
        tx = tx_from_obj(item)
        txs.append(tx)
        if isinstance(item, dict) and isinstance(item.get("name"), str):
            named[item["name"]] = tx
    candidates = None
    if "probe_candidates" in obj:
        candidates = tuple(
            _resolve_tx(item, named) for item in obj["probe_candidates"]
        )
    try:
        model = IeutxoModel(
            name=name, transactions=tuple(txs), probe_candidates=candidates
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return model, named


def _resolve_tx(item: Any, named: dict) -> Transaction:
    if isinstance(item, str):
        if item not in named:
            raise ParseError(f"unknown transaction reference {item!r}")
        return named[item]
    return tx_from_obj(item)


def load_model(path: str) -> tuple[IeutxoModel, dict]:
    return model_from_obj(_read_json(path))


# ---------------------------------------------------------------------------
# Chunk files


def load_txlist(path: str) -> tuple[tuple[Transaction, ...], Optional[IeutxoModel]]:
    """A transaction list plus the model it references, if any."""
    obj = _read_json(path)
    if isinstance(obj, list):
        return tuple(tx_from_obj(item) for item in obj), None
    if not isinstance(obj, dict):
        raise ParseError("chunk file must be an array or an object")
    named: dict = {}
    model: Optional[IeutxoModel] = None
    if "model" in obj:
        model, named = model_from_obj(obj["model"])
    elif "model_file" in obj:
        ref = obj["model_file"]
        if not isinstance(ref, str):
            raise ParseError("model_file must be a path string")
        base = os.path.dirname(os.path.abspath(path))
        model, named = load_model(os.path.join(base, ref))
    txs = tuple(_resolve_tx(item, named) for item in obj.get("transactions", ()))
    return txs, model


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError:
        raise
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
