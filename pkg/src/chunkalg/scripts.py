"""Validator scripts: a closed, serializable DSL with a decidable denotation.

A script denotes a total predicate over ``(datum, pointed transaction)``,
where the datum is the local state carried on the output that owns the
script.  Scripts are compared by canonical structural form
(:func:`canonical`): ``And``/``Or`` arguments are sorted and double negation
is eliminated, so two canonically-equal scripts are the same validator.
Extensionally equal but structurally distinct scripts count as distinct
validators; that refinement is deliberate and keeps validator identity
decidable.

A script is *point-local* (UTxO-style) when its decision depends only on the
datum and on the distinguished input: every node kind here is point-local
except ``SpendsAtMostNInputs``, which inspects the shape of the whole
spending transaction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from .atoms import Atom, Permutation, act_opaque, value_label


@dataclass(frozen=True)
class AcceptAll:
    def evaluate(self, datum: Any, ptx: "PointedTransaction") -> bool:  # noqa: F821
        return True

    def rename(self, perm: Permutation) -> "AcceptAll":
        return self

    def is_pure(self) -> bool:
        return True


@dataclass(frozen=True)
class RejectAll:
    def evaluate(self, datum, ptx) -> bool:
        return False

    def rename(self, perm):
        return self

    def is_pure(self) -> bool:
        return True


@dataclass(frozen=True)
class KeyEquals:
    """Accept exactly the inputs whose key equals ``key``."""

    key: Any

    def evaluate(self, datum, ptx) -> bool:
        return ptx.point.key == self.key

    def rename(self, perm):
        return KeyEquals(act_opaque(perm, self.key))

    def is_pure(self) -> bool:
        return True


@dataclass(frozen=True)
class DatumEquals:
    """Accept only when the local state datum equals ``datum``."""

    datum: Any

    def evaluate(self, datum, ptx) -> bool:
        return datum == self.datum

    def rename(self, perm):
        return DatumEquals(act_opaque(perm, self.datum))

    def is_pure(self) -> bool:
        return True


@dataclass(frozen=True)
class InputPositionIn:
    """Accept inputs located at one of the given positions."""

    positions: frozenset[Atom]

    def evaluate(self, datum, ptx) -> bool:
        return ptx.point.position in self.positions

    def rename(self, perm):
        return InputPositionIn(frozenset(perm(a) for a in self.positions))

    def is_pure(self) -> bool:
        return True


@dataclass(frozen=True)
class SpendsAtMostNInputs:
    """Accept only spenders with at most ``limit`` inputs.

    Looks past the input-point at the whole transaction, so it is the one
    node kind that is not point-local.
    """

    limit: int

    def evaluate(self, datum, ptx) -> bool:
        return len(ptx.transaction.inputs) <= self.limit

    def rename(self, perm):
        return self

    def is_pure(self) -> bool:
        return False


@dataclass(frozen=True)
class Not:
    body: "Script"

    def evaluate(self, datum, ptx) -> bool:
        return not self.body.evaluate(datum, ptx)

    def rename(self, perm):
        return Not(self.body.rename(perm))

    def is_pure(self) -> bool:
        return self.body.is_pure()


@dataclass(frozen=True)
class And:
    left: "Script"
    right: "Script"

    def evaluate(self, datum, ptx) -> bool:
        return self.left.evaluate(datum, ptx) and self.right.evaluate(datum, ptx)

    def rename(self, perm):
        return And(self.left.rename(perm), self.right.rename(perm))

    def is_pure(self) -> bool:
        return self.left.is_pure() and self.right.is_pure()


@dataclass(frozen=True)
class Or:
    left: "Script"
    right: "Script"

    def evaluate(self, datum, ptx) -> bool:
        return self.left.evaluate(datum, ptx) or self.right.evaluate(datum, ptx)

    def rename(self, perm):
        return Or(self.left.rename(perm), self.right.rename(perm))

    def is_pure(self) -> bool:
        return self.left.is_pure() and self.right.is_pure()


@dataclass(frozen=True)
class AcsCompose:
    """Accept inputs whose key composes with ``element`` below the top.

    The workhorse validator of represented chunk-system models: the output
    carries an element of an abstract chunk system, the prospective input
    carries one as its key, and validation succeeds exactly when their
    composition in the instance stays below the failure element.  The
    decision reads only the input-point's key, so the node is point-local.
    """

    element: Any
    inst: Any = field(compare=False, repr=False)

    def evaluate(self, datum, ptx) -> bool:
        other = ptx.point.key
        try:
            composed = self.inst.mcompose(self.element, other)
        except Exception:
            return False
        return composed != self.inst.top

    def rename(self, perm):
        return AcsCompose(act_opaque(perm, self.element), self.inst)

    def is_pure(self) -> bool:
        return True

    def __hash__(self) -> int:
        return hash(("acs_compose", value_label(self.element)))


Script = Union[
    AcceptAll,
    RejectAll,
    KeyEquals,
    DatumEquals,
    InputPositionIn,
    SpendsAtMostNInputs,
    Not,
    And,
    Or,
    AcsCompose,
]


def evaluate_script(script: Script, datum: Any, ptx) -> bool:
    return script.evaluate(datum, ptx)


def script_is_pure(script: Script) -> bool:
    """True when the script's decision depends only on the datum and the point."""
    return script.is_pure()


def canonical(script: Script) -> Script:
    """Canonical structural form: sorted And/Or arguments, no double negation."""
    if isinstance(script, Not):
        body = canonical(script.body)
        if isinstance(body, Not):
            return body.body
        return Not(body)
    if isinstance(script, (And, Or)):
        left = canonical(script.left)
        right = canonical(script.right)
        if script_label(right) < script_label(left):
            left, right = right, left
        return type(script)(left, right)
    return script


def script_to_obj(script: Script) -> dict:
    """Plain-data form of a script; the JSON wire format."""
    if isinstance(script, AcceptAll):
        return {"node": "accept_all"}
    if isinstance(script, RejectAll):
        return {"node": "reject_all"}
    if isinstance(script, KeyEquals):
        return {"node": "key_equals", "key": _scalar_obj(script.key)}
    if isinstance(script, DatumEquals):
        return {"node": "datum_equals", "datum": _scalar_obj(script.datum)}
    if isinstance(script, InputPositionIn):
        return {"node": "input_position_in", "positions": sorted(script.positions)}
    if isinstance(script, SpendsAtMostNInputs):
        return {"node": "spends_at_most_n_inputs", "limit": script.limit}
    if isinstance(script, Not):
        return {"node": "not", "body": script_to_obj(script.body)}
    if isinstance(script, And):
        return {"node": "and", "left": script_to_obj(script.left), "right": script_to_obj(script.right)}
    if isinstance(script, Or):
        return {"node": "or", "left": script_to_obj(script.left), "right": script_to_obj(script.right)}
    if isinstance(script, AcsCompose):
        return {"node": "acs_compose", "element": value_label(script.element)}
    raise TypeError(f"not a script: {script!r}")


def _scalar_obj(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return {"label": value_label(value)}


def script_label(script: Script) -> str:
    """Deterministic string form; sort key for outputs and canonicalization."""
    import json

    return json.dumps(script_to_obj(script), sort_keys=True, separators=(",", ":"))
