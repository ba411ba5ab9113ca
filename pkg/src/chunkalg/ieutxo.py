"""Transactions, chunks, and the partial monoid of validated transaction lists.

The data model: an input is an atom-labelled key, an output is an
atom-labelled datum guarded by a validator script, and a transaction is a
pair of finite input/output sets.  A *chunk* is a transaction list in which

  1. output position occurrences are pairwise distinct,
  2. input position occurrences are pairwise distinct,
  3. an input sharing a position with an output does so with a strictly
     earlier output, and
  4. that earlier output's validator accepts the input in its transaction
     context.

Chunks compose by concatenation-then-revalidation; totalizing the partial
composition with the absorbing :data:`FAIL` element turns the chunk set into
a monoid with an explicit failure top.  A *blockchain* is a chunk with no
unspent inputs.

Chunk validity is local: a list is a chunk iff every sublist of length at
most two is (see :func:`pairwise_chunk_oracle`, the independent oracle used
throughout the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence, Union

from .atoms import Atom, Permutation, act_opaque, fresh_atoms, value_label
from .scripts import Script, evaluate_script, script_is_pure, script_label


class NotAChunk(Exception):
    """Raised when an operation defined on chunks receives an invalid list."""

    def __init__(self, report: "ChunkReport"):
        super().__init__(str(report.violation))
        self.report = report


class AmbiguousPosition(Exception):
    """More than one output occurrence shares the queried position."""


class NotAnArrow(Exception):
    """A transaction table violates the arrow condition."""


class MissingProbeUniverse(Exception):
    """Blocked-channel analysis needs declared probe candidates."""


class ModelError(ValueError):
    """A model enumeration violates the model invariants."""


# ---------------------------------------------------------------------------
# Core data


@dataclass(frozen=True)
class Input:
    position: Atom
    key: Any

    def rename(self, perm: Permutation) -> "Input":
        return Input(perm(self.position), act_opaque(perm, self.key))

    def sort_key(self) -> tuple:
        return (self.position, value_label(self.key))


@dataclass(frozen=True)
class Output:
    position: Atom
    datum: Any
    validator: Script

    def rename(self, perm: Permutation) -> "Output":
        return Output(
            perm(self.position),
            act_opaque(perm, self.datum),
            self.validator.rename(perm),
        )

    def sort_key(self) -> tuple:
        return (self.position, value_label(self.datum), script_label(self.validator))


@dataclass(frozen=True, init=False)
class Transaction:
    """A pair of finite input and output sets, canonically ordered.

    The empty transaction is representable so that raw lists containing it
    can be checked and rejected; models refuse to enumerate it.
    """

    inputs: tuple[Input, ...]
    outputs: tuple[Output, ...]

    def __init__(self, inputs: Iterable[Input] = (), outputs: Iterable[Output] = ()):
        object.__setattr__(
            self, "inputs", tuple(sorted(set(inputs), key=Input.sort_key))
        )
        object.__setattr__(
            self, "outputs", tuple(sorted(set(outputs), key=Output.sort_key))
        )

    def is_empty(self) -> bool:
        return not self.inputs and not self.outputs

    def rename(self, perm: Permutation) -> "Transaction":
        return Transaction(
            (i.rename(perm) for i in self.inputs),
            (o.rename(perm) for o in self.outputs),
        )

    def label(self) -> str:
        ins = ",".join(f"({i.position},{value_label(i.key)})" for i in self.inputs)
        outs = ",".join(
            f"({o.position},{value_label(o.datum)},{script_label(o.validator)})"
            for o in self.outputs
        )
        return f"tx[{ins}|{outs}]"

    def sort_key(self) -> str:
        return self.label()


@dataclass(frozen=True)
class PointedTransaction:
    """A transaction with one distinguished input: the shape validators see."""

    transaction: Transaction
    point: Input

    def __post_init__(self):
        if self.point not in self.transaction.inputs:
            raise ValueError("point must be one of the transaction's inputs")

    def rename(self, perm: Permutation) -> "PointedTransaction":
        return PointedTransaction(self.transaction.rename(perm), self.point.rename(perm))


TxList = tuple[Transaction, ...]


def input_channels(tx: Transaction) -> frozenset[Atom]:
    return frozenset(i.position for i in tx.inputs)


def output_channels(tx: Transaction) -> frozenset[Atom]:
    return frozenset(o.position for o in tx.outputs)


def pos(value: Any) -> frozenset[Atom]:
    """All positions mentioned by inputs or outputs of the value.

    Atoms mentioned only inside validator scripts are not positions.
    """
    if isinstance(value, Input) or isinstance(value, Output):
        return frozenset((value.position,))
    if isinstance(value, Transaction):
        return input_channels(value) | output_channels(value)
    if isinstance(value, PointedTransaction):
        return pos(value.transaction)
    if isinstance(value, Chunk):
        value = value.txs
    if isinstance(value, (tuple, list)):
        out: frozenset[Atom] = frozenset()
        for tx in value:
            out |= pos(tx)
        return out
    raise TypeError(f"pos undefined for {type(value).__name__}")


def validates(output: Output, ptx: PointedTransaction) -> bool:
    """Does the output's validator accept the input-in-context?

    Callers are expected to have matched positions first; the predicate
    itself is total.
    """
    return evaluate_script(output.validator, output.datum, ptx)


# ---------------------------------------------------------------------------
# Chunk checking

DUPLICATE_OUTPUT_POSITION = "DuplicateOutputPosition"
DUPLICATE_INPUT_POSITION = "DuplicateInputPosition"
BACKWARD_OR_SELF_POINTER = "BackwardOrSelfPointer"
VALIDATION_FAILED = "ValidationFailed"
EMPTY_TRANSACTION = "EmptyTransaction"

VIOLATION_KINDS = (
    DUPLICATE_OUTPUT_POSITION,
    DUPLICATE_INPUT_POSITION,
    BACKWARD_OR_SELF_POINTER,
    VALIDATION_FAILED,
    EMPTY_TRANSACTION,
)


@dataclass(frozen=True)
class Violation:
    kind: str
    positions: tuple[Atom, ...]
    tx_indices: tuple[int, ...]
    detail: str = ""

    def to_obj(self) -> dict:
        return {
            "kind": self.kind,
            "positions": list(self.positions),
            "tx_indices": list(self.tx_indices),
            "detail": self.detail,
        }

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.tx_indices)
        at = ",".join(self.positions) or "-"
        return f"{self.kind} at position(s) {at} (tx {where})"


@dataclass(frozen=True)
class ChunkReport:
    ok: bool
    violation: Optional[Violation] = None

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "violation": self.violation.to_obj() if self.violation else None,
        }


def resolve(
    txs: Sequence[Transaction], tx_index: int, inp: Input
) -> Optional[tuple[Output, int]]:
    """The unique output anywhere in ``txs`` sharing the input's position.

    Returns ``(output, transaction_index)`` or ``None``; raises
    :class:`AmbiguousPosition` if several output occurrences share the
    position, which signals a duplicate-output violation.
    """
    hits = [
        (o, t)
        for t, tx in enumerate(txs)
        for o in tx.outputs
        if o.position == inp.position
    ]
    if len(hits) > 1:
        raise AmbiguousPosition(inp.position)
    return hits[0] if hits else None


def check_chunk(txs: Union[Sequence[Transaction], "Chunk"]) -> ChunkReport:
    """Validate the four chunk conditions, reporting the first violation.

    The scan order is deterministic: transactions left to right, a
    transaction's inputs before its outputs, positions in atom order.
    Reported ``tx_indices`` are (first occurrence, second occurrence) for
    duplicates and (input transaction, output transaction) for pointer and
    validation faults.
    """
    if isinstance(txs, Chunk):
        return ChunkReport(True, None)
    txs = tuple(txs)
    out_occ: dict[Atom, list[tuple[int, Output]]] = {}
    for t, tx in enumerate(txs):
        for o in tx.outputs:
            out_occ.setdefault(o.position, []).append((t, o))
    seen_inputs: dict[Atom, int] = {}
    seen_outputs: dict[Atom, int] = {}
    for t, tx in enumerate(txs):
        if tx.is_empty():
            return ChunkReport(
                False, Violation(EMPTY_TRANSACTION, (), (t,), "empty transaction")
            )
        for i in tx.inputs:
            p = i.position
            if p in seen_inputs:
                return ChunkReport(
                    False,
                    Violation(DUPLICATE_INPUT_POSITION, (p,), (seen_inputs[p], t)),
                )
            seen_inputs[p] = t
            occ = out_occ.get(p, ())
            if len(occ) > 1:
                return ChunkReport(
                    False,
                    Violation(
                        DUPLICATE_OUTPUT_POSITION, (p,), (occ[0][0], occ[1][0])
                    ),
                )
            if occ:
                ot, o = occ[0]
                if ot >= t:
                    return ChunkReport(
                        False,
                        Violation(
                            BACKWARD_OR_SELF_POINTER,
                            (p,),
                            (t, ot),
                            "input points to a later or same-transaction output",
                        ),
                    )
                if not validates(o, PointedTransaction(tx, i)):
                    return ChunkReport(
                        False,
                        Violation(
                            VALIDATION_FAILED,
                            (p,),
                            (ot, t),
                            "earlier output refuses the input",
                        ),
                    )
        for o in tx.outputs:
            p = o.position
            if p in seen_outputs:
                return ChunkReport(
                    False,
                    Violation(DUPLICATE_OUTPUT_POSITION, (p,), (seen_outputs[p], t)),
                )
            seen_outputs[p] = t
    return ChunkReport(True, None)


def is_chunk(txs: Union[Sequence[Transaction], "Chunk"]) -> bool:
    return check_chunk(txs).ok


def pairwise_chunk_oracle(txs: Sequence[Transaction]) -> bool:
    """Validity by brute force over every length-<=2 ordered sublist.

    Chunk validity is a local property, so this must agree with
    :func:`is_chunk`; the two stay implemented independently so each checks
    the other.
    """
    txs = tuple(txs)
    n = len(txs)
    for i in range(n):
        if not check_chunk((txs[i],)).ok:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if not check_chunk((txs[i], txs[j])).ok:
                return False
    return True


# ---------------------------------------------------------------------------
# Chunks and their composition


@dataclass(frozen=True)
class Chunk:
    """A transaction list satisfying the chunk conditions; validated on construction."""

    txs: TxList

    def __post_init__(self):
        report = check_chunk(self.txs)
        if not report.ok:
            raise NotAChunk(report)
        object.__setattr__(self, "txs", tuple(self.txs))

    def __len__(self) -> int:
        return len(self.txs)

    def __iter__(self) -> Iterator[Transaction]:
        return iter(self.txs)

    def rename(self, perm: Permutation) -> "Chunk":
        return Chunk(tuple(tx.rename(perm) for tx in self.txs))

    def label(self) -> str:
        return "ch[" + ";".join(tx.label() for tx in self.txs) + "]"


class _Fail:
    """The absorbing failure element adjoined to the chunk monoid."""

    _instance: Optional["_Fail"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def rename(self, perm: Permutation) -> "_Fail":
        return self

    def label(self) -> str:
        return "FAIL"

    def __repr__(self) -> str:
        return "FAIL"


FAIL = _Fail()
EMPTY_CHUNK = Chunk(())

ChunkOrFail = Union[Chunk, _Fail]


def compose(x: ChunkOrFail, y: ChunkOrFail) -> ChunkOrFail:
    """Validated concatenation, defaulting to FAIL; FAIL is absorbing."""
    if x is FAIL or y is FAIL:
        return FAIL
    cat = x.txs + y.txs
    if not check_chunk(cat).ok:
        return FAIL
    return Chunk(cat)


def compose_all(parts: Iterable[ChunkOrFail]) -> ChunkOrFail:
    out: ChunkOrFail = EMPTY_CHUNK
    for part in parts:
        out = compose(out, part)
    return out


def is_sublist(small: Sequence, big: Sequence) -> bool:
    """Is ``small`` obtainable from ``big`` by deleting (never rearranging) items?"""
    if isinstance(small, Chunk):
        small = small.txs
    if isinstance(big, Chunk):
        big = big.txs
    it = iter(big)
    return all(any(item == other for other in it) for item in small)


def chunk_leq(x: ChunkOrFail, y: ChunkOrFail) -> bool:
    """Sublist order on chunks with FAIL on top."""
    if y is FAIL:
        return True
    if x is FAIL:
        return False
    return is_sublist(x.txs, y.txs)


def sublists(txs: TxList) -> Iterator[TxList]:
    """All 2^n sublists in a deterministic order."""
    n = len(txs)
    for mask in range(1 << n):
        yield tuple(txs[i] for i in range(n) if mask >> i & 1)


# ---------------------------------------------------------------------------
# Ledger sets


def _chunk_txs(value: Union[Chunk, Sequence[Transaction]]) -> TxList:
    if isinstance(value, Chunk):
        return value.txs
    report = check_chunk(value)
    if not report.ok:
        raise NotAChunk(report)
    return tuple(value)


def ledger_sets(
    value: Union[Chunk, Sequence[Transaction]],
) -> tuple[frozenset[Atom], frozenset[Atom], frozenset[Atom]]:
    """(unspent inputs, unspent outputs, spent channels); they partition pos."""
    txs = _chunk_txs(value)
    out_positions = {o.position for tx in txs for o in tx.outputs}
    spent: set[Atom] = set()
    unspent_in: set[Atom] = set()
    for tx in txs:
        for i in tx.inputs:
            if i.position in out_positions:
                spent.add(i.position)
            else:
                unspent_in.add(i.position)
    return (
        frozenset(unspent_in),
        frozenset(out_positions - spent),
        frozenset(spent),
    )


def utxi(value: Union[Chunk, Sequence[Transaction]]) -> frozenset[Atom]:
    return ledger_sets(value)[0]


def utxo(value: Union[Chunk, Sequence[Transaction]]) -> frozenset[Atom]:
    return ledger_sets(value)[1]


def stx(value: Union[Chunk, Sequence[Transaction]]) -> frozenset[Atom]:
    return ledger_sets(value)[2]


def is_blockchain(value: Union[Chunk, Sequence[Transaction]]) -> bool:
    """A blockchain is a chunk with no unspent inputs."""
    return not utxi(value)


def commuting(x: Chunk, y: Chunk) -> bool:
    """Both composition orders form chunks, or neither does."""
    return (compose(x, y) is FAIL) == (compose(y, x) is FAIL)


# ---------------------------------------------------------------------------
# Models


@dataclass(eq=False)
class IeutxoModel:
    """A finitely-presented model: named transaction enumeration plus options.

    ``admissible`` restricts which transactions belong to the model (default:
    all nonempty ones); ``probe_candidates`` is the declared universe for
    blocked-channel analysis, closed under position renaming by the analysis
    itself.  Enumerated transactions must be nonempty, singleton-valid
    (disjoint input and output channels, so the identity arrow exists) and
    pairwise distinct.
    """

    name: str
    transactions: TxList = ()
    admissible: Optional[Callable[[Transaction], bool]] = None
    probe_candidates: Optional[TxList] = None

    def __post_init__(self):
        self.transactions = tuple(self.transactions)
        seen = set()
        for tx in self.transactions:
            if tx.is_empty():
                raise ModelError("models may not enumerate the empty transaction")
            if input_channels(tx) & output_channels(tx):
                raise ModelError(
                    "enumerated transactions need disjoint input/output channels"
                )
            if self.admissible is not None and not self.admissible(tx):
                raise ModelError("enumerated transaction fails the admissible predicate")
            if tx in seen:
                raise ModelError("duplicate transaction in model enumeration")
            seen.add(tx)
        if self.probe_candidates is not None:
            self.probe_candidates = tuple(self.probe_candidates)

    def is_admissible(self, tx: Transaction) -> bool:
        if tx.is_empty():
            return False
        return self.admissible is None or self.admissible(tx)


def enumerate_chunks(
    model: IeutxoModel, max_len: Optional[int] = None
) -> Iterator[Chunk]:
    """All chunks buildable from the model's enumerated transactions.

    Transactions never repeat inside a chunk (every nonempty transaction has
    a position, and repeats collide), so the walk terminates; prefixes of
    chunks are chunks, which makes pruning safe.
    """
    txs = model.transactions
    limit = len(txs) if max_len is None else min(max_len, len(txs))

    def walk(prefix: TxList, used: frozenset[int]) -> Iterator[Chunk]:
        yield Chunk(prefix)
        if len(prefix) >= limit:
            return
        for idx, tx in enumerate(txs):
            if idx in used:
                continue
            cand = prefix + (tx,)
            if check_chunk(cand).ok:
                yield from walk(cand, used | {idx})

    return walk((), frozenset())


def is_iutxo_model(model: IeutxoModel) -> bool:
    """True when every validator in the enumeration is point-local."""
    return all(
        script_is_pure(o.validator)
        for tx in model.transactions
        for o in tx.outputs
    )


# ---------------------------------------------------------------------------
# Blocked channels


def _retarget(
    cand: Transaction, slot: Atom, target: Atom, avoid: frozenset[Atom]
) -> Transaction:
    """Rename the candidate so ``slot`` lands on ``target`` and everything
    else moves to fresh atoms outside ``avoid``."""
    others = sorted(pos(cand) - {slot})
    fresh = fresh_atoms(len(others), set(avoid) | pos(cand) | {target, slot})
    mapping = dict(zip(others, fresh))
    mapping[slot] = target
    return cand.rename(Permutation.extending(mapping))


def _probe_prepend(a: Atom, ch: Chunk, model: IeutxoModel) -> bool:
    """Can some renamed candidate provide an ``a``-output that the chunk spends?"""
    avoid = pos(ch)
    for cand in model.probe_candidates:
        for o in cand.outputs:
            probe = _retarget(cand, o.position, a, avoid)
            if input_channels(probe) & output_channels(probe):
                continue
            if not model.is_admissible(probe):
                continue
            if compose(Chunk((probe,)), ch) is not FAIL:
                return True
    return False


def _probe_append(a: Atom, ch: Chunk, model: IeutxoModel) -> bool:
    """Can some renamed candidate spend the chunk's ``a``-output?"""
    avoid = pos(ch)
    for cand in model.probe_candidates:
        for i in cand.inputs:
            probe = _retarget(cand, i.position, a, avoid)
            if input_channels(probe) & output_channels(probe):
                continue
            if not model.is_admissible(probe):
                continue
            if compose(ch, Chunk((probe,))) is not FAIL:
                return True
    return False


def blocked_utxi(ch: Chunk, model: IeutxoModel) -> frozenset[Atom]:
    """Unspent inputs that no candidate chunk can ever connect to.

    The quantification over all chunks of the model is approximated by the
    declared probe universe closed under renaming of non-queried positions;
    single-transaction probes suffice because validity is local.
    """
    if model.probe_candidates is None:
        raise MissingProbeUniverse(model.name)
    return frozenset(
        a for a in sorted(utxi(ch)) if not _probe_prepend(a, ch, model)
    )


def blocked_utxo(ch: Chunk, model: IeutxoModel) -> frozenset[Atom]:
    """Unspent outputs no candidate chunk can spend; dual to :func:`blocked_utxi`."""
    if model.probe_candidates is None:
        raise MissingProbeUniverse(model.name)
    return frozenset(
        a for a in sorted(utxo(ch)) if not _probe_append(a, ch, model)
    )


def renamed_probe_chunks(
    atoms: Iterable[Atom], model: IeutxoModel
) -> list[Chunk]:
    """The renaming closure of the probe universe, targeted at ``atoms``.

    Every candidate slot (input or output) is retargeted onto every queried
    atom with the remaining positions fresh, giving the singleton chunks
    that can possibly connect there.  Candidates that stop being admissible
    or singleton-valid under renaming are skipped.
    """
    if model.probe_candidates is None:
        raise MissingProbeUniverse(model.name)
    avoid = frozenset(atoms)
    out: list[Chunk] = []
    for a in sorted(avoid):
        for cand in model.probe_candidates:
            for slot in sorted(pos(cand)):
                probe = _retarget(cand, slot, a, avoid)
                if input_channels(probe) & output_channels(probe):
                    continue
                if not model.is_admissible(probe):
                    continue
                out.append(Chunk((probe,)))
    return out


# ---------------------------------------------------------------------------
# Church-Rosser

CR_VERIFIED = "Verified"
CR_PREMISES_FAILED = "PremisesFailed"
CR_COUNTEREXAMPLE = "CounterexampleFound"


@dataclass(frozen=True)
class ChurchRosserReport:
    status: str
    detail: str = ""

    def to_obj(self) -> dict:
        return {"status": self.status, "detail": self.detail}


def check_church_rosser(y: Chunk, x: Chunk, x2: Chunk) -> ChurchRosserReport:
    """Confluence for chunk attachment.

    Premises: ``y·x·x2`` is a chunk and attaching ``x`` in the middle leaves
    the unspent inputs unchanged (``utxi(y·x2) == utxi(y·x·x2)``).  Under
    them, ``x`` and ``x2`` must commute and ``y·x2·x`` must be a chunk; a
    premise-satisfying triple violating either conclusion indicates an
    implementation bug.
    """
    full = compose(compose(y, x), x2)
    if full is FAIL:
        return ChurchRosserReport(CR_PREMISES_FAILED, "y·x·x2 is not a chunk")
    yx2 = compose(y, x2)
    if yx2 is FAIL:
        return ChurchRosserReport(CR_PREMISES_FAILED, "y·x2 is not a chunk")
    if utxi(yx2) != utxi(full):
        return ChurchRosserReport(
            CR_PREMISES_FAILED, "utxi(y·x2) differs from utxi(y·x·x2)"
        )
    problems = []
    if not commuting(x, x2):
        problems.append("x and x2 do not commute")
    if compose(yx2, x) is FAIL:
        problems.append("y·x2·x is not a chunk")
    if problems:
        return ChurchRosserReport(CR_COUNTEREXAMPLE, "; ".join(problems))
    return ChurchRosserReport(CR_VERIFIED)


# ---------------------------------------------------------------------------
# Arrows between models


@dataclass(eq=False)
class IeutxoArrow:
    """A map from source transactions to target chunks, as a finite table."""

    source: IeutxoModel
    target: IeutxoModel
    table: dict

    def __post_init__(self):
        for tx in self.source.transactions:
            if tx not in self.table:
                raise NotAnArrow(f"table misses source transaction {tx.label()}")
        for image in self.table.values():
            if not isinstance(image, Chunk):
                raise NotAnArrow("arrow images must be chunks")

    def __call__(self, tx: Transaction) -> Chunk:
        try:
            return self.table[tx]
        except KeyError:
            raise NotAnArrow(f"transaction not in arrow table: {tx.label()}") from None

    def table_items(self) -> list[tuple[Transaction, Chunk]]:
        return sorted(self.table.items(), key=lambda kv: kv[0].sort_key())


def identity_arrow(model: IeutxoModel) -> IeutxoArrow:
    return IeutxoArrow(model, model, {tx: Chunk((tx,)) for tx in model.transactions})


def arrow_violation(
    f: IeutxoArrow,
) -> Optional[tuple[Transaction, Transaction]]:
    """First source pair whose chunkhood the table fails to preserve."""
    txs = f.source.transactions
    for s in txs:
        for t in txs:
            if s == t:
                continue
            if is_chunk((s, t)) and compose(f(s), f(t)) is FAIL:
                return (s, t)
    return None


def arrow_check(f: IeutxoArrow) -> bool:
    return arrow_violation(f) is None


def ensure_arrow(f: IeutxoArrow) -> IeutxoArrow:
    bad = arrow_violation(f)
    if bad is not None:
        raise NotAnArrow(
            f"pair ({bad[0].label()}, {bad[1].label()}) composes in the source "
            "but its images do not"
        )
    return f


def arrow_apply(
    f: IeutxoArrow, txs: Union[ChunkOrFail, Sequence[Transaction]]
) -> ChunkOrFail:
    """Extend the table to lists: act transactionwise and compose the images."""
    if txs is FAIL:
        return FAIL
    items = txs.txs if isinstance(txs, Chunk) else tuple(txs)
    return compose_all(f(tx) for tx in items)


def arrow_compose(f: IeutxoArrow, g: IeutxoArrow) -> IeutxoArrow:
    """The arrow doing ``f`` then ``g`` (pointwise on the table)."""
    if f.target is not g.source and f.target.transactions != g.source.transactions:
        raise NotAnArrow("arrow targets/sources do not line up")
    table = {tx: arrow_apply(g, f(tx)) for tx in f.source.transactions}
    for tx, image in table.items():
        if image is FAIL:
            raise NotAnArrow(f"composite maps {tx.label()} to FAIL")
    return IeutxoArrow(f.source, g.target, table)


def arrows_equal(f: IeutxoArrow, g: IeutxoArrow) -> bool:
    if set(f.table) != set(g.table):
        return False
    return all(f(tx) == g(tx) for tx in f.table)
