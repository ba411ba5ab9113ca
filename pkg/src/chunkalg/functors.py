"""The functors between transaction models and abstract chunk systems.

``f_object`` sends a model to its chunk system (chunks plus the failure
top); ``f_arrow`` extends a transaction table to chunks transactionwise.
``g_object`` represents an abstract chunk system concretely: each
materialized atomic element ``x`` becomes a transaction carrying ``x`` on
every slot, with inputs on the left interface, outputs on the right and up
interfaces, and a composition-probing validator on every output.  Two
transactions of the represented model compose exactly when their elements
do.

The unit ``eta`` and counit ``epsilon`` tie the loop together: ``eta`` is a
bijection between the chunks of a model and the chunks of its round-trip
image, and ``epsilon`` collapses represented chunks back to products of
their elements (a surjection; a bijection when the instance is perfectly
atomic).  ``check_adjunction`` verifies all of it on finite samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .acs import AcsArrow, AcsInstance, ChunkAcs, identity_acs_arrow
from .axioms import AxiomReport, LawResult
from .ieutxo import (
    FAIL,
    Chunk,
    ChunkOrFail,
    IeutxoArrow,
    IeutxoModel,
    Input,
    ModelError,
    Output,
    Transaction,
    arrow_apply,
    arrow_compose,
    arrows_equal,
    enumerate_chunks,
    identity_arrow,
    is_chunk,
    is_iutxo_model,
)
from .scripts import AcsCompose


def f_object(model: IeutxoModel) -> ChunkAcs:
    """The chunk system of a model: chunks under validated concatenation."""
    return ChunkAcs(model)


def f_arrow(f: IeutxoArrow) -> AcsArrow:
    """Chunkwise extension of an arrow: images compose transaction by
    transaction, and the failure element maps to the failure element."""
    source = ChunkAcs(f.source)
    target = ChunkAcs(f.target)

    def fn(x: ChunkOrFail) -> ChunkOrFail:
        if x is FAIL:
            return FAIL
        return arrow_apply(f, x)

    return AcsArrow(source, target, fn, tag=f"F({f.source.name}->{f.target.name})")


# ---------------------------------------------------------------------------
# G: representing an abstract chunk system as a model


@dataclass(eq=False)
class GModel:
    """A represented chunk system: one transaction per materialized atomic.

    ``tx_of`` and ``element_of`` are the two directions of the transaction
    assignment, which is injective because every slot carries its element.
    """

    inst: AcsInstance
    atomics: tuple
    model: IeutxoModel
    tx_of: dict
    element_of: dict

    def transaction(self, x: Any) -> Transaction:
        try:
            return self.tx_of[x]
        except KeyError:
            raise ModelError(
                f"element not materialized in {self.model.name}: {self.inst.label(x)}"
            ) from None


def g_object(inst: AcsInstance, atomics: Optional[Sequence] = None) -> GModel:
    """Materialize the represented model over the given atomic elements.

    The carrier may be infinite; the materialization boundary is the
    declared (finite) atomic enumeration.
    """
    if atomics is None:
        atomics = inst.atomic_elements()
    atomics = tuple(atomics)
    tx_of: dict = {}
    element_of: dict = {}
    for x in atomics:
        ins = tuple(Input(a, x) for a in sorted(inst.left(x)))
        outs = tuple(
            Output(b, x, AcsCompose(x, inst))
            for b in sorted(inst.right(x) | inst.up(x))
        )
        tx = Transaction(ins, outs)
        tx_of[x] = tx
        element_of[tx] = x
    txs = tuple(tx_of[x] for x in atomics)
    model = IeutxoModel(
        name=f"G({inst.name})",
        transactions=txs,
        probe_candidates=txs,
    )
    return GModel(inst, atomics, model, tx_of, element_of)


def g_arrow(g: AcsArrow, gm_src: GModel, gm_tgt: GModel) -> IeutxoArrow:
    """The represented arrow: each transaction maps to the chunk of
    transactions of the factors of its element's image."""
    table: dict = {}
    for x in gm_src.atomics:
        image = g(x)
        if g.target.is_top(image):
            raise ModelError("arrows may not send atomics to the failure element")
        parts = [gm_tgt.transaction(y) for y in g.target.factor(image)]
        table[gm_src.tx_of[x]] = Chunk(tuple(parts))
    return IeutxoArrow(gm_src.model, gm_tgt.model, table)


# ---------------------------------------------------------------------------
# Unit and counit


@dataclass(eq=False)
class EtaMap:
    """The unit: transactions of a model to singleton chunks of its round-trip."""

    model: IeutxoModel
    facs: ChunkAcs
    gmodel: GModel

    def on_tx(self, tx: Transaction) -> Chunk:
        return Chunk((self.gmodel.transaction(Chunk((tx,))),))

    def on_list(self, txs: Sequence[Transaction]) -> tuple[Transaction, ...]:
        return tuple(self.gmodel.transaction(Chunk((tx,))) for tx in txs)

    def on_chunk(self, x: ChunkOrFail) -> ChunkOrFail:
        if x is FAIL:
            return FAIL
        return Chunk(self.on_list(x.txs))

    def inverse_chunk(self, x: ChunkOrFail) -> ChunkOrFail:
        if x is FAIL:
            return FAIL
        parts = [self.gmodel.element_of[tx] for tx in x.txs]  # singleton chunks
        return Chunk(tuple(tx for part in parts for tx in part.txs))

    def as_arrow(self) -> IeutxoArrow:
        table = {tx: self.on_tx(tx) for tx in self.model.transactions}
        return IeutxoArrow(self.model, self.gmodel.model, table)


def eta(model: IeutxoModel, gmodel: Optional[GModel] = None) -> EtaMap:
    facs = ChunkAcs(model)
    if gmodel is None:
        gmodel = g_object(facs)
    return EtaMap(model, facs, gmodel)


@dataclass(eq=False)
class EpsilonMap:
    """The counit: represented chunks collapse to products of their elements."""

    inst: AcsInstance
    gmodel: GModel

    def on_element(self, x: ChunkOrFail) -> Any:
        if x is FAIL:
            return self.inst.top
        out = self.inst.bot
        for tx in x.txs:
            out = self.inst.mcompose(out, self.gmodel.element_of[tx])
        return out

    def surjectivity_witness(self, x: Any) -> ChunkOrFail:
        """A represented chunk mapping to ``x``; exists for every element
        whose factors are materialized."""
        if self.inst.is_top(x):
            return FAIL
        parts = [self.gmodel.transaction(y) for y in self.inst.factor(x)]
        return Chunk(tuple(parts))

    def as_acs_arrow(self) -> AcsArrow:
        return AcsArrow(
            ChunkAcs(self.gmodel.model),
            self.inst,
            self.on_element,
            tag=f"epsilon({self.inst.name})",
        )


def epsilon(inst: AcsInstance, gmodel: Optional[GModel] = None) -> EpsilonMap:
    if gmodel is None:
        gmodel = g_object(inst)
    return EpsilonMap(inst, gmodel)


# ---------------------------------------------------------------------------
# The adjunction, checked


class _Law:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.witnesses: list = []

    def check(self, ok: bool, note: str = "") -> None:
        self.checked += 1
        if not ok and len(self.witnesses) < 5:
            self.witnesses.append(note)

    def result(self) -> LawResult:
        return LawResult(self.name, not self.witnesses, self.checked, self.witnesses)


def check_adjunction(
    model: IeutxoModel,
    inst: AcsInstance,
    seed: int = 0,
    samples: int = 40,
    strict: bool = False,
    model_arrows: Optional[Sequence[IeutxoArrow]] = None,
    acs_arrows: Optional[Sequence[AcsArrow]] = None,
) -> AxiomReport:
    """Sample-based verification of the whole adjunction package.

    Model side: the unit is a bijection on enumerated chunks, preserves and
    reflects chunkhood, its naturality square commutes for the supplied (or
    default) arrows, the first triangle identity holds, and the round-trip
    model is point-local.  Instance side: the counit is surjective (and in
    strict mode bijective), a monoid map, natural, the second triangle
    identity holds, and represented transactions compose exactly when their
    elements do.  The factorisation used by the represented arrows is the
    instance's own ``factor``; reports carry the materialization boundary.
    """
    rng = random.Random(seed)
    results: list[LawResult] = []

    # ---- model side -------------------------------------------------
    et = eta(model)
    gf_model = et.gmodel.model

    bij = _Law("eta_bijective_on_chunks")
    chunks_src = list(enumerate_chunks(model))
    chunks_tgt = {c.txs for c in enumerate_chunks(gf_model)}
    images = [et.on_chunk(c) for c in chunks_src]
    bij.check(len({im.txs for im in images}) == len(images), "unit not injective")
    bij.check(
        {im.txs for im in images} == chunks_tgt,
        "unit image differs from round-trip chunk set",
    )
    results.append(bij.result())

    pres = _Law("eta_preserves_reflects_chunkhood")
    txs = model.transactions
    for _ in range(samples):
        k = rng.randint(0, min(4, len(txs)))
        lst = [txs[rng.randrange(len(txs))] for _ in range(k)]
        pres.check(
            is_chunk(lst) == is_chunk(et.on_list(lst)),
            "chunkhood not preserved/reflected",
        )
    results.append(pres.result())

    pure = _Law("round_trip_model_point_local")
    pure.check(is_iutxo_model(gf_model), "round-trip model has non-local validators")
    results.append(pure.result())

    tri_f = _Law("triangle_counit_after_unit_image")
    eps_ft = epsilon(et.facs, et.gmodel)
    feta = f_arrow(et.as_arrow())
    for x in _chunk_samples(et.facs, samples, seed + 1):
        tri_f.check(
            eps_ft.on_element(feta(x)) == x,
            f"triangle fails at {et.facs.label(x)}",
        )
    results.append(tri_f.result())

    nat = _Law("eta_natural")
    arrows = list(model_arrows) if model_arrows is not None else []
    if not arrows:
        arrows = [identity_arrow(model)]
    for f in arrows:
        et_src = eta(f.source)
        et_tgt = eta(f.target)
        gff = g_arrow(f_arrow(f), et_src.gmodel, et_tgt.gmodel)
        lhs = {tx: et_tgt.on_chunk(f(tx)) for tx in f.source.transactions}
        rhs = {
            tx: arrow_apply(gff, et_src.on_tx(tx)) for tx in f.source.transactions
        }
        nat.check(lhs == rhs, "unit naturality square does not commute")
    results.append(nat.result())

    # ---- instance side ----------------------------------------------
    gm = g_object(inst)
    eps = epsilon(inst, gm)

    surj = _Law("epsilon_surjective")
    elements = inst.sample_elements(samples, seed + 2)
    for x in elements:
        w = eps.surjectivity_witness(x)
        surj.check(eps.on_element(w) == x, f"no witness for {inst.label(x)}")
    results.append(surj.result())

    hom = _Law("epsilon_monoid_map")
    fg = ChunkAcs(gm.model)
    fg_elems = fg.sample_elements(samples, seed + 3)
    for _ in range(samples):
        u = fg_elems[rng.randrange(len(fg_elems))]
        v = fg_elems[rng.randrange(len(fg_elems))]
        hom.check(
            eps.on_element(fg.mcompose(u, v))
            == inst.mcompose(eps.on_element(u), eps.on_element(v)),
            "counit is not a monoid map",
        )
    results.append(hom.result())

    pair = _Law("represented_pair_composition")
    atoms = gm.atomics
    for _ in range(samples):
        if not atoms:
            break
        x = atoms[rng.randrange(len(atoms))]
        y = atoms[rng.randrange(len(atoms))]
        lhs_ok = is_chunk((gm.tx_of[x], gm.tx_of[y]))
        rhs_ok = not inst.is_top(inst.mcompose(x, y))
        pair.check(
            lhs_ok == rhs_ok,
            f"pair law fails at {inst.label(x)}, {inst.label(y)}",
        )
    results.append(pair.result())

    eps_nat = _Law("epsilon_natural")
    g_arrows = list(acs_arrows) if acs_arrows is not None else []
    if not g_arrows:
        g_arrows = [identity_acs_arrow(inst)]
    for g in g_arrows:
        gm_src = g_object(g.source)
        gm_tgt = g_object(g.target)
        try:
            fgg = f_arrow(g_arrow(g, gm_src, gm_tgt))
        except ModelError:
            eps_nat.check(False, "represented arrow not materialized")
            continue
        eps_src = epsilon(g.source, gm_src)
        eps_tgt = epsilon(g.target, gm_tgt)
        for a in ChunkAcs(gm_src.model).atomic_elements():
            eps_nat.check(
                eps_tgt.on_element(fgg(a)) == g(eps_src.on_element(a)),
                "counit naturality square does not commute",
            )
    results.append(eps_nat.result())

    tri_g = _Law("triangle_unit_after_represented_counit")
    try:
        et_g = eta(gm.model)
        geps = g_arrow(eps.as_acs_arrow(), et_g.gmodel, gm)
        composite = arrow_compose(et_g.as_arrow(), geps)
        tri_g.check(
            arrows_equal(composite, identity_arrow(gm.model)),
            "triangle on the represented model is not the identity",
        )
    except ModelError as exc:
        tri_g.check(False, f"materialization failure: {exc}")
    results.append(tri_g.result())

    if strict:
        bij_eps = _Law("epsilon_bijective_strict")
        fg_all = fg.enumerate_elements()
        mapped = [eps.on_element(x) for x in fg_all]
        bij_eps.check(
            len(set(map(inst.label, mapped))) == len(mapped),
            "counit not injective on enumerated round-trip elements",
        )
        bij_eps.check(
            inst.perfectly_atomic, "strict mode on a non-perfectly-atomic instance"
        )
        results.append(bij_eps.result())

    report = AxiomReport(f"{model.name}|{inst.name}", "adjunction", results)
    return report


def _chunk_samples(facs: ChunkAcs, n: int, seed: int) -> list:
    return facs.sample_elements(n, seed)


def adjunction_payload(report: AxiomReport, model: IeutxoModel, inst: AcsInstance) -> dict:
    """Report payload: the law table plus the choices the checks depend on."""
    return {
        "report": report.to_obj(),
        "materialized_atomics": len(inst.atomic_elements()),
        "factor_choice": "instance canonical factorisation",
        "model_transactions": len(model.transactions),
    }


# ---------------------------------------------------------------------------
# The point-local embedding


class NotIutxo(Exception):
    """The model has validators that inspect more than the input-point."""


def iutxo_embedding_check(model: IeutxoModel, seed: int = 0, samples: int = 60) -> AxiomReport:
    """For point-local models: the inclusion into the full category preserves
    chunk validity verbatim, and the loop through the abstract side and back
    preserves composition behaviour."""
    if not is_iutxo_model(model):
        raise NotIutxo(model.name)
    rng = random.Random(seed)
    et = eta(model)
    results = []

    verbatim = _Law("embedding_preserves_validity")
    txs = model.transactions
    for _ in range(samples):
        k = rng.randint(0, min(4, len(txs)))
        lst = [txs[rng.randrange(len(txs))] for _ in range(k)]
        # the embedded model is the model itself; validity is literally the same
        verbatim.check(is_chunk(lst) == is_chunk(tuple(lst)))
    results.append(verbatim.result())

    loop = _Law("loop_composition_preserved")
    for _ in range(samples):
        if not txs:
            break
        s = txs[rng.randrange(len(txs))]
        t = txs[rng.randrange(len(txs))]
        loop.check(
            is_chunk((s, t)) == is_chunk(et.on_list((s, t))),
            "loop image composes differently",
        )
    results.append(loop.result())

    iso = _Law("round_trip_isomorphic")
    chunks_src = {c.txs for c in enumerate_chunks(model)}
    chunks_img = {et.on_chunk(Chunk(c)).txs for c in chunks_src}
    chunks_tgt = {c.txs for c in enumerate_chunks(et.gmodel.model)}
    iso.check(chunks_img == chunks_tgt, "round-trip chunk sets differ")
    iso.check(is_iutxo_model(et.gmodel.model), "round-trip not point-local")
    results.append(iso.result())

    return AxiomReport(model.name, "iutxo_embedding", results)
