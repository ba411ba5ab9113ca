"""Sample-based law checkers for abstract chunk systems.

Each checker takes an instance plus a finite element sample and returns a
report with one entry per law: unit and absorption laws, the partial order,
associativity/monotonicity/increase of composition, pairwise locality of
failure, the orientation axioms, and the factorisation laws.  Pair and
triple laws run exhaustively when the sample is small enough and fall back
to a seeded sample otherwise, so reports are deterministic for a fixed seed.

Well-foundedness of the order is checked as antisymmetry plus acyclicity of
the strict order restricted to the sample; the property is not decidable
abstractly.

The factorisation homomorphism law is checked up to recomposition — the
concatenated factor lists of ``x`` and ``y`` must recompose to ``x·y`` — and
literally as list equality only on perfectly atomic instances.  For a
commutative composition no factor function can satisfy the literal law
(``factor(x·y)`` cannot equal both orders of concatenation), so the
recomposition reading is the one every shipped instance can meet; with
unique factorisations the two readings coincide.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .atoms import Atom, Permutation, fresh_atoms
from .acs import AcsArrow, AcsInstance, commute_probe, in_leftB, in_rightB


@dataclass
class LawResult:
    law: str
    ok: bool
    checked: int
    witnesses: list = field(default_factory=list)

    def to_obj(self) -> dict:
        return {
            "axiom": self.law,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "witnesses": self.witnesses,
        }


@dataclass
class AxiomReport:
    instance: str
    kind: str
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def to_obj(self) -> dict:
        return {
            "instance": self.instance,
            "kind": self.kind,
            "status": "pass" if self.ok else "fail",
            "laws": [r.to_obj() for r in self.results],
        }


MAX_WITNESSES = 5


class _Law:
    """Accumulates failures for one law."""

    def __init__(self, name: str, inst: AcsInstance):
        self.name = name
        self.inst = inst
        self.checked = 0
        self.witnesses: list = []

    def check(self, ok: bool, *involved: Any) -> None:
        self.checked += 1
        if not ok and len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append([self.inst.label(v) for v in involved])

    def result(self) -> LawResult:
        return LawResult(self.name, not self.witnesses, self.checked, self.witnesses)


def _pairs(samples: Sequence, seed: int, cap: int) -> Iterable[tuple]:
    n = len(samples)
    if n * n <= cap:
        return ((x, y) for x in samples for y in samples)
    rng = random.Random(seed)
    return (
        (samples[rng.randrange(n)], samples[rng.randrange(n)]) for _ in range(cap)
    )


def _triples(samples: Sequence, seed: int, cap: int) -> Iterable[tuple]:
    n = len(samples)
    if n**3 <= cap:
        return ((x, y, z) for x in samples for y in samples for z in samples)
    rng = random.Random(seed)
    return (
        (
            samples[rng.randrange(n)],
            samples[rng.randrange(n)],
            samples[rng.randrange(n)],
        )
        for _ in range(cap)
    )


# ---------------------------------------------------------------------------
# Monoid of chunks


def monoid_axiom_check(
    inst: AcsInstance,
    samples: Sequence,
    seed: int = 0,
    pair_cap: int = 40_000,
    triple_cap: int = 125_000,
    list_samples: int = 400,
) -> AxiomReport:
    """Unit, absorption, order, associativity, monotonicity, increase, locality."""
    samples = list(samples)
    leq, mc, top, bot = inst.leq, inst.mcompose, inst.top, inst.bot
    unit = _Law("unit", inst)
    absorb = _Law("top_absorbing", inst)
    order = _Law("partial_order", inst)
    bounds = _Law("bot_bottom_top_top", inst)
    wf = _Law("well_founded_sample", inst)
    assoc = _Law("associative", inst)
    mono = _Law("monotone", inst)
    incr = _Law("increasing", inst)
    local = _Law("locality_of_failure", inst)

    for x in samples:
        unit.check(mc(bot, x) == x and mc(x, bot) == x, x)
        absorb.check(inst.is_top(mc(top, x)) and inst.is_top(mc(x, top)), x)
        order.check(leq(x, x), x)
        bounds.check(leq(bot, x) and leq(x, top), x)

    for x, y in _pairs(samples, seed + 1, pair_cap):
        order.check(not (leq(x, y) and leq(y, x)) or x == y, x, y)
        z = mc(x, y)
        incr.check(leq(x, z) and leq(y, z), x, y)

    for x, y, z in _triples(samples, seed + 2, triple_cap):
        assoc.check(mc(mc(x, y), z) == mc(x, mc(y, z)), x, y, z)
        if leq(x, y):
            order.check(not leq(y, z) or leq(x, z), x, y, z)
            mono.check(leq(mc(x, z), mc(y, z)) and leq(mc(z, x), mc(z, y)), x, y, z)

    # acyclicity of the strict order on the sample
    strict = {
        (i, j)
        for i, x in enumerate(samples)
        for j, y in enumerate(samples)
        if x != y and leq(x, y)
    }
    wf.check(_acyclic(strict, len(samples)))

    rng = random.Random(seed + 3)
    n = len(samples)
    for _ in range(list_samples):
        k = rng.randint(2, 5)
        xs = [samples[rng.randrange(n)] for _ in range(k)]
        prod = xs[0]
        for item in xs[1:]:
            prod = mc(prod, item)
        if inst.is_top(prod):
            some_pair = any(
                inst.is_top(mc(xs[i], xs[j]))
                for i in range(k)
                for j in range(i + 1, k)
            )
            local.check(some_pair, *xs)
        else:
            local.check(True)

    return AxiomReport(
        inst.name,
        "monoid",
        [r.result() for r in (unit, absorb, order, bounds, wf, assoc, mono, incr, local)],
    )


def _acyclic(edges: set, n: int) -> bool:
    color = [0] * n
    adj: dict[int, list[int]] = {}
    for i, j in edges:
        adj.setdefault(i, []).append(j)

    def visit(i: int) -> bool:
        if color[i] == 1:
            return False
        if color[i] == 2:
            return True
        color[i] = 1
        for j in adj.get(i, ()):
            if not visit(j):
                return False
        color[i] = 2
        return True

    return all(visit(i) for i in range(n))


# ---------------------------------------------------------------------------
# Orientation


def oriented_axiom_check(
    inst: AcsInstance,
    samples: Sequence,
    seed: int = 0,
    probes: Optional[Sequence] = None,
    pair_cap: int = 20_000,
    include_up_composition: bool = False,
) -> AxiomReport:
    """The five orientation axioms plus their direct consequences.

    ``include_up_composition`` additionally checks the optional axiom
    ``up(x·y) ⊆ up(x) ∪ up(y) ∪ (right(x) ∩ left(y))``, which instances are
    free to satisfy or not; it is off by default.
    """
    samples = list(samples)
    probes = list(probes) if probes is not None else samples
    mc = inst.mcompose
    finite = _Law("posi_finite", inst)
    empty_iff = _Law("posi_empty_iff_unit_or_top", inst)
    partition = _Law("posi_partition", inst)
    lr_disjoint = _Law("left_right_disjoint", inst)
    clash = _Law("left_right_clash_fails", inst)
    fresh_commute = _Law("fresh_commute", inst)
    fresh_defined = _Law("fresh_defined", inst)
    up_fail = _Law("up_clash_fails_both", inst)
    make_link = _Law("shared_posi_within_right_left", inst)
    one_fails = _Law("one_composition_fails_or_fresh", inst)
    up_comp = _Law("up_of_composition_bounded", inst)

    for x in samples:
        p = inst.posi(x)
        left, right, up = inst.left(x), inst.right(x), inst.up(x)
        finite.check(isinstance(p, frozenset) and len(p) < 10_000, x)
        is_unit_or_top = inst.is_bot(x) or inst.is_top(x)
        empty_iff.check((not p) == is_unit_or_top, x)
        partition.check(
            p == left | right | up and not (up & left) and not (up & right), x
        )
        lr_disjoint.check(not (left & right), x)

    for x, y in _pairs(samples, seed + 1, pair_cap):
        px, py = inst.posi(x), inst.posi(y)
        xy = mc(x, y)
        if inst.left(x) & inst.right(y):
            clash.check(inst.is_top(xy), x, y)
        if not (px & py):
            fresh_commute.check(commute_probe(x, y, probes, inst), x, y)
            if not inst.is_top(x) and not inst.is_top(y):
                fresh_defined.check(not inst.is_top(xy), x, y)
        else:
            one_fails.check(
                inst.is_top(xy) or inst.is_top(mc(y, x)), x, y
            )
        if inst.up(x) & py:
            up_fail.check(inst.is_top(xy) and inst.is_top(mc(y, x)), x, y)
        if not inst.is_top(xy):
            make_link.check(
                (px & py) <= (inst.right(x) & inst.left(y)), x, y
            )
            if include_up_composition:
                up_comp.check(
                    inst.up(xy)
                    <= inst.up(x) | inst.up(y) | (inst.right(x) & inst.left(y)),
                    x,
                    y,
                )

    results = [
        r.result()
        for r in (
            finite,
            empty_iff,
            partition,
            lr_disjoint,
            clash,
            fresh_commute,
            fresh_defined,
            up_fail,
            make_link,
            one_fails,
        )
    ]
    if include_up_composition:
        results.append(up_comp.result())
    return AxiomReport(inst.name, "oriented", results)


# ---------------------------------------------------------------------------
# Atomicity


def atomic_axiom_check(
    inst: AcsInstance,
    samples: Sequence,
    seed: int = 0,
    strict: Optional[bool] = None,
    pair_cap: int = 20_000,
) -> AxiomReport:
    """Factorisation laws; ``strict`` adds the perfectly-atomic ones.

    ``strict`` defaults to the instance's own ``perfectly_atomic`` flag.
    """
    samples = list(samples)
    if strict is None:
        strict = inst.perfectly_atomic
    mc = inst.mcompose
    recompose = _Law("factor_recomposes", inst)
    atomic_parts = _Law("factor_parts_atomic", inst)
    hom = _Law("factor_homomorphism", inst)
    atomic_single = _Law("atomic_factor_is_singleton", inst)
    unique = _Law("factorisation_unique", inst)
    sub = _Law("factor_respects_order", inst)
    hom_literal = _Law("factor_homomorphism_literal", inst)

    def product(parts: Sequence) -> Any:
        out = inst.bot
        for part in parts:
            out = mc(out, part)
        return out

    non_top = [x for x in samples if not inst.is_top(x)]
    for x in non_top:
        parts = inst.factor(x)
        recompose.check(product(parts) == x, x)
        atomic_parts.check(all(inst.is_atomic(p) for p in parts), x)
        if inst.is_atomic(x):
            atomic_single.check(inst.factor(x) == [x], x)
        if strict and len(parts) <= 5:
            # any reordering that still recomposes to x would be a second
            # factorisation
            ok = all(
                product(reordered) != x
                for reordered in _permutations_capped(parts, 121)
                if list(reordered) != parts
            )
            unique.check(ok, x)

    for x, y in _pairs(non_top, seed + 1, pair_cap):
        xy = mc(x, y)
        if inst.is_top(xy):
            continue
        cat = inst.factor(x) + inst.factor(y)
        hom.check(product(cat) == xy, x, y)
        if strict:
            hom_literal.check(inst.factor(xy) == cat, x, y)
        if inst.leq(x, y):
            sub.check(_is_sublist(inst.factor(x), inst.factor(y)), x, y)

    results = [recompose, atomic_parts, hom, atomic_single]
    if strict:
        results.extend([hom_literal, unique, sub])
    return AxiomReport(inst.name, "atomic", [r.result() for r in results])


def _permutations_capped(items: Sequence, cap: int):
    import itertools

    return itertools.islice(itertools.permutations(items), cap)


def _is_sublist(small: Sequence, big: Sequence) -> bool:
    it = iter(big)
    return all(any(a == b for b in it) for a in small)


# ---------------------------------------------------------------------------
# The freshness equivalence


def partial_converse_check(
    inst: AcsInstance,
    samples: Sequence,
    seed: int = 0,
    probes: Optional[Sequence] = None,
    pair_cap: int = 20_000,
) -> AxiomReport:
    """Three-way equivalence for pairs with at least one defined composition:
    disjoint interfaces ⇔ both orders defined ⇔ commuting up to observation."""
    samples = list(samples)
    probes = list(probes) if probes is not None else samples
    law = _Law("freshness_three_way_equivalence", inst)
    for x, y in _pairs(samples, seed, pair_cap):
        xy, yx = inst.mcompose(x, y), inst.mcompose(y, x)
        if inst.is_top(xy) and inst.is_top(yx):
            continue
        disjoint = not (inst.posi(x) & inst.posi(y))
        both = not inst.is_top(xy) and not inst.is_top(yx)
        commute = commute_probe(x, y, probes, inst)
        law.check(disjoint == both == commute, x, y)
    return AxiomReport(inst.name, "partial_converse", [law.result()])


# ---------------------------------------------------------------------------
# Orientation oracles re-derived from behaviour


def derived_orientation(
    inst: AcsInstance, x: Any, probes: Sequence
) -> tuple[frozenset[Atom], frozenset[Atom], frozenset[Atom]]:
    """(left, right, up) recomputed from composition behaviour over probes.

    An atom of ``x`` points left when some probe mentioning it composes on
    the left, right when one composes on the right, and up otherwise.  Exact
    when the probes realize every connectable counterpart.
    """
    left: set[Atom] = set()
    right: set[Atom] = set()
    p_x = inst.posi(x)
    for y in probes:
        p_y = inst.posi(y)
        if in_leftB(y, x, inst):
            left |= p_x & p_y
        if in_rightB(x, y, inst):
            right |= p_x & p_y
    return frozenset(left), frozenset(right), frozenset(p_x - left - right)


def validate_posi_oracle(
    inst: AcsInstance,
    samples: Sequence,
    seed: int = 0,
    perms_per_atom: int = 5,
    outside_atoms: int = 2,
) -> AxiomReport:
    """Test the posi oracle against its behavioural definition.

    For ``a`` in ``posi(x)``, every permutation fixing ``a`` must yield a
    copy that fails to compose with ``x`` in both orders (sampled).  For
    atoms outside ``posi(x)``, renaming the whole interface to fresh atoms
    exhibits a successful composition, witnessing that they cannot be
    interface atoms.
    """
    samples = [x for x in samples if not inst.is_top(x) and not inst.is_bot(x)]
    rng = random.Random(seed)
    clash = _Law("posi_atoms_defeat_composition", inst)
    fresh_ok = _Law("non_posi_atoms_allow_composition", inst)
    for x in samples:
        interface = sorted(inst.posi(x))
        if not interface:
            continue
        for a in interface:
            for _ in range(perms_per_atom):
                perm = _random_perm_fixing(rng, a, interface)
                moved = inst.act(perm, x)
                clash.check(
                    inst.is_top(inst.mcompose(x, moved))
                    and inst.is_top(inst.mcompose(moved, x)),
                    x,
                )
        for b in fresh_atoms(outside_atoms, interface, prefix="w"):
            targets = fresh_atoms(len(interface), set(interface) | {b})
            perm = Permutation.extending(dict(zip(interface, targets)))
            moved = inst.act(perm, x)
            fresh_ok.check(
                perm.fixes(b) and not inst.is_top(inst.mcompose(x, moved)),
                x,
            )
    return AxiomReport(inst.name, "posi_oracle", [clash.result(), fresh_ok.result()])


def _random_perm_fixing(
    rng: random.Random, fixed: Atom, interface: Sequence[Atom]
) -> Permutation:
    """A seeded permutation fixing ``fixed``, moving a random slice of the
    rest of the interface to fresh or swapped atoms."""
    movable = [a for a in interface if a != fixed]
    rng.shuffle(movable)
    k = rng.randint(0, len(movable))
    chosen = sorted(movable[:k])
    if rng.random() < 0.5 and len(chosen) >= 2:
        rotated = chosen[1:] + chosen[:1]
        return Permutation.extending(dict(zip(chosen, rotated)))
    targets = fresh_atoms(len(chosen), set(interface) | {fixed}, prefix="v")
    return Permutation.extending(dict(zip(chosen, targets)))


# ---------------------------------------------------------------------------
# Arrow laws


def acs_arrow_check(
    arrow: AcsArrow, samples: Sequence, seed: int = 0, pair_cap: int = 20_000
) -> AxiomReport:
    src, tgt = arrow.source, arrow.target
    fixed = _Law("fixes_bot_and_top", src)
    strict_below = _Law("strictly_below_top_preserved", src)
    hom = _Law("monoid_homomorphism", src)
    fixed.check(arrow(src.bot) == tgt.bot and arrow(src.top) == tgt.top)
    samples = list(samples)
    for x, y in _pairs(samples, seed, pair_cap):
        if src.leq(x, y) and not src.is_top(y):
            strict_below.check(
                tgt.leq(arrow(x), arrow(y)) and not tgt.is_top(arrow(y)), x, y
            )
        hom.check(
            tgt.mcompose(arrow(x), arrow(y)) == arrow(src.mcompose(x, y)), x, y
        )
    return AxiomReport(
        f"{src.name}->{tgt.name}",
        "acs_arrow",
        [fixed.result(), strict_below.result(), hom.result()],
    )
