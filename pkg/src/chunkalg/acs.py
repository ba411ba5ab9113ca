"""Abstract chunk systems: monoids of chunks with orientation and atomicity.

An instance supplies a carrier with a unit ``bot``, an absorbing failure
``top``, a partial order ``leq``, a total composition ``mcompose``, a
factorisation of non-top elements into atomic ones, and orientation oracles
``posi``/``left``/``right``/``up`` assigning each element a finite atom
interface.  The axioms these must satisfy live in :mod:`chunkalg.axioms`;
instances only provide the data.

Three instances ship:

* :class:`FiniteSetsAcs` — finite atom sets under disjoint union, failing on
  overlap.  Every position points up: nothing ever connects.
* :class:`SubstAcs` — finite substitutions from atoms to first-order terms,
  composed by domain-disjoint union and failing on domain overlap.
* :class:`ChunkAcs` — the chunks of a transaction model with the FAIL top:
  the motivating instance, and the only perfectly atomic one here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Iterable, Optional, Sequence

from .atoms import Atom, Permutation, act, value_label
from .ieutxo import (
    FAIL,
    EMPTY_CHUNK,
    Chunk,
    IeutxoModel,
    blocked_utxi,
    blocked_utxo,
    chunk_leq,
    compose,
    enumerate_chunks,
    ledger_sets,
    pos,
)


@dataclass(frozen=True)
class TopElement:
    """A formal failure element for instances whose carrier lacks one."""

    tag: str

    def rename(self, perm: Permutation) -> "TopElement":
        return self

    def label(self) -> str:
        return f"top:{self.tag}"

    def __repr__(self) -> str:
        return f"<top {self.tag}>"


class AcsInstance:
    """Base interface; subclasses fill in the carrier-specific pieces."""

    name: str = "acs"
    perfectly_atomic: bool = False
    bot: Any = None
    top: Any = None

    # -- order and composition
    def leq(self, x: Any, y: Any) -> bool:
        raise NotImplementedError

    def mcompose(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def is_top(self, x: Any) -> bool:
        return x == self.top

    def is_bot(self, x: Any) -> bool:
        return x == self.bot

    # -- atomicity
    def is_atomic(self, x: Any) -> bool:
        raise NotImplementedError

    def factor(self, x: Any) -> list[Any]:
        raise NotImplementedError

    def atomic_elements(self) -> list[Any]:
        """The finite enumeration of atomic elements this build materializes."""
        raise NotImplementedError

    def sample_atomics(self, n: int, seed: int) -> list[Any]:
        rng = random.Random(seed)
        atoms = list(self.atomic_elements())
        rng.shuffle(atoms)
        return atoms[:n]

    # -- orientation oracles
    def posi(self, x: Any) -> frozenset[Atom]:
        raise NotImplementedError

    def left(self, x: Any) -> frozenset[Atom]:
        raise NotImplementedError

    def right(self, x: Any) -> frozenset[Atom]:
        raise NotImplementedError

    def up(self, x: Any) -> frozenset[Atom]:
        raise NotImplementedError

    # -- plumbing
    def act(self, perm: Permutation, x: Any) -> Any:
        return act(perm, x)

    def label(self, x: Any) -> str:
        return value_label(x)

    def sample_elements(self, n: int, seed: int) -> list[Any]:
        raise NotImplementedError


def _sample_from(pool: list, n: int, seed: int, bot: Any, top: Any) -> list:
    """Deterministic sample that always keeps bot and top."""
    if n >= len(pool):
        return list(pool)
    rng = random.Random(seed)
    picked = rng.sample(pool, max(0, n - 2))
    out = [bot, top]
    for x in picked:
        if x not in out:
            out.append(x)
    return out[:n] if n >= 2 else out[:n]


# ---------------------------------------------------------------------------
# Behaviour sets and observational equivalence


def in_leftB(y: Any, x: Any, inst: AcsInstance) -> bool:
    """Membership in the left-behaviour of ``x``: does ``y·x`` avoid the top?"""
    return not inst.is_top(inst.mcompose(y, x))


def in_rightB(x: Any, y: Any, inst: AcsInstance) -> bool:
    """Membership in the right-behaviour of ``x``: does ``x·y`` avoid the top?"""
    return not inst.is_top(inst.mcompose(x, y))


def obs_equiv_probe(
    x: Any, y: Any, probes: Iterable[Any], inst: AcsInstance
) -> bool:
    """Probe-based observational equivalence.

    Left- and right-behaviour membership must agree on every probe.  Exact
    when the probes cover the reachable carrier; otherwise a sound
    approximation (it can only conflate, never separate, equivalent
    elements).
    """
    for p in probes:
        if in_leftB(p, x, inst) != in_leftB(p, y, inst):
            return False
        if in_rightB(x, p, inst) != in_rightB(y, p, inst):
            return False
    return True


def commute_probe(x: Any, y: Any, probes: Iterable[Any], inst: AcsInstance) -> bool:
    """Do ``x·y`` and ``y·x`` agree up to probe-based observation?"""
    return obs_equiv_probe(inst.mcompose(x, y), inst.mcompose(y, x), probes, inst)


# ---------------------------------------------------------------------------
# Finite atom sets


class FiniteSetsAcs(AcsInstance):
    """Finite atom sets; composition is disjoint union, overlap fails."""

    def __init__(self, universe: Sequence[Atom] = ("a", "b", "c", "d")):
        self.universe: tuple[Atom, ...] = tuple(sorted(set(universe)))
        self.name = "finsets"
        self.bot: frozenset[Atom] = frozenset()
        self.top = TopElement("finsets")

    def leq(self, x, y) -> bool:
        if self.is_top(y):
            return True
        if self.is_top(x):
            return False
        return x <= y

    def mcompose(self, x, y):
        if self.is_top(x) or self.is_top(y):
            return self.top
        if x & y:
            return self.top
        return x | y

    def is_atomic(self, x) -> bool:
        return not self.is_top(x) and len(x) == 1

    def factor(self, x) -> list:
        if self.is_top(x):
            raise ValueError("the top element has no factorisation")
        return [frozenset((a,)) for a in sorted(x)]

    def atomic_elements(self) -> list:
        return [frozenset((a,)) for a in self.universe]

    def posi(self, x) -> frozenset[Atom]:
        return frozenset() if self.is_top(x) else frozenset(x)

    def left(self, x) -> frozenset[Atom]:
        return frozenset()

    def right(self, x) -> frozenset[Atom]:
        return frozenset()

    def up(self, x) -> frozenset[Atom]:
        return self.posi(x)

    def enumerate_carrier(self) -> list:
        sets = [
            frozenset(c)
            for r in range(len(self.universe) + 1)
            for c in combinations(self.universe, r)
        ]
        return sorted(sets, key=self.label) + [self.top]

    def sample_elements(self, n: int, seed: int) -> list:
        return _sample_from(self.enumerate_carrier(), n, seed, self.bot, self.top)


# ---------------------------------------------------------------------------
# Finite substitutions


@dataclass(frozen=True)
class Var:
    name: Atom

    def rename(self, perm: Permutation) -> "Var":
        return Var(perm(self.name))

    def label(self) -> str:
        return self.name


@dataclass(frozen=True)
class Fn:
    """A term-former application; 0-ary symbols are constants."""

    symbol: str
    args: tuple = ()

    def rename(self, perm: Permutation) -> "Fn":
        return Fn(self.symbol, tuple(a.rename(perm) for a in self.args))

    def label(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(a.label() for a in self.args)})"


Term = Any  # Var | Fn


@dataclass(frozen=True, init=False)
class Subst:
    """A finite substitution: a sorted tuple of (atom, term) bindings."""

    bindings: tuple[tuple[Atom, Term], ...]

    def __init__(self, bindings: Iterable[tuple[Atom, Term]] = ()):
        items = sorted(dict(bindings).items())
        object.__setattr__(self, "bindings", tuple(items))

    @property
    def dom(self) -> frozenset[Atom]:
        return frozenset(a for a, _ in self.bindings)

    def mapping(self) -> dict:
        return dict(self.bindings)

    def rename(self, perm: Permutation) -> "Subst":
        return Subst((perm(a), t.rename(perm)) for a, t in self.bindings)

    def label(self) -> str:
        body = ",".join(f"{a}:={t.label()}" for a, t in self.bindings)
        return f"[{body}]"

    def __repr__(self) -> str:
        return f"Subst{self.label()}"


class SubstAcs(AcsInstance):
    """Finite substitutions composed by simultaneous domain-disjoint union.

    Domain overlap is the failure mode.  Composition never rewrites terms,
    so listing bindings in domain order gives a factorisation that is safe
    to reorder.
    """

    def __init__(
        self,
        atoms: Sequence[Atom] = ("a", "b", "c", "d"),
        term_pool: Optional[Sequence[Term]] = None,
    ):
        self.atoms: tuple[Atom, ...] = tuple(sorted(set(atoms)))
        if term_pool is None:
            term_pool = [Fn("c"), Fn("f", (Var(self.atoms[0]),))]
        self.term_pool: tuple[Term, ...] = tuple(term_pool)
        self.name = "subst"
        self.bot = Subst(())
        self.top = TopElement("subst")

    def leq(self, x, y) -> bool:
        """Sub-map order: y extends x."""
        if self.is_top(y):
            return True
        if self.is_top(x):
            return False
        ym = y.mapping()
        return all(ym.get(a) == t for a, t in x.bindings)

    def mcompose(self, x, y):
        if self.is_top(x) or self.is_top(y):
            return self.top
        if x.dom & y.dom:
            return self.top
        return Subst(x.bindings + y.bindings)

    def is_atomic(self, x) -> bool:
        return not self.is_top(x) and len(x.bindings) == 1

    def factor(self, x) -> list:
        if self.is_top(x):
            raise ValueError("the top element has no factorisation")
        return [Subst((b,)) for b in x.bindings]

    def atomic_elements(self) -> list:
        return [Subst(((a, t),)) for a in self.atoms for t in self.term_pool]

    def posi(self, x) -> frozenset[Atom]:
        return frozenset() if self.is_top(x) else x.dom

    def left(self, x) -> frozenset[Atom]:
        return self.posi(x)

    def right(self, x) -> frozenset[Atom]:
        return frozenset()

    def up(self, x) -> frozenset[Atom]:
        return frozenset()

    def enumerate_carrier(self) -> list:
        out = []
        atoms = self.atoms
        pools = [[None] + list(self.term_pool) for _ in atoms]

        def build(idx: int, acc: list):
            if idx == len(atoms):
                out.append(Subst(tuple(acc)))
                return
            for choice in pools[idx]:
                if choice is None:
                    build(idx + 1, acc)
                else:
                    build(idx + 1, acc + [(atoms[idx], choice)])

        build(0, [])
        return sorted(out, key=self.label) + [self.top]

    def sample_elements(self, n: int, seed: int) -> list:
        rng = random.Random(seed)
        out = [self.bot, self.top]
        while len(out) < n:
            doms = rng.sample(self.atoms, rng.randint(1, len(self.atoms)))
            out.append(
                Subst(tuple((a, rng.choice(self.term_pool)) for a in doms))
            )
        return out[:n]


# ---------------------------------------------------------------------------
# Chunks of a model


class ChunkAcs(AcsInstance):
    """The chunks of a transaction model, with FAIL as the failure top.

    Orientation oracles are computed concretely: positions come straight off
    the transactions, and the left/right/up split refines the ledger sets by
    blocked-channel analysis (an unspent input or output that no probe can
    connect to points up, alongside the spent channels).
    """

    perfectly_atomic = True

    def __init__(self, model: IeutxoModel):
        self.model = model
        self.name = f"chunks:{model.name}"
        self.bot = EMPTY_CHUNK
        self.top = FAIL
        self._orientation: dict = {}

    def leq(self, x, y) -> bool:
        return chunk_leq(x, y)

    def mcompose(self, x, y):
        return compose(x, y)

    def is_top(self, x) -> bool:
        return x is FAIL

    def is_atomic(self, x) -> bool:
        return isinstance(x, Chunk) and len(x) == 1

    def factor(self, x) -> list:
        if x is FAIL:
            raise ValueError("the failure element has no factorisation")
        return [Chunk((tx,)) for tx in x.txs]

    def atomic_elements(self) -> list:
        return [Chunk((tx,)) for tx in self.model.transactions]

    def posi(self, x) -> frozenset[Atom]:
        return frozenset() if x is FAIL else pos(x)

    def _split(self, x: Chunk) -> tuple[frozenset, frozenset, frozenset]:
        cached = self._orientation.get(x)
        if cached is None:
            unspent_in, unspent_out, spent = ledger_sets(x)
            dead_in = blocked_utxi(x, self.model)
            dead_out = blocked_utxo(x, self.model)
            cached = (
                unspent_in - dead_in,
                unspent_out - dead_out,
                spent | dead_in | dead_out,
            )
            self._orientation[x] = cached
        return cached

    def left(self, x) -> frozenset[Atom]:
        return frozenset() if x is FAIL else self._split(x)[0]

    def right(self, x) -> frozenset[Atom]:
        return frozenset() if x is FAIL else self._split(x)[1]

    def up(self, x) -> frozenset[Atom]:
        return frozenset() if x is FAIL else self._split(x)[2]

    def act(self, perm: Permutation, x):
        return FAIL if x is FAIL else x.rename(perm)

    def enumerate_elements(
        self, max_len: Optional[int] = None, include_fail: bool = True
    ) -> list:
        out: list = list(enumerate_chunks(self.model, max_len))
        out.sort(key=self.label)
        if include_fail:
            out.append(FAIL)
        return out

    def sample_elements(self, n: int, seed: int) -> list:
        return _sample_from(self.enumerate_elements(), n, seed, self.bot, self.top)


# ---------------------------------------------------------------------------
# Arrows


@dataclass(eq=False)
class AcsArrow:
    """A carrier map between instances, applied through ``fn``.

    Arrows must fix bot and top, preserve order strictly below the top, and
    be monoid homomorphisms; :func:`chunkalg.axioms.acs_arrow_check` verifies
    this on samples.  An arrow is determined by its action on atomic
    elements, so equality is table equality on the source atomics.
    """

    source: AcsInstance
    target: AcsInstance
    fn: Callable[[Any], Any]
    tag: str = "arrow"

    def __call__(self, x: Any) -> Any:
        return self.fn(x)

    def atomic_table(self) -> list[tuple[Any, Any]]:
        return [(a, self.fn(a)) for a in self.source.atomic_elements()]


def identity_acs_arrow(inst: AcsInstance) -> AcsArrow:
    return AcsArrow(inst, inst, lambda x: x, tag="id")


def perm_acs_arrow(inst: AcsInstance, perm: Permutation) -> AcsArrow:
    """Renaming along an atom permutation; lawful because every instance
    operation is equivariant."""
    return AcsArrow(inst, inst, lambda x: inst.act(perm, x), tag="perm")


def acs_arrow_from_atomic_table(
    source: AcsInstance, target: AcsInstance, table: dict, tag: str = "table"
) -> AcsArrow:
    """Extend a table on atomics to the whole carrier via factorisation."""

    def fn(x):
        if source.is_top(x):
            return target.top
        if source.is_bot(x):
            return target.bot
        out = target.bot
        for part in source.factor(x):
            out = target.mcompose(out, table[part])
        return out

    return AcsArrow(source, target, fn, tag=tag)


def compose_acs_arrows(f: AcsArrow, g: AcsArrow) -> AcsArrow:
    """The arrow doing ``f`` then ``g``."""
    return AcsArrow(f.source, g.target, lambda x: g.fn(f.fn(x)), tag=f"{g.tag}∘{f.tag}")


def acs_arrows_equal(f: AcsArrow, g: AcsArrow) -> bool:
    """Arrow equality, decided on the source atomics."""
    return all(fy == gy for (_, fy), (_, gy) in zip(f.atomic_table(), g.atomic_table()))
