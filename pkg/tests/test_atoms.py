import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chunkalg.atoms import (
    Permutation,
    act,
    apply,
    compose_perm,
    fixes,
    fresh_atoms,
    invert,
    swap,
    value_label,
)

ATOMS = list("abcdef")


def perms():
    return st.permutations(ATOMS).map(lambda ys: Permutation(dict(zip(ATOMS, ys))))


atoms = st.sampled_from(ATOMS)


def test_swap_basics():
    p = swap("a", "b")
    assert apply(p, "a") == "b"
    assert apply(p, "b") == "a"
    assert apply(p, "c") == "c"
    assert swap("a", "a") == Permutation.identity()
    assert compose_perm(p, p) == Permutation.identity()


def test_fixes():
    assert fixes(Permutation.identity(), "a")
    assert not fixes(swap("a", "b"), "a")
    assert fixes(swap("b", "c"), "a")


def test_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation({"a": "b", "c": "b"})
    with pytest.raises(ValueError):
        Permutation({"a": "b"})  # image != domain


@given(perms(), perms(), atoms)
@settings(max_examples=60, deadline=None)
def test_compose_is_function_composition(p, q, a):
    assert apply(compose_perm(p, q), a) == apply(p, apply(q, a))


@given(perms(), atoms)
@settings(max_examples=60, deadline=None)
def test_invert_is_two_sided(p, a):
    assert apply(compose_perm(p, invert(p)), a) == a
    assert apply(compose_perm(invert(p), p), a) == a


@given(perms(), perms(), perms())
@settings(max_examples=40, deadline=None)
def test_compose_associative(p, q, r):
    assert compose_perm(compose_perm(p, q), r) == compose_perm(p, compose_perm(q, r))


@given(perms())
@settings(max_examples=40, deadline=None)
def test_identity_neutral(p):
    e = Permutation.identity()
    assert compose_perm(e, p) == p
    assert compose_perm(p, e) == p


def test_extending_completes_partial_injections():
    p = Permutation.extending({"a": "x", "b": "y"})
    assert p("a") == "x" and p("b") == "y"
    # bijectivity: the loose targets come back to the loose sources
    assert sorted(p(t) for t in ("x", "y")) == ["a", "b"]
    q = Permutation.extending({"a": "b", "b": "c"})
    assert q("a") == "b" and q("b") == "c" and q("c") == "a"


def test_fresh_atoms_avoid_and_determinism():
    got = fresh_atoms(3, ["z1", "z3"])
    assert got == ["z2", "z4", "z5"]
    assert fresh_atoms(3, ["z1", "z3"]) == got


def test_act_on_containers():
    p = swap("a", "b")
    assert act(p, "a") == "b"
    assert act(p, ("a", "c")) == ("b", "c")
    assert act(p, frozenset({"a", "c"})) == frozenset({"b", "c"})
    assert act(p, 7) == 7


def test_value_label_is_order_independent():
    assert value_label(frozenset({"b", "a"})) == value_label(frozenset({"a", "b"}))
    assert value_label("a") != value_label(1)


def test_action_laws_on_every_overload():
    """Identity acts trivially and composition acts stagewise on all shapes."""
    from chunkalg.ieutxo import Chunk, Input, Output, PointedTransaction, Transaction
    from chunkalg.scripts import InputPositionIn, KeyEquals, Or

    tx = Transaction(
        [Input("a", "k1"), Input("b", "k2")],
        [Output("c", 1, Or(KeyEquals("k1"), InputPositionIn(frozenset({"a", "c"}))))],
    )
    values = [
        tx.inputs[0],
        tx.outputs[0],
        tx,
        (tx,),
        PointedTransaction(tx, tx.inputs[0]),
        Chunk((tx,)),
        tx.outputs[0].validator,
    ]
    e = Permutation.identity()
    p = swap("a", "z")
    q = swap("b", "a")
    for v in values:
        assert act(e, v) == v
        assert act(compose_perm(p, q), v) == act(p, act(q, v))
