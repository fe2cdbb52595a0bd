import random
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from qvgroups.thompson import (
    A,
    B,
    C,
    D,
    VElement,
    act,
    all_trees,
    derived_generator,
    format_velement,
    generator,
    is_in_F,
    is_in_T,
    parse_velement,
    power,
)
from qvgroups.trees import Tree, TreeError
from qvgroups.words import ZETA, words_up_to

GENS = [A, B, C, D, A.inverse(), B.inverse(), C.inverse(), D.inverse()]
BALL = [ZETA] + list(words_up_to(6))

elements = st.lists(st.sampled_from(GENS), max_size=6).map(
    lambda fs: reduce(lambda x, y: x * y, fs, VElement.identity())
)


def substitute(v: VElement, x: str) -> str:
    """Prefix substitution, valid for words below every leaf of the domain."""
    for l, r in v.pairs:
        if x.startswith(l):
            return r + x[len(l):]
    raise AssertionError("word above the domain leaves")


def test_reduction_examples():
    t = Tree(("0", "1"))
    assert VElement.from_diagram(t, t, [0, 1]).is_identity()
    three = Tree(("0", "10", "11"))
    a = VElement.order_preserving(three, Tree(("00", "01", "1")))
    assert a == A and a.pairs == (("0", "00"), ("10", "01"), ("11", "1"))


def test_padded_diagram_reduces_to_source():
    rng = random.Random(0)
    for _ in range(200):
        v = rng.choice(GENS) * rng.choice(GENS) * rng.choice(GENS)
        m = dict(v.pairs)
        leaf = rng.choice(list(m))
        img = m.pop(leaf)
        m[leaf + "0"], m[leaf + "1"] = img + "0", img + "1"
        assert VElement.from_map(m) == v


def test_from_map_rejects_bad_input():
    with pytest.raises(TreeError):
        VElement.from_map({"0": "0", "10": "1"})
    with pytest.raises(TreeError):
        VElement.from_map({"0": "0", "1": "0"})


def test_multiply_examples():
    for v in GENS:
        assert (v * v.inverse()).is_identity()
        assert VElement.identity() * v == v
    ab = A * B
    deep = [w for w in words_up_to(8) if len(w) == 8]
    assert all(substitute(ab, x) == substitute(A, substitute(B, x)) for x in deep)


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_vertex_action_is_a_homomorphism(v, w):
    vw = v * w
    assert all(act(vw, x) == act(v, act(w, x)) for x in BALL)


@settings(max_examples=100, deadline=None)
@given(elements, elements, elements)
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


def test_inverse():
    assert VElement.identity().inverse().is_identity()
    assert A.inverse().inverse() == A
    assert A.inverse().left == Tree(("00", "01", "1"))
    assert A.inverse().right == Tree(("0", "10", "11"))


def test_membership():
    assert is_in_F(A) and is_in_F(B) and is_in_F(VElement.identity())
    assert not is_in_F(C) and is_in_T(C)
    assert not is_in_T(D)
    for v in (A, B, A * B.inverse(), power(A, 3)):
        assert is_in_T(v)


def test_generator_actions():
    # the figure labels give image of each vertex under iota
    fig_a = {"": "0", "1": "", ZETA: ZETA, "0": "00", "10": "01", "11": "1"}
    fig_c = {"": ZETA, ZETA: "1", "1": "", "0": "11", "10": "0", "11": "10"}
    assert {x: act(A, x) for x in fig_a} == fig_a
    assert {x: act(C, x) for x in fig_c} == fig_c
    assert act(B, "110") == "101"
    with pytest.raises(ValueError):
        generator("E")


def test_vertex_action_bijective_on_balls():
    for v in GENS + [A * C * D]:
        images = {act(v, x) for x in BALL}
        assert len(images) == len(BALL)


def test_derived_generators():
    assert derived_generator("beta", 1) == B
    assert derived_generator("gamma", 1) == C
    g2 = derived_generator("gamma", 2)
    assert derived_generator("delta", 1) == g2.inverse() * D * g2
    assert derived_generator("delta", 0) == D
    b2 = derived_generator("beta", 2)
    assert b2 == A.inverse() * B * A
    with pytest.raises(ValueError):
        derived_generator("beta", 0)


def test_power():
    assert power(A, 0).is_identity()
    assert power(A, -2) == (A * A).inverse()
    assert power(C, 3).is_identity()
    assert power(D, 2).is_identity()


def test_serialization_round_trip():
    assert format_velement(VElement.identity()) == "L=e;R=e;f=0:0"
    assert format_velement(C) == "L=0 10 11;R=0 10 11;f=0:2,1:0,2:1"
    rng = random.Random(1)
    for _ in range(100):
        v = rng.choice(GENS) * rng.choice(GENS) * rng.choice(GENS)
        assert parse_velement(format_velement(v)) == v
    with pytest.raises(ValueError):
        parse_velement("L=0 1;f=0:0,1:1")


def test_all_trees_counts():
    # full binary trees with n leaves: Catalan(n-1), when depth is unconstrained
    counts = [len([t for t in all_trees(5, 5) if len(t) == n]) for n in range(1, 6)]
    assert counts == [1, 1, 2, 5, 14]
