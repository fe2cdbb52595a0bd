from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from qvgroups.words import (
    ZETA,
    bar,
    cyclic_order,
    format_vertex,
    is_cyclically_ordered,
    lex_compare,
    lex_sorted,
    parse_vertex,
    prefix_split,
    words_up_to,
)

words = st.text(alphabet="01", max_size=8)
vertices = st.one_of(words, st.just(ZETA))


def padded(x: str, n: int = 20) -> list[float]:
    """Independent lex oracle: pad with 1/2 and compare as sequences."""
    if x == ZETA:
        return [2.0]
    return [float(c) for c in x] + [0.5] * (n - len(x))


def test_lex_examples():
    assert lex_compare("00", "0") == -1
    assert lex_compare("01", "0") == 1
    assert lex_compare("0110", "0110") == 0
    assert lex_compare("11", ZETA) == -1
    assert lex_sorted(["1", "", "0"]) == ["0", "", "1"]


@given(vertices, vertices)
def test_lex_matches_padding_oracle(x, y):
    a, b = padded(x), padded(y)
    assert lex_compare(x, y) == (a > b) - (a < b)


def test_cyclic_order():
    assert cyclic_order("0", "", "1")
    assert cyclic_order("", "1", "0")
    assert not cyclic_order("1", "", "0")


@given(st.lists(vertices, min_size=1, max_size=5, unique=True))
def test_cyclically_ordered_means_some_rotation_sorted(xs):
    rotations = [xs[i:] + xs[:i] for i in range(len(xs))]
    assert is_cyclically_ordered(xs) == any(r == lex_sorted(r) for r in rotations)


def test_three_points_have_exactly_three_cyclic_orders():
    good = [p for p in permutations(["0", "", "1"]) if is_cyclically_ordered(p)]
    assert len(good) == 3


def test_bar_and_prefix():
    assert bar("011") == "100"
    assert bar("") == ""
    assert bar(ZETA) == ZETA
    assert prefix_split("0110", "01") == "10"
    assert prefix_split("0110", "10") is None
    assert prefix_split("0110", "") == "0110"
    assert prefix_split(ZETA, "") is None


@given(words)
def test_bar_involution(x):
    assert bar(bar(x)) == x


def test_vertex_tokens():
    assert parse_vertex("e") == ""
    assert parse_vertex("z") == ZETA
    assert parse_vertex(" 0101 ") == "0101"
    assert format_vertex("") == "e"
    for bad in ["", "2", "e0", "zz", "0a"]:
        with pytest.raises(ValueError):
            parse_vertex(bad)


def test_words_up_to():
    ws = list(words_up_to(3))
    assert len(ws) == 15 and len(set(ws)) == 15
    assert ws[0] == ""
