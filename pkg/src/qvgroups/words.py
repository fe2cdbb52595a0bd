"""Vertices of the tree plus the isolated vertex zeta.

A vertex is a plain ``str``: binary words are strings over ``"01"`` (the
empty string is the root), and the extra vertex is the sentinel ``ZETA``.
"""
from __future__ import annotations

import re
from typing import Optional

ZETA = "z"
EPSILON = ""

_VERTEX_RE = re.compile(r"e|z|[01]+")

# 0 < 1/2 < 1 becomes "0" < "1" < "2"; the padding tail collapses to one "1"
_LEX_DIGITS = str.maketrans("01", "02")
_BAR = str.maketrans("01", "10")


def is_word(x: str) -> bool:
    return x != ZETA


def lex_key(x: str) -> str:
    """Sort key realising the lex order, with zeta above every word.

    Padding with a constant 1/2 tail only matters at the first position past
    the shorter word, so one trailing pad symbol is enough.
    """
    if x == ZETA:
        return "3"
    return x.translate(_LEX_DIGITS) + "1"


def lex_compare(x: str, y: str) -> int:
    """Return -1, 0 or 1 as ``x`` is below, equal to or above ``y``."""
    kx, ky = lex_key(x), lex_key(y)
    return (kx > ky) - (kx < ky)


def lex_sorted(xs) -> list[str]:
    return sorted(xs, key=lex_key)


def cyclic_order(x: str, y: str, z: str) -> bool:
    """True when (x, y, z) is cyclically non-decreasing for the lex order."""
    kx, ky, kz = lex_key(x), lex_key(y), lex_key(z)
    return kx <= ky <= kz or ky <= kz <= kx or kz <= kx <= ky


def is_cyclically_ordered(xs) -> bool:
    """Some rotation of ``xs`` is lex non-decreasing."""
    keys = [lex_key(x) for x in xs]
    descents = sum(1 for i in range(len(keys)) if keys[i] > keys[(i + 1) % len(keys)])
    return descents <= 1


def bar(x: str) -> str:
    """Swap 0 and 1 in a word; zeta is fixed."""
    if x == ZETA:
        return ZETA
    return x.translate(_BAR)


def prefix_split(x: str, p: str) -> Optional[str]:
    """The suffix ``s`` with ``x == p + s``, or None if ``p`` is not a prefix."""
    if x == ZETA or p == ZETA or not x.startswith(p):
        return None
    return x[len(p):]


def zeros(i: int) -> str:
    return "0" * i


def parse_vertex(token: str) -> str:
    token = token.strip()
    if not _VERTEX_RE.fullmatch(token):
        raise ValueError(f"bad vertex token {token!r}")
    if token == "e":
        return EPSILON
    return token


def format_vertex(x: str) -> str:
    return "e" if x == EPSILON else x


def words_up_to(depth: int):
    """All binary words of length <= depth, shortest first."""
    layer = [EPSILON]
    for _ in range(depth + 1):
        yield from layer
        layer = [w + c for w in layer for c in "01"]
