"""Finite rooted binary subtrees, stored by their leaf antichain."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .words import EPSILON, ZETA, format_vertex, lex_key, lex_sorted, parse_vertex


class TreeError(ValueError):
    pass


def is_complete_antichain(leaves: Iterable[str]) -> bool:
    leaves = list(leaves)
    if not leaves or any(not set(w) <= {"0", "1"} for w in leaves):
        return False
    leafset = set(leaves)
    if len(leafset) != len(leaves):
        return False
    for w in leaves:
        if any(w[:k] in leafset for k in range(len(w))):
            return False
    # Kraft equality: the antichain covers every infinite path exactly once
    depth = max(len(w) for w in leaves)
    return sum(1 << (depth - len(w)) for w in leaves) == 1 << depth


@dataclass(frozen=True)
class Tree:
    leaves: tuple[str, ...]

    def __post_init__(self):
        ordered = tuple(lex_sorted(self.leaves))
        if not is_complete_antichain(ordered):
            raise TreeError(f"not a complete antichain: {self.leaves!r}")
        object.__setattr__(self, "leaves", ordered)

    @classmethod
    def trivial(cls) -> "Tree":
        return cls((EPSILON,))

    @cached_property
    def leafset(self) -> frozenset[str]:
        return frozenset(self.leaves)

    @cached_property
    def nodes(self) -> tuple[str, ...]:
        """Internal vertices, lex-sorted."""
        found = {w[:k] for w in self.leaves for k in range(len(w))}
        return tuple(lex_sorted(found))

    @cached_property
    def nodeset(self) -> frozenset[str]:
        return frozenset(self.nodes)

    @property
    def depth(self) -> int:
        return max(len(w) for w in self.leaves)

    def __len__(self) -> int:
        return len(self.leaves)

    def is_leaf(self, x: str) -> bool:
        return x in self.leafset

    def is_node(self, x: str) -> bool:
        return x in self.nodeset

    def leaf_above(self, x: str) -> Optional[str]:
        """The leaf that is a prefix of the word ``x``, if any."""
        if x == ZETA:
            return None
        for k in range(len(x) + 1):
            if x[:k] in self.leafset:
                return x[:k]
        return None

    def b(self, x: str) -> str:
        """The order-preserving bijection nodes + {zeta} -> leaves."""
        if x == ZETA:
            y = EPSILON
        elif x in self.nodeset:
            y = x + "0"
        else:
            raise TreeError(f"{format_vertex(x)} is not a node")
        while y not in self.leafset:
            y += "1"
        return y

    def b_map(self) -> dict[str, str]:
        return {x: self.b(x) for x in self.nodes + (ZETA,)}

    def add_caret(self, leaf: str) -> "Tree":
        if leaf not in self.leafset:
            raise TreeError(f"{format_vertex(leaf)} is not a leaf")
        rest = [w for w in self.leaves if w != leaf]
        return Tree(tuple(rest) + (leaf + "0", leaf + "1"))

    def remove_caret(self, node: str) -> "Tree":
        if node + "0" not in self.leafset or node + "1" not in self.leafset:
            raise TreeError(f"no caret with two leaves below {format_vertex(node)}")
        rest = [w for w in self.leaves if w not in (node + "0", node + "1")]
        return Tree(tuple(rest) + (node,))

    def expand_to_node(self, x: str) -> "Tree":
        """Add carets along the path to ``x`` until it is a node."""
        t = self
        while not t.is_node(x):
            t = t.add_caret(t.leaf_above(x))
        return t

    def __str__(self) -> str:
        return format_tree(self)


def b_inverse(leaf: str) -> str:
    """Inverse of ``Tree.b`` for any tree that has ``leaf`` as a leaf.

    The leaf paired with a node ``n`` is ``n0`` followed by ones, and the
    all-ones leaf is paired with zeta, so the tree itself is not needed.
    """
    if "0" not in leaf:
        return ZETA
    return leaf.rstrip("1")[:-1]


def nodes(t: Tree) -> list[str]:
    return list(t.nodes)


def b_map(t: Tree) -> dict[str, str]:
    return t.b_map()


def add_caret(t: Tree, leaf: str) -> Tree:
    return t.add_caret(leaf)


def common_expansion(t1: Tree, t2: Tree) -> Tree:
    """Coarsest tree refining both arguments."""
    internal = t1.nodeset | t2.nodeset
    if not internal:
        return Tree.trivial()
    kids = {n + c for n in internal for c in "01"}
    return Tree(tuple(kids - internal))


def leaf_depth(t: Tree, x: str) -> int:
    """Word length of the leaf paired with the node ``x`` (or zeta)."""
    return len(t.b(x))


def gap_count(t: Tree, lo: Optional[str] = None, hi: Optional[str] = None) -> int:
    """Number of nodes strictly between ``lo`` and ``hi``; None is unbounded."""
    for end in (lo, hi):
        if end is not None and not t.is_node(end):
            raise TreeError(f"{format_vertex(end)} is not a node")
    klo = lex_key(lo) if lo is not None else None
    khi = lex_key(hi) if hi is not None else None
    return sum(
        1
        for n in t.nodes
        if (klo is None or klo < lex_key(n)) and (khi is None or lex_key(n) < khi)
    )


def build_Tn(n: int) -> Tree:
    """T_1 has two leaves; T_n adds carets to the two lex-smallest leaves of T_(n-1)."""
    if n < 1:
        raise TreeError("T_n needs n >= 1")
    t = Tree(("0", "1"))
    for _ in range(n - 1):
        first, second = t.leaves[0], t.leaves[1]
        t = t.add_caret(first).add_caret(second)
    return t


def format_tree(t: Tree) -> str:
    return " ".join(format_vertex(w) for w in t.leaves)


def parse_tree(text: str) -> Tree:
    tokens = text.split()
    leaves = tuple(parse_vertex(tok) for tok in tokens)
    if list(leaves) != lex_sorted(leaves):
        raise TreeError(f"leaves not lex-sorted: {text!r}")
    return Tree(leaves)
