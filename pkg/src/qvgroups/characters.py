"""Leaf-depth characters on vertex stabilizers of V, and the characters of F."""
from __future__ import annotations

from .thompson import VElement, act, expand_domain, is_in_F
from .trees import Tree
from .words import bar, format_vertex


class CharacterError(ValueError):
    pass


def mirror(v: VElement) -> VElement:
    """Conjugate a tree-pair diagram by the 0/1 swap."""
    return VElement.from_map({bar(l): bar(r) for l, r in v.pairs})


def expand_at(v: VElement, x: str) -> tuple[Tree, Tree]:
    """A representative (L, R) of ``v`` in which ``x`` is a node of L."""
    left = v.left.expand_to_node(x) if x != "z" else v.left
    images = expand_domain(v, left)
    return left, Tree(tuple(images.values()))


def tilde_chi(x: str, v: VElement) -> int:
    """l_x(L) - l_x(R), where l_x(T) is the length of the leaf b_T(x)."""
    if act(v, x) != x:
        raise CharacterError(f"{format_vertex(x)} not stabilized")
    left, right = expand_at(v, x)
    return len(left.b(x)) - len(right.b(x))


def chi(f: VElement) -> tuple[int, int]:
    """(chi_0, chi_1) of an element of F."""
    if not is_in_F(f):
        raise CharacterError("not in F")
    return tilde_chi("z", mirror(f)), tilde_chi("z", f)
