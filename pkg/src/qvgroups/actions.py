"""Orbit and stabilizer constructions for the actions of F, T and V on tuples of Z.

Every witness maps the base tuple y_i = 0^(n-i) (so y_n is the root) onto
the requested targets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .characters import chi, mirror, tilde_chi
from .thompson import VElement, act, expand_domain, power, word_product
from .trees import Tree, build_Tn, common_expansion
from .words import ZETA, format_vertex, is_cyclically_ordered, lex_sorted, parse_vertex, zeros

__all__ = [
    "VertexTuple", "parse_tuple", "format_tuple", "base_tuple",
    "sigma_witness", "lambda_witness", "delta_witness", "stabilizer_generators",
    "lambda_ni", "in_Ln", "tilde_chi", "chi", "conj_into_L2", "conj_into_Ln",
    "bnsr_witness_fixing", "kernel_transitivity_witness", "ActionError",
]

FLAVORS = {"S": "Sigma", "L": "Lambda", "D": "Delta"}


class ActionError(ValueError):
    pass


@dataclass(frozen=True)
class VertexTuple:
    entries: tuple[str, ...]
    flavor: str = "D"

    def __post_init__(self):
        xs = self.entries
        if self.flavor not in FLAVORS:
            raise ActionError(f"unknown flavor {self.flavor!r}")
        if not xs:
            raise ActionError("empty tuple")
        if len(set(xs)) != len(xs):
            raise ActionError("entries not distinct")
        if self.flavor == "S":
            if ZETA in xs:
                raise ActionError("Sigma tuples hold words only")
            if list(xs) != lex_sorted(xs):
                raise ActionError("Sigma tuple not lex increasing")
        if self.flavor == "L" and not is_cyclically_ordered(xs):
            raise ActionError("Lambda tuple not cyclically ordered")

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_tuple(self)


def parse_tuple(text: str) -> VertexTuple:
    flavor, sep, body = text.strip().partition(":")
    if not sep or flavor not in FLAVORS:
        raise ActionError(f"bad tuple {text!r}")
    try:
        entries = tuple(parse_vertex(tok) for tok in body.split(","))
    except ValueError as exc:
        raise ActionError(str(exc)) from None
    return VertexTuple(entries, flavor)


def format_tuple(t: VertexTuple) -> str:
    return t.flavor + ":" + ",".join(format_vertex(x) for x in t.entries)


def base_tuple(n: int) -> tuple[str, ...]:
    return tuple(zeros(n - i) for i in range(1, n + 1))


def tree_with_nodes(words: Sequence[str]) -> Tree:
    """The smallest tree having every given word as a node."""
    nodes = {w[:k] for w in words if w != ZETA for k in range(len(w) + 1)}
    if not nodes:
        return Tree.trivial()
    return Tree(tuple({n + c for n in nodes for c in "01"} - nodes))


def _points(t: Tree) -> list[str]:
    """nodes + zeta in lex order: the domain of b_t."""
    return list(t.nodes) + [ZETA]


def _permuting_element(t: Tree, images: dict[str, str]) -> VElement:
    """The element (t, t, f) whose iota permutes nodes + zeta as ``images``."""
    leaves = dict(zip(_points(t), t.leaves))
    return VElement.from_map({leaves[x]: leaves[y] for x, y in images.items()})


def _check(targets: VertexTuple, flavor: str) -> tuple[str, ...]:
    if targets.flavor != flavor:
        raise ActionError(f"expected a {FLAVORS[flavor]} tuple")
    return targets.entries


def sigma_witness(targets: VertexTuple) -> VElement:
    """f in F with iota(f) mapping the base tuple onto ``targets``."""
    xs = _check(targets, "S")
    ys = base_tuple(len(xs))
    left, right = tree_with_nodes(ys), tree_with_nodes(xs)

    def gaps(t: Tree, marks) -> list[int]:
        pos = [t.nodes.index(m) for m in marks]
        bounds = [-1] + pos + [len(t.nodes)]
        return [bounds[k + 1] - bounds[k] - 1 for k in range(len(bounds) - 1)]

    def grow(t: Tree, marks, gap: int) -> Tree:
        # in lex order leaves and nodes alternate, so gap k owns the leaf
        # just after its lower bounding node
        pos = [t.nodes.index(m) for m in marks]
        lo = pos[gap - 1] + 1 if gap > 0 else 0
        return t.add_caret(t.leaves[lo])

    for k in range(len(xs) + 1):
        while True:
            gl, gr = gaps(left, ys)[k], gaps(right, xs)[k]
            if gl == gr:
                break
            if gl < gr:
                left = grow(left, ys, k)
            else:
                right = grow(right, xs, k)
    return VElement.order_preserving(left, right)


def _sort_into_words(xs: Sequence[str], t: Tree, cyclic: bool) -> tuple[VElement, list[str]]:
    """An element of T (cyclic) or V moving ``xs`` to lex-increasing words."""
    pts = _points(t)
    if cyclic:
        # a leaf sits between cyclically consecutive points; a caret on the
        # leaf after the last target creates a free point right after it,
        # and rotating that point onto zeta keeps every target a word
        i = pts.index(xs[-1])
        t = t.add_caret(t.leaves[(i + 1) % len(t.leaves)])
        pts = _points(t)
        start = (pts.index(xs[-1]) + 2) % len(pts)
        order = pts[start:] + pts[:start]
    else:
        while len(pts) - 1 < len(xs):
            t = t.add_caret(t.leaves[0])
            pts = _points(t)
        order = list(xs) + [p for p in pts if p not in xs]
    rot = _permuting_element(t, dict(zip(order, pts)))
    return rot, [act(rot, x) for x in xs]


def lambda_witness(targets: VertexTuple) -> VElement:
    """t in T with iota(t) mapping the base tuple onto ``targets``."""
    xs = _check(targets, "L")
    if ZETA not in xs and list(xs) == lex_sorted(xs):
        return sigma_witness(VertexTuple(xs, "S"))
    rot, words = _sort_into_words(xs, tree_with_nodes(xs), cyclic=True)
    f = sigma_witness(VertexTuple(tuple(words), "S"))
    return rot.inverse() * f


def delta_witness(targets: VertexTuple) -> VElement:
    """v in V with iota(v) mapping the base tuple onto ``targets``."""
    xs = _check(targets, "D")
    rot, words = _sort_into_words(xs, tree_with_nodes(xs), cyclic=False)
    f = sigma_witness(VertexTuple(tuple(words), "S"))
    return rot.inverse() * f


def stabilizer_generators(group: str) -> list[str]:
    """The stabilizer-commutation words of a built-in presentation."""
    from .presentations import builtin_presentation

    return [str(w) for w in builtin_presentation(group).x_set.values()]


def lambda_ni(n: int, i: int) -> VElement:
    if not 1 <= i <= n:
        raise ActionError(f"need 1 <= i <= n, got n={n}, i={i}")
    t = build_Tn(n)
    return VElement.order_preserving(t.add_caret(t.leaves[2 * i - 1]), t.add_caret(t.leaves[2 * i - 2]))


def Ln_points(n: int) -> tuple[str, ...]:
    """(0^(n-2), ..., 0, e, zeta): the tuple fixed by L_n."""
    return tuple(zeros(n - 1 - j) for j in range(1, n)) + (ZETA,)


def Ln_roots(n: int) -> tuple[str, ...]:
    """Roots of the subtrees fixed by L_n: the even-numbered leaves of T_n."""
    return build_Tn(n).leaves[1::2]


def in_Ln(v: VElement, n: int) -> bool:
    if n < 2:
        raise ActionError("L_n needs n >= 2")
    for root in Ln_roots(n):
        leaf = v.left.leaf_above(root)
        if leaf is None or v.mapping[leaf] != leaf:
            return False
    return True


def _refine_both(v: VElement, t: Tree) -> tuple[Tree, Tree]:
    left = common_expansion(v.left, t)
    right = Tree(tuple(expand_domain(v, left).values()))
    if common_expansion(right, t) != right:
        right = common_expansion(right, t)
        inv = v.inverse()
        left = Tree(tuple(expand_domain(inv, right).values()))
    return left, right


def conj_into_Ln(n: int, v: VElement) -> tuple[list[int], list[int], VElement]:
    """Exponents (a, c) and w = prod lambda_{n,j}^(c_j) * v * prod lambda_{n,j}^(-a_j) in L_n.

    a_j and c_j are l_p(L) - l_p(T_n) and l_p(R) - l_p(T_n) for the j-th
    fixed point p, on a representative (L, R) refining T_n on both sides.
    """
    pts = Ln_points(n)
    if any(act(v, p) != p for p in pts):
        raise ActionError("does not stabilize the base tuple")
    tn = build_Tn(n)
    left, right = _refine_both(v, tn)
    a = [len(left.b(p)) - len(tn.b(p)) for p in pts]
    c = [len(right.b(p)) - len(tn.b(p)) for p in pts]
    lam = [lambda_ni(n, j) for j in range(1, n + 1)]
    before = [power(l, k) for l, k in zip(lam, c)]
    after = [power(l, -k) for l, k in zip(lam, a)]
    w = word_product(before + [v] + after, VElement.identity())
    return a, c, w


def conj_into_L2(v: VElement) -> tuple[int, int, int, int, VElement]:
    try:
        (a, b), (c, d), w = conj_into_Ln(2, v)
    except ActionError:
        raise ActionError("does not stabilize (e, zeta)") from None
    return a, b, c, d, w


def bnsr_witness_fixing(a: int) -> VElement:
    """f in F fixing e, 0 and 1 under iota, with chi(f) = (0, a)."""
    if a < 0:
        return bnsr_witness_fixing(-a).inverse()
    left = right = Tree(("0", "10", "110", "111"))
    for _ in range(a):
        left = left.add_caret(left.leaves[-1])
        right = right.add_caret(right.leaves[-2])
    return VElement.order_preserving(left, right)


def kernel_transitivity_witness(x1: str, x2: str) -> VElement:
    """f with chi(f) = (0, 0) and iota(f): 0 -> x1, e -> x2."""
    f = sigma_witness(VertexTuple((x1, x2), "S"))
    c0, c1 = chi(f)
    f1 = bnsr_witness_fixing(-c1)
    f0 = bnsr_witness_fixing(-c0)
    # mirror swaps the two characters and still fixes e, 0 and 1
    return word_product([f, f1, mirror(f0)], VElement.identity())
