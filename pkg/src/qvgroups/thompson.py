"""Tree-pair diagram arithmetic for Thompson's groups F, T and V.

An element is stored as its reduced leaf correspondence: a lex-sorted tuple
of (domain leaf, range leaf) pairs.  Reduced diagrams are unique, so
structural equality is group equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Mapping, Sequence

from .trees import Tree, TreeError, b_inverse, common_expansion, parse_tree, format_tree
from .words import ZETA, is_cyclically_ordered, lex_key, lex_sorted

# Elements act on the left: (v * w)(x) == v(w(x)).  A group word x1 x2 ... xk
# is evaluated as the composite x1 o x2 o ... o xk, so xk acts first.  Every
# word evaluation in the package goes through ``word_product``.
LEFT_ACTION = True


def word_product(factors: Sequence, identity):
    """Evaluate a word given as a sequence of group elements."""
    if not LEFT_ACTION:
        factors = list(reversed(factors))
    return reduce(lambda x, y: x * y, factors, identity)


def _reduce_pairs(mapping: dict[str, str]) -> dict[str, str]:
    m = dict(mapping)
    changed = True
    while changed:
        changed = False
        for w in list(m):
            if w not in m or not w.endswith("0"):
                continue
            sib = w[:-1] + "1"
            if sib not in m:
                continue
            u0, u1 = m[w], m[sib]
            if u0.endswith("0") and u1 == u0[:-1] + "1":
                del m[w], m[sib]
                m[w[:-1]] = u0[:-1]
                changed = True
    return m


def _validate(mapping: Mapping[str, str]) -> None:
    Tree(tuple(mapping))
    Tree(tuple(mapping.values()))
    if len(set(mapping.values())) != len(mapping):
        raise TreeError("leaf correspondence is not injective")


@dataclass(frozen=True)
class VElement:
    """A reduced tree-pair diagram."""

    pairs: tuple[tuple[str, str], ...]

    @classmethod
    def from_map(cls, mapping: Mapping[str, str], *, reduce: bool = True) -> "VElement":
        _validate(mapping)
        m = _reduce_pairs(dict(mapping)) if reduce else dict(mapping)
        return cls(tuple(sorted(m.items(), key=lambda p: lex_key(p[0]))))

    @classmethod
    def from_diagram(cls, left: Tree, right: Tree, perm: Sequence[int]) -> "VElement":
        """``perm[i] = j`` sends the i-th leaf of ``left`` to the j-th of ``right``."""
        if len(left) != len(right) or sorted(perm) != list(range(len(left))):
            raise TreeError("perm is not a bijection between the leaf sets")
        return cls.from_map({left.leaves[i]: right.leaves[j] for i, j in enumerate(perm)})

    @classmethod
    def order_preserving(cls, left: Tree, right: Tree) -> "VElement":
        return cls.from_diagram(left, right, range(len(left)))

    @classmethod
    def identity(cls) -> "VElement":
        return cls((("", ""),))

    @cached_property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @cached_property
    def inverse_mapping(self) -> dict[str, str]:
        return {r: l for l, r in self.pairs}

    @cached_property
    def left(self) -> Tree:
        return Tree(tuple(l for l, _ in self.pairs))

    @cached_property
    def right(self) -> Tree:
        return Tree(tuple(r for _, r in self.pairs))

    @property
    def perm(self) -> tuple[int, ...]:
        index = {r: j for j, r in enumerate(self.right.leaves)}
        return tuple(index[self.mapping[l]] for l in self.left.leaves)

    def is_identity(self) -> bool:
        return self.pairs == (("", ""),)

    def __mul__(self, other: "VElement") -> "VElement":
        return multiply(self, other)

    def inverse(self) -> "VElement":
        return VElement.from_map(self.inverse_mapping, reduce=False)

    def __call__(self, x: str) -> str:
        return act(self, x)

    def __str__(self) -> str:
        return format_velement(self)


def expand_domain(v: VElement, tree: Tree) -> dict[str, str]:
    """Leaf correspondence of ``v`` over a refinement of its domain tree."""
    m = v.mapping
    out = {}
    for d in tree.leaves:
        l = v.left.leaf_above(d)
        if l is None:
            raise TreeError("tree does not refine the domain")
        out[d] = m[l] + d[len(l):]
    return out


def expand_range(v: VElement, tree: Tree) -> dict[str, str]:
    inv = v.inverse_mapping
    out = {}
    for e in tree.leaves:
        r = v.right.leaf_above(e)
        if r is None:
            raise TreeError("tree does not refine the range")
        out[inv[r] + e[len(r):]] = e
    return out


def reduce_diagram(left: Tree, right: Tree, perm: Sequence[int]) -> VElement:
    return VElement.from_diagram(left, right, perm)


def multiply(v: VElement, w: VElement) -> VElement:
    """The composite v o w (w acts first)."""
    middle = common_expansion(w.right, v.left)
    inner = expand_range(w, middle)
    outer = expand_domain(v, middle)
    return VElement.from_map({d: outer[e] for d, e in inner.items()})


def invert(v: VElement) -> VElement:
    return v.inverse()


def act(v: VElement, x: str) -> str:
    """Vertex action of the splitting iota(v) on Z = {0,1}* + {zeta}."""
    left = v.left
    if x == ZETA or left.is_node(x):
        return b_inverse(v.mapping[left.b(x)])
    leaf = left.leaf_above(x)
    return v.mapping[leaf] + x[len(leaf):]


def is_in_F(v: VElement) -> bool:
    images = [v.mapping[l] for l in v.left.leaves]
    return images == lex_sorted(images)


def is_in_T(v: VElement) -> bool:
    return is_cyclically_ordered(v.mapping[l] for l in v.left.leaves)


def _tree(*leaves: str) -> Tree:
    return Tree(leaves)


def generator(name: str) -> VElement:
    three = _tree("0", "10", "11")
    if name == "A":
        return VElement.order_preserving(three, _tree("00", "01", "1"))
    if name == "B":
        return VElement.order_preserving(_tree("0", "10", "110", "111"), _tree("0", "100", "101", "11"))
    if name == "C":
        return VElement.from_map({"0": "11", "10": "0", "11": "10"})
    if name == "D":
        return VElement.from_map({"0": "10", "10": "0", "11": "11"})
    raise ValueError(f"unknown generator {name!r}")


A, B, C, D = (generator(n) for n in "ABCD")


def power(v: VElement, n: int) -> VElement:
    base = v if n >= 0 else v.inverse()
    out = VElement.identity()
    for _ in range(abs(n)):
        out = out * base
    return out


def derived_generator(name: str, n: int) -> VElement:
    """beta_n, gamma_n or delta_n (names ``"beta"``, ``"gamma"``, ``"delta"``).

    delta_0 is the basic generator D.  The other natural reading,
    alpha delta_1 alpha^-1, gives a delta' that differs from its tree diagram.
    """
    if name == "beta":
        if n < 1:
            raise ValueError("beta_n needs n >= 1")
        return word_product([power(A, -(n - 1)), B, power(A, n - 1)], VElement.identity())
    if name == "gamma":
        if n < 1:
            raise ValueError("gamma_n needs n >= 1")
        return word_product([power(A, -(n - 1)), C, power(B, n - 1)], VElement.identity())
    if name == "delta":
        if n < 0:
            raise ValueError("delta_n needs n >= 0")
        if n == 0:
            return D
        g2 = derived_generator("gamma", 2)
        d1 = word_product([g2.inverse(), D, g2], VElement.identity())
        return word_product([power(A, -(n - 1)), d1, power(A, n - 1)], VElement.identity())
    raise ValueError(f"unknown derived generator {name!r}")


def format_velement(v: VElement) -> str:
    perm = ",".join(f"{i}:{j}" for i, j in enumerate(v.perm))
    return f"L={format_tree(v.left)};R={format_tree(v.right)};f={perm}"


def parse_velement(text: str) -> VElement:
    fields = {}
    for part in text.strip().split(";"):
        key, _, value = part.partition("=")
        fields[key.strip()] = value
    try:
        left, right = parse_tree(fields["L"]), parse_tree(fields["R"])
        perm_text = fields["f"]
    except KeyError as exc:
        raise ValueError(f"missing field {exc} in {text!r}") from None
    pairs = dict(item.split(":") for item in perm_text.split(",") if item)
    perm = [int(pairs[str(i)]) for i in range(len(pairs))]
    return VElement.from_diagram(left, right, perm)


def all_trees(max_leaves: int, max_depth: int) -> list[Tree]:
    """Every tree with at most ``max_leaves`` leaves and depth <= ``max_depth``."""
    found = {Tree.trivial()}
    frontier = [Tree.trivial()]
    while frontier:
        nxt = []
        for t in frontier:
            if len(t) >= max_leaves:
                continue
            for leaf in t.leaves:
                if len(leaf) < max_depth:
                    s = t.add_caret(leaf)
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        frontier = nxt
    return sorted(found, key=lambda t: (len(t), [lex_key(w) for w in t.leaves]))


def iter_elements(trees: Iterable[Tree]):
    """Helper for exhaustive tests: every order-preserving pair of equal size."""
    by_size: dict[int, list[Tree]] = {}
    for t in trees:
        by_size.setdefault(len(t), []).append(t)
    for group in by_size.values():
        for l in group:
            for r in group:
                yield VElement.order_preserving(l, r)
