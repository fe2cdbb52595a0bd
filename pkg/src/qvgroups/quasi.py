"""Quasi-automorphisms as pairs (sigma, v) meaning sigma o iota(v).

All five groups QF, QT, QV, tQT and tQV live inside ``QElement``; they are
told apart by the membership predicates at the bottom of this module.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .characters import chi
from .thompson import (
    A,
    VElement,
    act,
    format_velement,
    is_in_F,
    is_in_T,
    parse_velement,
)
from .words import ZETA, bar, format_vertex, lex_key, parse_vertex, words_up_to


class QuasiError(ValueError):
    pass


GROUPS = ("QF", "QT", "QV", "tQT", "tQV")
SUBGROUPS = ("SymStar", "AltStar", "SymZ", "AltZ")


@dataclass(frozen=True)
class FinitePermutation:
    """A finite-support bijection of Z; only moved points are stored."""

    moved: tuple[tuple[str, str], ...] = ()

    @classmethod
    def from_map(cls, mapping: Mapping[str, str]) -> "FinitePermutation":
        m = {x: y for x, y in mapping.items() if x != y}
        if set(m) != set(m.values()):
            raise QuasiError("not bijective")
        return cls(tuple(sorted(m.items(), key=lambda p: lex_key(p[0]))))

    @classmethod
    def cycle(cls, *xs: str) -> "FinitePermutation":
        if len(set(xs)) != len(xs):
            raise QuasiError("repeated vertex in cycle")
        return cls.from_map({x: xs[(i + 1) % len(xs)] for i, x in enumerate(xs)})

    @classmethod
    def transposition(cls, x: str, y: str) -> "FinitePermutation":
        return cls.cycle(x, y)

    @cached_property
    def mapping(self) -> dict[str, str]:
        return dict(self.moved)

    @property
    def support(self) -> list[str]:
        return [x for x, _ in self.moved]

    def __call__(self, x: str) -> str:
        return self.mapping.get(x, x)

    def __mul__(self, other: "FinitePermutation") -> "FinitePermutation":
        pts = set(self.mapping) | set(other.mapping)
        return FinitePermutation.from_map({x: self(other(x)) for x in pts})

    def inverse(self) -> "FinitePermutation":
        return FinitePermutation.from_map({y: x for x, y in self.moved})

    def conjugate(self, g) -> "FinitePermutation":
        """g o self o g^-1 for a bijection ``g`` of Z given as a callable."""
        return FinitePermutation.from_map({g(x): g(y) for x, y in self.moved})

    def is_identity(self) -> bool:
        return not self.moved

    def cycles(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        out = []
        for start in sorted(self.mapping, key=lex_key):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.mapping[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.mapping[x]
            out.append(tuple(cyc))
        return out

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def __str__(self) -> str:
        return format_permutation(self)


def format_permutation(p: FinitePermutation) -> str:
    if p.is_identity():
        return "()"
    return "".join("(" + " ".join(format_vertex(x) for x in c) + ")" for c in p.cycles())


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str) -> FinitePermutation:
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"bad cycle notation {text!r}")
    out = FinitePermutation()
    for body in _CYCLE_RE.findall(text):
        tokens = body.split()
        if len(tokens) > 1:
            out = out * FinitePermutation.cycle(*(parse_vertex(t) for t in tokens))
    return out


@dataclass(frozen=True)
class QElement:
    sigma: FinitePermutation = field(default_factory=FinitePermutation)
    v: VElement = field(default_factory=VElement.identity)

    @classmethod
    def identity(cls) -> "QElement":
        return cls()

    @classmethod
    def transposition(cls, x: str, y: str) -> "QElement":
        return cls(FinitePermutation.transposition(x, y), VElement.identity())

    def __call__(self, x: str) -> str:
        return apply(self, x)

    def __mul__(self, other: "QElement") -> "QElement":
        return multiply(self, other)

    def inverse(self) -> "QElement":
        return invert(self)

    def is_identity(self) -> bool:
        return self.sigma.is_identity() and self.v.is_identity()

    def __str__(self) -> str:
        return format_qelement(self)


def iota(v: VElement) -> QElement:
    return QElement(FinitePermutation(), v)


def apply(q: QElement, x: str) -> str:
    return q.sigma(act(q.v, x))


def multiply(q1: QElement, q2: QElement) -> QElement:
    """The composite q1 o q2."""
    moved = q2.sigma.conjugate(lambda x: act(q1.v, x))
    return QElement(q1.sigma * moved, q1.v * q2.v)


def invert(q: QElement) -> QElement:
    w = q.v.inverse()
    return QElement(q.sigma.inverse().conjugate(lambda x: act(w, x)), w)


def pi(q: QElement) -> VElement:
    return q.v


@dataclass(frozen=True)
class RawQuasiMap:
    """A bijection of Z given by a prefix rule plus finitely many exceptions.

    Outside ``exceptions`` the map is the action of ``iota(prefix_rule)``:
    leaf substitution below the leaves of the domain tree and the b-map
    rule on its nodes and on zeta.
    """

    exceptions: Mapping[str, str]
    prefix_rule: VElement

    def __call__(self, x: str) -> str:
        if x in self.exceptions:
            return self.exceptions[x]
        return act(self.prefix_rule, x)


def canonicalize(raw: RawQuasiMap) -> QElement:
    v = raw.prefix_rule
    # sigma = raw o iota(v)^-1 can only move iota(v)-images of exceptions
    entries = {}
    for x, y in raw.exceptions.items():
        entries[act(v, x)] = y
    if len(set(entries.values())) != len(entries) or set(entries) != set(entries.values()):
        raise QuasiError("not bijective")
    return QElement(FinitePermutation.from_map(entries), v)


def equals(q1: QElement, q2: QElement) -> bool:
    return q1 == q2


def ball(depth: int) -> Iterable[str]:
    yield ZETA
    yield from words_up_to(depth)


def pointwise_agree(q1: QElement, q2: QElement, depth: int) -> bool:
    return all(apply(q1, x) == apply(q2, x) for x in ball(depth))


def _support_length(q: QElement) -> int:
    return max((len(x) for x in q.sigma.support if x != ZETA), default=0)


def oracle_depth(q1: QElement, q2: QElement) -> int:
    leaves = max(q1.v.left.depth, q1.v.right.depth, q2.v.left.depth, q2.v.right.depth)
    return leaves + max(_support_length(q1), _support_length(q2)) + 2


def nu(q: QElement) -> QElement:
    """Conjugate ``q`` by the 0/1 swap on words."""
    from .characters import mirror

    mv = mirror(q.v)
    w = q.v.inverse()
    special = {ZETA} | set(mv.left.nodes)
    special |= {bar(act(w, y)) for y in q.sigma.support}
    exceptions = {x: bar(apply(q, bar(x))) for x in special}
    return canonicalize(RawQuasiMap(exceptions, mv))


def parity(p) -> int:
    if isinstance(p, QElement):
        p = p.sigma
    return p.parity()


def membership(q: QElement, group: str) -> bool:
    v = q.v
    if group == "tQV":
        return True
    if group == "tQT":
        return is_in_T(v)
    if group == "QV":
        return apply(q, ZETA) == ZETA
    if group == "QF":
        return apply(q, ZETA) == ZETA and is_in_F(v)
    if group == "QT":
        return apply(q, ZETA) == ZETA and is_in_T(v)
    sym = v.is_identity()
    if group == "SymZ":
        return sym
    if group == "AltZ":
        return sym and parity(q) == 0
    if group == "SymStar":
        return sym and q.sigma(ZETA) == ZETA
    if group == "AltStar":
        return sym and q.sigma(ZETA) == ZETA and parity(q) == 0
    raise ValueError(f"unknown group {group!r}")


def _require(q: QElement, group: str) -> None:
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    if not membership(q, group):
        raise QuasiError(f"not a member of {group}")


def in_commutator(q: QElement, group: str) -> bool:
    _require(q, group)
    even = parity(q) == 0
    if group == "QF":
        return even and chi(q.v) == (0, 0)
    if group == "tQT":
        return even and is_in_T(q.v)
    return even


def abelianization_image(q: QElement, group: str) -> tuple[int, ...]:
    """QF: (chi_0, chi_1, parity); the other groups: (parity,)."""
    _require(q, group)
    if group == "QF":
        return (*chi(q.v), parity(q))
    return (parity(q),)


def in_QF1(q: QElement) -> bool:
    """q lies in QF and fixes every vertex outside the subtree at 1."""
    if not membership(q, "QF") or apply(q, "") != "":
        return False
    if not (q.v.is_identity() or q.v.mapping.get("0") == "0"):
        return False
    return not any(x != ZETA and x.startswith("0") for x in q.sigma.support)


def theta_shift(q: QElement) -> QElement:
    if not in_QF1(q):
        raise QuasiError("not in QF(1)")
    a = iota(A)
    return a.inverse() * q * a


def format_qelement(q: QElement) -> str:
    return f"sigma={format_permutation(q.sigma)};v={format_velement(q.v)}"


def parse_qelement(text: str) -> QElement:
    head, sep, rest = text.strip().partition(";v=")
    if not sep or not head.startswith("sigma="):
        raise ValueError(f"bad element {text!r}")
    return QElement(parse_permutation(head[len("sigma="):]), parse_velement(rest))
