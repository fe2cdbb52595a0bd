"""Group words, the built-in finite presentations and their verification.

Words use the alphabet ``sabcd`` (sigma, alpha, beta, gamma, delta) with
uppercase letters for inverses.  Evaluation follows ``thompson.LEFT_ACTION``.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .actions import VertexTuple
from .quasi import FinitePermutation, QElement, apply, format_qelement, iota, membership
from .thompson import A, B, C, D, word_product
from .words import ZETA, format_vertex, lex_key, lex_sorted

SYMBOLS = "sabcd"

GROUP_SYMBOLS = {
    "F": "ab",
    "T": "abc",
    "V": "abcd",
    "QF": "sab",
    "QT": "sabc",
    "QV": "sabcd",
    "tQT": "sabc",
    "tQV": "sabcd",
}

# QT and QV have no generating set drawn from these symbols alone; words over
# the tQT / tQV alphabet are accepted and the value must then lie in the group
_CHECKED_GROUPS = {"QT", "QV"}


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        letters = []
        for ch in text:
            if ch.isspace():
                continue
            if ch.lower() not in SYMBOLS:
                raise WordError(f"invalid symbol {ch!r}")
            letters.append((ch.lower(), 1 if ch.islower() else -1))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return "".join(s if e > 0 else s.upper() for s, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(base.letters * abs(n))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((s, -e) for s, e in reversed(self.letters)))

    @property
    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def free_reduce(self) -> "GroupWord":
        out: list[tuple[str, int]] = []
        for s, e in self.letters:
            if out and out[-1] == (s, -e):
                out.pop()
            else:
                out.append((s, e))
        return GroupWord(tuple(out))


def W(text: str) -> GroupWord:
    return GroupWord.parse(text)


def conj(x: GroupWord, g: GroupWord) -> GroupWord:
    """x^g = g^-1 x g."""
    return g.inverse() * x * g


def comm(x: GroupWord, y: GroupWord) -> GroupWord:
    """[x, y] = x^-1 y^-1 x y."""
    return x.inverse() * y.inverse() * x * y


def prod(*ws: GroupWord) -> GroupWord:
    out = GroupWord()
    for w in ws:
        out = out * w
    return out


s, a, b, c, d = (W(ch) for ch in SYMBOLS)


def beta(n: int) -> GroupWord:
    return prod(a ** -(n - 1), b, a ** (n - 1))


def gamma(n: int) -> GroupWord:
    return prod(a ** -(n - 1), c, b ** (n - 1))


def delta(n: int) -> GroupWord:
    if n == 0:
        return d
    d1 = conj(d, gamma(2))
    return prod(a ** -(n - 1), d1, a ** (n - 1))


_GENERATORS = {
    "s": QElement.transposition("0", ""),
    "a": iota(A),
    "b": iota(B),
    "c": iota(C),
    "d": iota(D),
}
_INVERSES = {k: q.inverse() for k, q in _GENERATORS.items()}


def _check_symbols(w: GroupWord, group: str) -> None:
    if group not in GROUP_SYMBOLS:
        raise WordError(f"unknown group {group!r}")
    bad = w.symbols - set(GROUP_SYMBOLS[group])
    if bad:
        raise WordError(f"symbol(s) {''.join(sorted(bad))} not valid for {group}")


def evaluate(w: GroupWord, group: str = "tQV") -> QElement:
    if isinstance(w, str):
        w = GroupWord.parse(w)
    _check_symbols(w, group)
    q = word_product([_GENERATORS[s] if e > 0 else _INVERSES[s] for s, e in w.letters], QElement.identity())
    if group in _CHECKED_GROUPS and not membership(q, group):
        raise WordError(f"word does not evaluate into {group}")
    return q


def is_identity(w: GroupWord, group: str = "tQV") -> bool:
    return evaluate(w, group).is_identity()


@dataclass(frozen=True)
class Relator:
    label: str
    word: GroupWord
    # a rewritten word that holds when the literal transcription does not
    realized: Optional[GroupWord] = None
    note: str = ""
    # sequence of transpositions the word stands for, checked in Sym(Z)
    transpositions: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: str
    relators: tuple[Relator, ...]
    x_set: dict = field(default_factory=dict)
    # conjugator taking sigma to the transposition of the pair X stabilizes
    x_conjugator: Optional[GroupWord] = None

    def all_relators(self) -> list[Relator]:
        out = list(self.relators)
        for name, x in self.x_set.items():
            literal = comm(x, s)
            realized = None
            note = ""
            if self.x_conjugator is not None:
                realized = comm(x, conj(s, self.x_conjugator))
                note = "X fixes (e, zeta); commutes with sigma^(" + str(self.x_conjugator) + ") = (e z)"
            out.append(Relator(f"[{name}, σ]", literal, realized, note))
        return out


def _F_relators() -> list[Relator]:
    return [
        Relator("[αβ⁻¹, α⁻¹βα]", comm(a * b.inverse(), conj(b, a))),
        Relator("[αβ⁻¹, α⁻²βα²]", comm(a * b.inverse(), conj(b, a ** 2))),
    ]


def _T_relators() -> list[Relator]:
    return _F_relators() + [
        Relator("γ⁻¹βα⁻¹γβ", W("CbAcb")),
        Relator("α⁻¹β⁻¹αβ⁻¹γ⁻¹αβα⁻²γβ²", W("ABaBCabAAcbb")),
        Relator("α⁻¹γ⁻¹(α⁻¹γβ)²", W("AC") * W("Acb") ** 2),
        Relator("γ³", c ** 3),
    ]


def _V_relators() -> list[Relator]:
    ab = a * b.inverse()
    bt, gm, dl = beta, gamma, delta
    return [
        Relator("[αβ⁻¹, β₂]", comm(ab, bt(2))),
        Relator("[αβ⁻¹, β₃]", comm(ab, bt(3))),
        Relator("βγ₂γ₁⁻¹", prod(b, gm(2), gm(1).inverse())),
        Relator("βγ₃(γ₂β₂)⁻¹", prod(b, gm(3), (gm(2) * bt(2)).inverse())),
        Relator("γ₂²(γ₁α)⁻¹", prod(gm(2) ** 2, (gm(1) * a).inverse())),
        Relator("γ₁³", gm(1) ** 3),
        Relator("δ₁²", dl(1) ** 2),
        Relator("δ₃δ₁(δ₁δ₃)⁻¹", prod(dl(3), dl(1), (dl(1) * dl(3)).inverse())),
        Relator("(δ₂δ₁)³", (dl(2) * dl(1)) ** 3),
        Relator("δ₁β₃(β₃δ₁)⁻¹", prod(dl(1), bt(3), (bt(3) * dl(1)).inverse())),
        Relator(
            "βγ₂γ₁(γ₁β₂)⁻¹",
            prod(b, gm(2), gm(1), (gm(1) * bt(2)).inverse()),
            realized=prod(b, dl(2), dl(1), (dl(1) * bt(2)).inverse()),
            note="contradicts βγ₂γ₁⁻¹; holds with δ for γ: βδ₂δ₁(δ₁β₂)⁻¹",
        ),
        Relator("βδ₃(δ₂β)⁻¹", prod(b, dl(3), (dl(2) * b).inverse())),
        Relator("γ₃δ₂(δ₁γ₃)⁻¹", prod(gm(3), dl(2), (dl(1) * gm(3)).inverse())),
        Relator("(δ₁γ₂)³", (dl(1) * gm(2)) ** 3),
    ]


def _sigma_relators() -> list[Relator]:
    sa = conj(s, a)
    return [
        Relator("σ²", s ** 2, transpositions=(("0", ""), ("0", ""))),
        Relator(
            "[σ, σ^(α²)]",
            comm(s, conj(s, a ** 2)),
            transpositions=(("0", ""), ("1", "11"), ("0", ""), ("1", "11")),
        ),
        Relator("(σσ^α)³", (s * sa) ** 3, transpositions=((("0", ""), ("", "1")) * 3)),
        Relator(
            "σσ^ασσ^(αβ⁻¹α⁻¹)",
            prod(s, sa, s, conj(s, W("aBA"))),
            realized=prod(s, sa, s, conj(s, W("abA"))),
            note="σ^(αβ⁻¹α⁻¹) = (0 01); σ^(αβα⁻¹) = (0 1)",
            transpositions=(("0", ""), ("", "1"), ("0", ""), ("0", "1")),
        ),
    ]


QF_X = {
    "β": W("b"),
    "β^α": conj(b, a),
    "α³β⁻¹α⁻²": W("aaaBAA"),
    "α²β²α⁻¹β⁻¹αβ⁻¹α⁻²": W("aabbABaBAA"),
    "αβ²α⁻¹β⁻¹αβ⁻¹α⁻¹": W("abbABaBA"),
    "αβα⁻¹β²α⁻¹β⁻¹αβ⁻¹αβ⁻¹α⁻¹": W("abAbbABaBaBA"),
}

TQT_X = {
    "β": W("b"),
    "β^α": conj(b, a),
    "α²β⁻¹α⁻¹": W("aaBA"),
    "αβ²α⁻¹β⁻¹αβ⁻¹α⁻¹": W("abbABaBA"),
}

TQV_X = {
    "α′": prod(a ** 2, W("BCadAcb"), W("AB")),
    "β′": prod(a, beta(2) ** 2, beta(3).inverse(), beta(2).inverse(), a.inverse()),
    "γ′": prod(a, beta(2), d, delta(2), delta(1), d, beta(2).inverse(), a.inverse()),
    "δ′": prod(a, beta(2), delta(1), delta(0), delta(1), beta(2).inverse(), a.inverse()),
    "λ": W("aaBA"),
    "μ": W("b"),
}

# sigma^(alpha gamma^-1) is the transposition (e zeta)
ZETA_CONJUGATOR = W("aC")


def builtin_presentation(name: str) -> Presentation:
    if name == "F":
        return Presentation("F", "ab", tuple(_F_relators()))
    if name == "T":
        return Presentation("T", "abc", tuple(_T_relators()))
    if name == "V":
        return Presentation("V", "abcd", tuple(_V_relators()))
    if name == "QF":
        return Presentation("QF", "sab", tuple(_sigma_relators() + _F_relators()), dict(QF_X))
    if name == "tQT":
        return Presentation(
            "tQT", "sabc", tuple(_sigma_relators() + _T_relators()), dict(TQT_X), ZETA_CONJUGATOR
        )
    if name == "tQV":
        extra = Relator("σσ^(αδα⁻¹)", s * conj(s, W("adA")), transpositions=(("0", ""), ("0", "")))
        return Presentation(
            "tQV", "sabcd", tuple([extra] + _sigma_relators() + _V_relators()), dict(TQV_X), ZETA_CONJUGATOR
        )
    raise ValueError(f"unknown presentation {name!r}")


PRESENTATIONS = ("F", "T", "V", "QF", "tQT", "tQV")


@dataclass(frozen=True)
class RelatorResult:
    label: str
    literal: bool
    realized: Optional[bool]
    transposition: Optional[bool]
    literal_form: str
    realized_form: str = ""
    note: str = ""

    @property
    def passed(self) -> bool:
        ok = self.realized if self.realized is not None else self.literal
        return ok and self.transposition is not False

    def line(self) -> str:
        if not self.passed:
            form = self.realized_form if self.realized is not None else self.literal_form
            return f"FAIL {self.label} {form}"
        out = f"PASS {self.label}"
        if not self.literal:
            out += f" (literal word gives {self.literal_form}; {self.note})"
        if self.transposition:
            out += " [transposition form holds]"
        return out


def transposition_product(pairs: Sequence[tuple[str, str]]) -> FinitePermutation:
    return word_product([FinitePermutation.transposition(x, y) for x, y in pairs], FinitePermutation())


def check_relator(r: Relator, group: str) -> RelatorResult:
    lit = evaluate(r.word, group)
    res = {"literal": lit.is_identity(), "literal_form": format_qelement(lit)}
    realized = None
    if r.realized is not None:
        q = evaluate(r.realized, group)
        realized = q.is_identity()
        res["realized_form"] = format_qelement(q)
    tr = transposition_product(r.transpositions).is_identity() if r.transpositions else None
    return RelatorResult(r.label, realized=realized, transposition=tr, note=r.note, **res)


def check_relators(p: Presentation) -> list[RelatorResult]:
    return [check_relator(r, p.name) for r in p.all_relators()]


def report(results: Iterable[RelatorResult]) -> str:
    return "\n".join(r.line() for r in results)


@dataclass(frozen=True)
class SymResult:
    family: str
    instance: tuple[str, ...]
    passed: bool

    def line(self) -> str:
        args = ",".join(format_vertex(x) for x in self.instance)
        return f"{'PASS' if self.passed else 'FAIL'} {self.family}({args})"


@lru_cache(maxsize=None)
def _sym_instance(family: str, inst: tuple[str, ...]) -> bool:
    t = FinitePermutation.transposition
    if family == "involution":
        x, y = inst
        return (t(x, y) * t(x, y)).is_identity()
    if family == "symmetry":
        x, y = inst
        return t(x, y) == t(y, x)
    if family == "commute":
        x, y, z, w = inst
        p, q = t(x, y), t(z, w)
        return (p.inverse() * q.inverse() * p * q).is_identity()
    if family == "braid":
        x, y, z = inst
        pq = t(x, y) * t(y, z)
        return (pq * pq * pq).is_identity()
    x, y, z = inst
    return (t(x, y) * t(y, z) * t(x, y) * t(x, z)).is_identity()


_FAMILIES = (("involution", 2), ("symmetry", 2), ("commute", 4), ("braid", 3), ("triple", 3))


def check_sym_presentation(vertices: Sequence[str], flavor: str = "Star") -> list[SymResult]:
    """Instantiate every relator family of the finite-support symmetric group.

    Star uses lex-increasing tuples of words, Z uses all tuples of distinct
    vertices and adds the symmetry relation sigma_{x,y} = sigma_{y,x}.
    """
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertices")
    if flavor not in ("Star", "Z"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor == "Star" and ZETA in vertices:
        raise ValueError("the Star flavor excludes zeta")
    vs = lex_sorted(vertices)
    tuples = combinations if flavor == "Star" else permutations
    out = []
    for family, k in _FAMILIES:
        if family == "symmetry" and flavor == "Star":
            continue
        for inst in tuples(vs, k):
            out.append(SymResult(family, inst, _sym_instance(family, inst)))
    return out


def check_sym_subsets(vertices: Sequence[str], flavor: str, max_size: int) -> list[SymResult]:
    """Run check_sym_presentation on every subset of at most ``max_size`` vertices."""
    failures = []
    for k in range(1, max_size + 1):
        for subset in combinations(vertices, k):
            failures += [r for r in check_sym_presentation(subset, flavor) if not r.passed]
    return failures


def orbit_enumerate(
    generators: Sequence[GroupWord],
    start: VertexTuple,
    depth_bound: int,
    group: str = "tQV",
    slack: int = 1,
) -> list[VertexTuple]:
    """Breadth-first closure of ``start`` under the generators and their inverses.

    The search explores tuples whose words have length at most
    ``depth_bound + slack`` and reports those within ``depth_bound``.
    """
    elems = []
    for g in generators:
        q = evaluate(g, group)
        elems += [q, q.inverse()]

    def within(xs, bound):
        return all(x == ZETA or len(x) <= bound for x in xs)

    seen = {start.entries}
    queue = deque([start.entries])
    while queue:
        xs = queue.popleft()
        for q in elems:
            ys = tuple(apply(q, x) for x in xs)
            if ys not in seen and within(ys, depth_bound + slack):
                seen.add(ys)
                queue.append(ys)
    kept = [xs for xs in seen if xs == start.entries or within(xs, depth_bound)]
    return [VertexTuple(xs, start.flavor) for xs in sorted(kept, key=lambda xs: [lex_key(x) for x in xs])]
