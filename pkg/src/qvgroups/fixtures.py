"""Reference data read off the tree-diagram figures, with checks against the library.

Vertex-map figures label each position of the right-hand tree with the
vertex sent there, so every entry below is ``source: image``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .actions import bnsr_witness_fixing, lambda_ni
from .presentations import TQV_X, evaluate
from .quasi import apply
from .thompson import VElement, generator
from .words import ZETA

# iota(A), iota(B), iota(C), iota(D) on every labelled vertex
VERTEX_MAPS = {
    "A": {"": "0", "0": "00", "1": "", "10": "01", "11": "1", ZETA: ZETA},
    "B": {"": "", "0": "0", "1": "10", "10": "100", "11": "1", "110": "101", "111": "11", ZETA: ZETA},
    "C": {"": ZETA, "0": "11", "1": "", "10": "0", "11": "10", ZETA: "1"},
    "D": {"": "1", "0": "10", "1": "", "10": "0", "11": "11", ZETA: ZETA},
}

# leaf correspondences of the stabilizer generators; the figure for lambda
# prints "10" at the first left leaf, which must be "00" for a tree
TREE_PAIRS = {
    "α′": {"00": "000", "01": "01", "100": "001", "101": "10", "11": "11"},
    "β′": {"00": "00", "01": "01", "100": "1000", "1010": "1001", "1011": "101", "11": "11"},
    "γ′": {"00": "101", "01": "01", "100": "00", "101": "100", "11": "11"},
    "δ′": {"00": "100", "01": "01", "100": "00", "101": "101", "11": "11"},
    "λ": {"00": "000", "010": "001", "011": "01", "1": "1"},
    "μ": {"0": "0", "10": "100", "110": "101", "111": "11"},
}

LAMBDA_32 = {
    "000": "000", "001": "001", "010": "0100", "0110": "0101", "0111": "011", "10": "10", "11": "11",
}

BNSR_2 = {
    "0": "0", "10": "10", "110": "1100", "1110": "11010", "11110": "11011", "11111": "111",
}


@dataclass(frozen=True)
class FigureResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f" {self.detail}" if self.detail else "")


def check_figures() -> list[FigureResult]:
    out = []
    for name, expected in VERTEX_MAPS.items():
        q = evaluate(name.lower(), "tQV")
        got = {x: apply(q, x) for x in expected}
        bad = {x: y for x, y in got.items() if y != expected[x]}
        out.append(FigureResult(f"iota({name})", not bad, f"mismatch {bad}" if bad else ""))
    for name, pairs in TREE_PAIRS.items():
        q = evaluate(TQV_X[name], "tQV")
        want = VElement.from_map(pairs)
        ok = q.sigma.is_identity() and q.v == want
        out.append(FigureResult(name, ok, "" if ok else f"got {q}"))
    out.append(FigureResult("λ_{3,2}", lambda_ni(3, 2) == VElement.from_map(LAMBDA_32)))
    out.append(FigureResult("bnsr a=2", bnsr_witness_fixing(2) == VElement.from_map(BNSR_2)))
    out.append(FigureResult("μ = B", generator("B") == VElement.from_map(TREE_PAIRS["μ"])))
    return out
