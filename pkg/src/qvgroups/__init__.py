"""Quasi-automorphism groups of the binary tree and Thompson's groups F, T, V."""
from .quasi import FinitePermutation, QElement, apply, canonicalize, iota, membership, nu
from .thompson import A, B, C, D, VElement, generator
from .trees import Tree
from .words import ZETA

__all__ = [
    "A", "B", "C", "D", "FinitePermutation", "QElement", "Tree", "VElement", "ZETA",
    "apply", "canonicalize", "generator", "iota", "membership", "nu",
]
