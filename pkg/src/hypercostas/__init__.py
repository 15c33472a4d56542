"""Costas hypercubes: construction, verification and search."""
from __future__ import annotations

from .applicability import check_applicability, scan_solutions
from .construct2d import Permutation, golomb_g2, lifted_hypercube, toeplitz_hypercube, welch_w1
from .dotset import DotSet, VerifyReport, autocorrelation, classify, is_costas, verify_costas
from .gf import BasisMatrix, FieldCtx
from .reshape import RadixScheme, reshape_even, reshape_odd
from .search import SearchConfig, greedy_pack
from .welch import welch_cube, welch_perm, welch_rect

__version__ = "0.1.0"

__all__ = [
    "BasisMatrix", "DotSet", "FieldCtx", "Permutation", "RadixScheme", "SearchConfig", "VerifyReport",
    "autocorrelation", "check_applicability", "classify", "golomb_g2", "greedy_pack", "is_costas",
    "lifted_hypercube", "reshape_even", "reshape_odd", "scan_solutions", "toeplitz_hypercube",
    "verify_costas", "welch_cube", "welch_perm", "welch_rect", "welch_w1",
]
