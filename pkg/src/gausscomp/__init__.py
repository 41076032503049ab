"""Gauss composition of binary quadratic forms in exact arithmetic."""

from .bilinear import BilinearLaw, BiQuadratic, VerifiedComposition, apply, verify
from .compose import ComposeReport, compose, normalize_rep, square_ratio
from .core import Mat2, QVec2, Vec2, det2, gcd_list, hnf_basis, is_rational_square
from .forms import Form, InvariantRecord, RatForm, act, invariants, polar, reduce_definite, value

__all__ = [
    "BiQuadratic",
    "BilinearLaw",
    "ComposeReport",
    "Form",
    "InvariantRecord",
    "Mat2",
    "QVec2",
    "RatForm",
    "Vec2",
    "VerifiedComposition",
    "act",
    "apply",
    "compose",
    "det2",
    "gcd_list",
    "hnf_basis",
    "invariants",
    "is_rational_square",
    "normalize_rep",
    "polar",
    "reduce_definite",
    "square_ratio",
    "value",
    "verify",
]
