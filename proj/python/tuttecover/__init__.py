"""Exact matroid minors, Tutte polynomials, coverings, and K0 classes."""

from ._core import (
    CapacityExceeded,
    Matroid,
    MatroidError,
    ParseError,
    TuttePolynomial,
    are_isomorphic,
    automorphism_count,
    direct_sum,
    duality_involution,
    graphic_matroid,
    k0_class,
    k0_convolve,
    leaf_classes,
    matroid_from_json,
    matroid_to_json,
    tutte_dc,
    tutte_direct,
    tutte_from_class,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityExceeded",
    "Matroid",
    "MatroidError",
    "ParseError",
    "TuttePolynomial",
    "are_isomorphic",
    "automorphism_count",
    "direct_sum",
    "duality_involution",
    "graphic_matroid",
    "k0_class",
    "k0_convolve",
    "leaf_classes",
    "matroid_from_json",
    "matroid_to_json",
    "tutte_dc",
    "tutte_direct",
    "tutte_from_class",
]
