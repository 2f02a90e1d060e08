"""Syzygies, saturations and base-point invariants on P1xP1.

Thin python surface over the C++ core. All polynomial arguments are strings
in the variables s, u, t, v, e.g. "u^2*t*v" or "s^2t^2 + s u v^2".
"""

from ._bisyz import (
    BisyzError,
    analyze,
    base_points,
    bidegree,
    conormal_hilbert_constant,
    degree_of_Z,
    is_lci_global,
    is_zero_dimensional,
    koszul_check,
    local_report,
    parse_poly,
    poly_arith,
    run_reference_claims,
    saturate_ideal,
    syzygies,
    theorem_check,
)

__all__ = [
    "BisyzError",
    "analyze",
    "base_points",
    "bidegree",
    "conormal_hilbert_constant",
    "degree_of_Z",
    "is_lci_global",
    "is_zero_dimensional",
    "koszul_check",
    "local_report",
    "parse_poly",
    "poly_arith",
    "run_reference_claims",
    "saturate_ideal",
    "syzygies",
    "theorem_check",
]

__version__ = "0.1.0"
