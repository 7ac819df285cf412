"""Singular-fiber configurations of elliptic surfaces.

Fiber types are strings such as ``"I5"``, ``"I0*"`` or ``"IV*"``; polynomials
in ``t`` are strings such as ``"t^5*(t-1)^2"``.
"""

from ._ellsurf import (
    ClassificationError,
    Configuration,
    DomainError,
    ParseError,
    Witness,
    base_change,
    base_change_type,
    classify,
    classify_local,
    classify_text,
    euler_number,
    family_bound_s_max,
    is_extremal,
    lattice_contribution,
    minimal_delta_twist,
    quadratic_twist,
    report,
    search,
    star_minimal_twist,
    survey,
    torelli_verdict,
    twist,
    twist_type,
    verify_witness,
)

__all__ = [
    "ClassificationError",
    "Configuration",
    "DomainError",
    "ParseError",
    "Witness",
    "base_change",
    "base_change_type",
    "classify",
    "classify_local",
    "classify_text",
    "euler_number",
    "family_bound_s_max",
    "is_extremal",
    "lattice_contribution",
    "minimal_delta_twist",
    "quadratic_twist",
    "report",
    "search",
    "star_minimal_twist",
    "survey",
    "torelli_verdict",
    "twist",
    "twist_type",
    "verify_witness",
]
