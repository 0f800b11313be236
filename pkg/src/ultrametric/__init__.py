"""Exact eigenvalue localization and polynomial root bounds over the
rationals with a p-adic (or trivial) valuation.

Everything is computed at the level of valuation exponents: no floats,
no tolerances.  The package provides disk and Cassini-oval eigenvalue
inclusion regions, dominance and pairwise nonsingularity certificates,
coefficient root bounds with their case disjunctions, and a Newton
polygon oracle for exact root valuations.
"""

from .certificates import Certificate, certify, check_dominance, check_ostrowski
from .matrix import DetBoundReport, Matrix, SpectrumSample
from .polynomials import (
    BranchCheck,
    CaseReport,
    MonicPoly,
    NewtonPolygon,
    PolyBoundsReport,
    Segment,
    brauer_root_cases,
    char_poly,
    companion,
    gershgorin_root_cases,
    newton_polygon,
    reciprocal,
    reciprocal_root_cases,
    root_lower_bound,
    root_upper_bound,
    verify_bounds_via_polygon,
)
from .regions import (
    CassiniOval,
    Disk,
    Membership,
    RegionUnion,
    TriOval,
    brauer,
    contains,
    gershgorin,
    tri_oval,
)
from .valuation import (
    AbsExp,
    PreconditionError,
    ValuationContext,
    abs_max,
    format_rational,
    padic,
    parse_rational,
    trivial,
)

__all__ = [
    "AbsExp",
    "BranchCheck",
    "CaseReport",
    "CassiniOval",
    "Certificate",
    "DetBoundReport",
    "Disk",
    "Matrix",
    "Membership",
    "MonicPoly",
    "NewtonPolygon",
    "PolyBoundsReport",
    "PreconditionError",
    "RegionUnion",
    "Segment",
    "SpectrumSample",
    "TriOval",
    "ValuationContext",
    "abs_max",
    "brauer",
    "brauer_root_cases",
    "certify",
    "char_poly",
    "check_dominance",
    "check_ostrowski",
    "companion",
    "contains",
    "format_rational",
    "gershgorin",
    "gershgorin_root_cases",
    "newton_polygon",
    "padic",
    "parse_rational",
    "reciprocal",
    "reciprocal_root_cases",
    "root_lower_bound",
    "root_upper_bound",
    "tri_oval",
    "trivial",
    "verify_bounds_via_polygon",
]
