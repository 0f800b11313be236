"""Built-in demonstration matrix for the three-row oval failure.

The 4x4 matrix below has two identical rows, spectrum {0, 1, 1, 2}, and
off-diagonal radii (1, 1, 0, 0).  Its pair-oval and disk unions contain
the whole spectrum, but every index triple includes row 3 or row 4, so
every three-way radius product vanishes while all four diagonal entries
equal 1: the three-way union collapses to the single point 1 and misses
the eigenvalues 0 and 2, for every choice of valuation.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import Matrix, SpectrumSample
from .regions import gershgorin, brauer, tri_oval
from .valuation import ValuationContext

COUNTEREXAMPLE_ROWS = (
    (1, 1, 0, 0),
    (1, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)

COUNTEREXAMPLE_SPECTRUM = (0, 1, 1, 2)


def counterexample_matrix(ctx: ValuationContext) -> Matrix:
    return Matrix.from_rows(COUNTEREXAMPLE_ROWS, ctx)


def counterexample_spectrum() -> SpectrumSample:
    return SpectrumSample.of(COUNTEREXAMPLE_SPECTRUM)


def counterexample_report(ctx: ValuationContext) -> dict:
    """Membership of the distinct eigenvalues {0, 1, 2} in the row-axis
    disk, pair-oval, and three-way oval unions."""
    a = counterexample_matrix(ctx)
    points = [Fraction(0), Fraction(1), Fraction(2)]
    unions = {
        "gershgorin": gershgorin(a, "rows"),
        "brauer": brauer(a, "rows"),
        "tri_oval": tri_oval(a, "rows"),
    }
    memberships = {
        name: {str(z): union.contains(z).member for z in points}
        for name, union in unions.items()
    }
    return {
        "spectrum": [str(Fraction(v)) for v in COUNTEREXAMPLE_SPECTRUM],
        "row_radii": [a.row_radius(j).to_json() for j in range(1, 5)],
        "memberships": memberships,
        "tri_oval_misses_spectrum": not all(
            memberships["tri_oval"][str(z)] for z in points
        ),
    }
