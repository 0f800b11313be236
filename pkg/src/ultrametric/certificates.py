"""Nonsingularity certificates from strict diagonal dominance and from
the weaker pairwise-product (Ostrowski-type) condition.

All inequalities are strict and evaluated as strict exponent
comparisons; a certificate other than ``Inconclusive`` proves the
determinant is nonzero, while ``Inconclusive`` proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .matrix import Matrix
from .regions import Axis, _radii
from .valuation import PreconditionError

VERDICTS = (
    "RowDominance",
    "ColumnDominance",
    "RowOstrowski",
    "ColumnOstrowski",
    "Inconclusive",
)


def check_dominance(a: Matrix, axis: Axis = "rows") -> tuple[bool, ...]:
    """Per-index strict dominance |a_jj| > radius_j.

    A zero diagonal entry never passes: its absolute value is 0, which is
    not strictly greater than any radius, including radius 0.
    """
    radii = _radii(a, axis)
    return tuple(
        a.ctx.abs(a.entry(j, j)) > radii[j - 1] for j in range(1, a.n + 1)
    )


def check_ostrowski(a: Matrix, axis: Axis = "rows") -> dict[tuple[int, int], bool]:
    """Per-pair strict product condition |a_jj||a_kk| > radius_j * radius_k,
    over unordered pairs j < k."""
    if a.n < 2:
        raise PreconditionError(
            "pairwise check needs n >= 2; dominance covers the 1x1 case"
        )
    radii = _radii(a, axis)
    diag = [a.ctx.abs(a.entry(j, j)) for j in range(1, a.n + 1)]
    return {
        (j, k): diag[j - 1] * diag[k - 1] > radii[j - 1] * radii[k - 1]
        for j, k in combinations(range(1, a.n + 1), 2)
    }


@dataclass(frozen=True)
class Certificate:
    """Verdict plus the full detail vectors of every check performed.

    The pairwise details are ``None`` for 1x1 matrices, where no pairs
    exist.  ``Inconclusive`` does not imply the matrix is singular.
    """

    verdict: str
    row_dominance: tuple[bool, ...]
    column_dominance: tuple[bool, ...]
    row_ostrowski: Mapping[tuple[int, int], bool] | None
    column_ostrowski: Mapping[tuple[int, int], bool] | None


def certify(a: Matrix) -> Certificate:
    """Run the four checks in a fixed order and report the first that
    passes entirely: row dominance, column dominance, row pairwise,
    column pairwise."""
    row_dom = check_dominance(a, "rows")
    col_dom = check_dominance(a, "columns")
    row_ost = check_ostrowski(a, "rows") if a.n >= 2 else None
    col_ost = check_ostrowski(a, "columns") if a.n >= 2 else None

    verdict = "Inconclusive"
    ordered = [
        ("RowDominance", all(row_dom)),
        ("ColumnDominance", all(col_dom)),
        ("RowOstrowski", row_ost is not None and all(row_ost.values())),
        ("ColumnOstrowski", col_ost is not None and all(col_ost.values())),
    ]
    for name, passed in ordered:
        if passed:
            verdict = name
            break
    return Certificate(
        verdict=verdict,
        row_dominance=row_dom,
        column_dominance=col_dom,
        row_ostrowski=row_ost,
        column_ostrowski=col_ost,
    )
