"""Eigenvalue inclusion regions with exact membership tests.

A region union stores constraints (disks, Cassini ovals, or three-way
ovals), never point sets: over a non-Archimedean field each constraint
describes an infinite set of field elements, and membership is the only
query the inclusion theorems need.  Every membership test reduces to
comparisons and sums of absolute-value exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal, Union

from .matrix import Matrix
from .valuation import AbsExp, PreconditionError, Rational, ValuationContext

Axis = Literal["rows", "columns"]


def _radii(a: Matrix, axis: Axis) -> list[AbsExp]:
    if axis == "rows":
        return [a.row_radius(j) for j in range(1, a.n + 1)]
    if axis == "columns":
        return [a.col_radius(k) for k in range(1, a.n + 1)]
    raise ValueError(f"axis must be 'rows' or 'columns', got {axis!r}")


@dataclass(frozen=True)
class Disk:
    """All z with |z - center| <= radius; the radius is an off-diagonal max."""

    center: Fraction
    radius: AbsExp
    index: int

    def contains(self, z: Fraction, ctx: ValuationContext) -> bool:
        return ctx.abs(z - self.center) <= self.radius


@dataclass(frozen=True)
class CassiniOval:
    """All z with |z - center1| * |z - center2| <= radius_product."""

    center1: Fraction
    center2: Fraction
    radius_product: AbsExp
    index_pair: tuple[int, int]

    def contains(self, z: Fraction, ctx: ValuationContext) -> bool:
        return ctx.abs(z - self.center1) * ctx.abs(z - self.center2) <= self.radius_product


@dataclass(frozen=True)
class TriOval:
    """Three-factor analogue of the Cassini oval; carries no inclusion
    guarantee and exists to demonstrate that none holds."""

    centers: tuple[Fraction, Fraction, Fraction]
    radius_product: AbsExp
    index_triple: tuple[int, int, int]

    def contains(self, z: Fraction, ctx: ValuationContext) -> bool:
        product = AbsExp.one()
        for c in self.centers:
            product = product * ctx.abs(z - c)
        return product <= self.radius_product


Constraint = Union[Disk, CassiniOval, TriOval]


@dataclass(frozen=True)
class Membership:
    """Result of a membership query: the verdict plus every constraint
    (by position in the union) that the point satisfies."""

    member: bool
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class RegionUnion:
    """Union of homogeneous constraints; a point belongs if any one holds."""

    kind: Literal["gershgorin", "brauer", "tri_oval"]
    axis: Axis
    ctx: ValuationContext
    constraints: tuple[Constraint, ...]

    def contains(self, z: Rational) -> Membership:
        z = Fraction(z)
        witnesses = tuple(
            i for i, c in enumerate(self.constraints) if c.contains(z, self.ctx)
        )
        return Membership(member=bool(witnesses), witnesses=witnesses)


def gershgorin(a: Matrix, axis: Axis = "rows") -> RegionUnion:
    """Disk union covering every eigenvalue that has an eigenvector over
    the field: n disks centered at the diagonal entries with the
    off-diagonal max of the row (or column) as radius."""
    radii = _radii(a, axis)
    disks = tuple(
        Disk(center=a.entry(j, j), radius=radii[j - 1], index=j)
        for j in range(1, a.n + 1)
    )
    return RegionUnion(kind="gershgorin", axis=axis, ctx=a.ctx, constraints=disks)


def brauer(a: Matrix, axis: Axis = "rows") -> RegionUnion:
    """Cassini oval union over all row (or column) pairs; covers the same
    eigenvalues as the disk union and is contained in it."""
    if a.n < 2:
        raise PreconditionError(
            "oval union needs n >= 2: a 1x1 matrix has no index pairs"
        )
    radii = _radii(a, axis)
    ovals = tuple(
        CassiniOval(
            center1=a.entry(j, j),
            center2=a.entry(k, k),
            radius_product=radii[j - 1] * radii[k - 1],
            index_pair=(j, k),
        )
        for j, k in combinations(range(1, a.n + 1), 2)
    )
    return RegionUnion(kind="brauer", axis=axis, ctx=a.ctx, constraints=ovals)


def tri_oval(a: Matrix, axis: Axis = "rows") -> RegionUnion:
    """Three-row oval union over all index triples.

    Unlike the disk and pair-oval unions this set can miss eigenvalues;
    it exists so the failure can be demonstrated on concrete matrices.
    """
    if a.n < 3:
        raise PreconditionError(
            "three-way oval union needs n >= 3: not enough index triples"
        )
    radii = _radii(a, axis)
    ovals = tuple(
        TriOval(
            centers=(a.entry(j, j), a.entry(k, k), a.entry(l, l)),
            radius_product=radii[j - 1] * radii[k - 1] * radii[l - 1],
            index_triple=(j, k, l),
        )
        for j, k, l in combinations(range(1, a.n + 1), 3)
    )
    return RegionUnion(kind="tri_oval", axis=axis, ctx=a.ctx, constraints=ovals)


def contains(region: RegionUnion, z: Rational) -> Membership:
    """Membership of ``z`` in the union, with all satisfied constraints."""
    return region.contains(z)
