"""Monic polynomials over the rationals: companion matrices, reciprocal
transform, ultrametric root bounds, and the case disjunctions those
bounds come from.

The Newton polygon of a polynomial serves as the independent oracle: its
segment slopes give the exact valuations of all roots in the algebraic
closure, with multiplicities equal to the horizontal segment lengths, so
every bound can be checked against the full root multiset without any
root finding.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .matrix import Matrix
from .valuation import AbsExp, PreconditionError, Rational, ValuationContext, abs_max


@dataclass(frozen=True)
class MonicPoly:
    """z^n + c_{n-1} z^{n-1} + ... + c_1 z + c_0 over a valuation context.

    ``coeffs`` lists c_0 .. c_{n-1}; the leading coefficient is an
    implicit 1 and the degree is the coefficient count.
    """

    coeffs: tuple[Fraction, ...]
    ctx: ValuationContext

    @classmethod
    def from_coeffs(
        cls, coeffs: Sequence[Rational], ctx: ValuationContext
    ) -> "MonicPoly":
        if len(coeffs) == 0:
            raise ValueError("degree must be >= 1: got no coefficients")
        return cls(tuple(Fraction(c) for c in coeffs), ctx)

    @classmethod
    def from_roots(
        cls, roots: Sequence[Rational], ctx: ValuationContext
    ) -> "MonicPoly":
        """Expand the product of (z - r) over the given roots."""
        if len(roots) == 0:
            raise ValueError("degree must be >= 1: got no roots")
        # coefficients low to high, starting from the constant poly 1
        acc = [Fraction(1)]
        for r in roots:
            r = Fraction(r)
            acc = [Fraction(0)] + acc
            for i in range(len(acc) - 1):
                acc[i] -= r * acc[i + 1]
        return cls(tuple(acc[:-1]), ctx)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        """c_i for 0 <= i <= n, where c_n = 1."""
        if i == self.degree:
            return Fraction(1)
        return self.coeffs[i]

    def evaluate(self, z: Rational) -> Fraction:
        z = Fraction(z)
        acc = Fraction(1)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def is_root(self, z: Rational) -> bool:
        return self.evaluate(z) == 0


def companion(p: MonicPoly) -> Matrix:
    """Companion matrix: superdiagonal ones, last row -c_0 .. -c_{n-1}.

    Its characteristic polynomial is p, which transfers every matrix
    eigenvalue region to a root bound.
    """
    n = p.degree
    rows = []
    for i in range(n - 1):
        rows.append([Fraction(int(j == i + 1)) for j in range(n)])
    rows.append([-c for c in p.coeffs])
    return Matrix.from_rows(rows, p.ctx)


def char_poly(a: Matrix) -> MonicPoly:
    """Monic characteristic polynomial det(zI - A) of a matrix."""
    return MonicPoly(a.char_poly_coeffs(), a.ctx)


def reciprocal(p: MonicPoly) -> MonicPoly:
    """q(z) = z^n p(1/z) / c_0, whose roots are the inverses of the roots
    of p.  Requires c_0 != 0."""
    c0 = p.coeff(0)
    if c0 == 0:
        raise PreconditionError("reciprocal needs a nonzero constant coefficient")
    n = p.degree
    coeffs = [Fraction(1) / c0]
    coeffs.extend(p.coeff(n - i) / c0 for i in range(1, n))
    return MonicPoly(tuple(coeffs), p.ctx)


def root_upper_bound(p: MonicPoly) -> AbsExp:
    """max{1, |c_0|, ..., |c_{n-1}|}; every root of p in the algebraic
    closure has absolute value at most this."""
    return abs_max(
        [AbsExp.one()] + [p.ctx.abs(c) for c in p.coeffs]
    )


def root_lower_bound(p: MonicPoly) -> AbsExp:
    """|c_0| / max{1, |c_0|, ..., |c_{n-1}|}; every root of p has absolute
    value at least this.  Requires c_0 != 0."""
    c0 = p.coeff(0)
    if c0 == 0:
        raise PreconditionError("lower bound needs a nonzero constant coefficient")
    return p.ctx.abs(c0) / root_upper_bound(p)


# ---------------------------------------------------------------------------
# Case disjunctions


@dataclass(frozen=True)
class BranchCheck:
    """One disjunct of a root-location theorem, with the two compared
    absolute values.  ``applicable`` is False when the branch quantifies
    over an empty coefficient range at this degree."""

    id: str
    lhs: AbsExp | None
    rhs: AbsExp | None
    holds: bool
    applicable: bool = True


@dataclass(frozen=True)
class CaseReport:
    """All branches of a disjunction evaluated at a verified root."""

    theorem: str
    branches: tuple[BranchCheck, ...]

    def satisfied(self) -> tuple[BranchCheck, ...]:
        return tuple(b for b in self.branches if b.holds)

    def satisfied_ids(self) -> tuple[str, ...]:
        return tuple(b.id for b in self.branches if b.holds)

    def satisfied_with_prefix(self, prefix: str) -> tuple[str, ...]:
        return tuple(i for i in self.satisfied_ids() if i.startswith(prefix))


def _branch(branch_id: str, lhs: AbsExp, rhs: AbsExp) -> BranchCheck:
    return BranchCheck(id=branch_id, lhs=lhs, rhs=rhs, holds=lhs <= rhs)


def _vacuous(branch_id: str) -> BranchCheck:
    return BranchCheck(id=branch_id, lhs=None, rhs=None, holds=False, applicable=False)


def _require_root(p: MonicPoly, lam: Fraction) -> None:
    if not p.is_root(lam):
        raise PreconditionError(
            f"{lam} is not a root: case reports are only meaningful at exact roots"
        )


def gershgorin_root_cases(p: MonicPoly, lam: Rational) -> CaseReport:
    """Evaluate the disk-derived root disjunctions at a root of p.

    Row-derived: |lam| <= 1, or |lam + c_{n-1}| <= max{|c_0|..|c_{n-2}|}.
    Column-derived: |lam| <= |c_0|, or |lam| <= max{1,|c_j|} for some
    1 <= j <= n-2, or |lam + c_{n-1}| <= 1.  At least one branch of each
    family holds at every root.
    """
    lam = Fraction(lam)
    _require_root(p, lam)
    n = p.degree
    a = p.ctx.abs
    lam_abs = a(lam)
    shift_abs = a(lam + p.coeff(n - 1))
    head_max = abs_max(a(p.coeff(i)) for i in range(n - 1))

    branches = [
        _branch("row.b1", lam_abs, AbsExp.one()),
        _branch("row.b2", shift_abs, head_max),
        _branch("col.b1", lam_abs, a(p.coeff(0))),
    ]
    if n >= 3:
        branches.extend(
            _branch(f"col.b2[j={j}]", lam_abs, abs_max([AbsExp.one(), a(p.coeff(j))]))
            for j in range(1, n - 1)
        )
    else:
        branches.append(_vacuous("col.b2"))
    branches.append(_branch("col.b3", shift_abs, AbsExp.one()))
    return CaseReport(theorem="gershgorin", branches=tuple(branches))


def brauer_root_cases(p: MonicPoly, lam: Rational) -> CaseReport:
    """Evaluate the oval-derived root disjunctions at a root of p.

    Row-derived: |lam| <= 1, or |lam||lam + c_{n-1}| <= max{|c_0|..|c_{n-2}|}.
    Column-derived, over 1 <= j < k <= n-2:
      |lam|^2 <= |c_0| max{1,|c_j|}, or |lam||lam + c_{n-1}| <= |c_0|, or
      |lam|^2 <= max{1,|c_j|} max{1,|c_k|}, or
      |lam||lam + c_{n-1}| <= max{1,|c_j|}.
    Needs n >= 2; at least one branch of each family holds at every root.
    """
    if p.degree < 2:
        raise PreconditionError("oval-derived cases need degree >= 2")
    lam = Fraction(lam)
    _require_root(p, lam)
    n = p.degree
    a = p.ctx.abs
    lam_abs = a(lam)
    lam_sq = lam_abs**2
    shift_prod = lam_abs * a(lam + p.coeff(n - 1))
    c0_abs = a(p.coeff(0))
    head_max = abs_max(a(p.coeff(i)) for i in range(n - 1))
    one_or = [abs_max([AbsExp.one(), a(p.coeff(j))]) for j in range(n)]

    branches = [
        _branch("row.b1", lam_abs, AbsExp.one()),
        _branch("row.b2", shift_prod, head_max),
    ]
    if n >= 3:
        branches.extend(
            _branch(f"col.b1[j={j}]", lam_sq, c0_abs * one_or[j])
            for j in range(1, n - 1)
        )
    else:
        branches.append(_vacuous("col.b1"))
    branches.append(_branch("col.b2", shift_prod, c0_abs))
    if n >= 4:
        branches.extend(
            _branch(f"col.b3[j={j},k={k}]", lam_sq, one_or[j] * one_or[k])
            for j in range(1, n - 1)
            for k in range(j + 1, n - 1)
        )
    else:
        branches.append(_vacuous("col.b3"))
    if n >= 3:
        branches.extend(
            _branch(f"col.b4[j={j}]", shift_prod, one_or[j])
            for j in range(1, n - 1)
        )
    else:
        branches.append(_vacuous("col.b4"))
    return CaseReport(theorem="brauer", branches=tuple(branches))


def reciprocal_root_cases(p: MonicPoly, lam: Rational) -> CaseReport:
    """Evaluate the disjunctions for the reciprocal polynomial at 1/lam.

    Since 1/lam is a root of the reciprocal of p exactly when lam is a
    nonzero root of p, these are the lower-bound counterparts of the
    direct case reports; branch ids keep the family they came from.
    """
    lam = Fraction(lam)
    if p.coeff(0) == 0:
        raise PreconditionError(
            "reciprocal cases need a nonzero constant coefficient"
        )
    if lam == 0:
        raise PreconditionError("reciprocal cases need a nonzero root")
    _require_root(p, lam)
    q = reciprocal(p)
    mu = Fraction(1) / lam
    parts = [("gersh.", gershgorin_root_cases(q, mu))]
    if p.degree >= 2:
        parts.append(("brauer.", brauer_root_cases(q, mu)))
    branches: list[BranchCheck] = []
    for prefix, report in parts:
        branches.extend(replace(b, id=prefix + b.id) for b in report.branches)
    return CaseReport(theorem="reciprocal", branches=tuple(branches))


# ---------------------------------------------------------------------------
# Newton polygon oracle


@dataclass(frozen=True)
class Segment:
    """One edge of the lower hull: a slope and its horizontal length.

    A segment of slope -m and length l certifies exactly l roots of
    valuation m in the algebraic closure, counted with multiplicity.
    """

    slope: Fraction
    length: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points (i, v(c_i)) over nonzero c_i.

    ``zero_root_multiplicity`` counts the roots at 0 (valuation
    +infinity) that were split off when the constant coefficient
    vanishes; the hull then describes the cofactor.
    """

    vertices: tuple[tuple[int, int], ...]
    segments: tuple[Segment, ...]
    zero_root_multiplicity: int

    def root_valuations(self) -> tuple[tuple[Fraction | None, int], ...]:
        """(valuation, multiplicity) pairs; ``None`` stands for +infinity."""
        vals: list[tuple[Fraction | None, int]] = [
            (-s.slope, s.length) for s in self.segments
        ]
        if self.zero_root_multiplicity:
            vals.append((None, self.zero_root_multiplicity))
        return tuple(vals)

    def valuation_multiset(self) -> list[Fraction | None]:
        """All root valuations expanded with multiplicity."""
        out: list[Fraction | None] = []
        for v, mult in self.root_valuations():
            out.extend([v] * mult)
        return out


def _cross(o: tuple[int, int], a: tuple[int, int], b: tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(p: MonicPoly) -> NewtonPolygon:
    """Lower hull of the coefficient valuations, by a monotone sweep.

    Zero coefficients contribute no points; a vanishing constant
    coefficient contributes roots of valuation +infinity instead, one
    per trailing zero, and the hull is built for the cofactor.
    """
    n = p.degree
    first_nonzero = next(i for i in range(n + 1) if p.coeff(i) != 0)
    points = [
        (i, p.ctx.abs(p.coeff(i)).exponent)
        for i in range(first_nonzero, n + 1)
        if p.coeff(i) != 0
    ]
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = tuple(
        Segment(
            slope=Fraction(y2 - y1, x2 - x1),
            length=x2 - x1,
        )
        for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    )
    return NewtonPolygon(
        vertices=tuple(hull),
        segments=segments,
        zero_root_multiplicity=first_nonzero,
    )


@dataclass(frozen=True)
class PolyBoundsReport:
    """Comparison of the coefficient root bounds against the polygon.

    Valuations are exact rationals; ``None`` stands for +infinity (all
    roots are 0).  ``lower_ok`` is ``None`` when c_0 = 0, where the lower
    bound is undefined.
    """

    min_root_val: Fraction | None
    max_root_val: Fraction | None
    upper_ok: bool
    lower_ok: bool | None


def verify_bounds_via_polygon(p: MonicPoly) -> PolyBoundsReport:
    """Check both coefficient bounds against every root the polygon sees.

    The upper bound holds iff the smallest root valuation is at least the
    bound's exponent; the lower bound (defined when c_0 != 0) holds iff
    the largest root valuation is at most its exponent.  Both are theorem
    guarantees and must come back true.
    """
    polygon = newton_polygon(p)
    finite_vals = [-s.slope for s in polygon.segments]
    min_val = min(finite_vals) if finite_vals else None
    if polygon.zero_root_multiplicity or not finite_vals:
        max_val = None
    else:
        max_val = max(finite_vals)

    upper = root_upper_bound(p)
    upper_ok = min_val is None or min_val >= upper.exponent

    if p.coeff(0) != 0:
        lower = root_lower_bound(p)
        # c_0 != 0 leaves no zero roots, so max_val is finite here
        lower_ok = max_val <= lower.exponent
    else:
        lower_ok = None
    return PolyBoundsReport(
        min_root_val=min_val,
        max_root_val=max_val,
        upper_ok=upper_ok,
        lower_ok=lower_ok,
    )
