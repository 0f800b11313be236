"""Dense exact matrices over the rationals with ultrametric radii.

Rows and columns are indexed 1..n in the public operations, matching
the index labels used in region and certificate reports.  A matrix is
immutable: entries are stored as a tuple of tuples of ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import TYPE_CHECKING, Iterable, Sequence

from .valuation import AbsExp, Rational, ValuationContext, abs_max

if TYPE_CHECKING:
    from .polynomials import MonicPoly


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free elimination determinant of an integer matrix.

    All intermediate divisions are exact, so the arithmetic stays in
    the integers and coefficient growth stays polynomial.
    """
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class Matrix:
    """Square matrix of exact rationals tied to a valuation context."""

    entries: tuple[tuple[Fraction, ...], ...]
    ctx: ValuationContext

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Rational]], ctx: ValuationContext
    ) -> "Matrix":
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have dimension >= 1")
        converted = []
        for row in rows:
            if len(row) != n:
                raise ValueError(
                    f"matrix must be square: got a row of length {len(row)} in "
                    f"a {n}-row matrix"
                )
            converted.append(tuple(Fraction(v) for v in row))
        return cls(tuple(converted), ctx)

    @classmethod
    def identity(cls, n: int, ctx: ValuationContext) -> "Matrix":
        return cls.from_rows(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)], ctx
        )

    @classmethod
    def diagonal(cls, values: Sequence[Rational], ctx: ValuationContext) -> "Matrix":
        n = len(values)
        return cls.from_rows(
            [[Fraction(values[i]) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)],
            ctx,
        )

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, j: int, k: int) -> Fraction:
        """Entry a_{j,k} with 1-based indices."""
        self._check_index(j)
        self._check_index(k)
        return self.entries[j - 1][k - 1]

    def _check_index(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise IndexError(f"index {j} out of range 1..{self.n}")

    def transpose(self) -> "Matrix":
        n = self.n
        return Matrix(
            tuple(tuple(self.entries[i][j] for i in range(n)) for j in range(n)),
            self.ctx,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch in matrix product")
        n = self.n
        cols = other.transpose().entries
        return Matrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            ),
            self.ctx,
        )

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.n)), Fraction(0))

    def add_scalar_identity(self, c: Rational) -> "Matrix":
        """A + c*I."""
        c = Fraction(c)
        return Matrix(
            tuple(
                tuple(v + c if i == j else v for j, v in enumerate(row))
                for i, row in enumerate(self.entries)
            ),
            self.ctx,
        )

    def shift(self, lam: Rational) -> "Matrix":
        """lam*I - A, whose determinant vanishes exactly at eigenvalues."""
        lam = Fraction(lam)
        return Matrix(
            tuple(
                tuple(lam - v if i == j else -v for j, v in enumerate(row))
                for i, row in enumerate(self.entries)
            ),
            self.ctx,
        )

    def row_radius(self, j: int) -> AbsExp:
        """Max absolute value over row j with the diagonal entry excluded.

        For n = 1 the index set is empty and the radius is the absolute
        value 0.
        """
        self._check_index(j)
        row = self.entries[j - 1]
        return abs_max(self.ctx.abs(v) for k, v in enumerate(row) if k != j - 1)

    def col_radius(self, k: int) -> AbsExp:
        """Max absolute value over column k with the diagonal entry excluded."""
        self._check_index(k)
        return abs_max(
            self.ctx.abs(self.entries[j][k - 1])
            for j in range(self.n)
            if j != k - 1
        )

    def det(self) -> Fraction:
        """Exact determinant.

        The matrix is scaled by the lcm of all denominators to an integer
        matrix, eliminated fraction-free, and the scale divided back out.
        """
        scale = 1
        for row in self.entries:
            for v in row:
                scale = lcm(scale, v.denominator)
        ints = [[int(v * scale) for v in row] for row in self.entries]
        return Fraction(_bareiss_det(ints), scale**self.n)

    def is_eigenvalue(self, lam: Rational) -> bool:
        """Exact test of det(lam*I - A) = 0."""
        return self.shift(lam).det() == 0

    def char_poly_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients c_0..c_{n-1} of det(zI - A) = z^n + ... + c_0.

        Computed by the trace recurrence that only ever divides by the
        integers 1..n, hence stays exact over the rationals.
        """
        n = self.n
        coeffs = [Fraction(0)] * n
        m = self
        c = -m.trace()
        coeffs[n - 1] = c
        for k in range(2, n + 1):
            m = self @ m.add_scalar_identity(c)
            c = Fraction(-m.trace(), k)
            coeffs[n - k] = c
        return tuple(coeffs)

    def char_poly(self) -> "MonicPoly":
        """Monic characteristic polynomial det(zI - A)."""
        from .polynomials import MonicPoly  # deferred: polynomials imports matrix

        return MonicPoly(self.char_poly_coeffs(), self.ctx)

    def max_entry_abs(self) -> AbsExp:
        return abs_max(self.ctx.abs(v) for row in self.entries for v in row)

    def spectral_abs_bound(self) -> AbsExp:
        """Upper bound on |lam| for every eigenvalue with an eigenvector
        over the field.

        Stated as the min of the row-oriented and the column-oriented
        entry maxima; with max replacing the Archimedean row sums the two
        coincide, so the min is kept only to mirror the bound's shape.
        """
        row_form = abs_max(
            abs_max(self.ctx.abs(v) for v in row) for row in self.entries
        )
        col_form = abs_max(
            abs_max(self.ctx.abs(row[k]) for row in self.entries)
            for k in range(self.n)
        )
        return min(row_form, col_form)

    def det_abs_bound(self) -> "DetBoundReport":
        """Check |det(A)| <= (spectral bound)^n; always holds."""
        bound = self.spectral_abs_bound() ** self.n
        det_abs = self.ctx.abs(self.det())
        return DetBoundReport(bound=bound, det_abs=det_abs, holds=det_abs <= bound)


@dataclass(frozen=True)
class DetBoundReport:
    bound: AbsExp
    det_abs: AbsExp
    holds: bool


@dataclass(frozen=True)
class SpectrumSample:
    """Eigenvalues of a matrix that are known to lie in the base field."""

    eigenvalues: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Rational]) -> "SpectrumSample":
        return cls(tuple(Fraction(v) for v in values))

    def verify(self, a: Matrix) -> bool:
        """Exact check that every listed value is an eigenvalue of ``a``."""
        return all(a.is_eigenvalue(lam) for lam in self.eigenvalues)
