"""Seeded random generators with exactly known spectra and roots.

Planted-spectrum matrices are built as S D S^{-1} with D a rational
diagonal and S a short product of integer elementary row operations, so
S is unimodular, S^{-1} is exact, and the diagonal of D is a certified
subset of the spectrum with eigenvectors over the field (the columns of
S).  Everything takes an explicit ``random.Random`` so test runs and the
self-test command are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrix import Matrix, SpectrumSample
from .polynomials import MonicPoly
from .valuation import ValuationContext


def random_unit(rng: random.Random, ctx: ValuationContext) -> Fraction:
    """A nonzero rational of absolute value 1 (any nonzero value when the
    context is trivial)."""
    def pick() -> int:
        while True:
            v = rng.randint(1, 9)
            if ctx.p is None or v % ctx.p != 0:
                return v

    sign = rng.choice((1, -1))
    return Fraction(sign * pick(), pick())


def random_element(
    rng: random.Random,
    ctx: ValuationContext,
    vmin: int = -3,
    vmax: int = 3,
    zero_prob: float = 0.0,
) -> Fraction:
    """A rational with valuation drawn uniformly from [vmin, vmax]."""
    if zero_prob and rng.random() < zero_prob:
        return Fraction(0)
    unit = random_unit(rng, ctx)
    if ctx.p is None:
        return unit
    v = rng.randint(vmin, vmax)
    return unit * Fraction(ctx.p) ** v


@dataclass(frozen=True)
class PlantedMatrix:
    """A matrix together with eigenvalues known by construction and the
    matching eigenvectors (exact, over the field)."""

    matrix: Matrix
    spectrum: SpectrumSample
    eigenvectors: tuple[tuple[Fraction, ...], ...]


def planted_spectrum_matrix(
    rng: random.Random,
    n: int,
    ctx: ValuationContext,
    vmin: int = -3,
    vmax: int = 3,
) -> PlantedMatrix:
    """Conjugate a random diagonal by up to 3n integer shear operations.

    Zero operations are allowed, so diagonal matrices (whose eigenvectors
    hit the degenerate, axis-aligned case of the oval theorems) occur
    with positive probability.
    """
    diag = [random_element(rng, ctx, vmin, vmax) for _ in range(n)]
    ops = []
    if n >= 2:
        for _ in range(rng.randint(0, 3 * n)):
            i = rng.randrange(n)
            j = rng.randrange(n)
            while j == i:
                j = rng.randrange(n)
            ops.append((i, j, rng.randint(-3, 3)))

    s = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for i, j, m in ops:
        # row_j += m * row_i
        s[j] = [s[j][c] + m * s[i][c] for c in range(n)]
    s_inv = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for i, j, m in reversed(ops):
        s_inv[j] = [s_inv[j][c] - m * s_inv[i][c] for c in range(n)]

    # A = S D S^{-1}, with D applied as a row scaling of S^{-1}
    scaled = [[diag[r] * s_inv[r][c] for c in range(n)] for r in range(n)]
    a = [
        [sum((s[r][t] * scaled[t][c] for t in range(n)), Fraction(0)) for c in range(n)]
        for r in range(n)
    ]
    eigenvectors = tuple(tuple(s[r][c] for r in range(n)) for c in range(n))
    return PlantedMatrix(
        matrix=Matrix.from_rows(a, ctx),
        spectrum=SpectrumSample.of(diag),
        eigenvectors=eigenvectors,
    )


def random_matrix(
    rng: random.Random,
    n: int,
    ctx: ValuationContext,
    vmin: int = -3,
    vmax: int = 3,
    zero_prob: float = 0.2,
    dominant_prob: float = 0.35,
) -> Matrix:
    """Unstructured random matrix.

    With probability ``dominant_prob`` the diagonal valuations are pushed
    low and the off-diagonal valuations high, so a useful share of the
    output actually satisfies the strict dominance and pairwise
    conditions instead of all samples being inconclusive.
    """
    dominant = rng.random() < dominant_prob
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j and dominant:
                row.append(random_element(rng, ctx, vmin, 0))
            elif i == j:
                row.append(random_element(rng, ctx, vmin, vmax, zero_prob=0.1))
            elif dominant:
                row.append(random_element(rng, ctx, 0, vmax, zero_prob=zero_prob))
            else:
                row.append(random_element(rng, ctx, vmin, vmax, zero_prob=zero_prob))
        rows.append(row)
    return Matrix.from_rows(rows, ctx)


def singular_matrix(rng: random.Random, n: int, ctx: ValuationContext) -> Matrix:
    """Random matrix made rank-deficient by replacing one row with a
    rational multiple of another.  Needs n >= 2."""
    if n < 2:
        raise ValueError("singular construction needs n >= 2")
    a = random_matrix(rng, n, ctx)
    rows = [list(row) for row in a.entries]
    r = rng.randrange(n)
    s = rng.randrange(n)
    while s == r:
        s = rng.randrange(n)
    q = random_element(rng, ctx, -2, 2, zero_prob=0.1)
    rows[r] = [q * v for v in rows[s]]
    return Matrix.from_rows(rows, ctx)


def random_monic_poly(
    rng: random.Random,
    degree: int,
    ctx: ValuationContext,
    vmin: int = -4,
    vmax: int = 4,
    zero_prob: float = 0.0,
) -> MonicPoly:
    """Monic polynomial with coefficient valuations drawn from [vmin, vmax]."""
    return MonicPoly.from_coeffs(
        [random_element(rng, ctx, vmin, vmax, zero_prob=zero_prob)
         for _ in range(degree)],
        ctx,
    )


def planted_root_poly(
    rng: random.Random,
    degree: int,
    ctx: ValuationContext,
    vmin: int = -3,
    vmax: int = 3,
    zero_root_prob: float = 0.0,
) -> tuple[MonicPoly, tuple[Fraction, ...]]:
    """Product of linear factors with known rational roots."""
    roots = tuple(
        Fraction(0)
        if zero_root_prob and rng.random() < zero_root_prob
        else random_element(rng, ctx, vmin, vmax)
        for _ in range(degree)
    )
    return MonicPoly.from_roots(roots, ctx), roots
