import random
from fractions import Fraction

import pytest

from helpers import PRIMES
from ultrametric.generate import (
    planted_root_poly,
    planted_spectrum_matrix,
    random_element,
    random_matrix,
    random_unit,
    singular_matrix,
)
from ultrametric.valuation import AbsExp, padic, trivial


def test_units_have_absolute_value_one():
    rng = random.Random(1)
    for _ in range(100):
        ctx = padic(rng.choice(PRIMES))
        assert ctx.abs(random_unit(rng, ctx)) == AbsExp.one()


def test_element_valuations_stay_in_range():
    rng = random.Random(2)
    ctx = padic(5)
    for _ in range(200):
        x = random_element(rng, ctx, -3, 3)
        assert -3 <= ctx.abs(x).exponent <= 3


def test_zero_probability_produces_zeros():
    rng = random.Random(3)
    values = [random_element(rng, padic(2), zero_prob=0.5) for _ in range(100)]
    assert any(v == 0 for v in values)
    assert any(v != 0 for v in values)


def test_planted_spectrum_is_exact():
    rng = random.Random(4)
    for _ in range(30):
        ctx = padic(rng.choice(PRIMES))
        planted = planted_spectrum_matrix(rng, rng.randint(1, 6), ctx)
        assert planted.spectrum.verify(planted.matrix)


def test_planted_determinant_is_eigenvalue_product():
    rng = random.Random(5)
    for _ in range(30):
        ctx = padic(rng.choice(PRIMES))
        planted = planted_spectrum_matrix(rng, rng.randint(1, 5), ctx)
        product = Fraction(1)
        for lam in planted.spectrum.eigenvalues:
            product *= lam
        assert planted.matrix.det() == product


def test_singular_matrices_are_singular():
    rng = random.Random(6)
    for _ in range(30):
        ctx = padic(rng.choice(PRIMES))
        assert singular_matrix(rng, rng.randint(2, 6), ctx).det() == 0


def test_singular_needs_two_rows():
    with pytest.raises(ValueError):
        singular_matrix(random.Random(7), 1, padic(2))


def test_planted_roots_are_roots():
    rng = random.Random(8)
    for _ in range(30):
        ctx = padic(rng.choice(PRIMES))
        p, roots = planted_root_poly(rng, rng.randint(1, 6), ctx)
        assert all(p.evaluate(r) == 0 for r in roots)


def test_seeded_runs_are_reproducible():
    a = random_matrix(random.Random(99), 4, padic(3))
    b = random_matrix(random.Random(99), 4, padic(3))
    assert a == b


def test_trivial_context_supported():
    rng = random.Random(10)
    planted = planted_spectrum_matrix(rng, 3, trivial())
    assert planted.spectrum.verify(planted.matrix)
