import random
from fractions import Fraction

import pytest

from helpers import PRIMES
from ultrametric.certificates import certify, check_dominance, check_ostrowski
from ultrametric.generate import random_matrix, singular_matrix
from ultrametric.matrix import Matrix
from ultrametric.regions import brauer, gershgorin
from ultrametric.valuation import PreconditionError, padic


class TestDominance:
    def test_unit_diagonal_small_offdiagonal(self):
        p = 3
        a = Matrix.from_rows([[1, p], [p, 1]], padic(p))
        assert check_dominance(a, "rows") == (True, True)
        assert a.det() == 1 - p * p != 0

    def test_equal_magnitudes_fail_strictness(self):
        a = Matrix.from_rows([[1, 1], [1, 1]], padic(5))
        assert check_dominance(a, "rows") == (False, False)

    def test_identity(self):
        a = Matrix.identity(4, padic(2))
        assert check_dominance(a, "rows") == (True,) * 4

    def test_zero_diagonal_never_dominates(self):
        # a zero diagonal with a zero radius is a zero row: |0| > 0 is false
        a = Matrix.from_rows([[0, 0], [0, 1]], padic(2))
        assert check_dominance(a, "rows") == (False, True)


class TestOstrowski:
    def test_strictly_stronger_than_dominance(self):
        p = 3
        a = Matrix.from_rows(
            [[Fraction(1, p * p), 1], [p, p * p]], padic(p)
        )
        assert check_dominance(a, "rows") == (True, False)
        assert check_ostrowski(a, "rows") == {(1, 2): True}
        assert a.det() == 1 - p != 0

    def test_equal_magnitudes_fail(self):
        a = Matrix.from_rows([[1, 1], [1, 1]], padic(5))
        assert check_ostrowski(a, "rows") == {(1, 2): False}

    def test_zero_radii_pass(self):
        p = 2
        a = Matrix.diagonal([p, p], padic(p))
        assert check_ostrowski(a, "rows") == {(1, 2): True}

    def test_rejects_one_by_one(self):
        with pytest.raises(PreconditionError):
            check_ostrowski(Matrix.from_rows([[1]], padic(2)), "rows")

    def test_dominance_implies_ostrowski(self):
        rng = random.Random(61)
        for _ in range(200):
            a = random_matrix(rng, rng.randint(2, 5), padic(rng.choice(PRIMES)))
            for axis in ("rows", "columns"):
                if all(check_dominance(a, axis)):
                    assert all(check_ostrowski(a, axis).values())


class TestCertify:
    def test_row_dominance_verdict(self):
        p = 3
        a = Matrix.from_rows([[1, p], [p, 1]], padic(p))
        assert certify(a).verdict == "RowDominance"

    def test_row_ostrowski_verdict(self):
        p = 3
        a = Matrix.from_rows(
            [[Fraction(1, p * p), 1], [p, p * p]], padic(p)
        )
        cert = certify(a)
        assert cert.verdict == "RowOstrowski"
        assert cert.row_dominance == (True, False)
        assert cert.column_dominance == (True, False)

    def test_inconclusive_on_singular(self):
        a = Matrix.from_rows([[1, 1], [1, 1]], padic(5))
        cert = certify(a)
        assert cert.verdict == "Inconclusive"
        assert a.det() == 0

    def test_inconclusive_does_not_mean_singular(self):
        # |1/25| = 25 swamps every diagonal product
        p = 5
        a = Matrix.from_rows([[1, Fraction(1, 25)], [5, 1]], padic(p))
        assert certify(a).verdict == "Inconclusive"
        assert a.det() == Fraction(4, 5) != 0

    def test_one_by_one_skips_pair_checks(self):
        cert = certify(Matrix.from_rows([[7]], padic(7)))
        assert cert.verdict == "RowDominance"
        assert cert.row_ostrowski is None
        assert cert.column_ostrowski is None

    def test_column_dominance_verdict(self):
        # row 1 ties its radius (|1| = |1|) but both columns dominate
        p = 3
        a = Matrix.from_rows([[1, 1], [p, Fraction(1, p)]], padic(p))
        assert check_dominance(a, "rows") == (False, True)
        assert check_dominance(a, "columns") == (True, True)
        assert certify(a).verdict == "ColumnDominance"

    def test_soundness_on_random_matrices(self):
        rng = random.Random(67)
        for _ in range(200):
            ctx = padic(rng.choice(PRIMES))
            a = random_matrix(rng, rng.randint(2, 5), ctx)
            if certify(a).verdict != "Inconclusive":
                assert a.det() != 0

    def test_singular_never_certified(self):
        rng = random.Random(71)
        for _ in range(100):
            ctx = padic(rng.choice(PRIMES))
            s = singular_matrix(rng, rng.randint(2, 5), ctx)
            assert s.det() == 0
            assert certify(s).verdict == "Inconclusive"


class TestRegionEquivalence:
    def test_ostrowski_iff_zero_outside_ovals(self):
        rng = random.Random(73)
        zero = Fraction(0)
        for _ in range(200):
            a = random_matrix(rng, rng.randint(2, 5), padic(rng.choice(PRIMES)))
            for axis in ("rows", "columns"):
                assert all(check_ostrowski(a, axis).values()) == (
                    not brauer(a, axis).contains(zero).member
                )

    def test_dominance_iff_zero_outside_disks(self):
        rng = random.Random(79)
        zero = Fraction(0)
        for _ in range(200):
            a = random_matrix(rng, rng.randint(1, 5), padic(rng.choice(PRIMES)))
            for axis in ("rows", "columns"):
                assert all(check_dominance(a, axis)) == (
                    not gershgorin(a, axis).contains(zero).member
                )
