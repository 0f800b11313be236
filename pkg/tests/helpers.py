"""Shared oracles and strategies for the test suite.

The cofactor determinant is the independent oracle for the elimination
determinant: same mathematical object, different algorithm.
"""

from __future__ import annotations

from fractions import Fraction

PRIMES = (2, 3, 5)


def cofactor_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total
