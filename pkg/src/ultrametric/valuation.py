"""Exact rational arithmetic under a p-adic (or trivial) absolute value.

Field elements are plain :class:`fractions.Fraction` values, which are
already reduced big-integer fractions with exact arithmetic.  Under a
p-adic valuation the absolute value of a nonzero rational is a power
p^(-e) with e an integer; rather than materializing that power as a
real number, absolute values are carried around as their exponents
(:class:`AbsExp`).  Products become exponent sums, n-th powers become
exponent multiples, and size comparisons reverse the integer order.
The exponent +infinity (stored as ``None``) encodes the absolute value
of 0, which is smaller than every other absolute value and absorbs
products.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

Rational = Union[Fraction, int, str]


class PreconditionError(ValueError):
    """An operation was invoked outside its mathematical domain."""


_RATIONAL_RE = re.compile(r"^(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``num/den`` (or ``num``) form of a rational.

    The sign sits on the numerator, the denominator is positive, and the
    fraction must already be reduced; anything else is rejected so that
    wire-format inputs have a single spelling per value.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"invalid rational {text!r}: expected 'num' or 'num/den'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    value = Fraction(num, den)
    if value.numerator != num or value.denominator != den:
        raise ValueError(f"invalid rational {text!r}: not in reduced form")
    return value


def format_rational(x: Rational) -> str:
    """Canonical string form: ``num/den``, or just ``num`` when den is 1."""
    return str(Fraction(x))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    # n != 0 is the caller's responsibility
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@total_ordering
@dataclass(frozen=True)
class AbsExp:
    """An absolute value p^(-exponent); exponent ``None`` means +infinity.

    Instances compare by the size of the absolute value they stand for,
    so the exponent order is reversed: a larger exponent is a smaller
    value, and ``None`` (the absolute value of 0) is the minimum.
    """

    exponent: int | None

    @classmethod
    def zero(cls) -> "AbsExp":
        """The absolute value 0 (exponent +infinity)."""
        return cls(None)

    @classmethod
    def one(cls) -> "AbsExp":
        """The absolute value 1 (exponent 0)."""
        return cls(0)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __lt__(self, other: "AbsExp") -> bool:
        if not isinstance(other, AbsExp):
            return NotImplemented
        if self.exponent is None:
            return other.exponent is not None
        if other.exponent is None:
            return False
        return self.exponent > other.exponent

    def __mul__(self, other: "AbsExp") -> "AbsExp":
        if not isinstance(other, AbsExp):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return AbsExp(None)
        return AbsExp(self.exponent + other.exponent)

    def __truediv__(self, other: "AbsExp") -> "AbsExp":
        if not isinstance(other, AbsExp):
            return NotImplemented
        if other.exponent is None:
            raise ZeroDivisionError("division by the absolute value 0")
        if self.exponent is None:
            return AbsExp(None)
        return AbsExp(self.exponent - other.exponent)

    def __pow__(self, n: int) -> "AbsExp":
        if n < 1:
            raise ValueError(f"power must be a positive integer, got {n}")
        if self.exponent is None:
            return self
        return AbsExp(self.exponent * n)

    def to_json(self) -> int | str:
        return "inf" if self.exponent is None else self.exponent

    @classmethod
    def from_json(cls, value: int | str) -> "AbsExp":
        if value == "inf":
            return cls(None)
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"invalid absolute-value exponent {value!r}")
        return cls(value)

    def __str__(self) -> str:
        return "0" if self.exponent is None else f"p^{-self.exponent}"


def abs_max(values: Iterable[AbsExp]) -> AbsExp:
    """Largest absolute value in ``values``.

    The empty input yields the absolute value 0, the identity of max;
    this is what makes radii over empty index sets degenerate correctly.
    """
    return max(values, default=AbsExp.zero())


@dataclass(frozen=True)
class ValuationContext:
    """The p-adic absolute value on the rationals, or the trivial one.

    With a prime ``p``, |x| = p^(-v_p(x)) for x != 0 and |0| = 0.  With
    ``p=None`` the valuation is trivial: |x| = 1 for every nonzero x.
    """

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"p must be a prime >= 2, got {self.p}")

    @property
    def is_trivial(self) -> bool:
        return self.p is None

    def abs(self, x: Rational) -> AbsExp:
        """Exact absolute value of a rational as an exponent."""
        x = Fraction(x)
        if x == 0:
            return AbsExp.zero()
        if self.p is None:
            return AbsExp.one()
        return AbsExp(
            _int_valuation(x.numerator, self.p) - _int_valuation(x.denominator, self.p)
        )

    def __str__(self) -> str:
        return "trivial" if self.p is None else f"{self.p}-adic"


def padic(p: int) -> ValuationContext:
    """Context for the p-adic absolute value (p must be prime)."""
    return ValuationContext(p)


def trivial() -> ValuationContext:
    """Context for the trivial absolute value (|x| = 1 for x != 0)."""
    return ValuationContext(None)
