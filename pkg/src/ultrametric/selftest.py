"""Randomized self-checks of the theorem guarantees, runnable from the
command line with a fixed seed.

Each check draws fresh instances from the seeded generators and counts
violations; every counter must come back zero, since each property is an
exactly-testable theorem (or an exact consistency between two independent
code paths).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .certificates import check_dominance, check_ostrowski, certify
from .generate import (
    planted_root_poly,
    planted_spectrum_matrix,
    random_element,
    random_matrix,
    random_monic_poly,
    singular_matrix,
)
from .polynomials import (
    brauer_root_cases,
    char_poly,
    companion,
    gershgorin_root_cases,
    newton_polygon,
    verify_bounds_via_polygon,
)
from .regions import brauer, gershgorin
from .valuation import ValuationContext

PRIMES = (2, 3, 5)


def _ctx(rng: random.Random) -> ValuationContext:
    return ValuationContext(rng.choice(PRIMES))


def _sample_point(rng: random.Random, a) -> Fraction:
    mode = rng.random()
    diag = a.entry(rng.randint(1, a.n), rng.randint(1, a.n))
    if mode < 0.34:
        return random_element(rng, a.ctx, -3, 3, zero_prob=0.1)
    if mode < 0.67:
        return diag
    return diag + random_element(rng, a.ctx, -2, 2)


def _check_inclusion(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        n = rng.randint(2, 6)
        planted = planted_spectrum_matrix(rng, n, _ctx(rng))
        a = planted.matrix
        unions = [
            gershgorin(a, "rows"),
            gershgorin(a, "columns"),
            brauer(a, "rows"),
            brauer(a, "columns"),
        ]
        for lam in planted.spectrum.eigenvalues:
            if not all(u.contains(lam).member for u in unions):
                failures += 1
    return failures


def _check_containment(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        n = rng.randint(2, 6)
        a = random_matrix(rng, n, _ctx(rng))
        z = _sample_point(rng, a)
        for axis in ("rows", "columns"):
            if brauer(a, axis).contains(z).member:
                if not gershgorin(a, axis).contains(z).member:
                    failures += 1
    return failures


def _check_certificates(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        n = rng.randint(2, 6)
        ctx = _ctx(rng)
        a = random_matrix(rng, n, ctx)
        if certify(a).verdict != "Inconclusive" and a.det() == 0:
            failures += 1
        s = singular_matrix(rng, n, ctx)
        if certify(s).verdict != "Inconclusive":
            failures += 1
    return failures


def _check_equivalence(rng: random.Random, iters: int) -> int:
    failures = 0
    zero = Fraction(0)
    for _ in range(iters):
        n = rng.randint(2, 6)
        a = random_matrix(rng, n, _ctx(rng))
        for axis in ("rows", "columns"):
            if all(check_ostrowski(a, axis).values()) == brauer(a, axis).contains(zero).member:
                failures += 1
            if all(check_dominance(a, axis)) == gershgorin(a, axis).contains(zero).member:
                failures += 1
    return failures


def _check_poly_bounds(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        p = random_monic_poly(rng, rng.randint(1, 8), _ctx(rng))
        report = verify_bounds_via_polygon(p)
        if not report.upper_ok or report.lower_ok is False:
            failures += 1
    return failures


def _check_root_cases(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        poly, roots = planted_root_poly(rng, rng.randint(2, 6), _ctx(rng))
        for lam in set(roots):
            g = gershgorin_root_cases(poly, lam)
            b = brauer_root_cases(poly, lam)
            for report in (g, b):
                if not report.satisfied_with_prefix("row."):
                    failures += 1
                if not report.satisfied_with_prefix("col."):
                    failures += 1
    return failures


def _check_companion_roundtrip(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        p = random_monic_poly(rng, rng.randint(1, 8), _ctx(rng), zero_prob=0.2)
        if char_poly(companion(p)) != p:
            failures += 1
    return failures


def _check_polygon_planting(rng: random.Random, iters: int) -> int:
    failures = 0
    for _ in range(iters):
        ctx = _ctx(rng)
        poly, roots = planted_root_poly(rng, rng.randint(1, 6), ctx)
        planted = sorted(ctx.abs(r).exponent for r in roots)
        recovered = sorted(newton_polygon(poly).valuation_multiset())
        if planted != recovered:
            failures += 1
    return failures


CHECKS = (
    ("region-inclusion", _check_inclusion),
    ("brauer-within-gershgorin", _check_containment),
    ("certificate-soundness", _check_certificates),
    ("certificate-region-equivalence", _check_equivalence),
    ("poly-bounds-vs-polygon", _check_poly_bounds),
    ("root-case-coverage", _check_root_cases),
    ("companion-charpoly-roundtrip", _check_companion_roundtrip),
    ("polygon-planted-valuations", _check_polygon_planting),
)


def run_selftest(seed: int, iters: int) -> dict:
    checks = []
    total = 0
    for name, fn in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        failures = fn(rng, iters)
        total += failures
        checks.append({"name": name, "iterations": iters, "failures": failures})
    return {
        "seed": seed,
        "iters": iters,
        "checks": checks,
        "failures_total": total,
    }
