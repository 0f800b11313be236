"""Batch command-line front end.

Every subcommand reads one JSON document (stdin or --input), runs one
library operation, and writes a run report to stdout:

    {"command": ..., "input_digest": ..., "result": ..., "status": "ok"}

Identical input bytes produce identical output bytes.  Exit codes:
0 ok, 1 malformed input, 2 precondition violation.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from typing import Any, Callable

import click

from . import certificates, fixtures, regions, selftest
from .jsonio import (
    InputError,
    bounds_report_to_json,
    canonical_dumps,
    case_report_to_json,
    certificate_to_json,
    det_bound_to_json,
    matrix_to_json,
    membership_to_json,
    parse_matrix,
    parse_poly,
    parse_region,
    parse_rational_value,
    poly_to_json,
    polygon_to_json,
    region_to_json,
)
from .polynomials import (
    brauer_root_cases,
    companion,
    gershgorin_root_cases,
    newton_polygon,
    reciprocal,
    reciprocal_root_cases,
    root_lower_bound,
    root_upper_bound,
    verify_bounds_via_polygon,
)
from .valuation import PreconditionError, ValuationContext

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PRECONDITION = 2

SEED_ENV_VAR = "ULTRAMETRIC_SEED"


def _read_bytes(input_file: str | None) -> bytes:
    if input_file is None:
        return sys.stdin.buffer.read()
    with open(input_file, "rb") as fh:
        return fh.read()


def _run(
    command: str,
    input_file: str | None,
    handler: Callable[[Any], dict],
    needs_input: bool = True,
) -> None:
    raw = _read_bytes(input_file) if needs_input else b""
    digest = hashlib.sha256(raw).hexdigest()
    report: dict[str, Any] = {"command": command, "input_digest": digest}
    try:
        data = json.loads(raw.decode("utf-8")) if needs_input else None
        report["result"] = handler(data)
    except PreconditionError as exc:
        report["status"] = "error"
        report["error"] = str(exc)
        click.echo(canonical_dumps(report))
        sys.exit(EXIT_PRECONDITION)
    except (InputError, ValueError, UnicodeDecodeError) as exc:
        report["status"] = "error"
        report["error"] = str(exc)
        click.echo(canonical_dumps(report))
        sys.exit(EXIT_INPUT_ERROR)
    report["status"] = "ok"
    click.echo(canonical_dumps(report))
    sys.exit(EXIT_OK)


def _io_options(fn):
    fn = click.option(
        "--input", "input_file", type=click.Path(exists=True, dir_okay=False),
        default=None, help="Read the JSON input from a file instead of stdin.",
    )(fn)
    fn = click.option(
        "--format", "fmt", type=click.Choice(["json"]), default="json",
        help="Output format (json only).",
    )(fn)
    return fn


def _axis_option(fn):
    return click.option(
        "--axis", type=click.Choice(["rows", "columns"]), default="rows",
        help="Use row radii or column radii.",
    )(fn)


def _lambda_option(fn):
    return click.option(
        "--lambda", "lam_text", required=True,
        help="Field element as a canonical rational string.",
    )(fn)


@click.group()
def main() -> None:
    """Exact ultrametric eigenvalue regions, nonsingularity certificates,
    and polynomial root bounds over the rationals."""


@main.command()
@_io_options
@_axis_option
def gershgorin(input_file: str | None, fmt: str, axis: str) -> None:
    """Disk union of a matrix (JSON matrix on stdin)."""
    _run(
        "gershgorin", input_file,
        lambda data: region_to_json(regions.gershgorin(parse_matrix(data), axis)),
    )


@main.command()
@_io_options
@_axis_option
def brauer(input_file: str | None, fmt: str, axis: str) -> None:
    """Cassini oval union of a matrix."""
    _run(
        "brauer", input_file,
        lambda data: region_to_json(regions.brauer(parse_matrix(data), axis)),
    )


@main.command(name="tri-oval")
@_io_options
@_axis_option
def tri_oval(input_file: str | None, fmt: str, axis: str) -> None:
    """Three-way oval union of a matrix (no inclusion guarantee)."""
    _run(
        "tri-oval", input_file,
        lambda data: region_to_json(regions.tri_oval(parse_matrix(data), axis)),
    )


@main.command()
@_io_options
@_lambda_option
def contains(input_file: str | None, fmt: str, lam_text: str) -> None:
    """Membership of a point in a region union (JSON region on stdin)."""

    def handler(data: Any) -> dict:
        region = parse_region(data)
        z = parse_rational_value(lam_text, "lambda")
        return membership_to_json(region.contains(z), region)

    _run("contains", input_file, handler)


@main.command()
@_io_options
def certify(input_file: str | None, fmt: str) -> None:
    """Nonsingularity certificate of a matrix."""
    _run(
        "certify", input_file,
        lambda data: certificate_to_json(certificates.certify(parse_matrix(data))),
    )


@main.command(name="spectral-bound")
@_io_options
def spectral_bound(input_file: str | None, fmt: str) -> None:
    """Upper bound on every eigenvalue absolute value."""
    _run(
        "spectral-bound", input_file,
        lambda data: {"bound": parse_matrix(data).spectral_abs_bound().to_json()},
    )


@main.command(name="det-bound")
@_io_options
def det_bound(input_file: str | None, fmt: str) -> None:
    """Check |det| against the n-th power of the spectral bound."""
    _run(
        "det-bound", input_file,
        lambda data: det_bound_to_json(parse_matrix(data).det_abs_bound()),
    )


@main.command(name="char-poly")
@_io_options
def char_poly(input_file: str | None, fmt: str) -> None:
    """Monic characteristic polynomial det(zI - A) of a matrix."""
    _run(
        "char-poly", input_file,
        lambda data: poly_to_json(parse_matrix(data).char_poly()),
    )


@main.command(name="companion")
@_io_options
def companion_cmd(input_file: str | None, fmt: str) -> None:
    """Companion matrix of a monic polynomial (JSON polynomial on stdin)."""
    _run(
        "companion", input_file,
        lambda data: matrix_to_json(companion(parse_poly(data))),
    )


@main.command(name="reciprocal")
@_io_options
def reciprocal_cmd(input_file: str | None, fmt: str) -> None:
    """Reciprocal polynomial z^n p(1/z) / c_0."""
    _run(
        "reciprocal", input_file,
        lambda data: poly_to_json(reciprocal(parse_poly(data))),
    )


@main.command(name="poly-bounds")
@_io_options
def poly_bounds(input_file: str | None, fmt: str) -> None:
    """Coefficient upper and lower root bounds (lower is null when c_0 = 0)."""

    def handler(data: Any) -> dict:
        p = parse_poly(data)
        upper = root_upper_bound(p).to_json()
        lower = None if p.coeff(0) == 0 else root_lower_bound(p).to_json()
        return {"upper": upper, "lower": lower}

    _run("poly-bounds", input_file, handler)


@main.command(name="root-cases")
@_io_options
@_lambda_option
def root_cases(input_file: str | None, fmt: str, lam_text: str) -> None:
    """Case disjunction reports at an exact root of the polynomial."""

    def handler(data: Any) -> dict:
        p = parse_poly(data)
        lam = parse_rational_value(lam_text, "lambda")
        out: dict[str, Any] = {
            "gershgorin": case_report_to_json(gershgorin_root_cases(p, lam))
        }
        out["brauer"] = (
            case_report_to_json(brauer_root_cases(p, lam)) if p.degree >= 2 else None
        )
        out["reciprocal"] = (
            case_report_to_json(reciprocal_root_cases(p, lam))
            if p.coeff(0) != 0 and lam != 0
            else None
        )
        return out

    _run("root-cases", input_file, handler)


@main.command(name="newton")
@_io_options
def newton(input_file: str | None, fmt: str) -> None:
    """Newton polygon of a monic polynomial: exact root valuations."""
    _run(
        "newton", input_file,
        lambda data: polygon_to_json(newton_polygon(parse_poly(data))),
    )


@main.command(name="verify-poly")
@_io_options
def verify_poly(input_file: str | None, fmt: str) -> None:
    """Check the coefficient root bounds against the Newton polygon."""
    _run(
        "verify-poly", input_file,
        lambda data: bounds_report_to_json(verify_bounds_via_polygon(parse_poly(data))),
    )


@main.command(name="fixture-counterexample")
@click.option("--p", "p", type=int, required=True, help="Prime for the valuation.")
@click.option(
    "--format", "fmt", type=click.Choice(["json"]), default="json",
    help="Output format (json only).",
)
def fixture_counterexample(p: int, fmt: str) -> None:
    """Demonstrate the built-in 4x4 matrix whose spectrum escapes the
    three-way oval union while the disk and pair-oval unions contain it."""

    def handler(_: Any) -> dict:
        ctx = ValuationContext(p)
        report = fixtures.counterexample_report(ctx)
        report["p"] = p
        report["matrix"] = matrix_to_json(fixtures.counterexample_matrix(ctx))
        return report

    _run("fixture-counterexample", None, handler, needs_input=False)


@main.command(name="selftest")
@click.option("--iters", type=click.IntRange(min=1), default=100, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["json"]), default="json",
    help="Output format (json only).",
)
def selftest_cmd(iters: int, fmt: str) -> None:
    """Run the randomized theorem checks; seed comes from ULTRAMETRIC_SEED."""
    raw = b""
    digest = hashlib.sha256(raw).hexdigest()
    seed_text = os.environ.get(SEED_ENV_VAR, "0")
    report: dict[str, Any] = {"command": "selftest", "input_digest": digest}
    try:
        seed = int(seed_text)
    except ValueError:
        report["status"] = "error"
        report["error"] = f"{SEED_ENV_VAR} must be an integer, got {seed_text!r}"
        click.echo(canonical_dumps(report))
        sys.exit(EXIT_INPUT_ERROR)
    result = selftest.run_selftest(seed, iters)
    report["result"] = result
    report["status"] = "ok"
    click.echo(canonical_dumps(report))
    sys.exit(EXIT_OK if result["failures_total"] == 0 else EXIT_INPUT_ERROR)


if __name__ == "__main__":
    main()
