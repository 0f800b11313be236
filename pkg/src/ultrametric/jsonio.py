"""Parsers and emitters for the published JSON formats.

All magnitudes are integer exponents (or the string ``"inf"`` for the
absolute value 0) and all field elements are canonical ``num/den``
strings, so no float ever appears on the wire and output bytes are
reproducible.  Parsing is strict: non-reduced rationals, non-prime p,
and ragged matrices are rejected with one-line messages.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .certificates import Certificate
from .matrix import DetBoundReport, Matrix
from .polynomials import CaseReport, MonicPoly, NewtonPolygon, PolyBoundsReport
from .regions import CassiniOval, Disk, Membership, RegionUnion, TriOval
from .valuation import AbsExp, ValuationContext, format_rational, parse_rational


class InputError(ValueError):
    """Malformed or out-of-contract input data."""


def canonical_dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, compact separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _as_object(obj: Any, what: str) -> dict:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    return obj


def parse_rational_value(value: Any, what: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{what} must be a rational string or integer")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            raise InputError(f"{what}: {exc}") from exc
    raise InputError(f"{what} must be a rational string or integer")


def parse_context(obj: dict) -> ValuationContext:
    p = obj.get("p")
    if p is None:
        return ValuationContext(None)
    if isinstance(p, bool) or not isinstance(p, int):
        raise InputError(f"p must be a prime integer or null, got {p!r}")
    try:
        return ValuationContext(p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def context_to_json(ctx: ValuationContext) -> int | None:
    return ctx.p


def parse_absexp(value: Any, what: str) -> AbsExp:
    try:
        return AbsExp.from_json(value)
    except ValueError as exc:
        raise InputError(f"{what}: {exc}") from exc


def parse_matrix(obj: Any) -> Matrix:
    obj = _as_object(obj, "matrix")
    ctx = parse_context(obj)
    entries = obj.get("entries")
    if not isinstance(entries, list) or not entries:
        raise InputError("matrix needs a non-empty 'entries' list of rows")
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list):
            raise InputError(f"matrix row {i + 1} must be a list")
        rows.append(
            [parse_rational_value(v, f"matrix entry ({i + 1},{j + 1})")
             for j, v in enumerate(row)]
        )
    try:
        return Matrix.from_rows(rows, ctx)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def matrix_to_json(a: Matrix) -> dict:
    return {
        "p": context_to_json(a.ctx),
        "entries": [[format_rational(v) for v in row] for row in a.entries],
    }


def parse_poly(obj: Any) -> MonicPoly:
    obj = _as_object(obj, "polynomial")
    ctx = parse_context(obj)
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise InputError(
            "polynomial needs a non-empty 'coeffs' list c_0..c_{n-1}"
        )
    values = [
        parse_rational_value(c, f"coefficient c_{i}") for i, c in enumerate(coeffs)
    ]
    return MonicPoly.from_coeffs(values, ctx)


def poly_to_json(p: MonicPoly) -> dict:
    return {
        "p": context_to_json(p.ctx),
        "coeffs": [format_rational(c) for c in p.coeffs],
    }


def region_to_json(region: RegionUnion) -> dict:
    out: dict[str, Any] = {
        "p": context_to_json(region.ctx),
        "kind": region.kind,
        "axis": region.axis,
    }
    if region.kind == "gershgorin":
        out["disks"] = [
            {
                "j": d.index,
                "c": format_rational(d.center),
                "r": d.radius.to_json(),
            }
            for d in region.constraints
        ]
    elif region.kind == "brauer":
        out["ovals"] = [
            {
                "j": o.index_pair[0],
                "k": o.index_pair[1],
                "c1": format_rational(o.center1),
                "c2": format_rational(o.center2),
                "rp": o.radius_product.to_json(),
            }
            for o in region.constraints
        ]
    else:
        out["tri_ovals"] = [
            {
                "j": o.index_triple[0],
                "k": o.index_triple[1],
                "l": o.index_triple[2],
                "c1": format_rational(o.centers[0]),
                "c2": format_rational(o.centers[1]),
                "c3": format_rational(o.centers[2]),
                "rp": o.radius_product.to_json(),
            }
            for o in region.constraints
        ]
    return out


def parse_region(obj: Any) -> RegionUnion:
    obj = _as_object(obj, "region")
    ctx = parse_context(obj)
    kind = obj.get("kind")
    axis = obj.get("axis")
    if axis not in ("rows", "columns"):
        raise InputError(f"region axis must be 'rows' or 'columns', got {axis!r}")
    if kind == "gershgorin":
        disks = obj.get("disks")
        if not isinstance(disks, list) or not disks:
            raise InputError("disk region needs a non-empty 'disks' list")
        constraints = tuple(
            Disk(
                center=parse_rational_value(d.get("c"), "disk center"),
                radius=parse_absexp(d.get("r"), "disk radius"),
                index=int(d.get("j", i + 1)),
            )
            for i, d in enumerate(map(lambda d: _as_object(d, "disk"), disks))
        )
    elif kind == "brauer":
        ovals = obj.get("ovals")
        if not isinstance(ovals, list) or not ovals:
            raise InputError("oval region needs a non-empty 'ovals' list")
        constraints = tuple(
            CassiniOval(
                center1=parse_rational_value(o.get("c1"), "oval center c1"),
                center2=parse_rational_value(o.get("c2"), "oval center c2"),
                radius_product=parse_absexp(o.get("rp"), "oval radius product"),
                index_pair=(int(o.get("j")), int(o.get("k"))),
            )
            for o in map(lambda o: _as_object(o, "oval"), ovals)
        )
    elif kind == "tri_oval":
        ovals = obj.get("tri_ovals")
        if not isinstance(ovals, list) or not ovals:
            raise InputError("tri-oval region needs a non-empty 'tri_ovals' list")
        constraints = tuple(
            TriOval(
                centers=(
                    parse_rational_value(o.get("c1"), "tri-oval center c1"),
                    parse_rational_value(o.get("c2"), "tri-oval center c2"),
                    parse_rational_value(o.get("c3"), "tri-oval center c3"),
                ),
                radius_product=parse_absexp(o.get("rp"), "tri-oval radius product"),
                index_triple=(int(o.get("j")), int(o.get("k")), int(o.get("l"))),
            )
            for o in map(lambda o: _as_object(o, "tri_oval"), ovals)
        )
    else:
        raise InputError(
            f"region kind must be 'gershgorin', 'brauer' or 'tri_oval', got {kind!r}"
        )
    return RegionUnion(kind=kind, axis=axis, ctx=ctx, constraints=constraints)


def membership_to_json(m: Membership, region: RegionUnion) -> dict:
    witnesses = []
    for i in m.witnesses:
        c = region.constraints[i]
        if isinstance(c, Disk):
            witnesses.append({"j": c.index})
        elif isinstance(c, CassiniOval):
            witnesses.append({"j": c.index_pair[0], "k": c.index_pair[1]})
        else:
            witnesses.append(
                {"j": c.index_triple[0], "k": c.index_triple[1], "l": c.index_triple[2]}
            )
    return {"member": m.member, "witnesses": witnesses}


def certificate_to_json(cert: Certificate) -> dict:
    def pairs(detail):
        if detail is None:
            return None
        return [
            {"j": j, "k": k, "ok": ok} for (j, k), ok in sorted(detail.items())
        ]

    return {
        "verdict": cert.verdict,
        "detail": {
            "row_dominance": list(cert.row_dominance),
            "column_dominance": list(cert.column_dominance),
            "row_ostrowski": pairs(cert.row_ostrowski),
            "column_ostrowski": pairs(cert.column_ostrowski),
        },
    }


def case_report_to_json(report: CaseReport) -> dict:
    return {
        "theorem": report.theorem,
        "branches": [
            {
                "id": b.id,
                "lhs": None if b.lhs is None else b.lhs.to_json(),
                "rhs": None if b.rhs is None else b.rhs.to_json(),
                "holds": b.holds,
                "applicable": b.applicable,
            }
            for b in report.branches
        ],
        "satisfied": list(report.satisfied_ids()),
    }


def polygon_to_json(polygon: NewtonPolygon) -> dict:
    return {
        "vertices": [[i, v] for i, v in polygon.vertices],
        "segments": [
            {"slope": format_rational(s.slope), "length": s.length}
            for s in polygon.segments
        ],
        "zero_root_multiplicity": polygon.zero_root_multiplicity,
    }


def _val_to_json(v: Fraction | None) -> str:
    return "inf" if v is None else format_rational(v)


def bounds_report_to_json(report: PolyBoundsReport) -> dict:
    return {
        "min_root_val": _val_to_json(report.min_root_val),
        "max_root_val": _val_to_json(report.max_root_val),
        "upper_ok": report.upper_ok,
        "lower_ok": report.lower_ok,
    }


def det_bound_to_json(report: DetBoundReport) -> dict:
    return {
        "bound": report.bound.to_json(),
        "det_abs": report.det_abs.to_json(),
        "holds": report.holds,
    }
