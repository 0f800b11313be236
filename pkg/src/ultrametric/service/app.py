"""FastAPI application exposing the library over HTTP.

Request and response bodies use the same JSON formats as the CLI; the
endpoints are stateless wrappers over the pure library functions.
Domain errors map to 400 (malformed input) and 422 (precondition
violations such as an oval union of a 1x1 matrix).
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .. import certificates, fixtures, regions
from ..jsonio import (
    bounds_report_to_json,
    case_report_to_json,
    certificate_to_json,
    det_bound_to_json,
    matrix_to_json,
    membership_to_json,
    parse_matrix,
    parse_poly,
    parse_rational_value,
    parse_region,
    poly_to_json,
    polygon_to_json,
    region_to_json,
)
from ..matrix import Matrix
from ..polynomials import (
    MonicPoly,
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
from ..valuation import PreconditionError, ValuationContext
from . import schemas


def _matrix(payload: schemas.MatrixPayload) -> Matrix:
    return parse_matrix(payload.model_dump())


def _poly(payload: schemas.PolyPayload) -> MonicPoly:
    return parse_poly(payload.model_dump())


def create_app() -> FastAPI:
    app = FastAPI(
        title="ultrametric",
        description=(
            "Exact eigenvalue localization, nonsingularity certificates, and "
            "polynomial root bounds over the rationals with a p-adic valuation."
        ),
    )

    @app.exception_handler(PreconditionError)
    async def precondition_handler(request: Request, exc: PreconditionError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> dict:
        return {"status": "ok"}

    @app.post(
        "/regions/gershgorin",
        response_model=schemas.RegionResponse,
        response_model_exclude_none=True,
    )
    def gershgorin_region(req: schemas.RegionRequest) -> dict:
        return region_to_json(regions.gershgorin(_matrix(req.matrix), req.axis))

    @app.post(
        "/regions/brauer",
        response_model=schemas.RegionResponse,
        response_model_exclude_none=True,
    )
    def brauer_region(req: schemas.RegionRequest) -> dict:
        return region_to_json(regions.brauer(_matrix(req.matrix), req.axis))

    @app.post(
        "/regions/tri-oval",
        response_model=schemas.RegionResponse,
        response_model_exclude_none=True,
    )
    def tri_oval_region(req: schemas.RegionRequest) -> dict:
        return region_to_json(regions.tri_oval(_matrix(req.matrix), req.axis))

    @app.post("/regions/contains", response_model=schemas.MembershipResponse)
    def region_contains(req: schemas.ContainsRequest) -> dict:
        region = parse_region(req.region)
        z = parse_rational_value(req.point, "lambda")
        return membership_to_json(region.contains(z), region)

    @app.post("/matrix/certify", response_model=schemas.CertificateResponse)
    def certify_matrix(req: schemas.MatrixRequest) -> dict:
        return certificate_to_json(certificates.certify(_matrix(req.matrix)))

    @app.post("/matrix/spectral-bound", response_model=schemas.SpectralBoundResponse)
    def spectral_bound(req: schemas.MatrixRequest) -> dict:
        return {"bound": _matrix(req.matrix).spectral_abs_bound().to_json()}

    @app.post("/matrix/det-bound", response_model=schemas.DetBoundResponse)
    def det_bound(req: schemas.MatrixRequest) -> dict:
        return det_bound_to_json(_matrix(req.matrix).det_abs_bound())

    @app.post("/matrix/char-poly", response_model=schemas.PolyResponse)
    def matrix_char_poly(req: schemas.MatrixRequest) -> dict:
        return poly_to_json(_matrix(req.matrix).char_poly())

    @app.post("/poly/companion", response_model=schemas.MatrixResponse)
    def poly_companion(req: schemas.PolyRequest) -> dict:
        return matrix_to_json(companion(_poly(req.poly)))

    @app.post("/poly/reciprocal", response_model=schemas.PolyResponse)
    def poly_reciprocal(req: schemas.PolyRequest) -> dict:
        return poly_to_json(reciprocal(_poly(req.poly)))

    @app.post("/poly/bounds", response_model=schemas.PolyBoundsResponse)
    def poly_bounds(req: schemas.PolyRequest) -> dict:
        p = _poly(req.poly)
        return {
            "upper": root_upper_bound(p).to_json(),
            "lower": None if p.coeff(0) == 0 else root_lower_bound(p).to_json(),
        }

    @app.post("/poly/root-cases", response_model=schemas.RootCasesResponse)
    def poly_root_cases(req: schemas.RootCasesRequest) -> dict:
        p = _poly(req.poly)
        lam = parse_rational_value(req.point, "lambda")
        return {
            "gershgorin": case_report_to_json(gershgorin_root_cases(p, lam)),
            "brauer": (
                case_report_to_json(brauer_root_cases(p, lam))
                if p.degree >= 2
                else None
            ),
            "reciprocal": (
                case_report_to_json(reciprocal_root_cases(p, lam))
                if p.coeff(0) != 0 and lam != 0
                else None
            ),
        }

    @app.post("/poly/newton", response_model=schemas.PolygonResponse)
    def poly_newton(req: schemas.PolyRequest) -> dict:
        return polygon_to_json(newton_polygon(_poly(req.poly)))

    @app.post("/poly/verify", response_model=schemas.VerifyPolyResponse)
    def poly_verify(req: schemas.PolyRequest) -> dict:
        return bounds_report_to_json(verify_bounds_via_polygon(_poly(req.poly)))

    @app.get("/fixture/counterexample", response_model=schemas.FixtureResponse)
    def fixture_counterexample(p: int = Query(..., description="Prime")) -> dict:
        ctx = ValuationContext(p)
        report = fixtures.counterexample_report(ctx)
        report["p"] = p
        report["matrix"] = matrix_to_json(fixtures.counterexample_matrix(ctx))
        return report

    return app


app = create_app()
