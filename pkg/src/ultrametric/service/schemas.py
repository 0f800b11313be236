"""Pydantic request/response models mirroring the published JSON formats."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

RationalValue = str | int
ExpValue = int | str  # integer exponent, or "inf" for the absolute value 0


class MatrixPayload(BaseModel):
    p: int | None = None
    entries: list[list[RationalValue]]


class PolyPayload(BaseModel):
    p: int | None = None
    coeffs: list[RationalValue]


class RegionRequest(BaseModel):
    matrix: MatrixPayload
    axis: Literal["rows", "columns"] = "rows"


class MatrixRequest(BaseModel):
    matrix: MatrixPayload


class PolyRequest(BaseModel):
    poly: PolyPayload


class ContainsRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    region: dict
    point: RationalValue = Field(alias="lambda")


class RootCasesRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    poly: PolyPayload
    point: RationalValue = Field(alias="lambda")


class DiskOut(BaseModel):
    j: int
    c: str
    r: ExpValue


class OvalOut(BaseModel):
    j: int
    k: int
    c1: str
    c2: str
    rp: ExpValue


class TriOvalOut(BaseModel):
    j: int
    k: int
    l: int
    c1: str
    c2: str
    c3: str
    rp: ExpValue


class RegionResponse(BaseModel):
    p: int | None
    kind: str
    axis: str
    disks: list[DiskOut] | None = None
    ovals: list[OvalOut] | None = None
    tri_ovals: list[TriOvalOut] | None = None


class WitnessOut(BaseModel):
    j: int
    k: int | None = None
    l: int | None = None


class MembershipResponse(BaseModel):
    member: bool
    witnesses: list[WitnessOut]


class PairCheckOut(BaseModel):
    j: int
    k: int
    ok: bool


class CertificateDetailOut(BaseModel):
    row_dominance: list[bool]
    column_dominance: list[bool]
    row_ostrowski: list[PairCheckOut] | None
    column_ostrowski: list[PairCheckOut] | None


class CertificateResponse(BaseModel):
    verdict: str
    detail: CertificateDetailOut


class SpectralBoundResponse(BaseModel):
    bound: ExpValue


class DetBoundResponse(BaseModel):
    bound: ExpValue
    det_abs: ExpValue
    holds: bool


class MatrixResponse(BaseModel):
    p: int | None
    entries: list[list[str]]


class PolyResponse(BaseModel):
    p: int | None
    coeffs: list[str]


class PolyBoundsResponse(BaseModel):
    upper: ExpValue
    lower: ExpValue | None


class BranchOut(BaseModel):
    id: str
    lhs: ExpValue | None
    rhs: ExpValue | None
    holds: bool
    applicable: bool


class CaseReportOut(BaseModel):
    theorem: str
    branches: list[BranchOut]
    satisfied: list[str]


class RootCasesResponse(BaseModel):
    gershgorin: CaseReportOut
    brauer: CaseReportOut | None
    reciprocal: CaseReportOut | None


class SegmentOut(BaseModel):
    slope: str
    length: int


class PolygonResponse(BaseModel):
    vertices: list[tuple[int, int]]
    segments: list[SegmentOut]
    zero_root_multiplicity: int


class VerifyPolyResponse(BaseModel):
    min_root_val: str
    max_root_val: str
    upper_ok: bool
    lower_ok: bool | None


class FixtureResponse(BaseModel):
    p: int
    matrix: MatrixResponse
    spectrum: list[str]
    row_radii: list[ExpValue]
    memberships: dict[str, dict[str, bool]]
    tri_oval_misses_spectrum: bool


class HealthResponse(BaseModel):
    status: str
