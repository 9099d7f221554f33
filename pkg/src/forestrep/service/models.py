"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CountRequest(BaseModel):
    n: int = Field(ge=1)
    k: int | None = None


class CountResponse(BaseModel):
    n: int
    k: int | None
    count: int


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=0)
    force: bool = False


class EnumerateResponse(BaseModel):
    n: int
    k: int
    count: int
    maps: list[list[int]]


class OdunInfo(BaseModel):
    encoding: str
    n: int
    components: int
    trees: list[dict]
    blossoming: bool


class OdunsRequest(BaseModel):
    n: int = Field(ge=1)
    components: int | None = None
    blossoming_only: bool = False
    force: bool = False


class OdunsResponse(BaseModel):
    n: int
    count: int
    oduns: list[OdunInfo]


class CharacterRequest(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=0)
    method: str = "fixed"
    threads: int = 1
    force: bool = False


class CharacterValue(BaseModel):
    cycle_type: list[int]
    value: int


class CharacterResponse(BaseModel):
    n: int
    k: int
    method: str
    values: list[CharacterValue]


class DecomposeRequest(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=0)
    method: str = "plethysm"
    threads: int = 1
    force: bool = False


class DecompositionTerm(BaseModel):
    partition: list[int]
    mult: int


class DecomposeResponse(BaseModel):
    n: int
    k: int
    method: str
    terms: list[DecompositionTerm]
    degree: int
    line: str


class DecomposeOdunRequest(BaseModel):
    odun: str


class DecomposeOdunResponse(BaseModel):
    odun: OdunInfo
    frobenius_p: dict
    frobenius_s: dict
    terms: list[DecompositionTerm]
    line: str
    dimension: int
    sign_multiplicity: int


class TableRequest(BaseModel):
    n: int = Field(ge=1)
    method: str = "plethysm"
    threads: int = 1
    force: bool = False


class TableResponse(BaseModel):
    n: int
    method: str
    lines: list[str]
    strata: list[DecomposeResponse]


class SignRequest(BaseModel):
    n: int = Field(ge=1)
    method: str = "blossoming"
    total: bool = True
    per_stratum: bool = False
    force: bool = False


class SignResponse(BaseModel):
    n: int
    method: str
    total: int | None = None
    # reference value 2^(n-2); known to undercount for n >= 7
    closed_form_total: int | None = None
    matches_closed_form: bool | None = None
    per_stratum: dict[int, int] | None = None
    top_stratum: int | None = None
    closed_form_top: int | None = None


class BlossomingRequest(BaseModel):
    n: int = Field(ge=1)
    list_forests: bool = False
    force: bool = False


class BlossomingResponse(BaseModel):
    n: int
    count: int
    # reference value 2^(n-2); known to undercount for n >= 7
    closed_form: int | None
    matches_closed_form: bool | None = None
    forests: list[str] | None = None


class RooksRequest(BaseModel):
    n: int = Field(ge=1)
    parts: int = Field(ge=1)
    force: bool = False


class RookShape(BaseModel):
    partition: list[int]
    encoding: str
    sign_multiplicity: int
    dimension: int


class RooksResponse(BaseModel):
    n: int
    parts: int
    shape_count: int
    sign_count: int
    shapes: list[RookShape]
    schur_terms: dict
    line: str


class VerifyRequest(BaseModel):
    max_n: int = Field(default=6, ge=1)
    seed: int | None = None
    threads: int = 1


class ErrorResponse(BaseModel):
    error: str
