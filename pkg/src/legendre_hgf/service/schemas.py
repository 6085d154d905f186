"""Request/response models for the HTTP service.

Counts and residues are exact integers, residuals are explicit float
fields, and exact rationals travel as "num/den" strings; nothing is
silently rounded on the wire.  The curve parameter is exposed as "lambda"
(a Python keyword, hence the aliases).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ApiModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


class ErrorBody(ApiModel):
    code: str
    message: str


class ErrorEnvelope(ApiModel):
    error: ErrorBody


class HealthReport(ApiModel):
    status: str
    version: str
    max_p: int


class CountRequest(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    method: Literal["brute", "formula", "both"] = "both"
    tolerance: Optional[float] = None


class CountReport(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    method: str
    brute_count: Optional[int] = None
    formula_count: Optional[int] = None
    formula_residual: Optional[float] = None
    agree: Optional[bool] = None


class PeriodsRequest(ApiModel):
    lam: str = Field(alias="lambda", description="exact rational, e.g. '1/4'")
    terms: int = 20


class PeriodValue(ApiModel):
    index: int
    a: str
    b: str
    c: str
    partial_sum: str
    decimal: str
    recurrence_ok: bool


class PeriodsReport(ApiModel):
    lam: str = Field(alias="lambda")
    terms: int
    inside_unit_disk: bool
    periods: list[PeriodValue]


class CongruenceRequest(ApiModel):
    m: int
    d: int
    p: int
    x: Optional[int] = None
    all_x: bool = False
    tolerance: Optional[float] = None


class CongruenceCase(ApiModel):
    x: int
    lhs_residue: int
    rhs_residue: int
    holds: bool
    rounding_residual: float


class CongruenceSweepReport(ApiModel):
    m: int
    d: int
    p: int
    cases: list[CongruenceCase]
    all_hold: bool


class HasseWittRequest(ApiModel):
    p: int
    lam: int = Field(alias="lambda")


class HasseWittReport(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    matrix: list[list[int]]
    trace_mod_p: int
    trace_frobenius: int
    congruent: bool


class TransformRequest(ApiModel):
    p: int
    a_exp: int
    b_exp: int
    c_exp: int
    x: int
    tolerance: Optional[float] = None


class ComplexValue(ApiModel):
    re: float
    im: float


class TransformReport(ApiModel):
    p: int
    a_exp: int
    b_exp: int
    c_exp: int
    x: int
    lhs: ComplexValue
    rhs: ComplexValue
    residual: float
    tolerance: float
    ok: bool


class MatchRequest(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    tolerance: Optional[float] = None


class MatchRowModel(ApiModel):
    period_index: int
    char_exponents: list[int]
    lhs_residue: Optional[int] = None
    rhs_residue: Optional[int] = None
    holds: Optional[bool] = None
    rounding_residual: float
    note: Optional[str] = None


class MatchReport(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    rows: list[MatchRowModel]
    quadratic_row_holds: bool


class SurveyRequest(ApiModel):
    pmax: int
    jobs: int = 1
    tolerance: Optional[float] = None


class SurveyRowModel(ApiModel):
    p: int
    lam: int = Field(alias="lambda")
    brute_count: int
    formula_count: int
    trace: int
    hw_trace_mod_p: int
    formula_residual: float
    match_pi1: Optional[bool] = None
    match_pi2: Optional[bool] = None
    match_pi3: Optional[bool] = None
    residual_pi1: float
    residual_pi2: float
    residual_pi3: float


class SurveyReport(ApiModel):
    pmax: int
    rows: list[SurveyRowModel]
    ok: bool
    failures: list[str]
