"""FastAPI service wrapping the computation package.

Prime fields (with their dlog tables) are cached per process, so repeated
queries against the same p skip the O(p) setup.  Domain errors map to one
structured 400 body carrying the exception class name; clients decide how
to surface it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..characters import MultChar
from ..classical import (
    classical_2f1_partial,
    ode_recurrence_check,
    period_params,
)
from ..congruence import check_thm_congruence, match_table
from ..curves import (
    LegendreCurve,
    brute_force_count,
    formula_count_with_residual,
    hasse_witt,
    trace_frobenius,
)
from ..errors import LegendreHGFError, PreconditionViolation
from ..ffhyper import inversion_transform_sides, residual_tolerance
from ..field import PrimeField, configured_max_p, make_field
from ..survey import row_to_dict, run_survey
from . import schemas


@lru_cache(maxsize=32)
def get_field(p: int) -> PrimeField:
    """Per-process field cache; the tables are immutable and shareable."""
    return make_field(p)


def create_app() -> FastAPI:
    app = FastAPI(
        title="legendre-hgf",
        version=__version__,
        description=(
            "Point counts, congruences, periods and Hasse-Witt data for the "
            "genus-3 curves y^4 = x(x-1)(x-lambda)."
        ),
    )

    @app.exception_handler(LegendreHGFError)
    async def domain_error_handler(request: Request, exc: LegendreHGFError):
        body = schemas.ErrorEnvelope(
            error=schemas.ErrorBody(code=type(exc).__name__, message=str(exc))
        )
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/health", response_model=schemas.HealthReport)
    def health() -> schemas.HealthReport:
        return schemas.HealthReport(
            status="ok", version=__version__, max_p=configured_max_p()
        )

    @app.post("/count", response_model=schemas.CountReport)
    def count(req: schemas.CountRequest) -> schemas.CountReport:
        curve = LegendreCurve(get_field(req.p), req.lam)
        brute = formula = resid = None
        if req.method in ("brute", "both"):
            brute = brute_force_count(curve)
        if req.method in ("formula", "both"):
            formula, resid = formula_count_with_residual(curve, req.tolerance)
        agree = (brute == formula) if req.method == "both" else None
        return schemas.CountReport(
            p=req.p,
            lam=req.lam,
            method=req.method,
            brute_count=brute,
            formula_count=formula,
            formula_residual=resid,
            agree=agree,
        )

    @app.post("/periods", response_model=schemas.PeriodsReport)
    def periods(req: schemas.PeriodsRequest) -> schemas.PeriodsReport:
        if req.terms < 1:
            raise PreconditionViolation("terms must be >= 1")
        try:
            lam = Fraction(req.lam)
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionViolation(f"bad rational '{req.lam}': {exc}") from exc
        values = []
        for i in (1, 2, 3):
            params = period_params(i)
            partial = classical_2f1_partial(params, lam, req.terms - 1)
            values.append(
                schemas.PeriodValue(
                    index=i,
                    a=str(params.a),
                    b=str(params.b),
                    c=str(params.c),
                    partial_sum=str(partial),
                    decimal=repr(float(partial)),
                    recurrence_ok=ode_recurrence_check(params, max(req.terms, 2)),
                )
            )
        return schemas.PeriodsReport(
            lam=str(lam),
            terms=req.terms,
            inside_unit_disk=abs(lam) < 1,
            periods=values,
        )

    @app.post("/congruence", response_model=schemas.CongruenceSweepReport)
    def congruence(req: schemas.CongruenceRequest) -> schemas.CongruenceSweepReport:
        if req.all_x == (req.x is not None):
            raise PreconditionViolation("give exactly one of x or all_x")
        field = get_field(req.p)
        xs = range(1, req.p) if req.all_x else [req.x]
        cases = []
        for x in xs:
            rep = check_thm_congruence(req.m, req.d, field, x, req.tolerance)
            cases.append(
                schemas.CongruenceCase(
                    x=rep.x,
                    lhs_residue=rep.lhs_residue,
                    rhs_residue=rep.rhs_residue,
                    holds=rep.holds,
                    rounding_residual=rep.rounding_residual,
                )
            )
        return schemas.CongruenceSweepReport(
            m=req.m,
            d=req.d,
            p=req.p,
            cases=cases,
            all_hold=all(c.holds for c in cases),
        )

    @app.post("/hasse-witt", response_model=schemas.HasseWittReport)
    def hasse_witt_route(req: schemas.HasseWittRequest) -> schemas.HasseWittReport:
        curve = LegendreCurve(get_field(req.p), req.lam)
        matrix = hasse_witt(curve)
        ap = trace_frobenius(curve)
        return schemas.HasseWittReport(
            p=req.p,
            lam=req.lam,
            matrix=[list(row) for row in matrix.entries],
            trace_mod_p=matrix.trace,
            trace_frobenius=ap,
            congruent=matrix.trace == ap % req.p,
        )

    @app.post("/transform", response_model=schemas.TransformReport)
    def transform(req: schemas.TransformRequest) -> schemas.TransformReport:
        field = get_field(req.p)
        A = MultChar(field, req.a_exp)
        B = MultChar(field, req.b_exp)
        C = MultChar(field, req.c_exp)
        lhs, rhs = inversion_transform_sides(A, B, C, req.x)
        tol = residual_tolerance(req.p) if req.tolerance is None else req.tolerance
        residual = abs(lhs - rhs)
        return schemas.TransformReport(
            p=req.p,
            a_exp=A.k,
            b_exp=B.k,
            c_exp=C.k,
            x=req.x % req.p,
            lhs=schemas.ComplexValue(re=lhs.real, im=lhs.imag),
            rhs=schemas.ComplexValue(re=rhs.real, im=rhs.imag),
            residual=residual,
            tolerance=tol,
            ok=residual < tol,
        )

    @app.post("/match", response_model=schemas.MatchReport)
    def match(req: schemas.MatchRequest) -> schemas.MatchReport:
        curve = LegendreCurve(get_field(req.p), req.lam)
        rows = match_table(curve, req.tolerance)
        return schemas.MatchReport(
            p=req.p,
            lam=req.lam,
            rows=[
                schemas.MatchRowModel(
                    period_index=r.period_index,
                    char_exponents=list(r.char_exponents),
                    lhs_residue=r.lhs_residue,
                    rhs_residue=r.rhs_residue,
                    holds=r.holds,
                    rounding_residual=r.rounding_residual,
                    note=r.note,
                )
                for r in rows
            ],
            quadratic_row_holds=rows[1].holds is True,
        )

    @app.post("/survey", response_model=schemas.SurveyReport)
    def survey(req: schemas.SurveyRequest) -> schemas.SurveyReport:
        result = run_survey(req.pmax, jobs=req.jobs, tolerance=req.tolerance)
        return schemas.SurveyReport(
            pmax=result.pmax,
            rows=[schemas.SurveyRowModel(**row_to_dict(r)) for r in result.rows],
            ok=result.ok,
            failures=result.failures,
        )

    return app


app = create_app()
