"""Command-line client for the computation service.

Every subcommand issues one HTTP request.  By default the service app is
mounted in-process (no server needed); point --url at a running instance
to query that instead.  Exit codes are stable for scripting: 0 success /
all checks hold, 1 invariant or numerical failure, 2 usage or
precondition error.
"""

from __future__ import annotations

import asyncio
import json as jsonlib
import sys

import click
import httpx

from .survey import CSV_COLUMNS, row_from_dict, rows_to_csv

# Error codes that mean the request itself was bad (exit 2); anything else
# from the domain (RoundingFailure, DenominatorVanishes, ...) is a
# computation failure (exit 1).
_USAGE_CODES = {
    "BadFieldResidue",
    "DivisionByZero",
    "MixedFields",
    "NotPrime",
    "PreconditionViolation",
    "SingularCurve",
    "TooLarge",
    "ZeroArgument",
}


def _post(path: str, payload: dict, url: str | None) -> httpx.Response:
    if url:
        with httpx.Client(base_url=url, timeout=None) as client:
            return client.post(path, json=payload)

    async def go() -> httpx.Response:
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://legendre-hgf.local", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _body_or_exit(resp: httpx.Response) -> dict:
    if resp.status_code == 200:
        return resp.json()
    try:
        body = resp.json()
    except ValueError:
        click.echo(f"error: HTTP {resp.status_code}: {resp.text}", err=True)
        sys.exit(1)
    if "error" in body:
        code = body["error"].get("code", "")
        message = body["error"].get("message", "")
        click.echo(f"error: {code}: {message}", err=True)
        sys.exit(2 if code in _USAGE_CODES else 1)
    # FastAPI request-validation errors arrive as {"detail": [...]}.
    click.echo(f"error: invalid request: {body.get('detail')}", err=True)
    sys.exit(2)


def _emit_json(body: dict) -> None:
    click.echo(jsonlib.dumps(body, indent=2))


@click.group()
@click.option("--url", default=None, help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx: click.Context, url: str | None) -> None:
    """Point counts, congruences, periods and Hasse-Witt data for
    y^4 = x(x-1)(x-lambda) over F_p."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--lambda", "lam", type=int, required=True)
@click.option("--method", type=click.Choice(["brute", "formula", "both"]), default="both")
@click.option("--tolerance", type=float, default=None, help="Override the 1e-6*p rounding bound.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def count(ctx, p, lam, method, tolerance, as_json):
    """Count points on the curve by brute force, by the character-sum
    formula (p = 1 mod 4), or both."""
    body = _body_or_exit(
        _post(
            "/count",
            {"p": p, "lambda": lam, "method": method, "tolerance": tolerance},
            ctx.obj["url"],
        )
    )
    if as_json:
        _emit_json(body)
    else:
        if body["brute_count"] is not None:
            click.echo(f"brute count:   {body['brute_count']}")
        if body["formula_count"] is not None:
            click.echo(
                f"formula count: {body['formula_count']} "
                f"(rounding residual {body['formula_residual']:.2e})"
            )
        if body["agree"] is not None:
            diff = body["formula_count"] - body["brute_count"]
            click.echo(f"difference:    {diff} ({'agree' if body['agree'] else 'MISMATCH'})")
    if body["agree"] is False:
        sys.exit(1)


@main.command()
@click.option("--lambda", "lam", type=str, required=True, help="Exact rational, e.g. 1/4.")
@click.option("--terms", type=int, default=20)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def periods(ctx, lam, terms, as_json):
    """Partial sums of the three period series at a rational lambda."""
    body = _body_or_exit(_post("/periods", {"lambda": lam, "terms": terms}, ctx.obj["url"]))
    if as_json:
        _emit_json(body)
    else:
        if not body["inside_unit_disk"]:
            click.echo("warning: |lambda| >= 1, partial sums do not converge", err=True)
        for row in body["periods"]:
            click.echo(
                f"pi_{row['index']} = 2F1({row['a']}, {row['b']}; {row['c']} | {body['lambda']})"
                f" ~ {row['partial_sum']} = {row['decimal']}"
                f"  [recurrence {'ok' if row['recurrence_ok'] else 'BROKEN'}]"
            )
    if not all(r["recurrence_ok"] for r in body["periods"]):
        sys.exit(1)


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--p", "p", type=int, required=True)
@click.option("--x", "x", type=int, default=None)
@click.option("--all-x", "all_x", is_flag=True, help="Sweep every x in F_p*.")
@click.option("--tolerance", type=float, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def congruence(ctx, m, d, p, x, all_x, tolerance, as_json):
    """Check the truncated-series congruence for parameters (m/d, (d-m)/d; 1)."""
    body = _body_or_exit(
        _post(
            "/congruence",
            {"m": m, "d": d, "p": p, "x": x, "all_x": all_x, "tolerance": tolerance},
            ctx.obj["url"],
        )
    )
    if as_json:
        _emit_json(body)
    else:
        held = sum(1 for c in body["cases"] if c["holds"])
        for c in body["cases"]:
            if not c["holds"]:
                click.echo(
                    f"x={c['x']}: lhs {c['lhs_residue']} != rhs {c['rhs_residue']}"
                )
        click.echo(f"{held}/{len(body['cases'])} hold for (m,d,p)=({m},{d},{p})")
    if not body["all_hold"]:
        sys.exit(1)


@main.command("hasse-witt")
@click.option("--p", "p", type=int, required=True)
@click.option("--lambda", "lam", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def hasse_witt_cmd(ctx, p, lam, as_json):
    """Hasse-Witt matrix in the basis (x dx/y^3, dx/y^2, dx/y^3)."""
    body = _body_or_exit(_post("/hasse-witt", {"p": p, "lambda": lam}, ctx.obj["url"]))
    if as_json:
        _emit_json(body)
    else:
        for row in body["matrix"]:
            click.echo("  [" + "  ".join(f"{v:>4}" for v in row) + "]")
        click.echo(f"trace mod p: {body['trace_mod_p']}, a_p = {body['trace_frobenius']}")
        click.echo(f"trace = a_p mod p: {'ok' if body['congruent'] else 'FAILED'}")
    if not body["congruent"]:
        sys.exit(1)


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--a", "a_exp", type=int, required=True, help="Exponent of A = T^a.")
@click.option("--b", "b_exp", type=int, required=True, help="Exponent of B = T^b.")
@click.option("--c", "c_exp", type=int, required=True, help="Exponent of C = T^c.")
@click.option("--x", "x", type=int, required=True)
@click.option("--tolerance", type=float, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def transform(ctx, p, a_exp, b_exp, c_exp, x, tolerance, as_json):
    """Residual of the inversion transformation between arguments x and 1/x."""
    body = _body_or_exit(
        _post(
            "/transform",
            {
                "p": p,
                "a_exp": a_exp,
                "b_exp": b_exp,
                "c_exp": c_exp,
                "x": x,
                "tolerance": tolerance,
            },
            ctx.obj["url"],
        )
    )
    if as_json:
        _emit_json(body)
    else:
        click.echo(f"lhs = {body['lhs']['re']:+.12f} {body['lhs']['im']:+.12f}i")
        click.echo(f"rhs = {body['rhs']['re']:+.12f} {body['rhs']['im']:+.12f}i")
        click.echo(
            f"residual = {body['residual']:.3e} "
            f"({'ok' if body['ok'] else 'EXCEEDS'} tolerance {body['tolerance']:.1e})"
        )
    if not body["ok"]:
        sys.exit(1)


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--lambda", "lam", type=int, required=True)
@click.option("--tolerance", type=float, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def match(ctx, p, lam, tolerance, as_json):
    """Period/point-count match table; only the quadratic row is a theorem."""
    body = _body_or_exit(
        _post("/match", {"p": p, "lambda": lam, "tolerance": tolerance}, ctx.obj["url"])
    )
    if as_json:
        _emit_json(body)
    else:
        for row in body["rows"]:
            exps = ",".join(f"T^{k}" for k in row["char_exponents"])
            lhs = row["lhs_residue"] if row["lhs_residue"] is not None else "?"
            rhs = row["rhs_residue"] if row["rhs_residue"] is not None else "non-integral"
            verdict = {True: "holds", False: "differs", None: "n/a"}[row["holds"]]
            click.echo(f"pi_{row['period_index']} vs ({exps}): lhs={lhs} rhs={rhs} [{verdict}]")
            if row["note"]:
                click.echo(f"  note: {row['note']}")
    if not body["quadratic_row_holds"]:
        sys.exit(1)


_SURVEY_EPILOG = "CSV columns, in order: " + ", ".join(CSV_COLUMNS)


@main.command(epilog=_SURVEY_EPILOG)
@click.option("--pmax", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(writable=True, dir_okay=False), default="-")
@click.option("--jobs", type=int, default=1, help="Worker processes, split by prime.")
@click.option("--tolerance", type=float, default=None)
@click.option("--json", "as_json", is_flag=True, help="Print the full JSON report to stdout.")
@click.pass_context
def survey(ctx, pmax, fmt, out, jobs, tolerance, as_json):
    """Sweep every curve with p = 1 mod 4, p <= pmax, checking all invariants."""
    if pmax < 5:
        raise click.UsageError("--pmax must be >= 5")
    body = _body_or_exit(
        _post(
            "/survey",
            {"pmax": pmax, "jobs": jobs, "tolerance": tolerance},
            ctx.obj["url"],
        )
    )
    rows = [row_from_dict(r) for r in body["rows"]]
    if fmt == "csv":
        payload = rows_to_csv(rows)
    else:
        payload = jsonlib.dumps(body["rows"], indent=2) + "\n"
    if out == "-":
        click.echo(payload, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        click.echo(f"wrote {len(rows)} rows to {out}", err=True)
    if as_json:
        _emit_json(body)
    for failure in body["failures"]:
        click.echo(f"invariant failure: {failure}", err=True)
    if not body["ok"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service under uvicorn."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
