"""Mod-p congruences between truncated classical series and finite-field
hypergeometric values, and the period/point-count matching table for the
genus-3 curves.

The parameter map is fixed: a fraction a/b on the classical side becomes a
character of order b raised to the a-th power on the finite-field side,
with fractions reduced mod 1.  Only the middle (quadratic) row of the match
table carries a theorem; the quartic rows are reported as data because
matching series are *not* congruent in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import MultChar, quartic_char
from .classical import ClassicalParams, period_params, truncated_2f1_mod_p
from .curves import LegendreCurve, default_count_tolerance
from .errors import (
    BadFieldResidue,
    DenominatorVanishes,
    PreconditionViolation,
    RoundingFailure,
)
from .ffhyper import ff_2f1_pointsum
from .field import PrimeField, residue


@dataclass(frozen=True)
class CongruenceReport:
    """One checked instance of the truncated-series congruence."""

    p: int
    x: int
    lhs_residue: int
    rhs_residue: int
    holds: bool
    rounding_residual: float


def _rounded_residue(value: complex, p: int, tol: float) -> tuple[int, float]:
    """Round -p * (2F1 value) to the nearest integer and reduce mod p."""
    w = -p * value
    r = round(w.real)
    resid = abs(w - r)
    if resid >= tol:
        raise RoundingFailure(
            f"-p*2F1 = {w!r} is {resid:.3e} from an integer (bound {tol:.3e})"
        )
    return r % p, resid


def check_thm_congruence(
    m: int,
    d: int,
    field: PrimeField,
    x,
    tolerance: float | None = None,
) -> CongruenceReport:
    """Check 2F1(m/d, (d-m)/d; 1 | x)_tr(p) = -p 2F1(T^mt, conj; eps | x) mod p.

    Needs 1 <= m < d, p = 1 mod d and x != 0; t = (p-1)/d.  Both sides are
    computed on independent paths (exact residue recurrence vs character
    point sum) and compared as residues.
    """
    p = field.p
    if not 1 <= m < d:
        raise PreconditionViolation(f"need 1 <= m < d, got m={m}, d={d}")
    if p % d != 1:
        raise PreconditionViolation(f"need p = 1 mod d, got p={p}, d={d}")
    xv = residue(x, field)
    if xv == 0:
        raise PreconditionViolation("congruence is stated for x != 0")
    tol = default_count_tolerance(p) if tolerance is None else tolerance
    params = ClassicalParams(Fraction(m, d), Fraction(d - m, d), Fraction(1))
    lhs = truncated_2f1_mod_p(params, xv, field)
    t = (p - 1) // d
    A = MultChar(field, m * t)
    value = ff_2f1_pointsum(A, A.bar, MultChar(field, 0), xv)
    rhs, resid = _rounded_residue(value, p, tol)
    return CongruenceReport(
        p=p,
        x=xv,
        lhs_residue=lhs,
        rhs_residue=rhs,
        holds=lhs == rhs,
        rounding_residual=resid,
    )


@dataclass(frozen=True)
class MatchRow:
    """One period paired with its character triple, both reduced mod p.

    lhs_residue is None when the truncated series is undefined mod p (a
    lower parameter hit zero first); rhs_residue is None when -p * 2F1 is
    not within tolerance of a rational integer (the quartic rows take
    values in Z[i], not Z, for some curves).  holds is None whenever either
    side is missing; note carries the reason.
    """

    period_index: int
    char_exponents: tuple[int, int, int]
    lhs_residue: int | None
    rhs_residue: int | None
    holds: bool | None
    rounding_residual: float
    note: str | None = None


def match_table(
    curve: LegendreCurve, tolerance: float | None = None
) -> list[MatchRow]:
    """The three period/summand pairs for y^4 = x(x-1)(x-lambda) at lambda.

    Row 2 (the quadratic pair) is a theorem and is asserted by callers; rows
    1 and 3 are exploratory output.  Rows that fail mod-p reduction are
    reported with a note instead of aborting the table.
    """
    field = curve.field
    p = field.p
    if p % 4 != 1:
        raise BadFieldResidue(f"match table needs p = 1 mod 4, got p = {p}")
    tol = default_count_tolerance(p) if tolerance is None else tolerance
    psi = quartic_char(field)
    triples = {
        1: (psi.bar, psi, psi**2),
        2: (psi**2, psi**2, psi**4),
        3: (psi, psi**3, psi**2),
    }
    rows = []
    for i in (1, 2, 3):
        A, B, C = triples[i]
        note = None
        value = ff_2f1_pointsum(A, B, C, curve.lam)
        try:
            rhs, resid = _rounded_residue(value, p, tol)
        except RoundingFailure as exc:
            w = -p * value
            rhs, resid = None, abs(w - round(w.real))
            note = str(exc)
        try:
            lhs = truncated_2f1_mod_p(period_params(i), curve.lam, field)
        except DenominatorVanishes as exc:
            lhs = None
            note = str(exc) if note is None else f"{note}; {exc}"
        holds = None if lhs is None or rhs is None else lhs == rhs
        rows.append(
            MatchRow(
                period_index=i,
                char_exponents=(A.k, B.k, C.k),
                lhs_residue=lhs,
                rhs_residue=rhs,
                holds=holds,
                rounding_residual=resid,
                note=note,
            )
        )
    return rows


__all__ = ["CongruenceReport", "MatchRow", "check_thm_congruence", "match_table"]
