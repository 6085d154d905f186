"""Classical 2F1 series over exact rationals, their mod-p truncations, and
the parameter triples attached to the three holomorphic periods of
y^4 = x(x-1)(x-lambda).

All series coefficients are exact Fractions; floating point never touches
this module.  The term recurrence

    (k+1)(c+k) t_{k+1} = (a+k)(b+k) t_k

is the coefficient form of the second-order differential equation the
series satisfies, which is what ode_recurrence_check verifies.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import DenominatorVanishes, PreconditionViolation
from .field import PrimeField, residue


class ClassicalParams(NamedTuple):
    """Upper parameters a, b and lower parameter c of a classical 2F1."""

    a: Fraction
    b: Fraction
    c: Fraction


#: Parameters of the three periods: pi_1, pi_2, pi_3.
PERIOD_PARAMS: dict[int, ClassicalParams] = {
    1: ClassicalParams(Fraction(1, 4), Fraction(3, 4), Fraction(1, 2)),
    2: ClassicalParams(Fraction(1, 2), Fraction(1, 2), Fraction(1, 1)),
    3: ClassicalParams(Fraction(3, 4), Fraction(5, 4), Fraction(3, 2)),
}

#: The annihilating operators of the periods, written as
#: s + (u - v*lam) d/dlam + lam(1-lam) d^2/dlam^2, stored as (s, u, v).
PERIOD_OPERATORS: dict[int, tuple[Fraction, Fraction, Fraction]] = {
    1: (Fraction(-3, 16), Fraction(1, 2), Fraction(2)),
    2: (Fraction(-1, 4), Fraction(1), Fraction(2)),
    3: (Fraction(-15, 16), Fraction(3, 2), Fraction(3)),
}


def period_params(i: int) -> ClassicalParams:
    """Parameter triple of the i-th period, i in {1, 2, 3}."""
    try:
        return PERIOD_PARAMS[i]
    except KeyError:
        raise PreconditionViolation(f"period index must be 1, 2 or 3, got {i}") from None


def pochhammer(alpha: Fraction, k: int) -> Fraction:
    """Rising factorial alpha (alpha+1) ... (alpha+k-1), exact."""
    if k < 0:
        raise PreconditionViolation("pochhammer needs k >= 0")
    out = Fraction(1)
    for j in range(k):
        out *= alpha + j
    return out


def series_terms(params: ClassicalParams, n: int) -> list[Fraction]:
    """Exact coefficients t_0..t_n with t_k = (a)_k (b)_k / ((c)_k k!)."""
    a, b, c = params
    terms = [Fraction(1)]
    t = Fraction(1)
    for k in range(n):
        t = t * (a + k) * (b + k) / ((c + k) * (k + 1))
        terms.append(t)
    return terms


def classical_2f1_partial(params: ClassicalParams, x: Fraction, n: int) -> Fraction:
    """Partial sum sum_{k=0}^{n} t_k x^k, exact."""
    x = Fraction(x)
    total = Fraction(0)
    xpow = Fraction(1)
    for t in series_terms(params, n):
        total += t * xpow
        xpow *= x
    return total


def terms_satisfy_recurrence(params: ClassicalParams, terms: list[Fraction]) -> bool:
    """Exact check of (k+1)(c+k) t_{k+1} = (a+k)(b+k) t_k for all given terms."""
    a, b, c = params
    for k in range(len(terms) - 1):
        if (k + 1) * (c + k) * terms[k + 1] != (a + k) * (b + k) * terms[k]:
            return False
    return True


def ode_recurrence_check(params: ClassicalParams, n: int) -> bool:
    """True iff the first n+1 series coefficients satisfy the recurrence exactly."""
    if n < 1:
        raise PreconditionViolation("recurrence check needs n >= 1")
    return terms_satisfy_recurrence(params, series_terms(params, n))


def _fraction_sqrt(q: Fraction) -> Fraction:
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise ValueError(f"{q} is not a rational square")
    return Fraction(rn, rd)


def params_from_operator(
    constant: Fraction, d1_constant: Fraction, d1_slope: Fraction
) -> ClassicalParams:
    """Read (a, b; c) off an operator s + (u - v*x) d/dx + x(1-x) d^2/dx^2.

    Matching against the hypergeometric equation gives ab = -s, c = u and
    a + b + 1 = v; a and b are the roots of z^2 - (v-1) z - s.
    """
    ab = -Fraction(constant)
    s = Fraction(d1_slope) - 1
    disc = s * s - 4 * ab
    root = _fraction_sqrt(disc)
    a = (s - root) / 2
    b = (s + root) / 2
    return ClassicalParams(a, b, Fraction(d1_constant))


def _rational_residue(q: Fraction, field: PrimeField) -> int:
    p = field.p
    if q.denominator % p == 0:
        raise PreconditionViolation(
            f"p = {p} divides the denominator of {q}; no mod-p reduction"
        )
    return q.numerator * field.inv(q.denominator % p) % p


def truncated_2f1_mod_p(
    params: ClassicalParams,
    x,
    field: PrimeField,
    truncation: int | None = None,
) -> int:
    """Truncated series sum_{k=0}^{m-1} t_k x^k reduced mod p; m defaults to p.

    Each t_k is reduced by mapping u/v to u v^-1 mod p.  As soon as an upper
    factor (a+j) or (b+j) hits 0 mod p every later term vanishes and the sum
    stops; a lower factor (c+j) or (1+j) hitting 0 first is an error because
    the residue u/0 with u != 0 is undefined.
    """
    p = field.p
    m = p if truncation is None else truncation
    if m < 1:
        raise PreconditionViolation("truncation index must be >= 1")
    ra = _rational_residue(Fraction(params.a), field)
    rb = _rational_residue(Fraction(params.b), field)
    rc = _rational_residue(Fraction(params.c), field)
    xv = residue(x, field)
    if xv == 0:
        return 1 % p  # only the k = 0 term survives
    inverses = field.inverses
    total = 1 % p
    term = 1
    xpow = 1
    for j in range(m - 1):
        na = (ra + j) % p
        nb = (rb + j) % p
        if na == 0 or nb == 0:
            break  # tail is identically zero
        dc = (rc + j) % p
        dk = (j + 1) % p
        if dc == 0 or dk == 0:
            raise DenominatorVanishes(
                f"lower factor vanishes at index {j} mod {p} for params {params}"
            )
        term = term * na % p * nb % p * inverses[dc] % p * inverses[dk] % p
        xpow = xpow * xv % p
        total = (total + term * xpow) % p
    return total


__all__ = [
    "ClassicalParams",
    "PERIOD_OPERATORS",
    "PERIOD_PARAMS",
    "classical_2f1_partial",
    "ode_recurrence_check",
    "params_from_operator",
    "period_params",
    "pochhammer",
    "series_terms",
    "terms_satisfy_recurrence",
    "truncated_2f1_mod_p",
]
