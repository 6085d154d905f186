"""The finite-field 2F1 in both of its standard definitions, plus the inversion
transformation between arguments x and 1/x.

The point-sum form is the O(p) workhorse; the character-sum form costs p-1
normalized-binomial lookups and is kept as an independent route so the two
can cross-check each other.
"""

from __future__ import annotations

from typing import NamedTuple

from .characters import MultChar, norm_binom
from .errors import MixedFields, ZeroArgument
from .field import PrimeField, residue


class FF2F1Spec(NamedTuple):
    """Argument bundle (A, B; C | x) for a finite-field 2F1."""

    A: MultChar
    B: MultChar
    C: MultChar
    x: int


def _common_field(A: MultChar, B: MultChar, C: MultChar) -> PrimeField:
    if A.field is not B.field or A.field is not C.field:
        raise MixedFields("2F1 characters must share one field")
    return A.field


def ff_2f1_pointsum(A: MultChar, B: MultChar, C: MultChar, x) -> complex:
    """2F1(A, B; C | x) as eps(x) BC(-1)/p * sum_y B(y) conj(B)C(1-y) conj(A)(1-xy).

    One pass over y in F_p; terms with a zero character argument drop out.
    """
    field = _common_field(A, B, C)
    p = field.p
    n = p - 1
    xv = residue(x, field)
    if xv == 0:
        return 0j
    dlog = field.dlog
    roots = field.unit_roots
    b = B.k
    bbar_c = (C.k - B.k) % n
    abar = (-A.k) % n
    total = 0j
    for y in range(1, p):
        u = (1 - y) % p
        if u == 0:
            continue
        v = (1 - xv * y) % p
        if v == 0:
            continue
        e = (b * dlog[y] + bbar_c * dlog[u] + abar * dlog[v]) % n
        total += roots[e]
    sign = -1 if (B.k + C.k) % 2 else 1  # BC(-1)
    return sign * total / p


def ff_2f1_charsum(A: MultChar, B: MultChar, C: MultChar, x) -> complex:
    """2F1(A, B; C | x) as p/(p-1) * sum over chi of binom(A chi; chi) binom(B chi; C chi) chi(x).

    Costs p-1 normalized-binomial lookups; fills the per-field Jacobi cache
    on first use.
    """
    field = _common_field(A, B, C)
    p = field.p
    n = p - 1
    xv = residue(x, field)
    if xv == 0:
        return 0j
    dlog_x = field.dlog[xv]
    roots = field.unit_roots
    total = 0j
    for j in range(n):
        chi = MultChar(field, j)
        b1 = norm_binom(MultChar(field, A.k + j), chi)
        b2 = norm_binom(MultChar(field, B.k + j), MultChar(field, C.k + j))
        total += b1 * b2 * roots[j * dlog_x % n]
    return total * p / n


def ff_2f1(A: MultChar, B: MultChar, C: MultChar, x) -> complex:
    """Default evaluation path (the O(p) point sum)."""
    return ff_2f1_pointsum(A, B, C, x)


def inversion_transform_sides(
    A: MultChar, B: MultChar, C: MultChar, x
) -> tuple[complex, complex]:
    """Both sides of the x -> 1/x transformation.

    Left: 2F1(A, B; C | x).  Right: ABC(-1) conj(A)(x) 2F1(A, A conj(C); A conj(B) | 1/x).
    """
    field = _common_field(A, B, C)
    xv = residue(x, field)
    if xv == 0:
        raise ZeroArgument("inversion transform needs x != 0")
    lhs = ff_2f1_pointsum(A, B, C, xv)
    sign = -1 if (A.k + B.k + C.k) % 2 else 1  # ABC(-1)
    prefactor = sign * A.bar(xv)
    rhs = prefactor * ff_2f1_pointsum(A, A * C.bar, A * B.bar, field.inv(xv))
    return lhs, rhs


def inversion_transform_residual(A: MultChar, B: MultChar, C: MultChar, x) -> float:
    """|LHS - RHS| of the inversion transformation; zero up to rounding."""
    lhs, rhs = inversion_transform_sides(A, B, C, x)
    return abs(lhs - rhs)


def residual_tolerance(p: int) -> float:
    """Default residual threshold: 1e-8 for p <= 1e4, scaling linearly above."""
    return 1e-8 * max(1.0, p / 1e4)


__all__ = [
    "FF2F1Spec",
    "ff_2f1",
    "ff_2f1_charsum",
    "ff_2f1_pointsum",
    "inversion_transform_residual",
    "inversion_transform_sides",
    "residual_tolerance",
]
