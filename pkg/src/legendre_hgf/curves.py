"""The genus-3 curves y^4 = x(x-1)(x-lambda): exact point counts by brute
force and by the quartic-character hypergeometric formula, the trace of
Frobenius, and the Hasse-Witt matrix.

Hasse-Witt entries come from Cartier-operator coefficient extraction: with
f(x) = x(x-1)(x-lambda) and q = (p-1)/4, the differential x^(a-1) dx/y^b
rewrites as x^(a-1) f^e y^(-p*bt) dx with p*bt = b mod 4, and applying the
Cartier operator picks out the coefficients of x^(p*a' - a) of f^e mod p.
The y^2 class (e = 2q) is a 1x1 block; the y^3 class (e = 3q) mixes the two
differentials with a in {1, 2}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import quartic_char
from .errors import BadFieldResidue, RoundingFailure, SingularCurve
from .ffhyper import ff_2f1_pointsum
from .field import PrimeField, residue


class LegendreCurve:
    """The pair (F_p, lambda) with lambda not in {0, 1}."""

    __slots__ = ("field", "lam")

    def __init__(self, field: PrimeField, lam):
        lam = residue(lam, field)
        if lam in (0, 1):
            raise SingularCurve(
                f"lambda = {lam} gives a singular curve over F_{field.p}"
            )
        self.field = field
        self.lam = lam

    def __repr__(self) -> str:
        return f"LegendreCurve(p={self.field.p}, lambda={self.lam})"


def default_count_tolerance(p: int) -> float:
    """Rounding-residual bound for integer-valued character sums."""
    return 1e-6 * p


def brute_force_count(curve: LegendreCurve) -> int:
    """#C over F_p: one point at infinity plus, per x, the number of fourth
    roots of x(x-1)(x-lambda).  O(p) via a fourth-power residue table."""
    p = curve.field.p
    lam = curve.lam
    cnt = [0] * p
    for y in range(p):
        cnt[y * y % p * y % p * y % p] += 1
    total = 1
    for x in range(p):
        total += cnt[x * (x - 1) % p * (x - lam) % p]
    return total


def formula_count_with_residual(
    curve: LegendreCurve, tolerance: float | None = None
) -> tuple[int, float]:
    """Point count via the quartic-character hypergeometric sum.

    Evaluates p + 1 + p * sum_{m=1..3} psi^m(-1) 2F1(psi^-m, psi^m; psi^2m | lambda)
    and rounds, also returning the rounding residual.  Requires p = 1 mod 4.
    """
    field = curve.field
    p = field.p
    if p % 4 != 1:
        raise BadFieldResidue(f"formula count needs p = 1 mod 4, got p = {p}")
    tol = default_count_tolerance(p) if tolerance is None else tolerance
    psi = quartic_char(field)
    total = 0j
    for m in range(1, 4):
        chi = psi**m
        total += chi.at_minus_one() * ff_2f1_pointsum(
            chi.bar, chi, psi ** (2 * m), curve.lam
        )
    if abs(total.imag) >= tol:
        raise RoundingFailure(
            f"imaginary part {total.imag:.3e} of the character sum exceeds {tol:.3e}"
        )
    w = p * total
    r = round(w.real)
    resid = abs(w - r)
    if resid >= tol:
        raise RoundingFailure(
            f"p*sum = {w!r} is {resid:.3e} away from an integer (bound {tol:.3e})"
        )
    return p + 1 + r, resid


def formula_count(curve: LegendreCurve, tolerance: float | None = None) -> int:
    return formula_count_with_residual(curve, tolerance)[0]


def trace_frobenius(curve: LegendreCurve) -> int:
    """a_p = p + 1 - #C(F_p); |a_p| <= 6 sqrt(p) by the Weil bound."""
    p = curve.field.p
    return p + 1 - brute_force_count(curve)


@dataclass(frozen=True)
class HasseWittMatrix:
    """3x3 matrix over F_p in the basis (x dx/y^3, dx/y^2, dx/y^3).

    The dx/y^2 differential spans a 1x1 block and the two y^3 differentials
    a 2x2 block; the four mixed entries are structurally zero.
    """

    p: int
    entries: tuple[tuple[int, int, int], ...]

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(3)) % self.p


# Repeated multiplication is O(p^2) per curve and fine at sweep scale;
# square-and-multiply takes over for larger one-off evaluations.
_REPEATED_MULT_LIMIT = 1024


def _mul_by_poly(acc: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros(len(acc) + len(f) - 1, dtype=np.int64)
    for i, ci in enumerate(f):
        if ci:
            out[i : i + len(acc)] += int(ci) * acc
    out %= p
    return out


def _poly_pow_mod(f: np.ndarray, e: int, p: int) -> np.ndarray:
    """f**e mod p by square-and-multiply over dense int64 coefficients."""
    result = np.ones(1, dtype=np.int64)
    base = f % p
    while e:
        if e & 1:
            result = np.convolve(result, base) % p
        e >>= 1
        if e:
            base = np.convolve(base, base) % p
    return result


def _quartic_power_classes(curve: LegendreCurve) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of f^((p-1)/2) and f^(3(p-1)/4) mod p for f = x(x-1)(x-lam)."""
    p = curve.field.p
    lam = curve.lam
    # x(x-1)(x-lam) = x^3 - (1+lam) x^2 + lam x, ascending coefficients
    f = np.array([0, lam % p, (-(1 + lam)) % p, 1], dtype=np.int64)
    e_half = (p - 1) // 2
    e_tq = 3 * (p - 1) // 4
    if p <= _REPEATED_MULT_LIMIT:
        acc = f.copy()
        half = None
        for e in range(2, e_tq + 1):
            acc = _mul_by_poly(acc, f, p)
            if e == e_half:
                half = acc.copy()
        return half, acc
    half = _poly_pow_mod(f, e_half, p)
    return half, np.convolve(half, _poly_pow_mod(f, e_tq - e_half, p)) % p


def _coeff(arr: np.ndarray, i: int) -> int:
    return int(arr[i]) if 0 <= i < len(arr) else 0


def hasse_witt(curve: LegendreCurve) -> HasseWittMatrix:
    """Hasse-Witt matrix of the curve via Cartier coefficient extraction.

    Entry (i, j) carries the target-omega_i coefficient of the Cartier image
    of omega_j.  Requires p = 1 mod 4 so both y-exponent classes close up.
    """
    p = curve.field.p
    if p % 4 != 1:
        raise BadFieldResidue(f"Hasse-Witt extraction needs p = 1 mod 4, got {p}")
    f_half, f_tq = _quartic_power_classes(curve)
    m22 = _coeff(f_half, p - 1)
    # y^3 class: source a=2 is omega_1 = x dx/y^3, source a=1 is omega_3.
    m11 = _coeff(f_tq, 2 * p - 2)
    m13 = _coeff(f_tq, 2 * p - 1)
    m31 = _coeff(f_tq, p - 2)
    m33 = _coeff(f_tq, p - 1)
    return HasseWittMatrix(
        p=p,
        entries=(
            (m11, 0, m13),
            (0, m22, 0),
            (m31, 0, m33),
        ),
    )


__all__ = [
    "HasseWittMatrix",
    "LegendreCurve",
    "brute_force_count",
    "default_count_tolerance",
    "formula_count",
    "formula_count_with_residual",
    "hasse_witt",
    "trace_frobenius",
]
