"""Independent brute-force oracles used across the test suite.

Everything here is deliberately naive (double loops, exact rationals) and
shares no code with the package paths it checks.
"""

from __future__ import annotations

from fractions import Fraction


def quartic_point_count(p: int, lam: int) -> int:
    """#{(x, y): y^4 = x(x-1)(x-lam) over F_p} + 1, by double enumeration."""
    total = 1
    for x in range(p):
        rhs = x * (x - 1) * (x - lam) % p
        total += sum(1 for y in range(p) if pow(y, 4, p) == rhs)
    return total


def elliptic_point_count(p: int, lam: int) -> int:
    """#{(x, y): y^2 = x(x-1)(x-lam) over F_p} + 1, by double enumeration."""
    total = 1
    for x in range(p):
        rhs = x * (x - 1) * (x - lam) % p
        total += sum(1 for y in range(p) if y * y % p == rhs)
    return total


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Plain integer polynomial product, ascending coefficients."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def rational_mod_p(q: Fraction, p: int) -> int:
    """u/v mod p via the inverse of v; v must be coprime to p."""
    return q.numerator * pow(q.denominator, -1, p) % p


def odd_primes_upto(n: int) -> list[int]:
    out = []
    for k in range(3, n + 1, 2):
        if all(k % q for q in out):
            out.append(k)
    return out
