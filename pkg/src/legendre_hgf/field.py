"""Prime fields F_p with a primitive root and a dense discrete-log table.

Every character sum in this package evaluates characters through the dlog
table, so the table is built once per field (O(p) time and memory) and then
shared read-only.  Fields are immutable after construction and safe to pass
to concurrent workers.
"""

from __future__ import annotations

import cmath
import os
from functools import cached_property

from .errors import DivisionByZero, MixedFields, NotPrime, TooLarge

DEFAULT_MAX_P = 100_003
MAX_P_ENV = "LEGENDRE_HGF_MAX_P"


def configured_max_p() -> int:
    """Field-size cap: LEGENDRE_HGF_MAX_P when set, else the default."""
    raw = os.environ.get(MAX_P_ENV)
    if raw is None:
        return DEFAULT_MAX_P
    return int(raw)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test; fine at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """F_p together with its smallest primitive root g and dlog table.

    ``dlog[x]`` is the exponent e with g**e = x (mod p); index 0 is a -1
    sentinel since 0 has no discrete log.  Two PrimeField instances compare
    by identity; build a field once and share it.
    """

    def __init__(self, p: int, max_p: int | None = None):
        cap = configured_max_p() if max_p is None else max_p
        if p > cap:
            raise TooLarge(f"p = {p} exceeds the configured maximum {cap}")
        if p < 3 or not is_prime(p):
            raise NotPrime(f"p = {p} is not an odd prime >= 3")
        self.p = p
        self.g = self._find_primitive_root(p)
        dlog = [-1] * p
        acc = 1
        for e in range(p - 1):
            dlog[acc] = e
            acc = acc * self.g % p
        self.dlog = dlog

    @staticmethod
    def _find_primitive_root(p: int) -> int:
        # g generates F_p* iff g^((p-1)/l) != 1 for every prime l | p-1.
        cofactors = [(p - 1) // ell for ell in prime_factors(p - 1)]
        for g in range(2, p):
            if all(pow(g, e, p) != 1 for e in cofactors):
                return g
        raise AssertionError("no primitive root found; p is not prime")

    @cached_property
    def unit_roots(self) -> tuple[complex, ...]:
        """exp(2*pi*i*e/(p-1)) for e = 0..p-2; the complex images of g**e."""
        n = self.p - 1
        return tuple(cmath.exp(2j * cmath.pi * e / n) for e in range(n))

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        """inverses[x] = x^-1 mod p for x = 1..p-1 (index 0 unused)."""
        p = self.p
        inv = [0] * p
        inv[1] = 1
        for x in range(2, p):
            inv[x] = (p - p // x) * inv[p % x] % p
        return tuple(inv)

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return self.inverses[x]

    def pow(self, x: int, e: int) -> int:
        x %= self.p
        if e < 0 and x == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return pow(x, e, self.p)

    def dlog_of(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DivisionByZero(f"0 has no discrete log in F_{self.p}")
        return self.dlog[x]

    def __repr__(self) -> str:
        return f"PrimeField(p={self.p}, g={self.g})"


class FieldElement:
    """A residue bound to its field; arithmetic never leaves the field."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise MixedFields(
                    f"cannot mix F_{self.field.p} and F_{other.field.p} elements"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * self.field.inv(v))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def make_field(p: int, max_p: int | None = None) -> PrimeField:
    """Build F_p with its primitive root and dlog table.

    Raises NotPrime for composite (or too-small) p and TooLarge beyond the
    cap, which defaults to LEGENDRE_HGF_MAX_P or 100003.
    """
    return PrimeField(p, max_p=max_p)


def residue(x, field: PrimeField) -> int:
    """Normalize an int or FieldElement argument to a residue in [0, p)."""
    if isinstance(x, FieldElement):
        if x.field is not field:
            raise MixedFields(
                f"element of F_{x.field.p} used in F_{field.p} context"
            )
        return x.value
    return int(x) % field.p
