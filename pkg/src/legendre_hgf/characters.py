"""Multiplicative characters of F_p*, Jacobi sums and normalized binomials.

Characters are powers T**k of the generator character T with
T(g) = exp(2*pi*i/(p-1)).  A character value is carried as an exact
exponent mod p-1 and converted to a complex double only at aggregation,
so each summand costs a single rounding.  chi(0) = 0 for every chi,
including the trivial character.
"""

from __future__ import annotations

import math
import weakref

from .errors import BadFieldResidue, MixedFields
from .field import PrimeField, residue


class MultChar:
    """The character T**k of F_p*; k is kept reduced mod p-1."""

    __slots__ = ("field", "k")

    def __init__(self, field: PrimeField, k: int):
        self.field = field
        self.k = k % (field.p - 1)

    @property
    def order(self) -> int:
        n = self.field.p - 1
        return n // math.gcd(self.k, n)

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    @property
    def bar(self) -> MultChar:
        """Complex-conjugate character T**(-k)."""
        return MultChar(self.field, -self.k)

    def __mul__(self, other: MultChar) -> MultChar:
        if other.field is not self.field:
            raise MixedFields("characters of different fields")
        return MultChar(self.field, self.k + other.k)

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.field, self.k * e)

    def __call__(self, x) -> complex:
        """chi(x) as a complex double; chi(0) = 0 by convention."""
        v = residue(x, self.field)
        if v == 0:
            return 0j
        e = self.k * self.field.dlog[v] % (self.field.p - 1)
        return self.field.unit_roots[e]

    def at_minus_one(self) -> int:
        """chi(-1) exactly: dlog(-1) = (p-1)/2, so chi(-1) = (-1)**k."""
        return -1 if self.k % 2 else 1

    def __eq__(self, other):
        if isinstance(other, MultChar):
            return self.field is other.field and self.k == other.k
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.k))

    def __repr__(self) -> str:
        return f"T^{self.k} (mod {self.field.p})"


def generator_char(field: PrimeField) -> MultChar:
    """T, the generator of the character group, with T(g) = zeta_(p-1)."""
    return MultChar(field, 1)


def trivial_char(field: PrimeField) -> MultChar:
    return MultChar(field, 0)


def quadratic_char(field: PrimeField) -> MultChar:
    """phi = T**((p-1)/2), the Legendre symbol."""
    return MultChar(field, (field.p - 1) // 2)


def quartic_char(field: PrimeField) -> MultChar:
    """psi = T**((p-1)/4); needs p = 1 mod 4."""
    if field.p % 4 != 1:
        raise BadFieldResidue(f"p = {field.p} is not 1 mod 4, no quartic character")
    return MultChar(field, (field.p - 1) // 4)


def char_eval(chi: MultChar, x) -> complex:
    """Function form of chi(x), for callers that prefer it."""
    return chi(x)


# dlog pairs (dlog x, dlog(1-x)) for x != 0, 1: the only data a Jacobi sum
# needs.  Keyed weakly by field so tables die with their field.
_pair_tables: weakref.WeakKeyDictionary[PrimeField, list[tuple[int, int]]] = (
    weakref.WeakKeyDictionary()
)

# Jacobi-sum cache, also per field.  Entries are published only after the
# value is complete, so concurrent readers under the GIL never observe a
# partial entry; a lost race just recomputes the same value.
_jacobi_caches: weakref.WeakKeyDictionary[
    PrimeField, dict[tuple[int, int], complex]
] = weakref.WeakKeyDictionary()


def _pair_table(field: PrimeField) -> list[tuple[int, int]]:
    table = _pair_tables.get(field)
    if table is None:
        p, dlog = field.p, field.dlog
        table = [(dlog[x], dlog[(1 - x) % p]) for x in range(2, p)]
        _pair_tables[field] = table
    return table


def jacobi_sum(A: MultChar, B: MultChar) -> complex:
    """J(A, B) = sum over x in F_p of A(x) B(1-x), with chi(0) = 0.

    Direct O(p) summation over exact exponents; values are cached per field
    because a single finite-field 2F1 evaluation wants p-1 of them.
    """
    if A.field is not B.field:
        raise MixedFields("Jacobi sum of characters over different fields")
    field = A.field
    cache = _jacobi_caches.get(field)
    if cache is None:
        cache = {}
        _jacobi_caches[field] = cache
    key = (A.k, B.k)
    val = cache.get(key)
    if val is None:
        n = field.p - 1
        roots = field.unit_roots
        a, b = key
        total = 0j
        for lx, l1x in _pair_table(field):
            total += roots[(a * lx + b * l1x) % n]
        val = total
        cache[key] = val
    return val


def norm_binom(A: MultChar, B: MultChar) -> complex:
    """Normalized Jacobi sum B(-1)/p * J(A, conj(B))."""
    sign = B.at_minus_one()
    return sign * jacobi_sum(A, B.bar) / A.field.p


__all__ = [
    "MultChar",
    "char_eval",
    "generator_char",
    "jacobi_sum",
    "norm_binom",
    "quadratic_char",
    "quartic_char",
    "trivial_char",
]
