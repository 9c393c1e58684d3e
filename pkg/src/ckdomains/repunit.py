"""Generalized repunits (q^d - 1)/(q - 1) and representations by them.

A repunit value is the atom count of the canonical one-ideal local block, so
"n is a sum of m repunit values" is exactly "n splits into m local blocks".
Two repunits with equal value but different (q, d) are distinct certificates;
lookups canonicalize to the smallest q, then the smallest d.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass

from .primes import cached_table, is_prime

__all__ = [
    "PrimePower",
    "Repunit",
    "repunit_value",
    "prime_powers_up_to",
    "repunits_up_to",
    "represent_as_repunits",
    "prime_repunit_count",
]


@dataclass(frozen=True, slots=True)
class PrimePower:
    """q = p^a with p prime and a >= 1."""

    p: int
    a: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("exponent must be positive")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def value(self) -> int:
        return self.p**self.a

    @classmethod
    def from_value(cls, q: int) -> "PrimePower":
        """Parse q as p^a, rejecting non-prime-powers."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = _smallest_factor(q)
        a = 0
        v = q
        while v % p == 0:
            v //= p
            a += 1
        if v != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, a)


def _smallest_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


@dataclass(frozen=True, slots=True)
class Repunit:
    """(q^d - 1)/(q - 1) = 1 + q + ... + q^(d-1) for d >= 2."""

    q: PrimePower
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("repunit degree must be at least 2")

    @property
    def value(self) -> int:
        return repunit_value(self.q.value, self.d)


def repunit_value(q: int, d: int) -> int:
    """(q^d - 1)//(q - 1); exact, arbitrary precision."""
    return (q**d - 1) // (q - 1)


def prime_powers_up_to(limit: int) -> list[PrimePower]:
    """All prime powers q <= limit, ordered by value."""
    table = cached_table(max(limit, 2))
    out = []
    for p in table.primes():
        if p > limit:
            break
        a, v = 1, p
        while v <= limit:
            out.append((v, PrimePower(p, a)))
            a += 1
            v *= p
    out.sort(key=lambda t: t[0])
    return [pp for _, pp in out]


def repunits_up_to(limit: int) -> list[Repunit]:
    """All repunits with value <= limit, sorted by (value, q, d).

    Coincidences like 31 = 1+2+4+8+16 = 1+5+25 are kept as separate entries.
    """
    if limit < 3:
        raise ValueError("smallest repunit value is 3")
    out = []
    for pp in prime_powers_up_to(limit - 1):
        q = pp.value
        v, d = q + 1, 2
        while v <= limit:
            out.append((v, q, Repunit(pp, d)))
            v = v * q + 1
            d += 1
    out.sort(key=lambda t: (t[0], t[1], t[2].d))
    return [r for _, _, r in out]


# value -> canonical (q, d) with smallest q, then smallest d, plus the
# sorted distinct values; integer-only, grown geometrically and shared.
_canon: dict[int, tuple[int, int]] = {}
_canon_values: list[int] = []
_canon_limit = 0


def _value_table(limit: int) -> tuple[list[int], dict[int, tuple[int, int]]]:
    global _canon_limit, _canon_values
    if limit > _canon_limit:
        target = max(limit, 2 * _canon_limit, 1 << 10)
        _canon.clear()
        table = cached_table(target)
        out = []
        for p in table.primes():
            if p > target - 1:
                break
            q = p
            while q <= target - 1:
                v, d = q + 1, 2
                while v <= target:
                    out.append((v, q, d))
                    v = v * q + 1
                    d += 1
                q *= p
        out.sort()
        for v, q, d in out:
            if v not in _canon:
                _canon[v] = (q, d)
        _canon_values = sorted(_canon)
        _canon_limit = target
    return _canon_values, _canon


def _make_repunit(q: int, d: int) -> Repunit:
    return Repunit(PrimePower.from_value(q), d)


def represent_as_repunits(n: int, m: int) -> list[Repunit] | None:
    """m repunits summing to n, values ascending, or None.

    The search is exact: None is returned only when complete enumeration
    shows no representation exists.  Repeated values are allowed.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if n < 3 * m:
        raise ValueError(
            f"n={n} below 3*m={3 * m}: every summand is at least 3"
        )
    values, canon = _value_table(n)
    if m == 1:
        qd = canon.get(n)
        return None if qd is None else [_make_repunit(*qd)]
    if m == 2:
        # largest summand first: v >= n/2 descending, complement hashed
        i = bisect_right(values, n - 3) - 1
        lo = (n + 1) // 2
        while i >= 0 and values[i] >= lo:
            v = values[i]
            c = n - v
            if c in canon:
                return [_make_repunit(*canon[c]), _make_repunit(*canon[v])]
            i -= 1
        return None
    found = _rep_search(n, m, n - 3 * (m - 1), values, canon)
    if found is None:
        return None
    return [_make_repunit(*canon[v]) for v in sorted(found)]


def _rep_search(n, m, cap, values, canon) -> list[int] | None:
    """Exact recursive search, largest summand first, at most ``cap``."""
    if m == 1:
        return [n] if n <= cap and n in canon else None
    i = bisect_right(values, min(cap, n - 3 * (m - 1))) - 1
    lo = -(-n // m)  # ceil: the largest summand is at least the average
    while i >= 0 and values[i] >= lo:
        v = values[i]
        rest = _rep_search(n - v, m - 1, v, values, canon)
        if rest is not None:
            return rest + [v]
        i -= 1
    return None


def prime_repunit_count(x: int) -> tuple[int, bool]:
    """Count primes <= x of repunit form; flag the 50*sqrt(x)/ln(x)^2 bound.

    The bound is asymptotic, so the flag is reported rather than enforced.
    Degree-2 candidates q+1 can only be prime for q a power of two (odd q
    makes q+1 even and larger than 2), which keeps the enumeration tiny.
    """
    if x < 3:
        raise ValueError("need x >= 3")
    found = set()
    v = 3  # 2^a + 1
    while v <= x:
        if is_prime(v):
            found.add(v)
        v = 2 * v - 1
    for pp in prime_powers_up_to(math.isqrt(x) + 1):
        q = pp.value
        v = q * q + q + 1
        while v <= x:
            if is_prime(v):
                found.add(v)
            v = v * q + 1
    count = len(found)
    bound = 50 * math.sqrt(x) / math.log(x) ** 2
    return count, count <= bound
