"""Additive decompositions of integers into shifted primes and friends.

Everything here produces certified summands for witness assembly: sums of
distinct p+1 (Richert-style), Goldbach pairs of distinct primes, three-prime
triples, Schinzel representations n = (p1^2+p1+1) + (p2+1), and the (n, m)
part planner that pads with 2+1 blocks.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .errors import NoWitnessError
from .primes import PrimeTable, cached_table, is_prime, prime_in_interval

__all__ = [
    "Part",
    "ShiftedPrimeDecomposition",
    "PlannedParts",
    "part_for_prime",
    "richert_decompose",
    "goldbach_pair",
    "three_prime_triple",
    "schinzel_rep",
    "schinzel_rep_descending",
    "plan_runs",
    "plan_ck",
]

KIND_PRIME = "prime+1"       # value p+1, one maximal ideal, p+1 atoms
KIND_SCHINZEL = "schinzel"   # value p^2+p+1
KIND_REPUNIT = "repunit"     # value (q^d-1)/(q-1)
KIND_DOUBLE = "2q"           # value 2q, the conductor-exponent-2 block


@dataclass(frozen=True, slots=True)
class Part:
    """One planned summand, tagged with its provenance.

    ``q``/``d``/``e`` encode the local block realizing the summand: a part
    worth p+1 is the (q=p, d=2) block, a Schinzel part the (q=p, d=3) block,
    and a part worth 2q the (q, d=1, e=2) block.
    """

    value: int
    kind: str
    q: int
    d: int = 2
    e: int = 1

    def as_json(self) -> dict:
        return {"value": self.value, "kind": self.kind, "prime": self.q}


PAD3 = Part(3, KIND_PRIME, 2)
PAD4 = Part(4, KIND_PRIME, 3)

_prime_parts: dict[int, Part] = {2: PAD3, 3: PAD4}


def part_for_prime(p: int) -> Part:
    part = _prime_parts.get(p)
    if part is None:
        part = _prime_parts[p] = Part(p + 1, KIND_PRIME, p)
    return part


@dataclass(frozen=True)
class ShiftedPrimeDecomposition:
    """n written as a sum of p+1 over strictly increasing primes p."""

    n: int
    parts: tuple[int, ...]

    def validate(self) -> None:
        if sum(p + 1 for p in self.parts) != self.n:
            raise ValueError(f"parts of {self.n} do not sum correctly")
        if any(a >= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be strictly increasing")
        for p in self.parts:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")


@dataclass
class PlannedParts:
    """m summands of n, each at least 3, tagged with provenance."""

    n: int
    m: int
    parts: list[Part] = field(repr=False)

    def __post_init__(self):
        if 3 * self.m > self.n:
            raise ValueError(
                f"m={self.m} exceeds n/3 for n={self.n}: "
                "every maximal ideal carries at least three atoms"
            )

    def validate(self) -> None:
        """Full check of the summand list (length, values, total)."""
        if len(self.parts) != self.m:
            raise ValueError(f"expected {self.m} parts, got {len(self.parts)}")
        if any(p.value < 3 for p in self.parts):
            raise ValueError("every part must be at least 3")
        total = sum(p.value for p in self.parts)
        if total != self.n:
            raise ValueError(f"parts sum to {total}, expected {self.n}")

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "parts": [p.as_json() for p in self.parts],
        }


# Decompositions for 6 <= n <= 17, found by exhaustive subset-sum over the
# primes up to 17 (fewest parts, then lexicographically smallest).
_BASE_TABLE: dict[int, tuple[int, ...]] = {
    6: (5,),
    7: (2, 3),
    8: (7,),
    9: (2, 5),
    10: (3, 5),
    11: (2, 7),
    12: (11,),
    13: (2, 3, 5),
    14: (13,),
    15: (2, 11),
    16: (3, 11),
    17: (2, 13),
}


def richert_decompose(n: int, table: PrimeTable | None = None) -> ShiftedPrimeDecomposition:
    """Write n >= 6 as a sum of p+1 over distinct primes.

    Repeatedly takes the smallest prime p in (n/2 - 1, n - 7], which leaves
    a remainder in [6, n/2) strictly dominated by p, until the remainder
    falls into the precomputed 6..17 base table.
    """
    if n < 6:
        raise ValueError("no decomposition into distinct p+1 parts for n < 6")
    if table is None or table.limit < n:
        table = cached_table(max(n, 64))
    chosen: list[int] = []
    rest = n
    while rest > 17:
        p = prime_in_interval(rest / 2 - 1, rest - 7, table)
        if p is None:  # impossible for rest >= 18
            raise RuntimeError(f"no prime in ({rest / 2 - 1}, {rest - 7}]")
        chosen.append(p)
        rest -= p + 1
        assert 6 <= rest < p + 1
    parts = _BASE_TABLE[rest] + tuple(reversed(chosen))
    assert all(a < b for a, b in zip(parts, parts[1:]))
    return ShiftedPrimeDecomposition(n, parts)


def goldbach_pair(even: int, table: PrimeTable | None = None) -> tuple[int, int] | None:
    """Distinct primes p1 < p2 with p1 + p2 = even, smallest p1 first.

    Equal pairs are rejected, so 6 = 3 + 3 yields None.
    """
    if even % 2 != 0 or even < 6:
        raise ValueError("need an even integer >= 6")
    if table is None or table.limit < even:
        table = cached_table(even)
    for p in table.primes():
        if 2 * p >= even:
            return None
        if p > 2 and (even - p) in table:
            return (p, even - p)
    return None


_triple_cache: dict[int, tuple[int, int, int]] = {}


def three_prime_triple(odd: int, table: PrimeTable | None = None) -> tuple[int, int, int]:
    """Primes (p1, p2, p3), not necessarily distinct, summing to odd >= 7.

    Deterministic choice: smallest possible largest prime, then smallest
    middle one.  Existence is a theorem (Helfgott); exhausting the search
    space would falsify it, hence the RuntimeError.
    """
    if odd % 2 == 0 or odd < 7:
        raise ValueError("need an odd integer >= 7")
    hit = _triple_cache.get(odd)
    if hit is not None:
        return hit
    if table is None or table.limit < odd:
        table = cached_table(odd)
    ps = table.primes()
    pos = bisect_left(ps, (odd + 2) // 3)
    for i in range(pos, len(ps)):
        c = ps[i]
        rem = odd - c
        if rem < 4:
            break
        if rem % 2 == 0:
            j = bisect_left(ps, (rem + 1) // 2)
            top = min(c, rem - 2)
            while j < len(ps) and ps[j] <= top:
                b = ps[j]
                if (rem - b) in table:
                    _triple_cache[odd] = (rem - b, b, c)
                    return rem - b, b, c
                j += 1
        else:
            b = rem - 2
            if 2 <= b <= c and b in table:
                _triple_cache[odd] = (2, b, c)
                return 2, b, c
    raise RuntimeError(f"no three-prime triple found for {odd}")


def _schinzel_terms(n: int, table: PrimeTable) -> list[int]:
    """Primes p1 with p1^2 + p1 + 1 <= n - 4, in increasing order."""
    ps = table.primes()
    out = []
    for p in ps:
        if p * p + p + 1 > n - 4:
            break
        out.append(p)
    return out


def schinzel_rep(n: int, table: PrimeTable | None = None) -> tuple[int, int] | None:
    """Primes (p1, p2) with (p1^2 + p1 + 1) + (p2 + 1) = n, smallest p1.

    Only odd n are meaningful; p2 comes out odd automatically.
    """
    if n % 2 == 0:
        raise ValueError("need an odd integer")
    if n < 11:
        return None
    if table is None or table.limit < n:
        table = cached_table(n)
    for p1 in _schinzel_terms(n, table):
        p2 = n - (p1 * p1 + p1 + 1) - 1
        if p2 in table:
            return (p1, p2)
    return None


def schinzel_rep_descending(n: int, table: PrimeTable | None = None) -> tuple[int, int] | None:
    """Same search as schinzel_rep but with p1 decreasing (recheck pass)."""
    if n % 2 == 0:
        raise ValueError("need an odd integer")
    if n < 11:
        return None
    if table is None or table.limit < n:
        table = cached_table(n)
    for p1 in reversed(_schinzel_terms(n, table)):
        p2 = n - (p1 * p1 + p1 + 1) - 1
        if p2 in table:
            return (p1, p2)
    return None


def plan_runs(n: int, m: int, table: PrimeTable | None = None) -> list[tuple[Part, int]]:
    """Run-compressed form of plan_ck: (part, multiplicity) pairs.

    Witness assembly over large (n, m) grids goes through this to avoid
    touching each of the m summands individually.
    """
    if m < 1:
        raise NoWitnessError("need m >= 1", hypothesis="m >= 1")
    if 3 * m > n:
        raise NoWitnessError(
            f"m={m} exceeds n/3 for n={n}: every maximal ideal carries at "
            "least three atoms",
            hypothesis="m <= n/3",
        )
    if m == 1:
        from .repunit import represent_as_repunits

        reps = represent_as_repunits(n, 1)
        if reps is None:
            raise NoWitnessError(
                f"{n} is not of the form (q^d-1)/(q-1)",
                hypothesis="n is a repunit value",
            )
        r = reps[0]
        return [(Part(r.value, KIND_REPUNIT, r.q.value, r.d), 1)]
    if m == 2:
        if n % 2 == 0:
            pair = goldbach_pair(n - 2, table)
            if pair is None:
                raise NoWitnessError(
                    f"{n} - 2 is not a sum of two distinct primes",
                    hypothesis="n-2 = p1 + p2 with p1 < p2",
                )
            tail = [part_for_prime(pair[0]), part_for_prime(pair[1])]
        else:
            rep = schinzel_rep(n, table)
            if rep is None:
                raise NoWitnessError(
                    f"{n} has no representation (p1^2+p1+1) + (p2+1)",
                    hypothesis="n = (p1^2+p1+1) + (p2+1)",
                )
            p1, p2 = rep
            tail = [Part(p1 * p1 + p1 + 1, KIND_SCHINZEL, p1, 3), part_for_prime(p2)]
        tail.sort(key=lambda p: p.value)
        runs = [(part, 1) for part in tail]
        assert sum(part.value for part, _ in runs) == n
        return runs

    # m >= 3: pad with 2+1 parts, close the rest with a three-prime triple
    if n % 2 == 0 and n < 10:
        raise NoWitnessError(
            f"even n={n} below 10 has no m>=3 split", hypothesis="even n >= 10"
        )
    if n % 2 == 1 and m == 3:
        raise NoWitnessError(
            f"odd n={n} with m=3 is outside the constructive range",
            hypothesis="odd n needs m >= 4",
        )
    if n % 2 == 1 and n < 13:
        raise NoWitnessError(
            f"odd n={n} below 13 has no m>=4 split", hypothesis="odd n >= 13"
        )
    if (n - m) % 2 == 1:
        # opposite parities: the core n - 3(m-3) is even and at least 10
        core = n - 3 * (m - 3)
        assert core >= 10 and core % 2 == 0
        tail = [part_for_prime(p) for p in three_prime_triple(core - 3, table)]
        pads = m - 3
    else:
        # equal parities force m >= 4 and an even core n - 3(m-4) >= 12;
        # n == 3m degenerates to pads only, otherwise spend one 3+1 part
        assert m >= 4
        core = n - 3 * (m - 4)
        assert core >= 12 and core % 2 == 0
        if core == 12:
            assert n == 3 * m
            return [(PAD3, m)]
        assert core >= 14
        tail = [part_for_prime(p) for p in three_prime_triple(core - 7, table)]
        tail.append(PAD4)
        pads = m - 4
    tail.sort(key=lambda p: p.value)
    runs = [(PAD3, pads)] if pads else []
    runs += [(part, 1) for part in tail]
    assert sum(part.value * k for part, k in runs) == n
    assert sum(k for _, k in runs) == m
    return runs


def plan_ck(n: int, m: int, table: PrimeTable | None = None) -> PlannedParts:
    """Split n into m tagged summands, each at least 3.

    For m >= 3 the split pads with as many 2+1 parts as possible and closes
    the even remainder with a three-prime triple (plus one 3+1 part when the
    parities demand it).  m = 2 uses a distinct Goldbach pair for even n and
    a Schinzel representation for odd n; m = 1 requires n to be a repunit
    value.  Parts come out ascending by value.
    """
    parts: list[Part] = []
    for part, k in plan_runs(n, m, table):
        parts += [part] * k
    return PlannedParts(n, m, parts)
