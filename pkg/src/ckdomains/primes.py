"""Prime generation and primality services.

The sieve is segmented and bit-packed: one bit per odd number, so a table up
to N costs N/16 bytes.  Primality testing is deterministic Miller-Rabin with
a fixed 12-prime base set, exact for every n below 3.3e24 (in particular for
the whole 64-bit range).  A table is immutable once built and safe to share
across threads.
"""

import math
from bisect import bisect_right

import numpy as np

__all__ = [
    "PrimeTable",
    "sieve",
    "is_prime",
    "prime_in_interval",
    "cached_table",
]

# Deterministic witness set for n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_SEGMENT_ODDS = 1 << 20


def is_prime(n: int) -> bool:
    """Exact primality for any integer; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeTable:
    """All primes up to ``limit``, bit-packed, iterable in increasing order."""

    def __init__(self, limit: int, packed: bytes):
        self.limit = limit
        self._packed = packed          # bit i set <=> 2i+1 is prime
        self._primes: list[int] | None = None

    def __contains__(self, n: int) -> bool:
        if n == 2:
            return True
        if n < 2 or n > self.limit or n % 2 == 0:
            return False
        i = (n - 1) >> 1
        return bool((self._packed[i >> 3] >> (i & 7)) & 1)

    def is_prime(self, n: int) -> bool:
        """Table membership; raises if n exceeds the sieved range."""
        if n > self.limit:
            raise ValueError(f"{n} exceeds table limit {self.limit}")
        return n in self

    def __iter__(self):
        if self._primes is not None:
            yield from self._primes
            return
        yield 2
        bits = np.frombuffer(self._packed, dtype=np.uint8)
        chunk = 1 << 17
        for off in range(0, len(bits), chunk):
            flags = np.unpackbits(bits[off : off + chunk], bitorder="little")
            for i in np.nonzero(flags)[0]:
                yield int(2 * (8 * off + i) + 1)

    def primes(self) -> list[int]:
        """Materialized, cached list of the primes in increasing order."""
        if self._primes is None:
            flags = np.unpackbits(
                np.frombuffer(self._packed, dtype=np.uint8), bitorder="little"
            )
            self._primes = [2] + (2 * np.nonzero(flags)[0] + 1).tolist()
        return self._primes

    def count(self) -> int:
        flags = np.unpackbits(
            np.frombuffer(self._packed, dtype=np.uint8), bitorder="little"
        )
        return 1 + int(flags.sum())

    def mask(self) -> np.ndarray:
        """Boolean primality mask over [0, limit] (index == integer)."""
        flags = np.unpackbits(
            np.frombuffer(self._packed, dtype=np.uint8), bitorder="little"
        )
        out = np.zeros(self.limit + 1, dtype=bool)
        odd_count = (self.limit + 1) // 2
        out[1::2] = flags[:odd_count]
        out[1] = False
        if self.limit >= 2:
            out[2] = True
        return out

    def prime_array(self) -> np.ndarray:
        return np.nonzero(self.mask())[0]


def sieve(limit: int, segment_odds: int = DEFAULT_SEGMENT_ODDS) -> PrimeTable:
    """Segmented sieve of Eratosthenes up to ``limit`` (inclusive)."""
    if limit < 2:
        raise ValueError("sieve limit must be at least 2")
    if segment_odds < 8:
        raise ValueError("segment size must be at least 8 odd entries")
    segment_odds -= segment_odds % 8     # keep segments byte-aligned

    root = math.isqrt(limit)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for i in range(3, math.isqrt(root) + 1, 2):
        if base[i]:
            base[i * i :: i] = False
    base[4::2] = False
    base_odd_primes = [int(p) for p in np.nonzero(base)[0] if p % 2 == 1]

    n_odds = (limit + 1) // 2            # odd numbers 1, 3, ..., <= limit
    out = bytearray()
    for seg_lo in range(0, n_odds, segment_odds):
        seg_len = min(segment_odds, n_odds - seg_lo)
        seg = np.ones(seg_len, dtype=bool)
        if seg_lo == 0:
            seg[0] = False               # 1 is not prime
        lo_val = 2 * seg_lo + 1
        hi_val = 2 * (seg_lo + seg_len - 1) + 1
        for p in base_odd_primes:
            start = p * p
            if start > hi_val:
                break
            if start < lo_val:
                start = lo_val + (-lo_val) % p
                if start % 2 == 0:
                    start += p
            seg[(start - 1) // 2 - seg_lo :: p] = False
        if seg_len % 8:
            seg = np.concatenate([seg, np.zeros(8 - seg_len % 8, dtype=bool)])
        out += np.packbits(seg, bitorder="little").tobytes()
    return PrimeTable(limit, bytes(out))


def prime_in_interval(lo, hi, table: PrimeTable | None = None) -> int | None:
    """Smallest prime p with lo < p <= hi, or None if the interval has none.

    Endpoints may be non-integral.  With a table covering hi the lookup is a
    bisection; otherwise candidates are tested upward from floor(lo)+1.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    start = math.floor(lo) + 1
    end = math.floor(hi)
    if end < 2:
        return None
    if table is not None and table.limit >= end:
        ps = table.primes()
        i = bisect_right(ps, math.floor(lo))
        if i < len(ps) and ps[i] <= hi:
            return ps[i]
        return None
    for k in range(max(start, 2), end + 1):
        if is_prime(k):
            return k
    return None


_shared: PrimeTable | None = None


def cached_table(limit: int) -> PrimeTable:
    """Module-level shared table, regrown geometrically on demand."""
    global _shared
    if _shared is None or _shared.limit < limit:
        target = max(limit, 1 << 16)
        if _shared is not None:
            target = max(target, 2 * _shared.limit)
        _shared = sieve(target)
    return _shared
