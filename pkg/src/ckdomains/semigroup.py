"""Two-generator numerical semigroups and characteristic-q block coverage.

For coprime x, y the largest non-representable integer is xy - x - y, and
everything from (x-1)(y-1) on is representable (Sylvester).  With gcd d,
every multiple of d from (x-d)(y-d)/d on is representable.  Coverage over a
fixed prime power q combines the block values q+1, 2q and q^2+q+1 (for q=2,
the pair 3 and 5) to reach every admissible atom count.
"""

import math
from dataclasses import dataclass

from .additive import KIND_DOUBLE, KIND_REPUNIT, Part, PlannedParts
from .repunit import PrimePower

__all__ = [
    "TwoGeneratorSemigroup",
    "representable",
    "coverage_runs",
    "coverage_char_q",
]


def representable(N: int, x: int, y: int) -> tuple[int, int] | None:
    """Non-negative (a, b) with a*x + b*y = N and a minimal, or None."""
    if x < 1 or y < 1:
        raise ValueError("generators must be positive")
    if N < 0:
        return None
    g = math.gcd(x, y)
    if N % g:
        return None
    xr, yr, nr = x // g, y // g, N // g
    a = nr * pow(xr, -1, yr) % yr if yr > 1 else 0
    if a * x > N:
        return None
    return a, (N - a * x) // y


@dataclass(frozen=True)
class TwoGeneratorSemigroup:
    """The set {a*x + b*y : a, b >= 0} for positive generators x, y."""

    x: int
    y: int

    @property
    def gcd(self) -> int:
        return math.gcd(self.x, self.y)

    @property
    def threshold(self) -> int:
        """Every multiple of gcd from here on is representable."""
        d = self.gcd
        return (self.x - d) * (self.y - d) // d

    @property
    def frobenius(self) -> int | None:
        """Largest non-representable integer; None unless coprime."""
        if self.gcd != 1:
            return None
        return self.x * self.y - self.x - self.y

    def representable(self, N: int) -> tuple[int, int] | None:
        return representable(N, self.x, self.y)


def _coverage_generators(q: int) -> list[tuple[int, Part]]:
    if q == 2:
        # 3 and 5 are coprime and reach {3,5,6} plus everything from 8 on;
        # the 2q = 4 block would leave 5 unreachable
        return [
            (3, Part(3, KIND_REPUNIT, 2, 2)),
            (5, Part(5, KIND_REPUNIT, 4, 2)),
        ]
    gens = [
        (q + 1, Part(q + 1, KIND_REPUNIT, q, 2)),
        (2 * q, Part(2 * q, KIND_DOUBLE, q, 1, 2)),
    ]
    if q % 2 == 1:
        gens.append((q * q + q + 1, Part(q * q + q + 1, KIND_REPUNIT, q, 3)))
    return gens


def coverage_runs(q: int | PrimePower, n: int) -> list[tuple[Part, int]] | None:
    """Run-compressed coverage split: (part, multiplicity) pairs or None.

    For even q the two generators are coprime and cover everything from
    2q^2 - q on; for odd q they share the factor 2 and a single q^2+q+1
    part fixes the parity, covering everything from 2q^2 - q + 1 on.  The
    search is exhaustive over the third generator's multiplicity, so None
    is a proof that no combination exists.
    """
    pp = q if isinstance(q, PrimePower) else PrimePower.from_value(q)
    qv = pp.value
    if n < 3:
        raise ValueError("atom counts start at 3")
    gens = _coverage_generators(qv)
    (g1, part1), (g2, part2) = gens[0], gens[1]
    third = gens[2] if len(gens) > 2 else None
    c = 0
    while True:
        rem = n - (third[0] * c if third else 0)
        if rem < 0:
            return None
        ab = representable(rem, g1, g2)
        if ab is not None:
            a, b = ab
            runs = [(part1, a), (part2, b)]
            if third:
                runs.append((third[1], c))
            return [(part, k) for part, k in runs if k]
        if third is None:
            return None
        c += 1


def coverage_char_q(q: int | PrimePower, n: int) -> PlannedParts | None:
    """Split n into block values over the fixed prime power q, or None."""
    runs = coverage_runs(q, n)
    if runs is None:
        return None
    parts: list[Part] = []
    for part, k in runs:
        parts += [part] * k
    return PlannedParts(n, len(parts), parts)
