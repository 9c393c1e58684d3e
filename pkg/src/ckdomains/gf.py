"""Small finite fields F_{p^n} with fixed, reproducible element encodings.

An element is an integer in [0, p^n) read as a base-p coefficient vector of
a polynomial in the generator x.  The modulus for each supported (p, n) is
the lexicographically minimal monic primitive polynomial, embedded as data
so encodings never change between runs; unlisted sizes fall back to the
same deterministic search.  Since the modulus is primitive, x generates the
multiplicative group and multiplication runs on log/exp tables.
"""

from functools import lru_cache

__all__ = ["FiniteField", "minimal_primitive_poly"]

# (p, n) -> coefficients (c0, c1, ..., 1), ascending degree.
_PRIMITIVE_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (11, 1): (3, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (13, 1): (2, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (17, 1): (3, 1),
    (17, 2): (3, 1, 1),
    (19, 1): (4, 1),
    (19, 2): (2, 1, 1),
    (23, 1): (2, 1),
    (23, 2): (7, 1, 1),
}

_MAX_ORDER = 1 << 20


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a, b, f, p):
    n = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, n - 1, -1):
        c = res[i]
        if c:
            for j in range(n + 1):
                res[i - n + j] = (res[i - n + j] - c * f[j]) % p
    res = res[:n]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _polypow(a, e, f, p):
    r = [1]
    while e:
        if e & 1:
            r = _polymulmod(r, a, f, p)
        a = _polymulmod(a, a, f, p)
        e >>= 1
    return r


def _is_primitive(f, p, n):
    # x of full order p^n - 1 in F_p[x]/(f) forces f irreducible too
    if f[0] == 0:
        return False
    order = p**n - 1
    x = [0, 1] if n > 1 else [(-f[0]) % p]
    if _polypow(x, order, f, p) != [1]:
        return False
    return all(_polypow(x, order // r, f, p) != [1] for r in _prime_factors(order))


def minimal_primitive_poly(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically minimal monic primitive polynomial over F_p."""
    hit = _PRIMITIVE_POLYS.get((p, n))
    if hit is not None:
        return hit
    for m in range(p**n):
        coeffs, t = [], m
        for _ in range(n):
            coeffs.append(t % p)
            t //= p
        f = tuple(coeffs) + (1,)
        if _is_primitive(f, p, n):
            return f
    raise ValueError(f"no primitive polynomial found for p={p}, n={n}")


class FiniteField:
    """F_{p^n} on integer-encoded elements, with log/exp multiplication."""

    def __init__(self, p: int, n: int):
        if p**n > _MAX_ORDER:
            raise ValueError(f"field order {p**n} exceeds supported size")
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = minimal_primitive_poly(p, n)
        self._build_tables()

    def _build_tables(self):
        p, n, order = self.p, self.n, self.order
        # top coefficients to subtract when reducing x^n
        red = [(-c) % p for c in self.modulus[:n]]
        x_red = sum(c * p**i for i, c in enumerate(red))
        exp = [0] * (order - 1)
        log = [0] * order
        v = 1
        for i in range(order - 1):
            exp[i] = v
            log[v] = i
            # multiply by x: shift digits, reduce the overflow digit
            v *= p
            top, v = divmod(v, p ** n)
            if top:
                if p == 2:
                    v ^= x_red
                else:
                    v = self._raw_add(v, self._scale(x_red, top))
        self._exp = exp
        self._log = log

    def _scale(self, a: int, k: int) -> int:
        p = self.p
        out, mult = 0, 1
        while a:
            a, c = divmod(a, p)
            out += (c * k % p) * mult
            mult *= p
        return out

    def _raw_add(self, a: int, b: int) -> int:
        p = self.p
        out, mult = 0, 1
        while a or b:
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * mult
            mult *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._scale(a, self.p - 1)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 0
        return self._exp[self._log[a] * e % (self.order - 1)]

    @lru_cache(maxsize=None)
    def subfield(self, size: int) -> frozenset[int]:
        """The unique subfield with ``size`` elements, as an element set."""
        k = 0
        s = size
        while s > 1:
            if s % self.p:
                raise ValueError(f"{size} is not a power of {self.p}")
            s //= self.p
            k += 1
        if k == 0 or self.n % k:
            raise ValueError(f"F_{self.order} has no subfield of size {size}")
        return frozenset(a for a in range(self.order) if self.pow(a, size) == a)

    def __repr__(self):
        return f"FiniteField({self.p}, {self.n})"
