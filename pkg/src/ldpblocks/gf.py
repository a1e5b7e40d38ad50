"""Arithmetic in finite fields GF(p^m).

Field elements are encoded as integers in ``[0, q)``: the base-``p``
digits of the code are the coefficients of the element's polynomial
representation, least significant digit first.  For ``m == 1`` this is
plain arithmetic mod ``p``.  For ``m > 1`` multiplication is carried out
modulo a monic irreducible polynomial of degree ``m`` chosen
deterministically: candidate coefficient vectors are scanned in
lexicographic order (highest-degree coefficient first) and the first
irreducible one wins, so a given ``(p, m)`` always yields the same
tables.  Irreducibility is established by trial division against every
monic polynomial of degree at most ``m // 2``.
"""

from __future__ import annotations

import itertools

_TABLE_LIMIT = 4096  # largest q for which we precompute mul/inv tables


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_decomposition(q: int):
    """Return ``(p, e)`` with ``q == p**e`` and ``p`` prime, else ``None``."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if p * p > q:
        p = q
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    return (p, e) if rest == 1 else None


def _poly_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, b, p):
    """Remainder of a mod b over GF(p); b must be monic."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and _poly_trim(r):
        r = _poly_trim(r)
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        factor = r[-1]
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * bi) % p
        r = _poly_trim(r)
    return _poly_trim(r)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The lexicographically smallest monic irreducible of degree m over GF(p).

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are ordered by the tuple
    (c_{m-1}, ..., c_0).  Returned as coefficients in ascending power
    order, length m + 1, trailing coefficient 1.
    """
    for code in range(p**m):
        lower = [(code // p**i) % p for i in range(m)]
        poly = lower + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """GF(q) for a prime power q, with precomputed mul/inv tables.

    Attributes:
        q: field size.
        p: prime characteristic.
        m: extension degree (q == p**m).
        modulus: monic irreducible modulus as an ascending coefficient
            tuple of length m + 1 (``(0, 1)`` i.e. the polynomial x when
            m == 1, since GF(p)[x]/(x) is GF(p)).
    """

    def __init__(self, q: int):
        decomp = prime_power_decomposition(q)
        if decomp is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.m = decomp
        if self.m == 1:
            self.modulus = (0, 1)
        else:
            self.modulus = smallest_irreducible(self.p, self.m)
        if q > _TABLE_LIMIT:
            raise ValueError(f"field size {q} exceeds the table limit {_TABLE_LIMIT}")
        self._build_tables()

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial coefficients of element a, ascending, length m."""
        return tuple((a // self.p**i) % self.p for i in range(self.m))

    def encode(self, coeffs) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        base = 1
        while a or b:
            out += ((a + b) % p) * base
            a //= p
            b //= p
            base *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.encode(tuple((-c) % self.p for c in self.coeffs(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        rem = _poly_mod(prod, list(self.modulus), self.p)
        return self.encode(rem)

    def _build_tables(self):
        q = self.q
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    self._inv[a] = b
                    break
            else:
                raise RuntimeError(
                    f"element {a} has no inverse; modulus {self.modulus} not irreducible?"
                )

    def __repr__(self):
        return f"FiniteField(q={self.q}, p={self.p}, m={self.m}, modulus={self.modulus})"
