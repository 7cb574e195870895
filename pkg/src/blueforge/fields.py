"""Explicit finite fields F_q for q in {2, 3, 4, 5, 7, 8, 9}.

Elements are integers 0..q-1; for prime powers they encode polynomial
coefficients over F_p in base p, with arithmetic reduced by a fixed
irreducible polynomial. Tables are built once and cached.
"""

from __future__ import annotations

from functools import lru_cache

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# Irreducible polynomials x^k + ... over F_p, low-degree coefficients first.
_MODULUS = {
    4: (2, (1, 1)),    # x^2 + x + 1 over F_2
    8: (2, (1, 1, 0)),  # x^3 + x + 1 over F_2
    9: (3, (1, 0)),    # x^2 + 1 over F_3
}


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


class GF:
    """Arithmetic tables for one finite field."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise ValueError(f"unsupported field size {q}; supported: {SUPPORTED_Q}")
        self.q = q
        if q in _MODULUS:
            p, mod = _MODULUS[q]
            k = len(mod)
            self.p, self.k = p, k

            def add(a, b):
                da, db = _digits(a, p, k), _digits(b, p, k)
                return _undigits([(x + y) % p for x, y in zip(da, db)], p)

            def mul(a, b):
                da, db = _digits(a, p, k), _digits(b, p, k)
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for i in range(len(prod) - 1, k - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j, m in enumerate(mod):
                            prod[i - k + j] = (prod[i - k + j] - c * m) % p
                return _undigits(prod[:k], p)

            self.add_table = [[add(a, b) for b in range(q)] for a in range(q)]
            self.mul_table = [[mul(a, b) for b in range(q)] for a in range(q)]
        else:
            self.p, self.k = q, 1
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        self.neg_table = [next(b for b in range(q) if self.add_table[a][b] == 0)
                          for a in range(q)]
        self.inv_table = [None] + [next(b for b in range(1, q)
                                        if self.mul_table[a][b] == 1)
                                   for a in range(1, q)]

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        for _ in range(e):
            r = self.mul_table[r][a]
        return r

    def units(self):
        return range(1, self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    return GF(q)


def prime_powers_upto(n: int):
    return [q for q in SUPPORTED_Q if q <= n]
