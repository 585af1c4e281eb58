"""Small finite fields and univariate polynomials over them.

Elements of GF(p^k) are encoded as ints in ``range(q)`` whose base-``p`` digits
are the coefficients of a polynomial modulo a fixed irreducible of degree
``k``. Addition and multiplication go through precomputed tables.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import FieldUnsupported

# Conway polynomials, coefficients from the constant term up (monic).
_MODULI = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (2, 2, 1)),
    16: (2, (1, 1, 0, 0, 1)),
    25: (5, (2, 4, 1)),
    27: (3, (1, 2, 0, 1)),
}
MAX_PRIME = 31


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def supported_orders() -> list[int]:
    return sorted([p for p in range(2, MAX_PRIME + 1) if _is_prime(p)] + list(_MODULI))


class GF:
    """The field with ``q`` elements."""

    def __init__(self, q: int):
        if _is_prime(q) and q <= MAX_PRIME:
            p, k, modulus = q, 1, None
        elif q in _MODULI:
            p, modulus = _MODULI[q]
            k = len(modulus) - 1
        else:
            raise FieldUnsupported(f"GF({q}) is not in the supported table {supported_orders()}")
        self.q, self.p, self.k = q, p, k
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._encode([(x + y) % p for x, y in zip(da, db)]) for db in digits] for da in digits]
        self.neg = [self._encode([(-x) % p for x in da]) for da in digits]
        self.mul = [[self._encode(self._polymulmod(da, db, modulus)) for db in digits] for da in digits]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _encode(self, digits) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _polymulmod(self, a, b, modulus):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        if modulus is not None:
            for deg in range(len(prod) - 1, k - 1, -1):
                c = prod[deg]
                if c:
                    for t in range(k + 1):
                        prod[deg - k + t] = (prod[deg - k + t] - c * modulus[t]) % p
        return prod[:k]

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


# ---- polynomials: lists of coefficients, constant term first ------------

def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_divmod(F: GF, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv[g[-1]]
    quot = [0] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    while len(rem) >= len(g):
        c = F.mul[rem[-1]][inv_lead]
        shift = len(rem) - len(g)
        quot[shift] = c
        for i, gi in enumerate(g):
            rem[shift + i] = F.sub[rem[shift + i]][F.mul[c][gi]]
        rem = trim(rem)
    return quot, rem


def poly_gcd(F: GF, f: list[int], g: list[int]) -> list[int]:
    """Monic gcd (the zero polynomial when both inputs vanish)."""
    a, b = trim(f), trim(g)
    while b:
        _, r = poly_divmod(F, a, b)
        a, b = b, r
    if not a:
        return []
    inv = F.inv[a[-1]]
    return [F.mul[inv][c] for c in a]


def divides(F: GF, d: list[int], f: list[int]) -> bool:
    return not poly_divmod(F, f, d)[1]


def monic_polynomials(F: GF, degree: int):
    """All monic polynomials of the given degree, in a fixed order."""
    q = F.q
    for idx in range(q ** degree):
        coeffs = []
        for _ in range(degree):
            idx, r = divmod(idx, q)
            coeffs.append(r)
        yield coeffs + [1]


@lru_cache(maxsize=None)
def irreducibles(q: int, max_degree: int) -> tuple[tuple[int, ...], ...]:
    """Monic irreducible polynomials of degree ``1..max_degree`` over GF(q)."""
    F = field(q)
    found: list[list[int]] = []
    for deg in range(1, max_degree + 1):
        for f in monic_polynomials(F, deg):
            if not any(len(p) - 1 <= deg // 2 and divides(F, p, f) for p in found):
                found.append(f)
    return tuple(tuple(p) for p in found)
