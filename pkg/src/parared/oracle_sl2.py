"""Brute-force point counts for Borel reductions of the trivial SL_2-bundle on P^1.

A B-reduction of ``P^1 x SL_2`` of numerical type ``-n * coroot`` is the graph
of a degree-``n`` map ``P^1 -> P^1``, i.e. a pair of binary forms ``(f, g)`` of
degree ``n`` with no common zero, up to a common scalar. Over F_q we count
those pairs by exhaustive enumeration.

A binary form of degree ``n`` is a list ``[c_0, ..., c_n]`` meaning
``sum c_i X^i Y^(n-i)``; its zero at infinity ``[1:0]`` is ``c_n = 0``.
"""

from __future__ import annotations

import csv
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .finite_field import GF, divides, field, irreducibles, poly_gcd, trim

MAX_DEGREE = 5


@dataclass(frozen=True)
class SectionCount:
    q: int
    n: int
    count: int

    @property
    def numerical_type(self) -> tuple[int]:
        return (-self.n,)

    @property
    def d(self) -> int:
        return 2 * self.n


def forms_coprime(F: GF, f: Sequence[int], g: Sequence[int]) -> bool:
    """True when the binary forms ``f`` and ``g`` have no common zero on P^1
    over the algebraic closure."""
    if f[-1] == 0 and g[-1] == 0:
        return False  # both vanish at infinity
    h = poly_gcd(F, list(f), list(g))
    return len(h) == 1


def _forms(q: int, n: int):
    return itertools.product(range(q), repeat=n + 1)


def _gcd_chunk(args) -> int:
    q, n, start, stop = args
    F = field(q)
    forms = list(_forms(q, n))
    total = 0
    for f in forms[start:stop]:
        for g in forms:
            if forms_coprime(F, f, g):
                total += 1
    return total


def coprime_pair_count(q: int, n: int, method: str = "factor", jobs: int = 1) -> int:
    """Number of ordered pairs of degree-``n`` binary forms with no common zero.

    ``method="gcd"`` tests every pair with a polynomial gcd; ``method="factor"``
    records for every form which irreducible factors (and whether the point at
    infinity) divide it, and tests pairs for disjoint supports. Both visit all
    ``q^(2n+2)`` pairs.
    """
    _check(q, n)
    if method == "gcd":
        size = q ** (n + 1)
        jobs = max(1, min(jobs, size))
        bounds = [(q, n, size * k // jobs, size * (k + 1) // jobs) for k in range(jobs)]
        if jobs == 1:
            return _gcd_chunk(bounds[0])
        with ProcessPoolExecutor(jobs) as pool:
            return sum(pool.map(_gcd_chunk, bounds))
    if method == "factor":
        masks = Counter(_support_mask(q, n, f) for f in _forms(q, n))
        items = sorted(masks.items())
        return sum(c1 * c2 for (m1, c1), (m2, c2) in itertools.product(items, repeat=2) if not m1 & m2)
    raise ValueError(f"unknown method {method!r}")


def _support_mask(q: int, n: int, f: Sequence[int]) -> int:
    """Bit 0: zero at infinity; bit k+1: divisible by the k-th monic irreducible."""
    F = field(q)
    irr = irreducibles(q, n) if n else ()
    poly = trim(list(f))
    if not poly:
        return (1 << (len(irr) + 1)) - 1
    mask = int(f[-1] == 0)
    for k, p in enumerate(irr):
        if len(p) <= len(poly) and divides(F, list(p), poly):
            mask |= 1 << (k + 1)
    return mask


def _check(q: int, n: int) -> None:
    field(q)  # raises FieldUnsupported
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > MAX_DEGREE:
        raise OverflowError(f"n={n} exceeds the enumeration cap {MAX_DEGREE}")


def count_sections(q: int, n: int, method: str = "factor", jobs: int = 1) -> SectionCount:
    """``gamma_q(n)``: number of F_q-points of the space of degree-``n`` maps P^1 -> P^1."""
    raw = coprime_pair_count(q, n, method=method, jobs=jobs)
    count, rest = divmod(raw, q - 1)
    assert rest == 0, "scalar action must be free"
    return SectionCount(q, n, count)


def count_table(q_list: Iterable[int], n_max: int, method: str = "factor", jobs: int = 1) -> list[SectionCount]:
    return [count_sections(q, n, method=method, jobs=jobs) for q in q_list for n in range(n_max + 1)]


TSV_COLUMNS = ("q", "n", "d", "count")


def write_tsv(rows: Iterable[SectionCount], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(TSV_COLUMNS)
        for row in rows:
            w.writerow((row.q, row.n, row.d, row.count))


def read_tsv(path: str | Path) -> list[SectionCount]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh, delimiter="\t")
        rows = []
        for rec in reader:
            row = SectionCount(int(rec["q"]), int(rec["n"]), int(rec["count"]))
            if int(rec["d"]) != row.d:
                raise ValueError(f"inconsistent d column in {rec}")
            rows.append(row)
    return rows


# ---- elementary modification of O(-m) + O on P^1 -----------------------

@dataclass(frozen=True)
class GapShift:
    q: int
    m: int
    section: tuple[int, ...] | None  # section of O(m+1) used for the new subbundle
    old_gap: int
    new_gap: int

    @property
    def found(self) -> bool:
        return self.section is not None


def gap_shift(q: int, m: int) -> GapShift:
    """Realize the degree gap ``m + 2`` inside ``V = O(-m) + O`` on P^1 over F_q.

    With ``L1 = O(-m)``, ``L2 = O`` and ``x = [0:1]``, a section ``s`` of
    ``L2 ⊗ L1^{-1}(x) = O(m+1)`` not vanishing at ``x`` gives the map
    ``L1(-x) -> L1 + L2``, ``v -> (t v, s v)`` where ``t = X`` cuts out ``x``.
    It is a subbundle exactly when ``t`` and ``s`` have no common zero. The
    quotient then has degree ``1``, so the gap becomes ``1 - (-m-1) = m + 2``.
    Sections are enumerated exhaustively; the first valid one is returned.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    F = field(q)
    t = (0, 1)  # the form X
    for s in _forms(q, m + 1):
        if s[0] == 0:  # s(0, 1) is the Y^(m+1) coefficient
            continue
        if forms_coprime(F, t, s):
            sub_degree = -m - 1
            quotient_degree = -m - sub_degree  # deg V minus deg of the subbundle
            return GapShift(q, m, tuple(s), old_gap=m, new_gap=quotient_degree - sub_degree)
    return GapShift(q, m, None, old_gap=m, new_gap=m)


def gap_shift_check(q: int, m: int) -> bool:
    res = gap_shift(q, m)
    return res.found and res.new_gap == m + 2
