"""Numerical types: dominance order, property (*), topological type, and the
combinatorial constructions on cocharacters (coroot chains, common upper bounds).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import Mapping, Sequence

from . import lattice
from .errors import (
    ClassMismatch,
    HypothesisFailed,
    MixedParabolics,
    NotComparable,
    Unbounded,
)
from .parabolic import NumericalType, ParabolicData, build_parabolic, degree_functional
from .root_data import RootDatum, coroot_coordinates, fundamental_weights, positive_roots

__all__ = [
    "NumericalType",
    "TopologicalType",
    "leq",
    "cochar_leq",
    "as_type",
    "satisfies_star",
    "topological_type",
    "class_group_invariants",
    "class_group_order",
    "class_representative",
    "enumerate_types",
    "coroot_chain",
    "common_upper_bound",
]


def _dominance_values(sigma: NumericalType, tau: NumericalType):
    if sigma.pd != tau.pd:
        raise MixedParabolics("cannot compare types on different parabolics")
    pd = sigma.pd
    diff = tau - sigma
    weights = fundamental_weights(pd.rd)
    on_weights = [diff.evaluate(weights[b].vector) for b in pd.outside]
    on_group = [diff.evaluate(chi) for chi in pd.rd.group_characters]
    return on_weights, on_group


def leq(sigma: NumericalType, tau: NumericalType, relaxed: bool = False) -> bool:
    """Dominance order ``sigma <= tau``.

    ``tau - sigma`` must vanish on X*(G) and take non-negative values on the
    fundamental weights outside ``I``. By default those values must also be
    integers; ``relaxed=True`` accepts any non-negative rational.
    """
    on_weights, on_group = _dominance_values(sigma, tau)
    if any(v != 0 for v in on_group):
        return False
    if relaxed:
        return all(v >= 0 for v in on_weights)
    return all(v >= 0 and v.denominator == 1 for v in on_weights)


def _borel(rd: RootDatum) -> ParabolicData:
    return _borel_cached(rd)


@lru_cache(maxsize=None)
def _borel_cached(rd: RootDatum) -> ParabolicData:
    return build_parabolic(rd, ())


def as_type(rd: RootDatum, mu: Sequence[int]) -> NumericalType:
    """A cocharacter viewed as a numerical type for the Borel."""
    return NumericalType(_borel(rd), tuple(int(x) for x in mu))


def cochar_leq(rd: RootDatum, mu: Sequence[int], lam: Sequence[int], relaxed: bool = False) -> bool:
    """Dominance order on X_*(T)."""
    return leq(as_type(rd, mu), as_type(rd, lam), relaxed=relaxed)


def satisfies_star(sigma: NumericalType, N: int) -> bool:
    """Property (*) for ``N``: ``-[sigma](chi_beta) >= N`` for every ``beta`` outside ``I``."""
    return all(-sigma.evaluate(chi) >= N for _, _, chi in sigma.pd.star_characters.values())


# ---- topological type ------------------------------------------------

@dataclass(frozen=True)
class TopologicalType:
    """Class of a cocharacter in ``X_*(T) / coroot lattice``.

    ``invariants`` lists the cyclic factors of the quotient group (``0`` for a
    factor ``Z``); ``residues`` are the coordinates in those factors.
    """

    invariants: tuple[int, ...]
    residues: tuple[int, ...]

    def _wrap(self, residues) -> "TopologicalType":
        return TopologicalType(
            self.invariants,
            tuple(r % d if d else r for r, d in zip(residues, self.invariants)),
        )

    def __add__(self, other: "TopologicalType") -> "TopologicalType":
        if self.invariants != other.invariants:
            raise ClassMismatch("classes of different groups")
        return self._wrap(a + b for a, b in zip(self.residues, other.residues))

    def __neg__(self) -> "TopologicalType":
        return self._wrap(-a for a in self.residues)

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues)


@lru_cache(maxsize=None)
def _class_data(rd: RootDatum):
    r = rd.rank_ss
    if r == 0:
        u = lattice.identity(rd.dim)
        return u, [0] * rd.dim, list(range(rd.dim))
    m = lattice.transpose(rd.simple_coroots)  # n x r, columns are coroots
    d, u, _ = lattice.smith_normal_form(m)
    diag = [d[k][k] if k < r else 0 for k in range(rd.dim)]
    keep = [k for k in range(rd.dim) if diag[k] != 1]
    return u, diag, keep


def class_group_invariants(rd: RootDatum) -> tuple[int, ...]:
    _, diag, keep = _class_data(rd)
    return tuple(diag[k] for k in keep)


def class_group_order(rd: RootDatum) -> int | None:
    """Order of ``X_*(T)/coroot lattice``; ``None`` when it is infinite."""
    inv = class_group_invariants(rd)
    if any(d == 0 for d in inv):
        return None
    out = 1
    for d in inv:
        out *= d
    return out


def topological_type(rd: RootDatum, mu: Sequence[int]) -> TopologicalType:
    if len(mu) != rd.dim:
        raise ValueError(f"cocharacter has length {len(mu)}, lattice rank is {rd.dim}")
    u, diag, keep = _class_data(rd)
    y = lattice.matvec(u, mu)
    return TopologicalType(
        tuple(diag[k] for k in keep),
        tuple(y[k] % diag[k] if diag[k] else y[k] for k in keep),
    )


def class_representative(rd: RootDatum, c: TopologicalType) -> tuple[int, ...]:
    """Some cocharacter with topological type ``c``."""
    u, diag, keep = _class_data(rd)
    if c.invariants != class_group_invariants(rd):
        raise ClassMismatch("class does not belong to this root datum")
    y = [0] * rd.dim
    for k, res in zip(keep, c.residues):
        y[k] = res
    uinv = lattice.inverse(u)
    mu = lattice.matvec(uinv, y)
    assert all(x.denominator == 1 for x in mu)
    return tuple(int(x) for x in mu)


# ---- enumeration of types in a degree window -------------------------

def _as_bound(upper, b):
    if upper is None:
        return None
    if isinstance(upper, Mapping):
        return Fraction(upper[b])
    return Fraction(upper)


def enumerate_types(
    pd: ParabolicData,
    c: TopologicalType,
    d_min: int,
    d_max: int,
    w_upper: int | Fraction | Mapping[int, int] | None = None,
) -> list[NumericalType]:
    """All numerical types with class compatible with ``c`` and
    ``d_min <= d <= d_max``.

    The degree alone bounds the search only for maximal parabolics. In general
    pass ``w_upper``, an upper bound on ``[sigma](w_beta)`` for ``beta`` outside
    ``I`` (a single number or one per ``beta``); such a bound always exists for
    the reductions of a fixed bundle but depends on the bundle.

    For the Borel the class must match exactly; otherwise only the
    X*(G)-component is fixed by ``c``.
    """
    if d_max < d_min:
        return []
    rd = pd.rd
    weights = fundamental_weights(rd)
    outside = pd.outside
    coef = pd.chi_P_weight_coefficients
    if len(outside) > 1 and w_upper is None:
        raise Unbounded("more than one simple root outside I: give w_upper to bound the search")

    # interval for x_b = [sigma](w_b)
    lo: dict[int, Fraction] = {}
    hi: dict[int, Fraction] = {}
    for b in outside:
        ub = _as_bound(w_upper, b)
        others = [o for o in outside if o != b]
        if ub is None:  # only one root outside I
            lo[b] = Fraction(-d_max) / coef[b]
            hi[b] = Fraction(-d_min) / coef[b]
        else:
            rest = sum((coef[o] * _as_bound(w_upper, o) for o in others), Fraction(0))
            lo[b] = (Fraction(-d_max) - rest) / coef[b]
            hi[b] = ub
            if not others:
                hi[b] = min(hi[b], Fraction(-d_min) / coef[b])
        if lo[b] > hi[b]:
            return []

    # values the type must take on X*(G)
    rep = class_representative(rd, c)
    group_chars = rd.group_characters
    g_values = [lattice.dot(rep, chi) for chi in group_chars]

    # v_k = sigma(b_k) = sum_b a_kb x_b + sigma(z_k) with z_k in X*(G)⊗Q
    boxes = []
    for bk in pd.char_lattice_basis:
        a = {b: lattice.dot(rd.simple_coroots[b], bk) for b in outside}
        z = [Fraction(x) for x in bk]
        for b in outside:
            z = [zi - a[b] * wi for zi, wi in zip(z, weights[b].vector)]
        if group_chars:
            e = lattice.integral_coordinates(group_chars, z)
            fixed = sum((ei * gi for ei, gi in zip(e, g_values)), Fraction(0))
        else:
            fixed = Fraction(0)
        low = fixed + sum((a[b] * (lo[b] if a[b] > 0 else hi[b]) for b in outside), Fraction(0))
        high = fixed + sum((a[b] * (hi[b] if a[b] > 0 else lo[b]) for b in outside), Fraction(0))
        boxes.append(range(ceil(low), floor(high) + 1))

    found = []
    for v in itertools.product(*boxes):
        sigma = NumericalType(pd, tuple(v))
        if any(sigma.evaluate(chi) != g for chi, g in zip(group_chars, g_values)):
            continue
        xs = {b: sigma.evaluate(weights[b].vector) for b in outside}
        if any(not lo[b] <= xs[b] <= hi[b] for b in outside):
            continue
        d = degree_functional(pd, sigma)
        if not d_min <= d <= d_max:
            continue
        if pd.is_borel and topological_type(rd, v) != c:
            continue
        found.append(sigma)
    return sorted(found)


# ---- coroot chains and upper bounds ------------------------------------

def _coroot_coeffs(rd: RootDatum, mu: Sequence[int]) -> list[int] | None:
    coords = coroot_coordinates(rd, mu)
    if coords is None or any(x.denominator != 1 for x in coords):
        return None
    return [int(x) for x in coords]


def coroot_chain(rd: RootDatum, nu: Sequence[int], mu: Sequence[int], g: int) -> list[tuple[int, ...]]:
    """A path ``nu = mu_1, ..., mu_n = mu`` adding one simple coroot per step.

    Each step ``mu_{i+1} = mu_i + coroot_j`` satisfies ``<mu_i, alpha_j> >= 2g - 1``.
    Requires ``nu <= mu`` and ``<nu, alpha> >= 2g`` for every simple root. The
    path is built backwards from ``mu``, each time removing the smallest-index
    coroot ``j`` that occurs in ``mu_{i+1} - nu`` and pairs positively with it.
    """
    nu = tuple(nu)
    mu = tuple(mu)
    bad = [i for i, p in enumerate(rd.simple_pairings(nu)) if p < 2 * g]
    if bad:
        raise HypothesisFailed(f"<nu, alpha_{bad[0]}> < 2g = {2 * g}")
    if not cochar_leq(rd, nu, mu):
        raise NotComparable(f"{nu} is not <= {mu}")
    k = _coroot_coeffs(rd, [a - b for a, b in zip(mu, nu)])
    assert k is not None and all(x >= 0 for x in k)

    chain = [mu]
    current = list(mu)
    while any(k):
        diff = rd.coroot_combination(k)
        pair = rd.simple_pairings(diff)
        j = next(i for i in range(rd.rank_ss) if k[i] > 0 and pair[i] > 0)
        current = [x - y for x, y in zip(current, rd.simple_coroots[j])]
        k[j] -= 1
        if lattice.dot(current, rd.simple_roots[j]) < 2 * g - 1:
            raise AssertionError("coroot chain step violates the pairing bound")
        chain.append(tuple(current))
    chain.reverse()
    return chain


def _compositions(total: int, parts: int):
    """Non-negative integer vectors of length ``parts`` summing to ``total``, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def common_upper_bound(rd: RootDatum, mu1: Sequence[int], mu2: Sequence[int], g: int) -> tuple[int, ...]:
    """A cocharacter ``mu >= mu1, mu2`` with ``<mu, gamma> > 2g - 1`` for all positive roots.

    Among ``mu = mu1 + sum k_j coroot_j`` the one with the smallest coefficient
    sum is returned, ties broken lexicographically in ``k``.
    """
    if topological_type(rd, mu1) != topological_type(rd, mu2):
        raise ClassMismatch("mu1 and mu2 have different topological types")
    e = _coroot_coeffs(rd, [b - a for a, b in zip(mu1, mu2)])
    assert e is not None
    base = [max(0, x) for x in e]
    r = rd.rank_ss
    roots = [rd.root_vector(gamma) for gamma in positive_roots(rd)]
    total = 0
    while True:
        for extra in _compositions(total, r):
            k = [b + x for b, x in zip(base, extra)]
            mu = tuple(a + c for a, c in zip(mu1, rd.coroot_combination(k)))
            if all(lattice.dot(mu, gamma) > 2 * g - 1 for gamma in roots):
                return mu
        total += 1
