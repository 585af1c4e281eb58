"""Standard parabolic subgroups ``P_I`` and their character lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import lattice
from .errors import DimensionMismatch, IndexOutOfRange, MixedParabolics, NotNested
from .root_data import (
    Root,
    RootDatum,
    fundamental_weights,
    positive_roots,
)


@dataclass(frozen=True)
class ParabolicData:
    rd: RootDatum
    I: tuple[int, ...]
    levi_positive_roots: tuple[Root, ...] = field(compare=False, repr=False)
    dim_G_mod_P: int = field(compare=False)
    chi_P: tuple[int, ...] = field(compare=False)
    char_lattice_basis: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def cochar_rank(self) -> int:
        return len(self.char_lattice_basis)

    @property
    def outside(self) -> tuple[int, ...]:
        """Simple-root indices not in ``I``."""
        return tuple(b for b in range(self.rd.rank_ss) if b not in self.I)

    @property
    def is_borel(self) -> bool:
        return not self.I

    def coords(self, chi: Sequence) -> tuple[Fraction, ...]:
        """Rational coordinates of a character of P (or of X*(P)⊗Q) in the basis."""
        if not self.char_lattice_basis:
            if any(chi):
                raise DimensionMismatch("character is not in X*(P)")
            return ()
        try:
            return tuple(lattice.integral_coordinates(self.char_lattice_basis, chi))
        except ValueError:
            raise DimensionMismatch(f"{tuple(chi)} is not in X*(P)⊗Q") from None

    def contains_character(self, chi: Sequence) -> bool:
        return all(lattice.dot(self.rd.simple_coroots[i], chi) == 0 for i in self.I)

    @cached_property
    def dominant_generators(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """``beta -> (n_beta, n_beta * w_beta)`` with ``n_beta`` minimal making it integral."""
        out = {}
        weights = fundamental_weights(self.rd)
        for b in self.outside:
            w = weights[b].vector
            n = lattice.common_denominator(w)
            out[b] = (n, tuple(int(n * x) for x in w))
        return out

    @cached_property
    def star_characters(self) -> dict[int, tuple[int, dict[int, int], tuple[int, ...]]]:
        """For ``beta`` outside ``I``: ``(n_beta, {alpha: n_beta_alpha}, chi_beta)``.

        ``chi_beta = n_beta*beta + sum_alpha n_beta_alpha*alpha`` is the character of
        P with the smallest positive ``n_beta``.
        """
        rd = self.rd
        I = self.I
        sub = [[rd.cartan[i][j] for j in I] for i in I]
        out = {}
        for b in self.outside:
            if I:
                # <coroot_i, beta + sum x_a alpha_a> = 0 for i in I
                x = lattice.solve(sub, [-rd.cartan[i][b] for i in I])
            else:
                x = []
            n = lattice.common_denominator(x)
            coeffs = {a: int(n * xa) for a, xa in zip(I, x)}
            vec = [n * v for v in rd.simple_roots[b]]
            for a, ca in coeffs.items():
                vec = [v + ca * w for v, w in zip(vec, rd.simple_roots[a])]
            out[b] = (n, coeffs, tuple(vec))
        return out

    @cached_property
    def chi_P_weight_coefficients(self) -> dict[int, Fraction]:
        """``c_beta`` with ``-chi_P = sum_beta c_beta w_beta``; all positive."""
        return {
            b: Fraction(-lattice.dot(self.rd.simple_coroots[b], self.chi_P)) for b in self.outside
        }


def build_parabolic(rd: RootDatum, I: Iterable[int] = ()) -> ParabolicData:
    """The standard parabolic ``P_I`` (0-based simple-root indices)."""
    I = tuple(sorted(set(int(i) for i in I)))
    for i in I:
        if not 0 <= i < rd.rank_ss:
            raise IndexOutOfRange(f"simple root index {i} outside 0..{rd.rank_ss - 1}")
    pos = positive_roots(rd)
    levi = tuple(g for g in pos if all(c == 0 or k in I for k, c in enumerate(g.coeffs)))
    unipotent = [g for g in pos if g not in levi]
    chi = [0] * rd.dim
    for g in unipotent:
        for k, x in enumerate(rd.root_vector(g)):
            chi[k] -= x
    basis = lattice.integer_kernel([list(rd.simple_coroots[i]) for i in I], rd.dim)
    return ParabolicData(
        rd=rd,
        I=I,
        levi_positive_roots=levi,
        dim_G_mod_P=len(unipotent),
        chi_P=tuple(chi),
        char_lattice_basis=tuple(map(tuple, basis)),
    )


@dataclass(frozen=True)
class NumericalType:
    """An integral functional on X*(P), stored by its values on the lattice basis.

    For the Borel (``I = ()``) the basis is the standard one, so ``values`` are
    just the coordinates of a cocharacter.
    """

    pd: ParabolicData
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.pd.cochar_rank:
            raise DimensionMismatch(
                f"numerical type has {len(self.values)} values, X*(P) has rank {self.pd.cochar_rank}"
            )

    def evaluate(self, chi: Sequence) -> Fraction:
        """Value on a character of P, or linearly on X*(P)⊗Q."""
        return sum((c * v for c, v in zip(self.pd.coords(chi), self.values)), Fraction(0))

    def _same(self, other: "NumericalType") -> None:
        if self.pd != other.pd:
            raise MixedParabolics("numerical types live on different parabolics")

    def __add__(self, other: "NumericalType") -> "NumericalType":
        self._same(other)
        return NumericalType(self.pd, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "NumericalType") -> "NumericalType":
        self._same(other)
        return NumericalType(self.pd, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "NumericalType":
        return NumericalType(self.pd, tuple(-a for a in self.values))

    def __rmul__(self, k: int) -> "NumericalType":
        return NumericalType(self.pd, tuple(k * a for a in self.values))

    def __lt__(self, other: "NumericalType") -> bool:
        # canonical sort order only, not the dominance order
        return self.values < other.values


def degree_functional(pd: ParabolicData, sigma: NumericalType) -> int:
    """``d([sigma]) = [sigma](chi_P)``, the degree of the normal bundle."""
    if sigma.pd != pd:
        raise DimensionMismatch("numerical type belongs to another parabolic")
    value = sigma.evaluate(pd.chi_P)
    assert value.denominator == 1
    return int(value)


def restrict_cocharacter(pd: ParabolicData, mu: Sequence[int]) -> NumericalType:
    """Image of a cocharacter of T under ``X_*(T) -> X_*(P)``."""
    if len(mu) != pd.rd.dim:
        raise DimensionMismatch(f"cocharacter must have {pd.rd.dim} coordinates")
    return NumericalType(pd, tuple(lattice.dot(mu, b) for b in pd.char_lattice_basis))


def decompose_parabolic_character(
    rd: RootDatum, pd_P: ParabolicData, pd_P1: ParabolicData, chi: Sequence
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split a character of ``P1 ⊂ P`` into a part from X*(P) and a part from
    X*(P̄1), where P̄1 is the image of P1 in ``L/Z0(L)``.

    The second part lies in the rational span of the roots in ``I``; the first
    is killed by the coroots in ``I``. Both are returned as ambient rational
    vectors and sum to ``chi``.
    """
    if not set(pd_P1.I) <= set(pd_P.I):
        raise NotNested(f"I1={pd_P1.I} is not contained in I={pd_P.I}")
    if not pd_P1.contains_character(chi):
        raise DimensionMismatch(f"{tuple(chi)} is not a character of P1")
    I = pd_P.I
    if not I:
        return tuple(Fraction(x) for x in chi), tuple(Fraction(0) for _ in chi)
    sub = [[rd.cartan[i][j] for j in I] for i in I]
    rhs = [lattice.dot(rd.simple_coroots[i], chi) for i in I]
    c = lattice.solve(sub, rhs)
    levi = [Fraction(0)] * rd.dim
    for cj, j in zip(c, I):
        for k, x in enumerate(rd.simple_roots[j]):
            levi[k] += cj * x
    p_part = tuple(Fraction(x) - y for x, y in zip(chi, levi))
    return p_part, tuple(levi)


def levi_induced_root_datum(rd: RootDatum, pd: ParabolicData) -> RootDatum:
    """Root datum of ``L/Z0(L)``.

    Its character lattice is the set of characters of T trivial on the
    connected center of L, i.e. the saturation of the span of the roots in I.
    """
    I = pd.I
    center = lattice.integer_kernel([list(rd.simple_roots[i]) for i in I], rd.dim)
    basis = lattice.integer_kernel(center, rd.dim) if center else lattice.identity(rd.dim)
    if not I:
        basis = []
    roots = []
    for i in I:
        co = lattice.integral_coordinates(basis, rd.simple_roots[i])
        assert all(x.denominator == 1 for x in co)
        roots.append(tuple(int(x) for x in co))
    coroots = [tuple(lattice.dot(rd.simple_coroots[i], b) for b in basis) for i in I]
    return RootDatum(
        cartan=tuple(tuple(rd.cartan[i][j] for j in I) for i in I),
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        rank_torus=0,
        name=f"{rd.name or 'G'}-levi{list(I)}",
    )
