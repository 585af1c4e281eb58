"""Dimension bounds for spaces of reductions and the constants behind the
irreducibility threshold for parabolic reductions.

``N_B`` (the Borel threshold) and ``M_D`` (the bound on Borel reductions of
Levi bundles of bounded instability) are not effective; they are taken as
inputs and everything downstream of them is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import lattice
from .errors import CapViolated, NoDominatingMinimalType, NotComparable
from .numtype import leq
from .parabolic import NumericalType, ParabolicData, degree_functional
from .root_data import RootDatum, positive_roots


@dataclass(frozen=True)
class BoundReport:
    sigma: NumericalType
    gamma: NumericalType
    upper_bound: int
    expected_dim: int
    minimal_cap: int
    genus: int

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma.values),
            "gamma": list(self.gamma.values),
            "upper_bound": self.upper_bound,
            "expected_dim": self.expected_dim,
            "minimal_cap": self.minimal_cap,
            "genus": self.genus,
        }


def expected_dimension(pd: ParabolicData, sigma: NumericalType, g: int) -> int:
    return degree_functional(pd, sigma) + (1 - g) * pd.dim_G_mod_P


def hilbert_bound(
    pd: ParabolicData, sigma: NumericalType, minimal_types: Sequence[NumericalType], g: int
) -> BoundReport:
    """Upper bound ``dim(G/P) + d(sigma) - d(gamma)`` on components through a
    reduction of type ``sigma``; the same bound holds for stable maps.

    ``gamma`` is picked among the minimal types dominating ``sigma``, preferring
    the largest ``d(gamma)`` (the tightest bound) and then the lexicographically
    smallest values.
    """
    if not minimal_types:
        raise NoDominatingMinimalType("no minimal types given")
    cap = g * pd.dim_G_mod_P
    for gamma in minimal_types:
        if degree_functional(pd, gamma) > cap:
            raise CapViolated(
                f"minimal type {gamma.values} has d = {degree_functional(pd, gamma)} > g*dim(G/P) = {cap}"
            )
    candidates = [gamma for gamma in minimal_types if leq(sigma, gamma)]
    if not candidates:
        raise NoDominatingMinimalType(f"no minimal type dominates {sigma.values}")
    gamma = min(candidates, key=lambda t: (-degree_functional(pd, t), t.values))
    d_sigma = degree_functional(pd, sigma)
    return BoundReport(
        sigma=sigma,
        gamma=gamma,
        upper_bound=pd.dim_G_mod_P + d_sigma - degree_functional(pd, gamma),
        expected_dim=expected_dimension(pd, sigma, g),
        minimal_cap=cap,
        genus=g,
    )


def lower_bound_chain(pd: ParabolicData, sigma: NumericalType, tau: NumericalType) -> int:
    """Increment ``d(sigma) - d(tau) - 1`` in ``dim M(sigma) >= dim M(tau) + increment``."""
    if not leq(sigma, tau):
        raise NotComparable(f"{sigma.values} is not <= {tau.values}")
    return degree_functional(pd, sigma) - degree_functional(pd, tau) - 1


@dataclass(frozen=True)
class StabilityVerdict:
    expected_dim: int
    observed_dim: int
    dimension_matches: bool
    degree: int
    degree_lower_bound: int
    lower_bound_holds: bool
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "expected_dim": self.expected_dim,
            "observed_dim": self.observed_dim,
            "dimension_matches": self.dimension_matches,
            "degree": self.degree,
            "degree_lower_bound": self.degree_lower_bound,
            "lower_bound_holds": self.lower_bound_holds,
            "warnings": list(self.warnings),
        }


def generic_stability_check(
    pd: ParabolicData, sigma: NumericalType, g: int, observed_dim: int
) -> StabilityVerdict:
    """Compare an observed dimension with the expected one and test the
    necessary condition ``d(sigma) >= (g-1) dim(G/P)`` for generic stability."""
    d = degree_functional(pd, sigma)
    expected = d + (1 - g) * pd.dim_G_mod_P
    floor = (g - 1) * pd.dim_G_mod_P
    warnings = () if g >= 2 else (f"genus {g} < 2: generic stability is only studied for g >= 2",)
    return StabilityVerdict(
        expected_dim=expected,
        observed_dim=observed_dim,
        dimension_matches=observed_dim == expected,
        degree=d,
        degree_lower_bound=floor,
        lower_bound_holds=d >= floor,
        warnings=warnings,
    )


@dataclass(frozen=True)
class StarConstants:
    I: tuple[int, ...]
    n_beta: dict[int, int]
    n_beta_alpha: dict[int, dict[int, int]]
    m_I: int
    n_I: int
    N_B: int
    M_D: int
    N_P: int
    chi_beta: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "I": list(self.I),
            "n_beta": {str(b): n for b, n in self.n_beta.items()},
            "n_beta_alpha": {
                str(b): {str(a): v for a, v in row.items()} for b, row in self.n_beta_alpha.items()
            },
            "chi_beta": {str(b): list(v) for b, v in self.chi_beta.items()},
            "m_I": self.m_I,
            "n_I": self.n_I,
            "N_B": self.N_B,
            "M_D": self.M_D,
            "N_P": self.N_P,
        }


def star_constants(rd: RootDatum, pd: ParabolicData, N_B: int, M_D: int) -> StarConstants:
    """``n_beta``, ``n_beta_alpha``, ``m_I``, ``n_I`` and ``N_P = n_I N_B + m_I M_D``.

    With no simple root outside ``I`` (``P = G``) the tables are empty,
    ``m_I = 0``, ``n_I = 1`` and ``N_P = N_B``.
    """
    if N_B <= 0 or M_D <= 0:
        raise ValueError("N_B and M_D must be positive")
    chars = pd.star_characters
    n_beta = {b: n for b, (n, _, _) in chars.items()}
    table = {b: dict(coeffs) for b, (_, coeffs, _) in chars.items()}
    m_I = max((sum(abs(v) for v in row.values()) for row in table.values()), default=0)
    n_I = max(n_beta.values(), default=1)
    return StarConstants(
        I=pd.I,
        n_beta=n_beta,
        n_beta_alpha=table,
        m_I=m_I,
        n_I=n_I,
        N_B=N_B,
        M_D=M_D,
        N_P=n_I * N_B + m_I * M_D,
        chi_beta={b: vec for b, (_, _, vec) in chars.items()},
    )


def borel_expected_dim(rd: RootDatum, sigma_B: Sequence[int], g: int) -> int:
    """``<sigma, -2 rho> + (1 - g) |Phi+|``."""
    return -lattice.dot(sigma_B, rd.two_rho) + (1 - g) * len(positive_roots(rd))


def instability_degree_bound(
    pd: ParabolicData, pd_P1: ParabolicData, minimal_types_P1: Sequence[NumericalType], g: int
) -> int:
    """Right-hand side ``(g-1) dim(G/P) + dim(G/P1) - min d(gamma_i)`` bounding the
    instability degree of the Levi bundles on a dense open set of sections,
    where the ``gamma_i`` are the minimal types for ``P1 ⊂ P``."""
    if not set(pd_P1.I) <= set(pd.I):
        raise ValueError("P1 must be contained in P")
    if not minimal_types_P1:
        raise NoDominatingMinimalType("need at least one minimal type for P1")
    least = min(degree_functional(pd_P1, t) for t in minimal_types_P1)
    return (g - 1) * pd.dim_G_mod_P + pd_P1.dim_G_mod_P - least
