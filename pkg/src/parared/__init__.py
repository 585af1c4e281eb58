"""Exact combinatorics of parabolic reductions of principal bundles on curves.

Root data, standard parabolics, numerical and topological types, dimension
bounds, truncated Eisenstein series and a brute-force SL_2 point-count oracle.
"""

from .root_data import (
    Root,
    RootDatum,
    build_root_datum,
    cartan_matrix,
    fundamental_weights,
    positive_roots,
    root_datum_from_json,
)
from .parabolic import NumericalType, ParabolicData, build_parabolic, degree_functional
from .numtype import enumerate_types, leq, satisfies_star, topological_type
from .eisenstein import CurveData, LaurentSeries

__version__ = "0.1.0"

__all__ = [
    "CurveData",
    "LaurentSeries",
    "NumericalType",
    "ParabolicData",
    "Root",
    "RootDatum",
    "build_parabolic",
    "build_root_datum",
    "cartan_matrix",
    "degree_functional",
    "enumerate_types",
    "fundamental_weights",
    "leq",
    "positive_roots",
    "root_datum_from_json",
    "satisfies_star",
    "topological_type",
]
