"""Root data of connected reductive groups.

Both the character lattice X*(T) and the cocharacter lattice X_*(T) are
realized as ``Z^n`` with ``n = rank_ss + rank_torus``; the pairing between
them is the ordinary dot product of coordinate vectors. A datum is fixed by
the simple roots (characters) and simple coroots (cocharacters), with

    cartan[i][j] = <coroot_i, root_j>.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Mapping, Sequence

from . import lattice
from .errors import InvalidPreset, NotARoot, NotFiniteType

Vector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Root:
    """A root written as ``sum(coeffs[i] * alpha_i)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not any(self.coeffs):
            raise NotARoot("the zero vector is not a root")
        if not (all(c >= 0 for c in self.coeffs) or all(c <= 0 for c in self.coeffs)):
            raise NotARoot(f"mixed-sign coefficients {self.coeffs}")

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def sign(self) -> int:
        return 1 if self.is_positive else -1

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class FundamentalWeight:
    alpha_index: int
    vector: tuple[Fraction, ...]


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    rank_torus: int = 0
    name: str = ""

    def __post_init__(self):
        r = len(self.cartan)
        n = r + self.rank_torus
        if len(self.simple_roots) != r or len(self.simple_coroots) != r:
            raise ValueError("need one simple root and one simple coroot per Cartan row")
        for v in (*self.simple_roots, *self.simple_coroots):
            if len(v) != n:
                raise ValueError(f"vector {v} does not live in Z^{n}")
        check_finite_type(self.cartan)
        for i in range(r):
            for j in range(r):
                if lattice.dot(self.simple_coroots[i], self.simple_roots[j]) != self.cartan[i][j]:
                    raise ValueError(f"pairing of coroot {i} with root {j} disagrees with the Cartan matrix")
        if r and (lattice.rank(self.simple_roots) != r or lattice.rank(self.simple_coroots) != r):
            raise ValueError("simple roots and coroots must be linearly independent")

    # ---- basic shape -------------------------------------------------

    @property
    def rank_ss(self) -> int:
        return len(self.cartan)

    @property
    def dim(self) -> int:
        """Rank of the ambient lattices X*(T) and X_*(T)."""
        return self.rank_ss + self.rank_torus

    @staticmethod
    def pairing(cochar: Sequence, char: Sequence):
        return lattice.dot(cochar, char)

    def simple_pairings(self, cochar: Sequence) -> tuple:
        """``(<cochar, alpha_i>)_i``."""
        return tuple(lattice.dot(cochar, a) for a in self.simple_roots)

    def root_vector(self, gamma: Root | Sequence[int]) -> Vector:
        """Ambient character vector of a root given by simple-root coefficients."""
        coeffs = gamma.coeffs if isinstance(gamma, Root) else tuple(gamma)
        return tuple(
            sum(c * a[k] for c, a in zip(coeffs, self.simple_roots)) for k in range(self.dim)
        )

    def coroot_combination(self, coeffs: Sequence[int]) -> Vector:
        """Ambient cocharacter ``sum(coeffs[i] * coroot_i)``."""
        return tuple(
            sum(c * a[k] for c, a in zip(coeffs, self.simple_coroots)) for k in range(self.dim)
        )

    # ---- derived data, computed once -----------------------------------

    @cached_property
    def _positive_with_coroots(self) -> dict[tuple[int, ...], Vector]:
        r = self.rank_ss
        a = self.cartan
        found: dict[tuple[int, ...], Vector] = {}
        queue = []
        for i in range(r):
            e = tuple(int(k == i) for k in range(r))
            found[e] = self.simple_coroots[i]
            queue.append(e)
        while queue:
            beta = queue.pop(0)
            beta_hat = found[beta]
            for i in range(r):
                p = sum(a[i][j] * beta[j] for j in range(r))
                if p == 0:
                    continue
                image = tuple(c - p * int(k == i) for k, c in enumerate(beta))
                if any(c < 0 for c in image) or image in found:
                    continue
                q = lattice.dot(beta_hat, self.simple_roots[i])
                found[image] = tuple(x - q * y for x, y in zip(beta_hat, self.simple_coroots[i]))
                queue.append(image)
        return found

    @cached_property
    def central_cocharacters(self) -> list[list[int]]:
        """Basis of cocharacters killed by every root (the central torus)."""
        return lattice.integer_kernel([list(a) for a in self.simple_roots], self.dim)

    @cached_property
    def group_characters(self) -> list[list[int]]:
        """Basis of X*(G): characters killed by every coroot."""
        return lattice.integer_kernel([list(a) for a in self.simple_coroots], self.dim)

    @cached_property
    def two_rho(self) -> Vector:
        """Sum of the positive roots as an ambient character."""
        total = [0] * self.dim
        for gamma in positive_roots(self):
            for k, x in enumerate(self.root_vector(gamma)):
                total[k] += x
        return tuple(total)

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """Reduced word ``(i_1, ..., i_N)`` with ``w_0 = s_{i_N} ... s_{i_1}``.

        Found by walking a regular dominant coweight down to the antidominant
        chamber, always reflecting in the smallest index with positive pairing.
        """
        r = self.rank_ss
        p = [1] * r
        word = []
        while True:
            i = next((k for k in range(r) if p[k] > 0), None)
            if i is None:
                return tuple(word)
            pi = p[i]
            p = [p[j] - pi * self.cartan[i][j] for j in range(r)]
            word.append(i)

    def reflect_cocharacter(self, i: int, mu: Sequence) -> tuple:
        p = lattice.dot(mu, self.simple_roots[i])
        return tuple(x - p * y for x, y in zip(mu, self.simple_coroots[i]))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cartan": [list(row) for row in self.cartan],
            "torus_rank": self.rank_torus,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }


def check_finite_type(cartan: Sequence[Sequence[int]]) -> None:
    """Raise ``NotFiniteType`` unless ``cartan`` is a Cartan matrix of finite type."""
    r = len(cartan)
    for i in range(r):
        if len(cartan[i]) != r:
            raise NotFiniteType("Cartan matrix must be square")
        if cartan[i][i] != 2:
            raise NotFiniteType(f"diagonal entry {i} is {cartan[i][i]}, expected 2")
        for j in range(r):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise NotFiniteType(f"off-diagonal entry ({i},{j}) is positive")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise NotFiniteType(f"entries ({i},{j}) and ({j},{i}) are not both zero")
    # finite type <=> every principal minor is positive
    if any(m <= 0 for m in lattice.principal_minors(cartan)):
        raise NotFiniteType("Cartan matrix is not of finite type")


# ---- Cartan matrices of the simple types (Bourbaki numbering) -----------

def _chain(n: int) -> list[list[int]]:
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    kind = kind.upper()
    if kind == "A" and n >= 1:
        return _chain(n)
    if kind == "B" and n >= 1:
        m = _chain(n)
        if n >= 2:
            m[n - 1][n - 2] = -2  # alpha_n short
        return m
    if kind == "C" and n >= 1:
        m = _chain(n)
        if n >= 2:
            m[n - 2][n - 1] = -2  # alpha_n long
        return m
    if kind == "D" and n >= 2:
        m = _chain(n)
        if n == 2:
            return [[2, 0], [0, 2]]
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if kind == "G" and n == 2:
        return [[2, -3], [-1, 2]]  # alpha_1 short
    if kind == "F" and n == 4:
        m = _chain(4)
        m[2][1] = -2  # alpha_3, alpha_4 short
        return m
    if kind == "E" and n in (6, 7, 8):
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        # 1-3-4-5-...-n with 2 attached to 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            m[i][j] = m[j][i] = -1
        return m
    raise InvalidPreset(f"no Cartan type {kind}{n}")


_PRESET = re.compile(r"^(A|B|C|D|E|F|G|SL|PGL|GL)_?(\d+)$", re.IGNORECASE)


def build_root_datum(
    cartan: Sequence[Sequence[int]] | None = None,
    rank_torus: int = 0,
    preset: str | None = None,
    isogeny: str = "sc",
) -> RootDatum:
    """Build a root datum from a Cartan matrix or a preset name.

    Presets: ``A_n .. G_2`` (simply connected unless ``isogeny="ad"``),
    ``SL_n`` (simply connected), ``PGL_n`` (adjoint), ``GL_n``. A preset
    overrides ``cartan`` and ``rank_torus``.
    """
    if preset is not None:
        m = _PRESET.match(preset.strip())
        if not m:
            raise InvalidPreset(f"unknown preset {preset!r}")
        kind, n = m.group(1).upper(), int(m.group(2))
        if kind == "GL":
            if n < 1:
                raise InvalidPreset("GL_n needs n >= 1")
            return _gl(n)
        if kind in ("SL", "PGL"):
            if n < 2:
                raise InvalidPreset(f"{kind}_n needs n >= 2")
            cartan = cartan_matrix("A", n - 1)
            isogeny = "sc" if kind == "SL" else "ad"
            name = f"{kind}{n}"
        else:
            cartan = cartan_matrix(kind, n)
            name = f"{kind}{n}" + ("" if isogeny == "sc" else f"-{isogeny}")
        rank_torus = 0
    else:
        if cartan is None:
            raise ValueError("need a Cartan matrix or a preset")
        name = ""
    cartan = [list(map(int, row)) for row in cartan]
    check_finite_type(cartan)
    r = len(cartan)
    n = r + rank_torus
    pad = [0] * rank_torus
    if isogeny == "sc":
        coroots = [tuple(int(k == i) for k in range(n)) for i in range(r)]
        roots = [tuple([cartan[i][j] for i in range(r)] + pad) for j in range(r)]
    elif isogeny == "ad":
        roots = [tuple(int(k == j) for k in range(n)) for j in range(r)]
        coroots = [tuple(list(cartan[i]) + pad) for i in range(r)]
    else:
        raise InvalidPreset(f"unknown isogeny {isogeny!r}; use 'sc' or 'ad'")
    return RootDatum(
        cartan=tuple(map(tuple, cartan)),
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        rank_torus=rank_torus,
        name=name,
    )


def _gl(n: int) -> RootDatum:
    vecs = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        vecs.append(tuple(v))
    return RootDatum(
        cartan=tuple(map(tuple, cartan_matrix("A", n - 1))) if n > 1 else (),
        simple_roots=tuple(vecs),
        simple_coroots=tuple(vecs),
        rank_torus=1,
        name=f"GL{n}",
    )


def root_datum_from_json(doc: Mapping | str | Path) -> RootDatum:
    """Parse ``{"preset": "A2"}``, ``{"cartan": ..., "torus_rank": 0, "isogeny": "sc"}``
    or the explicit form written by :meth:`RootDatum.to_json`.

    Accepts a mapping, a JSON string, or a path to a JSON file.
    """
    if isinstance(doc, Path) or (isinstance(doc, str) and not doc.lstrip().startswith("{")):
        doc = json.loads(Path(doc).read_text())
    elif isinstance(doc, str):
        doc = json.loads(doc)
    isogeny = doc.get("isogeny", "sc")
    if "simple_roots" in doc and "simple_coroots" in doc:
        return RootDatum(
            cartan=tuple(tuple(int(x) for x in row) for row in doc["cartan"]),
            simple_roots=tuple(tuple(int(x) for x in v) for v in doc["simple_roots"]),
            simple_coroots=tuple(tuple(int(x) for x in v) for v in doc["simple_coroots"]),
            rank_torus=int(doc.get("torus_rank", 0)),
            name=doc.get("name", ""),
        )
    if "preset" in doc:
        return build_root_datum(preset=doc["preset"], isogeny=isogeny)
    if "cartan" in doc:
        return build_root_datum(doc["cartan"], int(doc.get("torus_rank", 0)), isogeny=isogeny)
    raise InvalidPreset("root datum description needs 'preset' or 'cartan'")


# ---- operations ------------------------------------------------------

def positive_roots(rd: RootDatum) -> list[Root]:
    """Positive roots sorted by height, then lexicographically."""
    keys = sorted(rd._positive_with_coroots, key=lambda c: (sum(c), c))
    return [Root(c) for c in keys]


def coroot_of(rd: RootDatum, gamma: Root | Sequence[int]) -> Vector:
    """The coroot of ``gamma`` as an ambient cocharacter vector."""
    coeffs = gamma.coeffs if isinstance(gamma, Root) else tuple(gamma)
    table = rd._positive_with_coroots
    if coeffs in table:
        return table[coeffs]
    neg = tuple(-c for c in coeffs)
    if neg in table:
        return tuple(-x for x in table[neg])
    raise NotARoot(f"{coeffs} is not a root of {rd.name or 'this datum'}")


def fundamental_weights(rd: RootDatum) -> list[FundamentalWeight]:
    """Rational weights ``w_a`` with ``<coroot_b, w_a> = delta_ab``, orthogonal to the center."""
    r = rd.rank_ss
    if r == 0:
        return []
    rows = [list(c) for c in rd.simple_coroots] + [list(c) for c in rd.central_cocharacters]
    inv = lattice.inverse(rows)
    return [
        FundamentalWeight(a, tuple(inv[k][a] for k in range(rd.dim)))
        for a in range(r)
    ]


def fundamental_coweights(rd: RootDatum) -> list[tuple[Fraction, ...]]:
    """Rational cocharacters dual to the simple roots, killed by X*(G)."""
    r = rd.rank_ss
    if r == 0:
        return []
    rows = [list(a) for a in rd.simple_roots] + [list(c) for c in rd.group_characters]
    inv = lattice.inverse(rows)
    return [tuple(inv[k][a] for k in range(rd.dim)) for a in range(r)]


def longest_weyl_action(rd: RootDatum, mu: Sequence) -> tuple:
    """Apply the longest Weyl group element to a cocharacter."""
    out = tuple(mu)
    if len(out) != rd.dim:
        raise ValueError(f"cocharacter must have {rd.dim} coordinates")
    for i in rd.longest_word:
        out = rd.reflect_cocharacter(i, out)
    return out


def weight_coordinates(rd: RootDatum, cochar: Sequence) -> tuple[Fraction, ...]:
    """``(<cochar, w_a>)_a`` for the fundamental weights ``w_a``."""
    return tuple(Fraction(lattice.dot(cochar, w.vector)) for w in fundamental_weights(rd))


def coroot_coordinates(rd: RootDatum, cochar: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients of ``cochar`` in the simple coroots, or ``None`` if it is not
    in their rational span."""
    if rd.rank_ss == 0:
        return () if not any(cochar) else None
    try:
        return tuple(lattice.solve(lattice.transpose(rd.simple_coroots), list(cochar)))
    except ValueError:
        return None
