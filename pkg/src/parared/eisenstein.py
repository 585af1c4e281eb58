"""Truncated multivariate Laurent series and the normalized Eisenstein series
built from counts of Borel reductions over a finite field.

A :class:`LaurentSeries` knows its coefficients exactly inside a box
``window`` of exponents (``None`` means everywhere, i.e. a Laurent
polynomial). Products only keep the part of the box that truncation cannot
contaminate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NonIntegralExpansion, NonIntegralExponent, WindowOverflow, WindowTooSmall
from .numtype import satisfies_star
from .parabolic import NumericalType, ParabolicData, degree_functional
from .root_data import Root, RootDatum, coroot_coordinates, longest_weyl_action, positive_roots

Exponent = tuple[int, ...]
Window = tuple[tuple[int, int], ...]

CONVENTIONS = ("harder", "literal")


def _intersect(a: Window | None, b: Window | None) -> Window | None:
    if a is None:
        return b
    if b is None:
        return a
    return tuple((max(x[0], y[0]), min(x[1], y[1])) for x, y in zip(a, b))


def _inside(e: Exponent, w: Window | None) -> bool:
    return w is None or all(lo <= x <= hi for x, (lo, hi) in zip(e, w))


def window_is_empty(w: Window | None) -> bool:
    return w is not None and any(lo > hi for lo, hi in w)


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    vars: tuple
    terms: dict = field(default_factory=dict)
    window: Window | None = None

    def __post_init__(self):
        n = len(self.vars)
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has the wrong length for variables {self.vars}")
            if not _inside(e, self.window):
                raise ValueError(f"exponent {e} lies outside the window {self.window}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})
        if self.window is not None:
            w = tuple((int(lo), int(hi)) for lo, hi in self.window)
            if len(w) != n:
                raise ValueError("window needs one interval per variable")
            object.__setattr__(self, "window", w)

    @classmethod
    def monomial(cls, vars: Sequence, e: Sequence[int], c=1) -> "LaurentSeries":
        return cls(tuple(vars), {tuple(e): c})

    @classmethod
    def one(cls, vars: Sequence) -> "LaurentSeries":
        return cls.monomial(vars, [0] * len(vars))

    @property
    def is_exact(self) -> bool:
        return self.window is None

    def coefficient(self, e: Sequence[int]) -> Fraction:
        e = tuple(e)
        if not _inside(e, self.window):
            raise KeyError(f"coefficient at {e} is not known inside the window {self.window}")
        return self.terms.get(e, Fraction(0))

    def support(self) -> list[Exponent]:
        return list(self.terms)

    def restrict(self, window: Window | None) -> "LaurentSeries":
        w = _intersect(self.window, window)
        return LaurentSeries(self.vars, {e: c for e, c in self.terms.items() if _inside(e, w)}, w)

    def _check(self, other: "LaurentSeries") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variables differ: {self.vars} vs {other.vars}")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        w = _intersect(self.window, other.window)
        out = {e: c for e, c in self.terms.items() if _inside(e, w)}
        for e, c in other.terms.items():
            if _inside(e, w):
                out[e] = out.get(e, Fraction(0)) + c
        return LaurentSeries(self.vars, out, w)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.vars, {e: -c for e, c in self.terms.items()}, self.window)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, k) -> "LaurentSeries":
        return LaurentSeries(self.vars, {e: k * c for e, c in self.terms.items()}, self.window)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check(other)
        if not self.is_exact and not other.is_exact:
            raise ValueError("at least one factor must be a Laurent polynomial (window None)")
        if not self.is_exact:
            return other * self
        # self is exact; the result is known where every shift lands in other's window
        if not self.terms:
            return LaurentSeries(self.vars)
        w = other.window
        if w is not None:
            sup = list(self.terms)
            w = tuple(
                (lo + max(s[i] for s in sup), hi + min(s[i] for s in sup)) for i, (lo, hi) in enumerate(w)
            )
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if _inside(e, w):
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentSeries(self.vars, out, w)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.vars == other.vars and self.window == other.window and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*tau^{list(e)}" for e, c in self.terms.items()) or "0"
        return f"LaurentSeries({body}, window={self.window})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "window": None if self.window is None else [list(w) for w in self.window],
            "terms": [{"exp": list(e), "coeff": c} for e, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "LaurentSeries":
        from .jsonio import number

        window = doc.get("window")
        return cls(
            tuple(doc["vars"]),
            {tuple(t["exp"]): number(t["coeff"]) for t in doc["terms"]},
            None if window is None else tuple(tuple(w) for w in window),
        )


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(k for k in range(2, q + 1) if q % k == 0)
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class CurveData:
    """A smooth projective curve over F_q, through its Frobenius eigenvalues on H^1.

    Eigenvalues are exact rationals; for genus 0 the list is empty. Nonempty
    lists are synthetic stand-ins for testing only.
    """

    q: int
    genus: int = 0
    frobenius_eigenvalues: tuple = ()

    def __post_init__(self):
        if not _is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        eig = tuple(Fraction(w) for w in self.frobenius_eigenvalues)
        if len(eig) != 2 * self.genus:
            raise ValueError(f"need {2 * self.genus} Frobenius eigenvalues, got {len(eig)}")
        object.__setattr__(self, "frobenius_eigenvalues", eig)


def simple_labels(rd: RootDatum) -> tuple[int, ...]:
    return tuple(range(rd.rank_ss))


def tau_gamma(rd: RootDatum, gamma: Root | Sequence[int]) -> Exponent:
    """``nu`` with ``gamma = sum_a nu_a w_a``, i.e. ``nu_a = <coroot_a, gamma>``."""
    g = gamma if isinstance(gamma, Root) else Root(tuple(gamma))
    if not g.is_positive:
        raise ValueError(f"{g.coeffs} is not a positive root")
    nu = [sum(Fraction(c) * rd.cartan[a][k] for k, c in enumerate(g.coeffs)) for a in range(rd.rank_ss)]
    if any(x.denominator != 1 for x in nu):
        raise NonIntegralExpansion(f"weight expansion of {g.coeffs} is not integral")
    return tuple(int(x) for x in nu)


def denominator_Q(rd: RootDatum, curve: CurveData, window: Window | None = None) -> LaurentSeries:
    """``prod_gamma (1 - q tau_gamma) prod_i (1 - w_i q^-1 tau_gamma)`` over positive roots."""
    labels = simple_labels(rd)
    out = LaurentSeries.one(labels)
    q = Fraction(curve.q)
    zero = [0] * len(labels)
    for g in positive_roots(rd):
        nu = tau_gamma(rd, g)
        factors = [q] + [w / q for w in curve.frobenius_eigenvalues]
        for f in factors:
            out = out * LaurentSeries(labels, {tuple(zero): 1, nu: -f})
    if window is not None:
        outside = [e for e in out.terms if not _inside(e, window)]
        if outside:
            raise WindowOverflow(f"Q has exponents {outside[:3]} outside the window {window}")
    return out


def series_exponent(rd: RootDatum, sigma, sigma0, q: int, convention: str = "harder"):
    """Exponent vector and q-power weight of the term of a Borel type ``sigma``.

    ``convention="literal"``: exponents ``d_a = <sigma - sigma0, w_a>`` and weight
    ``q^-(sum d_a)``.

    ``convention="harder"`` (default): with ``mu = w0(sigma - sigma0)`` the
    exponents are ``<mu, alpha_a>`` and the weight is ``q^-(sum of the simple
    coroot coefficients of mu)``. This is the normalization for which
    ``E * Q`` is a Laurent polynomial.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    delta = tuple(a - b for a, b in zip(sigma, sigma0))
    if len(delta) != rd.dim or len(sigma) != len(sigma0):
        raise ValueError(f"types must have {rd.dim} coordinates")
    coeffs = coroot_coordinates(rd, delta)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise NonIntegralExponent(f"{tuple(sigma)} - {tuple(sigma0)} is not in the coroot lattice")
    if convention == "literal":
        exp = tuple(int(c) for c in coeffs)
        return exp, Fraction(1, q ** sum(exp)) if sum(exp) >= 0 else Fraction(q ** -sum(exp))
    mu = longest_weyl_action(rd, delta)
    mu_coeffs = coroot_coordinates(rd, mu)
    exp = tuple(int(x) for x in rd.simple_pairings(mu))
    s = int(sum(mu_coeffs))
    return exp, Fraction(1, q ** s) if s >= 0 else Fraction(q ** -s)


def _cochar(key) -> tuple[int, ...]:
    if isinstance(key, NumericalType):
        if not key.pd.is_borel:
            raise ValueError("counts must be keyed by Borel types")
        return key.values
    return tuple(key)


def assemble_series(
    rd: RootDatum,
    counts: Mapping,
    sigma0: Sequence[int],
    curve: CurveData,
    window: Window | None = None,
    convention: str = "harder",
) -> tuple[LaurentSeries, list]:
    """``E = sum gamma(sigma) q^(...) tau^(...)`` over the given Borel types.

    Returns the series and the list of ``(type, exponent)`` pairs rejected
    for falling outside ``window``.
    """
    labels = simple_labels(rd)
    terms: dict = {}
    rejected = []
    for key in sorted(counts, key=_cochar):
        sigma = _cochar(key)
        exp, weight = series_exponent(rd, sigma, sigma0, curve.q, convention)
        if not _inside(exp, window):
            rejected.append((sigma, exp))
            continue
        terms[exp] = terms.get(exp, Fraction(0)) + counts[key] * weight
    return LaurentSeries(labels, terms, window), rejected


@dataclass(frozen=True)
class RationalityReport:
    N0: int
    N1: int
    safe_window: Window | None
    numerator: LaurentSeries
    offending: tuple  # (exponent, coefficient) in the safe region outside [-N0, N1]

    @property
    def ok(self) -> bool:
        return not self.offending

    def to_json(self) -> dict:
        return {
            "N0": self.N0,
            "N1": self.N1,
            "safe_window": None if self.safe_window is None else [list(w) for w in self.safe_window],
            "numerator": self.numerator.to_json(),
            "offending": [{"exp": list(e), "coeff": c} for e, c in self.offending],
            "ok": self.ok,
        }


def rationality_check(E: LaurentSeries, Q: LaurentSeries, N0: int, N1: int) -> RationalityReport:
    """Multiply ``E`` by ``Q`` and list every reliable coefficient of the product
    whose exponent leaves the box ``[-N0, N1]`` in some variable."""
    P = E * Q
    if window_is_empty(P.window):
        raise WindowTooSmall(f"no safe region left: E window {E.window}, Q support {Q.support()}")
    offending = tuple(
        (e, c) for e, c in P.terms.items() if any(not -N0 <= x <= N1 for x in e)
    )
    return RationalityReport(N0, N1, P.window, P, offending)


@dataclass(frozen=True)
class AsymptoticRow:
    sigma: tuple[int, ...]
    exponent: int
    count: int
    remainder: int
    holds: bool


@dataclass(frozen=True)
class AsymptoticReport:
    q: int
    C: Fraction
    rows: tuple[AsymptoticRow, ...]
    skipped: tuple  # types without property (*) for N

    @property
    def failures(self) -> tuple[AsymptoticRow, ...]:
        return tuple(r for r in self.rows if not r.holds)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "C": self.C,
            "rows": [
                {"sigma": list(r.sigma), "exponent": r.exponent, "count": r.count,
                 "remainder": r.remainder, "holds": r.holds}
                for r in self.rows
            ],
            "skipped": [list(s) for s in self.skipped],
            "ok": self.ok,
        }


def sandwich_holds(count: int, q: int, e: int, C) -> bool:
    """``|count - q^e| <= C q^(e - 1/2)``, tested as ``(count - q^e)^2 q <= C^2 q^(2e)``."""
    C = Fraction(C)
    if C < 0:
        return False
    main = Fraction(q) ** e
    return (count - main) ** 2 * q <= C * C * main * main


def asymptotic_check(
    counts: Mapping[NumericalType, int], pd_B: ParabolicData, g: int, q: int, C, N: int | None = None
) -> AsymptoticReport:
    rows, skipped = [], []
    for sigma in sorted(counts):
        if N is not None and not satisfies_star(sigma, N):
            skipped.append(sigma.values)
            continue
        e = degree_functional(pd_B, sigma) + (1 - g) * pd_B.dim_G_mod_P
        count = counts[sigma]
        main = Fraction(q) ** e
        rem = count - main
        rows.append(
            AsymptoticRow(sigma.values, e, count, int(rem) if rem.denominator == 1 else rem,
                          sandwich_holds(count, q, e, C))
        )
    return AsymptoticReport(q, Fraction(C), tuple(rows), tuple(skipped))


def sandwich_exponents(counts_by_q: Mapping[int, int], C=2) -> set[int]:
    """All integers ``e`` for which the sandwich holds at every ``q``.

    With ``C = 2`` and small ``q`` this is usually more than one value.
    """
    candidates = None
    for q, count in counts_by_q.items():
        top = max(count, 1).bit_length() + 2
        ok = {e for e in range(-2, top + 1) if sandwich_holds(count, q, e, C)}
        candidates = ok if candidates is None else candidates & ok
    return candidates or set()


def growth_exponent(counts_by_q: Mapping[int, int], C=2) -> int | None:
    """Growth exponent measured from log-ratios of counts at consecutive ``q``.

    Returns ``None`` unless all ratios round to the same ``e`` and the exact
    sandwich holds at ``e`` for every ``q``.
    """
    ests = set(log_ratio_exponents(counts_by_q))
    if len(ests) != 1:
        return None
    e = ests.pop()
    if all(sandwich_holds(c, q, e, C) for q, c in counts_by_q.items()):
        return e
    return None


def _round_log(x: Fraction, r: Fraction) -> int:
    """``round(log x / log r)`` for ``r > 1``, exactly: the ``k`` with
    ``r^(2k-1) <= x^2 < r^(2k+1)``."""
    x2 = x * x
    k = 0
    while x2 < r ** (2 * k - 1):
        k -= 1
    while x2 >= r ** (2 * k + 1):
        k += 1
    return k


def log_ratio_exponents(counts_by_q: Mapping[int, int]) -> list[int]:
    """Rounded ``log(c2/c1) / log(q2/q1)`` for consecutive ``q``."""
    qs = sorted(counts_by_q)
    return [
        _round_log(Fraction(counts_by_q[b], counts_by_q[a]), Fraction(b, a)) for a, b in zip(qs, qs[1:])
    ]
