"""Command line front end: ``parared <group> <command> ...``.

Simple-root indices are 1-based on the command line and 0-based in the
library. Vectors are comma-separated integers; pass negative ones as
``--sigma=-2,1``. Reports go to stdout as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import jsonio
from .bounds import (
    expected_dimension,
    generic_stability_check,
    hilbert_bound,
    lower_bound_chain,
    star_constants,
)
from .eisenstein import (
    CurveData,
    assemble_series,
    asymptotic_check,
    denominator_Q,
    growth_exponent,
    log_ratio_exponents,
    rationality_check,
)
from .errors import ConfigError, ParaRedError
from .finite_field import supported_orders
from .numtype import (
    class_group_invariants,
    class_group_order,
    common_upper_bound,
    coroot_chain,
    enumerate_types,
    leq,
    satisfies_star,
    topological_type,
)
from .oracle_sl2 import count_table, write_tsv
from .parabolic import build_parabolic, degree_functional, restrict_cocharacter
from .root_data import (
    RootDatum,
    build_root_datum,
    fundamental_weights,
    positive_roots,
    root_datum_from_json,
)

EXIT_OK, EXIT_CONFIG, EXIT_CHECK = 0, 2, 3


class CheckFailed(Exception):
    def __init__(self, stage: str, report: dict | None = None):
        super().__init__(stage)
        self.stage = stage
        self.report = report


# ---- argument helpers ----------------------------------------------------

def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def index_list(text: str) -> list[int]:
    """1-based indices to 0-based."""
    return [i - 1 for i in int_list(text)]


def window_arg(text: str) -> tuple[tuple[int, int], ...]:
    try:
        out = []
        for part in text.split(","):
            lo, hi = part.split(":")
            out.append((int(lo), int(hi)))
        return tuple(out)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like lo:hi[,lo:hi...], got {text!r}") from None


def load_rootdata(source) -> RootDatum:
    """A JSON file path, an inline mapping, or ``preset:NAME[:sc|ad]``."""
    try:
        if isinstance(source, dict):
            return root_datum_from_json(source)
        source = str(source)
        if source.startswith("preset:"):
            _, name, *rest = source.split(":")
            if len(rest) > 1:
                raise ConfigError(f"bad preset {source!r}")
            return build_root_datum(preset=name, isogeny=rest[0]) if rest else build_root_datum(preset=name)
        path = Path(source)
        if not path.is_file():
            raise ConfigError(f"root datum file {source!r} not found")
        return root_datum_from_json(path)
    except ConfigError:
        raise
    except (ParaRedError, ValueError, KeyError) as exc:
        raise ConfigError(f"bad root datum {source!r}: {exc}") from exc


def _cochar(rd: RootDatum, vec: Sequence[int], basis: str) -> tuple[int, ...]:
    if basis == "coroot":
        if len(vec) != rd.rank_ss:
            raise ConfigError(f"coroot coordinates need {rd.rank_ss} entries")
        return tuple(rd.coroot_combination(vec))
    if len(vec) != rd.dim:
        raise ConfigError(f"ambient coordinates need {rd.dim} entries")
    return tuple(vec)


def _type(rd, pd, vec, basis):
    return restrict_cocharacter(pd, _cochar(rd, vec, basis))


# ---- commands ------------------------------------------------------------

def cmd_rootdata_inspect(args) -> dict:
    rd = load_rootdata(args.rootdata)
    return {
        "name": rd.name,
        "rank": rd.rank_ss,
        "torus_rank": rd.rank_torus,
        "cartan": [list(r) for r in rd.cartan],
        "positive_roots": len(positive_roots(rd)),
        "fundamental_weights": {str(w.alpha_index + 1): list(w.vector) for w in fundamental_weights(rd)},
        "class_group": list(class_group_invariants(rd)),
    }


def cmd_parabolic_info(args) -> dict:
    rd = load_rootdata(args.rootdata)
    pd = build_parabolic(rd, args.I)
    return {
        "I": [i + 1 for i in pd.I],
        "dim_G_mod_P": pd.dim_G_mod_P,
        "chi_P": list(pd.chi_P),
        "chi_P_root_coordinates": _root_coords(rd, pd.chi_P),
        "character_lattice_basis": [list(b) for b in pd.char_lattice_basis],
    }


def _root_coords(rd: RootDatum, chi) -> list | None:
    from . import lattice

    if rd.rank_ss == 0:
        return []
    try:
        return list(lattice.solve(lattice.transpose(rd.simple_roots), list(chi)))
    except ValueError:
        return None


def cmd_numtype(args) -> dict:
    rd = load_rootdata(args.rootdata)
    pd = build_parabolic(rd, args.I)
    sub = args.sub
    if sub == "leq":
        s, t = _type(rd, pd, args.sigma, args.basis), _type(rd, pd, args.tau, args.basis)
        return {"sigma": list(s.values), "tau": list(t.values), "leq": leq(s, t, relaxed=args.relaxed)}
    if sub == "star":
        s = _type(rd, pd, args.sigma, args.basis)
        return {"sigma": list(s.values), "N": args.N, "star": satisfies_star(s, args.N)}
    if sub == "class":
        mu = _cochar(rd, args.mu, args.basis)
        c = topological_type(rd, mu)
        return {"mu": list(mu), "invariants": list(c.invariants), "residues": list(c.residues),
                "group_order": class_group_order(rd)}
    if sub == "enum":
        mu = _cochar(rd, args.mu, args.basis) if args.mu is not None else (0,) * rd.dim
        c = topological_type(rd, mu)
        types = enumerate_types(pd, c, args.dmin, args.dmax, w_upper=args.w_upper)
        return {"types": [{"values": list(t.values), "d": degree_functional(pd, t)} for t in types]}
    if sub == "chain":
        nu, mu = _cochar(rd, args.nu, args.basis), _cochar(rd, args.mu, args.basis)
        return {"chain": [list(x) for x in coroot_chain(rd, nu, mu, args.genus)]}
    if sub == "upperbound":
        m1, m2 = _cochar(rd, args.mu1, args.basis), _cochar(rd, args.mu2, args.basis)
        return {"upper_bound": list(common_upper_bound(rd, m1, m2, args.genus))}
    raise ConfigError(f"unknown numtype command {sub}")


def cmd_bounds(args) -> dict:
    rd = load_rootdata(args.rootdata)
    pd = build_parabolic(rd, args.I)
    sub = args.sub
    if sub == "constants":
        if args.NB is None or args.MD is None:
            raise ConfigError("bounds constants needs --NB and --MD")
        sc = star_constants(rd, pd, args.NB, args.MD)
        one = lambda k: str(k + 1)
        doc = sc.to_json()
        doc.update(
            I=[i + 1 for i in sc.I],
            n_beta={one(b): n for b, n in sc.n_beta.items()},
            n_beta_alpha={one(b): {one(a): v for a, v in row.items()} for b, row in sc.n_beta_alpha.items()},
            chi_beta={one(b): list(v) for b, v in sc.chi_beta.items()},
        )
        return doc
    sigma = _type(rd, pd, args.sigma, args.basis)
    if sub == "expected":
        return {"sigma": list(sigma.values), "expected_dim": expected_dimension(pd, sigma, args.genus)}
    if sub == "hilb":
        minimal = [_type(rd, pd, v, args.basis) for v in args.minimal]
        return hilbert_bound(pd, sigma, minimal, args.genus).to_json()
    if sub == "lbd":
        tau = _type(rd, pd, args.tau, args.basis)
        return {"sigma": list(sigma.values), "tau": list(tau.values),
                "increment": lower_bound_chain(pd, sigma, tau)}
    if sub == "generic":
        if args.observed is None:
            raise ConfigError("bounds generic needs --observed")
        return generic_stability_check(pd, sigma, args.genus, args.observed).to_json()
    raise ConfigError(f"unknown bounds command {sub}")


def _read_counts(path, rd, pd, q):
    """Counts for one q from a TSV: oracle columns ``q n d count`` (type ``-n``)
    or a ``sigma`` column of comma-separated cocharacter coordinates."""
    import csv

    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"counts file {path!r} not found")
    with open(p, newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="\t"))
    out = {}
    for rec in rows:
        if int(rec["q"]) != q:
            continue
        if "sigma" in rec:
            mu = tuple(int_list(rec["sigma"]))
        else:
            if rd.dim != 1:
                raise ConfigError("oracle TSV rows (q, n, d, count) only describe SL_2 types")
            mu = (-int(rec["n"]),)
        out[restrict_cocharacter(pd, mu)] = int(rec["count"])
    return out


def cmd_eisenstein(args) -> dict:
    rd = load_rootdata(args.rootdata)
    curve = CurveData(args.q, args.genus, tuple(Fraction(x) for x in args.frobenius))
    sub = args.sub
    if sub == "q-poly":
        return {"Q": denominator_Q(rd, curve, args.window).to_json()}
    pd = build_parabolic(rd)
    if args.counts is None:
        raise ConfigError(f"eisenstein {sub} needs --counts")
    counts = _read_counts(args.counts, rd, pd, args.q)
    if sub == "check-asymptotic":
        rep = asymptotic_check(counts, pd, args.genus, args.q, Fraction(args.C), args.N).to_json()
        if not rep["ok"]:
            raise CheckFailed("check-asymptotic", rep)
        return rep
    sigma0 = tuple(args.sigma0) if args.sigma0 is not None else (0,) * rd.dim
    E, rejected = assemble_series(rd, counts, sigma0, curve, args.window, convention=args.convention)
    if sub == "assemble":
        return {"series": E.to_json(), "rejected": [{"sigma": list(s), "exp": list(e)} for s, e in rejected]}
    if sub == "check-rational":
        rep = rationality_check(E, denominator_Q(rd, curve), args.N0, args.N1).to_json()
        if not rep["ok"]:
            raise CheckFailed("check-rational", rep)
        return rep
    raise ConfigError(f"unknown eisenstein command {sub}")


def cmd_oracle_count(args) -> dict:
    for q in args.q:
        if q not in supported_orders():
            raise ConfigError(f"q={q} is not a supported field order")
    rows = count_table(args.q, args.nmax, method=args.method, jobs=args.jobs)
    if args.tsv:
        write_tsv(rows, args.tsv)
    return {"rows": [{"q": r.q, "n": r.n, "d": r.d, "count": r.count} for r in rows]}


# ---- pipeline ------------------------------------------------------------

@dataclass
class PipelineConfig:
    rootdata: object = "preset:SL2"
    q_list: list = field(default_factory=lambda: [2, 3])
    n_max: int = 3
    genus: int = 0
    C: Fraction = Fraction(2)
    window: tuple | None = None
    N0: int = 0
    N1: int = 2
    output_dir: str = "pipeline-out"
    method: str = "factor"
    jobs: int = 1

    @classmethod
    def from_file(cls, path) -> "PipelineConfig":
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file {path!r} not found")
        try:
            doc = json.loads(p.read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        known = set(cls.__dataclass_fields__)
        unknown = set(doc) - known - {"schema"}
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)}")
        cfg = cls(**{k: v for k, v in doc.items() if k in known})
        cfg.C = jsonio.number(cfg.C) if not isinstance(cfg.C, Fraction) else cfg.C
        rd = cfg.rootdata
        if isinstance(rd, str) and not rd.startswith("preset:") and not Path(rd).is_absolute():
            cfg.rootdata = str(p.parent / rd)
        if cfg.window is not None:
            cfg.window = tuple(tuple(w) for w in cfg.window)
        return cfg

    def validate(self) -> RootDatum:
        rd = load_rootdata(self.rootdata)
        if rd.dim != 1 or rd.cartan != ((2,),) or rd.simple_coroots != ((1,),):
            raise ConfigError("the pipeline's oracle only covers the simply connected SL_2")
        bad = [q for q in self.q_list if q not in supported_orders()]
        if bad or not self.q_list:
            raise ConfigError(f"q_list must be nonempty and supported, bad entries: {bad}")
        if self.genus != 0:
            raise ConfigError("the oracle base curve is P^1, genus must be 0")
        if not 0 <= self.n_max <= 5:
            raise ConfigError("n_max must lie in 0..5")
        return rd


def run_pipeline(cfg: PipelineConfig) -> tuple[int, dict]:
    """Oracle counts, series, rationality, asymptotics and bound consistency.

    Writes five reports into ``cfg.output_dir``; returns the exit code and a
    summary naming the first failing stage.
    """
    rd = cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    pd = build_parabolic(rd)
    window = cfg.window or ((-2, 2 * cfg.n_max),)
    stages: dict[str, bool] = {}

    rows = count_table(cfg.q_list, cfg.n_max, method=cfg.method, jobs=cfg.jobs)
    write_tsv(rows, out / "counts.tsv")
    by_q: dict[int, dict] = {}
    for r in rows:
        by_q.setdefault(r.q, {})[restrict_cocharacter(pd, r.numerical_type)] = r.count
    stages["counts"] = all(r.n or r.count == r.q + 1 for r in rows)

    series, rational, asym = {}, {}, {}
    for q, counts in by_q.items():
        curve = CurveData(q, cfg.genus)
        E, rejected = assemble_series(rd, counts, (0,), curve, window)
        series[str(q)] = {"series": E, "rejected": [{"sigma": list(s), "exp": list(e)} for s, e in rejected]}
        try:
            rational[str(q)] = rationality_check(E, denominator_Q(rd, curve), cfg.N0, cfg.N1)
        except ParaRedError as exc:
            raise ConfigError(f"rationality stage: {exc}") from exc
        asym[str(q)] = asymptotic_check(counts, pd, cfg.genus, q, cfg.C, N=0)
    stages["series"] = all(not v["rejected"] for v in series.values())
    stages["rationality"] = all(r.ok for r in rational.values())

    growth = {}
    for n in range(cfg.n_max + 1):
        at_n = {r.q: r.count for r in rows if r.n == n}
        growth[str(n)] = {
            "expected": 2 * n + 1,
            "log_ratio": log_ratio_exponents(at_n),
            "measured": growth_exponent(at_n, cfg.C) if len(at_n) > 1 else None,
        }
    stages["asymptotics"] = all(r.ok for r in asym.values()) and all(
        g["measured"] in (None, g["expected"]) for g in growth.values()
    )

    zero = restrict_cocharacter(pd, (0,))
    hilb = []
    for n in range(cfg.n_max + 1):
        sigma = restrict_cocharacter(pd, (-n,))
        rep = hilbert_bound(pd, sigma, [zero], cfg.genus)
        measured = growth[str(n)]["measured"]
        hilb.append({
            "bound": rep,
            "consistent": rep.upper_bound >= rep.expected_dim,
            "matches_growth": measured is None or measured == rep.upper_bound,
        })
    stages["bounds"] = all(h["consistent"] and h["matches_growth"] for h in hilb)

    jsonio.dump({"q_list": cfg.q_list, "window": [list(w) for w in window], "series": series},
                out / "series.json")
    jsonio.dump({"N0": cfg.N0, "N1": cfg.N1, "reports": rational}, out / "rationality.json")
    jsonio.dump({"C": cfg.C, "reports": asym, "growth": growth}, out / "asymptotics.json")
    jsonio.dump({"genus": cfg.genus, "hilbert": hilb}, out / "bounds.json")

    failed = next((name for name, ok in stages.items() if not ok), None)
    summary = {"stages": stages, "failed_stage": failed, "output_dir": str(out)}
    return (EXIT_OK if failed is None else EXIT_CHECK), summary


def cmd_pipeline(args) -> dict:
    cfg = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    if args.out_dir:
        cfg.output_dir = args.out_dir
    if args.jobs != 1:
        cfg.jobs = args.jobs
    code, summary = run_pipeline(cfg)
    if code != EXIT_OK:
        raise CheckFailed(summary["failed_stage"], summary)
    return summary


# ---- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parared", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="pipeline configuration (JSON)")
    p.add_argument("--out", dest="out_dir", help="output directory for reports")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    groups = p.add_subparsers(dest="group", required=True)

    rdp = groups.add_parser("rootdata").add_subparsers(dest="sub", required=True)
    x = rdp.add_parser("inspect")
    x.add_argument("rootdata", help="JSON file or preset:NAME")
    x.set_defaults(func=cmd_rootdata_inspect)

    pp = groups.add_parser("parabolic").add_subparsers(dest="sub", required=True)
    x = pp.add_parser("info")
    x.add_argument("rootdata")
    x.add_argument("--I", type=index_list, default=[], help="1-based simple roots in the Levi")
    x.set_defaults(func=cmd_parabolic_info)

    def common(sp, genus=False):
        sp.add_argument("rootdata")
        sp.add_argument("--I", type=index_list, default=[])
        sp.add_argument("--basis", choices=("coroot", "ambient"), default="ambient")
        if genus:
            sp.add_argument("--genus", type=int, default=0)

    nt = groups.add_parser("numtype").add_subparsers(dest="sub", required=True)
    for name in ("leq", "star", "class", "enum", "chain", "upperbound"):
        sp = nt.add_parser(name)
        common(sp, genus=name in ("chain", "upperbound"))
        sp.set_defaults(func=cmd_numtype)
        if name in ("leq", "star"):
            sp.add_argument("--sigma", type=int_list, required=True)
        if name == "leq":
            sp.add_argument("--tau", type=int_list, required=True)
            sp.add_argument("--relaxed", action="store_true")
        if name == "star":
            sp.add_argument("--N", type=int, required=True)
        if name == "class":
            sp.add_argument("--mu", type=int_list, required=True)
        if name == "enum":
            sp.add_argument("--mu", type=int_list, help="representative of the topological type")
            sp.add_argument("--dmin", type=int, required=True)
            sp.add_argument("--dmax", type=int, required=True)
            sp.add_argument("--w-upper", dest="w_upper", type=int)
        if name == "chain":
            sp.add_argument("--nu", type=int_list, required=True)
            sp.add_argument("--mu", type=int_list, required=True)
        if name == "upperbound":
            sp.add_argument("--mu1", type=int_list, required=True)
            sp.add_argument("--mu2", type=int_list, required=True)

    bd = groups.add_parser("bounds").add_subparsers(dest="sub", required=True)
    for name in ("hilb", "lbd", "generic", "constants", "expected"):
        sp = bd.add_parser(name)
        common(sp, genus=True)
        sp.add_argument("--NB", type=int)
        sp.add_argument("--MD", type=int)
        sp.set_defaults(func=cmd_bounds)
        if name != "constants":
            sp.add_argument("--sigma", type=int_list, required=True)
        if name == "hilb":
            sp.add_argument("--minimal", type=int_list, action="append", required=True,
                            help="a numerically minimal type; repeat for several")
        if name == "lbd":
            sp.add_argument("--tau", type=int_list, required=True)
        if name == "generic":
            sp.add_argument("--observed", type=int)

    es = groups.add_parser("eisenstein").add_subparsers(dest="sub", required=True)
    for name in ("q-poly", "assemble", "check-rational", "check-asymptotic"):
        sp = es.add_parser(name)
        sp.add_argument("rootdata")
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--genus", type=int, default=0)
        sp.add_argument("--frobenius", type=str, nargs="*", default=[],
                        help="exact Frobenius eigenvalues (synthetic, 2g of them)")
        sp.add_argument("--window", type=window_arg)
        sp.add_argument("--counts", help="TSV of counts")
        sp.add_argument("--sigma0", type=int_list)
        sp.add_argument("--convention", choices=("harder", "literal"), default="harder")
        sp.add_argument("--N0", type=int, default=0)
        sp.add_argument("--N1", type=int, default=2)
        sp.add_argument("--C", default="2")
        sp.add_argument("--N", type=int)
        sp.set_defaults(func=cmd_eisenstein)

    orc = groups.add_parser("oracle").add_subparsers(dest="sub", required=True)
    sp = orc.add_parser("count")
    sp.add_argument("--q", type=int_list, required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--out", dest="tsv", help="TSV output path")
    sp.add_argument("--method", choices=("factor", "gcd"), default="factor")
    sp.set_defaults(func=cmd_oracle_count)

    pl = groups.add_parser("pipeline")
    pl.set_defaults(func=cmd_pipeline)
    return p


def _emit(doc: dict, args) -> None:
    text = jsonio.dumps(doc)
    sys.stdout.write(text)
    if args.out_dir and args.group != "pipeline":
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        name = args.group + ("-" + args.sub if getattr(args, "sub", None) else "")
        (out / f"{name}.json").write_text(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        _emit(args.func(args), args)
    except CheckFailed as exc:
        if exc.report is not None:
            _emit(exc.report, args)
        print(f"check failed: {exc.stage}", file=sys.stderr)
        return EXIT_CHECK
    except (ConfigError, ParaRedError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
