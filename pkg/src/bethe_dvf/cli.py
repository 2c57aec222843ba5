"""Batch command-line interface.

Subcommands: build | count | solve | verify | export.  All structured output
is JSON with a "schema": 1 field; reports embed the sampling seed so any run
can be reproduced bit for bit.  Exit codes: 0 success, 1 verification
failure, 2 bad input or unsupported shape, 3 no Bethe solution found.

Shape grammar: "m^a" for an a-row rectangle of width m, a comma list
"3,2,1" for a general partition, and "3,1/1" for the skew shape mu/lambda.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import UnsupportedShape, WrongAlgebra, parse_spec
from .bae import (BetheSystem, NoSolutionFound,
                  check_lemma_products, check_pole_free, check_residue_pairs,
                  max_residual, solve_bae)
from .dvf import (BoxContext, build_dvf, column_dvf, crossing_transform,
                  generating_series_coeff, row_dvf)
from .goldens import GOLDENS
from .relations import (check_det_vs_tableaux, check_duality_suite,
                        check_hirota, check_t_system,
                        check_term_count_conjecture)
from .reports import IdentityReport
from .symbolic import (SymSum, equal_as_rational_functions, shift_u,
                       sum_to_json, sum_to_latex, sum_to_text)
from .tableaux import SkewDiagram, count_tableaux


def parse_shape(text: str) -> SkewDiagram:
    """Parse the documented shape grammar into a skew diagram."""
    text = text.strip()
    lam: tuple[int, ...] = ()
    if "/" in text:
        mu_part, lam_part = text.split("/", 1)
        lam = tuple(int(p) for p in lam_part.split(",") if p)
    else:
        mu_part = text
    if "^" in mu_part:
        m_str, a_str = mu_part.split("^", 1)
        mu = (int(m_str),) * int(a_str)
    else:
        mu = tuple(int(p) for p in mu_part.split(",") if p)
    return SkewDiagram.make(lam, mu)


def _emit(x: SymSum, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(sum_to_json(x), sort_keys=True, indent=1) + "\n")
    elif fmt == "latex":
        out.write(sum_to_latex(x) + "\n")
    else:
        out.write(sum_to_text(x) + "\n")


def cmd_build(args) -> int:
    spec = parse_spec(args.spec)
    shape = parse_shape(args.shape)
    ctx = BoxContext(spec, include_vacuum=not args.no_vacuum)
    x = build_dvf(ctx, shape)
    with _open_out(args.out) as out:
        _emit(x, args.format, out)
    return 0


def cmd_count(args) -> int:
    spec = parse_spec(args.spec)
    shape = parse_shape(args.shape)
    n = count_tableaux(spec, shape)
    print(json.dumps({"schema": 1, "spec": str(spec),
                      "mu": list(shape.mu.parts), "lambda": list(shape.lam.parts),
                      "count": n}, sort_keys=True))
    return 0


def cmd_solve(args) -> int:
    spec = parse_spec(args.spec)
    w = tuple(float(x) for x in args.w.split(",")) if args.w else ()
    na = tuple(int(x) for x in args.na.split(","))
    system = BetheSystem(spec, args.n_sites, w, na)
    stats: dict = {}
    sols = solve_bae(system, tol=args.tol, n_starts=args.starts,
                     seed=args.seed, stats=stats)
    payload = {"schema": 1, "spec": str(spec), "N": args.n_sites,
               "w": list(w), "Na": list(na), "seed": args.seed,
               "search": stats,
               "solutions": [dict(s.to_json(),
                                  residual=max_residual(system, s))
                             for s in sols]}
    with _open_out(args.out) as out:
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _suite_golden(seed: int) -> list[IdentityReport]:
    spec = parse_spec("B(2|1)")
    ctx = BoxContext(spec)
    shapes = {"B(2|1) column height 1": (1,),
              "B(2|1) column height 2": (1, 1),
              "B(2|1) row length 2": (2,)}
    out = []
    for name, make in GOLDENS.items():
        built = build_dvf(ctx, SkewDiagram.straight(shapes[name]))
        ok = built == make()
        out.append(IdentityReport(name=f"golden {name}", mode="exact-symbolic",
                                  samples=1, max_deviation=Fraction(0),
                                  passed=ok, details={"terms": len(built)},
                                  seed=seed))
    return out


def _suite_counts(seed: int) -> list[IdentityReport]:
    expectations = [
        ("B(0|2)", (1,), 5), ("B(0|2)", (1,) * 2, 15),
        ("B(0|2)", (1,) * 3, 35), ("B(0|2)", (1,) * 4, 70),
        ("B(0|2)", (2,), 10), ("B(0|2)", (2, 2), 50),
        ("B(0|2)", (2,) * 3, 175), ("B(0|2)", (2,) * 4, 490),
        ("B(2|1)", (1,), 7), ("D(3|1)", (1, 1), 31), ("D(2|2)", (1, 1), 33),
        ("B(1|1)", (4, 4, 4), 0),
    ]
    out = []
    for name, mu, want in expectations:
        got = count_tableaux(parse_spec(name), SkewDiagram.straight(mu))
        out.append(IdentityReport(
            name=f"count {name} {mu}", mode="exact-symbolic", samples=1,
            max_deviation=Fraction(abs(got - want)), passed=got == want,
            details={"expected": want, "got": got}, seed=seed))
    return out


def _suite_determinant(seed: int) -> list[IdentityReport]:
    out = []
    for name in ("B(1|1)", "B(2|1)"):
        spec = parse_spec(name)
        for mu in [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 2, 1)]:
            sd = SkewDiagram.straight(mu)
            for variant in ("column", "row"):
                out.append(check_det_vs_tableaux(spec, sd, variant,
                                                 trials=20, seed=seed))
    d21 = parse_spec("D(2|1)")
    ctx = BoxContext(d21)
    t1 = column_dvf(ctx, 1)
    lhs = [[shift_u(t1, -1), shift_u(t1, 1)]]
    rhs = [[row_dvf(ctx, 2)], [column_dvf(ctx, 2)]]
    from .symbolic import equal_group_sums
    out.append(equal_group_sums(lhs, rhs, trials=20, seed=seed,
                                name="determinant[d_row] D(2|1) m=2"))
    return out


def _suite_hirota(seed: int) -> list[IdentityReport]:
    out = []
    for name in ("B(1|1)", "B(0|2)"):
        spec = parse_spec(name)
        for a in (1, 2, 3):
            for m in (1, 2, 3):
                out.append(check_hirota(spec, a, m, trials=8, seed=seed))
    return out


def _suite_duality(seed: int) -> list[IdentityReport]:
    return [check_duality_suite(1, trials=8, seed=seed),
            check_duality_suite(2, trials=8, seed=seed)]


def _suite_tsystem(seed: int) -> list[IdentityReport]:
    return [check_t_system(1, 3, trials=8, seed=seed),
            check_t_system(2, 3, trials=8, seed=seed)]


FIXTURE_W = (1.7, -0.4, 0.3)
FIXTURE_COUNTS = {"B(1|1)": (2, 2), "B(0|1)": (2,), "B(0|2)": (2, 2),
                  "D(2|1)": (2, 2, 1)}
_FIXTURE_CACHE: dict = {}


def _solved_fixture(name: str, seed: int):
    key = (name, seed)
    if key not in _FIXTURE_CACHE:
        spec = parse_spec(name)
        system = BetheSystem(spec, len(FIXTURE_W), FIXTURE_W,
                             FIXTURE_COUNTS[name])
        sols = solve_bae(system, tol=1e-10, seed=seed, n_starts=200,
                         max_iter=150, start_radius=5.0)
        _FIXTURE_CACHE[key] = (spec, system, sols[0])
    return _FIXTURE_CACHE[key]


def _suite_residues(seed: int) -> list[IdentityReport]:
    out = []
    for name in FIXTURE_COUNTS:
        spec, system, sol = _solved_fixture(name, 21)
        out.append(check_residue_pairs(spec, system, sol))
    return out


def _suite_polefree(seed: int) -> list[IdentityReport]:
    out = []
    for name in FIXTURE_COUNTS:
        spec, system, sol = _solved_fixture(name, 21)
        ctx = BoxContext(spec)
        for a in (1, 2, 3, 4):
            out.append(check_pole_free(column_dvf(ctx, a), system, sol,
                                       name=f"pole-free {name} T^{a}"))
    return out


def _suite_lemmas(seed: int) -> list[IdentityReport]:
    return [check_lemma_products(parse_spec(name))
            for name in ("B(2|1)", "B(0|1)", "B(0|2)", "B(1|1)",
                         "D(2|1)", "D(3|1)", "D(2|2)")]


def _suite_crossing(seed: int) -> list[IdentityReport]:
    out = []
    for name in ("B(2|1)", "B(0|2)", "D(2|1)"):
        spec = parse_spec(name)
        ctx = BoxContext(spec)
        for label, mu in [("T^1", (1,)), ("T^2", (1, 1)), ("T_2", (2,))]:
            t = build_dvf(ctx, SkewDiagram.straight(mu))
            rep = equal_as_rational_functions(crossing_transform(spec, t), t,
                                              trials=8, seed=seed)
            out.append(IdentityReport(
                name=f"crossing {name} {label}", mode=rep.mode,
                samples=rep.samples, max_deviation=rep.max_deviation,
                passed=rep.passed, details={}, seed=seed))
    return out


def _suite_genseries(seed: int) -> list[IdentityReport]:
    out = []
    for name in ("B(1|1)", "B(0|2)", "D(2|1)"):
        spec = parse_spec(name)
        ctx = BoxContext(spec)
        for kind, direct in (("column", column_dvf), ("row", row_dvf)):
            for n in range(0, 5):
                coeff = generating_series_coeff(ctx, kind, n, 5)
                want = shift_u(direct(ctx, n), n - 1)
                ok = coeff == want
                out.append(IdentityReport(
                    name=f"series {name} {kind} n={n}", mode="exact-symbolic",
                    samples=1, max_deviation=Fraction(0), passed=ok,
                    details={}, seed=seed))
    return out


def _suite_term_counts(seed: int) -> list[IdentityReport]:
    return [check_term_count_conjecture(2, a, m)
            for a, m in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]]


SUITES = {
    "golden": _suite_golden,
    "counts": _suite_counts,
    "determinant": _suite_determinant,
    "hirota": _suite_hirota,
    "duality": _suite_duality,
    "tsystem": _suite_tsystem,
    "residues": _suite_residues,
    "polefree": _suite_polefree,
    "lemmas": _suite_lemmas,
    "crossing": _suite_crossing,
    "genseries": _suite_genseries,
}
SUITES["conjecture"] = _suite_term_counts


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    jobs = args.jobs or int(os.environ.get("BETHE_DVF_JOBS", "1"))
    reports: list[IdentityReport] = []
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_run_suite, [(n, args.seed) for n in names]):
                reports.extend(batch)
    else:
        for n in names:
            reports.extend(SUITES[n](args.seed))
    reports.sort(key=lambda r: r.name)
    print(json.dumps([r.to_json() for r in reports], sort_keys=True, indent=1))
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"FAILED: {len(failed)} checks: {failed[:10]}", file=sys.stderr)
        return 1
    return 0


def _run_suite(pair):
    name, seed = pair
    return SUITES[name](seed)


def cmd_export(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    for name, make in GOLDENS.items():
        fname = name.replace("(", "").replace(")", "").replace("|", "-")
        fname = fname.replace(" ", "_") + ".json"
        with open(os.path.join(args.out, fname), "w") as f:
            json.dump(dict(sum_to_json(make()), description=name),
                      f, sort_keys=True, indent=1)
    print(f"wrote {len(GOLDENS)} expansions to {args.out}")
    return 0


class _open_out:
    def __init__(self, path: str | None):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path is None or self.path == "-":
            return sys.stdout
        self.fh = open(self.path, "w")
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not None:
            self.fh.close()
        return False


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bethe-dvf",
        description="Build and verify tableaux-sum transfer-matrix "
                    "eigenvalues for osp superalgebra spin chains.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a tableaux sum")
    b.add_argument("spec", help='algebra, e.g. "B(2|1)"')
    b.add_argument("--shape", required=True,
                   help='shape: "m^a", "3,2,1" or "3,1/1" (mu/lambda)')
    b.add_argument("--no-vacuum", action="store_true",
                   help="drop the vacuum (phi) factors")
    b.add_argument("--format", choices=("json", "latex", "text"),
                   default="json")
    b.add_argument("--out", default=None, help="output file (default stdout)")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("count", help="count admissible tableaux")
    c.add_argument("spec")
    c.add_argument("--shape", required=True)
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("solve", help="solve a Bethe system numerically")
    s.add_argument("spec")
    s.add_argument("--N", dest="n_sites", type=int, required=True)
    s.add_argument("--w", default="", help="comma list of inhomogeneities")
    s.add_argument("--Na", dest="na", required=True,
                   help="comma list of root counts per color")
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--starts", type=int, default=64)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default $BETHE_DVF_JOBS or 1)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write the frozen reference expansions")
    e.add_argument("--out", required=True, help="output directory")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedShape, WrongAlgebra, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoSolutionFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
