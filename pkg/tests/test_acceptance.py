"""Acceptance gate: every headline capability at its stated tolerance.

Run with ``pytest -s tests/test_acceptance.py`` to see one PASS/FAIL line
per criterion, including wall time.
"""

from __future__ import annotations

import time
from fractions import Fraction

import numpy as np

from bethe_dvf.algebra import KacDynkinLabel, dimension_b0s, parse_spec
from bethe_dvf.bae import (BetheRootSet, BetheSystem, check_lemma_products,
                           check_pole_free, check_residue_pairs, solve_bae)
from bethe_dvf.dvf import (BoxContext, build_dvf, column_dvf,
                           crossing_transform, generating_series_coeff,
                           row_dvf)
from bethe_dvf.goldens import golden_t1_b21, golden_t2_b21, golden_t21_b21
from bethe_dvf.relations import (check_det_vs_tableaux, check_duality,
                                 check_hirota, check_t_system,
                                 check_term_count_conjecture, det_formula,
                                 verify_const, verify_modi, verify_modi1)
from bethe_dvf.symbolic import equal_as_rational_functions, equal_group_sums, shift_u
from bethe_dvf.tableaux import SkewDiagram, count_tableaux

from conftest import partitions_up_to


def report(num: int, label: str, passed: bool, t0: float, budget: float):
    elapsed = time.time() - t0
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {num:2d} [{status}] {label} ({elapsed:.2f}s, "
          f"budget {budget:.0f}s)")
    assert passed, f"criterion {num}: {label}"
    assert elapsed < budget, f"criterion {num} over budget: {elapsed:.1f}s"


W3 = (1.7, -0.4, 0.3)
SOLVABLE = {"B(1|1)": (2, 2), "B(0|1)": (2,), "B(0|2)": (2, 2),
            "D(2|1)": (2, 2, 1)}
_solved_cache: dict = {}


def solved_instance(name: str):
    if name not in _solved_cache:
        spec = parse_spec(name)
        system = BetheSystem(spec, 3, W3, SOLVABLE[name])
        sols = solve_bae(system, tol=1e-10, seed=21, n_starts=200,
                         max_iter=150, start_radius=5.0)
        _solved_cache[name] = (spec, system, sols[0])
    return _solved_cache[name]


def test_criterion_01_golden_expansions():
    t0 = time.time()
    ctx = BoxContext(parse_spec("B(2|1)"))
    ok = (build_dvf(ctx, SkewDiagram.straight((1,))) == golden_t1_b21()
          and build_dvf(ctx, SkewDiagram.straight((1, 1))) == golden_t2_b21()
          and build_dvf(ctx, SkewDiagram.straight((2,))) == golden_t21_b21())
    report(1, "golden expansions match termwise", ok, t0, 1.0)


def test_criterion_02_term_counts():
    t0 = time.time()
    b02 = parse_spec("B(0|2)")
    ok = all(count_tableaux(b02, SkewDiagram.straight((1,) * m)) == want
             for m, want in zip((1, 2, 3, 4), (5, 15, 35, 70)))
    ok &= all(count_tableaux(b02, SkewDiagram.straight((2,) * m)) == want
              for m, want in zip((1, 2, 3, 4), (10, 50, 175, 490)))
    ok &= count_tableaux(parse_spec("B(2|1)"), SkewDiagram.straight((1,))) == 7
    ok &= count_tableaux(parse_spec("D(3|1)"),
                         SkewDiagram.straight((1, 1))) == 31
    ok &= count_tableaux(parse_spec("D(2|2)"),
                         SkewDiagram.straight((1, 1))) == 33
    report(2, "tableaux counts reproduce the tables", ok, t0, 10.0)


def test_criterion_03_dimension_formula():
    t0 = time.time()
    table = {(0, 0): 1, (1, 0): 5, (2, 0): 14, (3, 0): 30,
             (0, 2): 10, (0, 4): 35, (0, 6): 84, (2, 2): 81}
    ok = all(dimension_b0s(2, KacDynkinLabel((Fraction(b1), Fraction(b2)))) == d
             for (b1, b2), d in table.items())
    report(3, "module dimensions reproduce the table", ok, t0, 0.1)


def test_criterion_04_term_count_identities():
    t0 = time.time()
    ok = all(check_term_count_conjecture(2, a, m).passed
             for a, m in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
    report(4, "six worked count/dimension identities", ok, t0, 10.0)


def test_criterion_05_determinant_formulas():
    t0 = time.time()
    ok = True
    for name in ("B(1|1)", "B(2|1)"):
        spec = parse_spec(name)
        for mu in partitions_up_to(6):
            sd = SkewDiagram.straight(mu)
            for variant in ("column", "row"):
                rep = check_det_vs_tableaux(spec, sd, variant, trials=20,
                                            seed=17)
                ok &= rep.passed and rep.max_deviation == 0
    d21 = parse_spec("D(2|1)")
    ctx = BoxContext(d21)
    t1 = column_dvf(ctx, 1)
    rep = equal_group_sums([[shift_u(t1, -1), shift_u(t1, 1)]],
                           [[row_dvf(ctx, 2)], [column_dvf(ctx, 2)]],
                           trials=20, seed=17)
    ok &= rep.passed and rep.max_deviation == 0
    report(5, "determinant formulas at 20 exact points per shape", ok, t0, 60.0)


def test_criterion_06_hirota_and_t_system():
    t0 = time.time()
    ok = all(check_hirota(parse_spec("B(1|1)"), a, m, trials=8, seed=6).passed
             for a in (1, 2, 3) for m in (1, 2, 3))
    ok &= all(check_hirota(parse_spec("B(0|2)"), a, m, trials=8, seed=6).passed
              for a in (1, 2, 3) for m in (1, 2, 3))
    ok &= check_t_system(1, 3, trials=8, seed=6).passed
    ok &= check_t_system(2, 3, trials=8, seed=6).passed
    report(6, "bilinear recursion and closed relation family", ok, t0, 120.0)


def test_criterion_07_duality():
    t0 = time.time()
    ok = True
    for s in (1, 2):
        for a in (1, 2):
            for m in range(0, 2 * s + 2):
                rep = check_duality(s, a, m, trials=8, seed=7)
                ok &= rep.passed and rep.max_deviation == 0
        ok &= verify_const(s)
        ok &= all(verify_modi1(s, a) and verify_modi(s, a)
                  for a in range(1, s + 2))
    report(7, "normalized self-duality with exact helper identities", ok,
           t0, 60.0)


def test_criterion_08_pole_freeness():
    t0 = time.time()
    ok = True
    for name in sorted(SOLVABLE):
        spec, system, sol = solved_instance(name)
        ctx = BoxContext(spec)
        for a in (1, 2, 3, 4):
            rep = check_pole_free(column_dvf(ctx, a), system, sol,
                                  eps=1e-8, name=f"{name} T^{a}")
            ok &= rep.passed
    # negative control at a non-solution root set
    spec = parse_spec("B(1|1)")
    system = BetheSystem(spec, 3, W3, (2, 2))
    rng = np.random.default_rng(4)
    bad = BetheRootSet(tuple(
        tuple(complex(x, y) for x, y in zip(rng.uniform(-2, 2, n),
                                            rng.uniform(-2, 2, n)))
        for n in system.root_counts))
    rep = check_pole_free(column_dvf(BoxContext(spec), 1), system, bad)
    ok &= rep.max_deviation > 1e-3
    report(8, "pole-freeness at solved instances, negative control fires",
           ok, t0, 120.0)


def test_criterion_09_residue_pairs_and_lemmas():
    t0 = time.time()
    ok = True
    for name in sorted(SOLVABLE):
        spec, system, sol = solved_instance(name)
        rep = check_residue_pairs(spec, system, sol, eps=1e-8)
        ok &= rep.passed
    for name in ("B(2|1)", "B(0|1)", "B(0|2)", "B(1|1)", "D(2|1)", "D(3|1)",
                 "D(2|2)"):
        ok &= check_lemma_products(parse_spec(name)).passed
    report(9, "residue pairs vanish; cancellation lemmas exact", ok, t0, 60.0)


def test_criterion_10_generating_series():
    t0 = time.time()
    ok = True
    for name in ("B(1|1)", "B(0|2)", "D(2|1)"):
        spec = parse_spec(name)
        ctx = BoxContext(spec)
        for n in range(0, 5):
            ok &= generating_series_coeff(ctx, "column", n, 5) \
                == shift_u(column_dvf(ctx, n), n - 1)
            ok &= generating_series_coeff(ctx, "row", n, 5) \
                == shift_u(row_dvf(ctx, n), n - 1)
    report(10, "series coefficients equal shifted sums, orders 0..4", ok,
           t0, 60.0)


def test_criterion_11_crossing_symmetry():
    t0 = time.time()
    ok = True
    for name in ("B(2|1)", "B(0|2)", "D(2|1)"):
        spec = parse_spec(name)
        ctx = BoxContext(spec)
        for mu in [(1,), (1, 1), (2,)]:
            t = build_dvf(ctx, SkewDiagram.straight(mu))
            image = crossing_transform(spec, t)
            ok &= image == t
            rep = equal_as_rational_functions(image, t, trials=4, seed=11)
            ok &= rep.passed
    report(11, "crossing transform fixes the sums", ok, t0, 30.0)


def test_criterion_12_vanishing_constraint():
    t0 = time.time()
    spec = parse_spec("B(1|1)")
    sd = SkewDiagram.straight((4, 4, 4))
    ok = count_tableaux(spec, sd) == 0
    ok &= build_dvf(BoxContext(spec), sd).is_zero()
    ok &= det_formula(spec, sd, "row").is_zero()
    report(12, "constrained rectangle collapses to the empty sum", ok, t0,
           60.0)
