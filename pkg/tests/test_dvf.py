from __future__ import annotations

from fractions import Fraction

import pytest

from bethe_dvf.algebra import (UnsupportedShape, ZERO_LABEL, bar, parse_spec,
                               unb)
from bethe_dvf.dvf import (BoxContext, TruncationTooSmall, box, build_dvf,
                           column_dvf, crossing_transform,
                           generating_series_coeff, isolated_column_term,
                           normalize_b0s, normalized_rect_dvf, rect_dvf,
                           row_dvf, signed_box, top_term, vacuum_row_term)
from bethe_dvf.goldens import (golden_t1_b21, golden_t2_b21, golden_t21_b21,
                               parse_term)
from bethe_dvf.symbolic import ONE, SymSum, SymTerm, shift_u
from bethe_dvf.tableaux import SkewDiagram


B21 = parse_spec("B(2|1)")
D21 = parse_spec("D(2|1)")


def test_box_b21_label_one():
    got = box(BoxContext(B21), unb(1))
    want = parse_term("+ phi(u-2) phi(u+1) Q1(u+1) / Q1(u-1)")
    assert got == want


def test_box_b21_label_zero():
    got = box(BoxContext(B21), ZERO_LABEL)
    want = parse_term("+ phi(u) phi(u+1) Q3(u+2) Q3(u-1) / Q3(u) Q3(u+1)")
    assert got == want


def test_box_d21_extreme_bar():
    got = box(BoxContext(D21), bar(3))
    want = parse_term("+ phi(u) phi(u) Q2(u-2) Q3(u+2) / Q2(u) Q3(u)")
    assert got == want


def test_box_dress_mode_strips_phi():
    t = box(BoxContext(B21, include_vacuum=False), unb(1))
    assert t.phis == ()


def test_signed_box_signs():
    assert signed_box(BoxContext(B21), unb(1)).coeff == -1
    assert signed_box(BoxContext(B21), unb(2)).coeff == 1
    assert signed_box(BoxContext(B21), ZERO_LABEL).coeff == 1


def test_tableau_product_is_golden_member():
    # the [1 over 2bar] column tableau appears verbatim in the printed sum
    ctx = BoxContext(B21)
    term = signed_box(ctx, unb(1), 1) * signed_box(ctx, bar(2), -1)
    golden_keys = {t.key: t.coeff for t in golden_t2_b21().terms}
    assert golden_keys.get(term.key) == term.coeff


GOLDEN_CASES = [
    ((1,), golden_t1_b21, 7),
    ((1, 1), golden_t2_b21, 24),
    ((2,), golden_t21_b21, 25),
]


@pytest.mark.parametrize("mu,make,n_terms", GOLDEN_CASES)
def test_golden_expansions(mu, make, n_terms):
    built = build_dvf(BoxContext(B21), SkewDiagram.straight(mu))
    want = make()
    assert len(built) == n_terms
    assert built == want


def test_empty_shape_is_one():
    assert build_dvf(BoxContext(B21), SkewDiagram.straight(())) == ONE


def test_rect_conventions():
    ctx = BoxContext(B21)
    assert rect_dvf(ctx, 0, 3) == ONE
    assert rect_dvf(ctx, 3, 0) == ONE
    assert rect_dvf(ctx, -1, 2).is_zero()


def test_normalize_f1_is_identity():
    spec = parse_spec("B(0|2)")
    shape = SkewDiagram.straight((1, 1))
    x = build_dvf(BoxContext(spec), shape)
    assert normalize_b0s(spec, x, shape) == x


def test_normalized_empty_row_value():
    # normalized T_0 = phi(u+1) phi(u-2s-2)
    spec = parse_spec("B(0|2)")
    got = normalized_rect_dvf(spec, 0, 1)
    assert got == SymSum.from_term(
        SymTerm.make(1, (), [(1, 1), (-6, 1)]))
    assert vacuum_row_term(spec, 1) == got


def test_normalize_rejects_wrong_family():
    from bethe_dvf.algebra import WrongAlgebra
    with pytest.raises(WrongAlgebra):
        normalize_b0s(B21, ONE, SkewDiagram.straight((1,)))


def test_normalize_f2_explicit():
    # two-cell row divisor for s = 1: F_2(u) = phi(u+1) phi(u-4)
    from bethe_dvf.dvf import _f_term
    assert _f_term(1, 2, 0) == SymTerm.make(1, (), [(1, 1), (-4, 1)])
    # and generally the m = 1 divisor is trivial
    assert _f_term(3, 1, 0) == SymTerm.make(1)


def test_top_term_d_column():
    # (-1)^a Q1(u+a)/Q1(u-a), dress part
    ctx = BoxContext(D21, include_vacuum=False)
    for a in (1, 2, 3, 4, 5):
        t = top_term(ctx, SkewDiagram.straight((1,) * a))
        want = SymTerm.make((-1) ** a, [(1, a, 1), (1, -a, -1)])
        assert t == want


def test_top_term_d_row_short():
    # (-1)^m Q_m(u+1)/Q_m(u-1) while the row fits in the delta block
    spec = parse_spec("D(2|2)")
    ctx = BoxContext(spec, include_vacuum=False)
    for m in (1, 2):
        t = top_term(ctx, SkewDiagram.straight((m,)))
        assert t == SymTerm.make((-1) ** m, [(m, 1, 1), (m, -1, -1)])


def test_top_term_d_row_long_r2():
    # r = 2 spreads the tail over both fork colors
    spec = D21
    s = 1
    ctx = BoxContext(spec, include_vacuum=False)
    for m in (2, 3, 4):
        t = top_term(ctx, SkewDiagram.straight((m,)))
        want = SymTerm.make(
            (-1) ** s,
            [(s, m - s + 1, 1), (s, -m + s - 1, -1),
             (s + 1, -m + s, 1), (s + 1, m - s, -1),
             (s + 2, -m + s, 1), (s + 2, m - s, -1)])
        assert t == want


def test_top_term_d_row_long_r3():
    spec = parse_spec("D(3|1)")
    s = 1
    ctx = BoxContext(spec, include_vacuum=False)
    for m in (2, 3):
        t = top_term(ctx, SkewDiagram.straight((m,)))
        want = SymTerm.make(
            (-1) ** s,
            [(s, m - s + 1, 1), (s, -m + s - 1, -1),
             (s + 1, -m + s, 1), (s + 1, m - s, -1)])
        assert t == want


def test_top_term_b0s_row():
    spec = parse_spec("B(0|2)")
    ctx = BoxContext(spec, include_vacuum=False)
    for m in (1, 2):
        t = top_term(ctx, SkewDiagram.straight((m,)))
        assert t == SymTerm.make((-1) ** m, [(m, 1, 1), (m, -1, -1)])


def test_top_term_empty():
    assert top_term(BoxContext(B21), SkewDiagram.straight(())) == \
        SymTerm.make(1)


@pytest.mark.parametrize("name,shapes", [
    ("B(2|1)", [(1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2, 1)]),
    ("B(1|1)", [(1,), (2, 1), (2, 2)]),
    ("B(0|2)", [(1,), (2, 2), (2, 1, 1)]),
    ("D(2|1)", [(1,), (1, 1), (1, 1, 1), (1, 1, 1, 1)]),
    ("D(3|1)", [(2,), (3,), (4,)]),
])
def test_top_term_membership(name, shapes):
    spec = parse_spec(name)
    ctx = BoxContext(spec, include_vacuum=False)
    for mu in shapes:
        shape = SkewDiagram.straight(mu)
        try:
            t = top_term(ctx, shape)
        except UnsupportedShape:
            continue
        dvf = build_dvf(ctx, shape)
        members = {term.key: term.coeff for term in dvf.terms}
        assert members.get(t.key) == t.coeff, (name, mu)


def test_crossing_box_image():
    # [1]_u maps onto [1bar]_u
    got = crossing_transform(B21, SymSum.from_term(box(BoxContext(B21), unb(1))))
    want = SymSum.from_term(box(BoxContext(B21), bar(1)))
    assert got == want


def test_crossing_empty():
    from bethe_dvf.symbolic import ZERO
    assert crossing_transform(B21, ZERO).is_zero()


@pytest.mark.parametrize("name", ["B(2|1)", "B(0|2)", "D(2|1)"])
def test_crossing_invariance(name):
    spec = parse_spec(name)
    ctx = BoxContext(spec)
    for mu in [(1,), (1, 1), (2,)]:
        t = build_dvf(ctx, SkewDiagram.straight(mu))
        assert crossing_transform(spec, t) == t


def test_crossing_rejects_unbalanced():
    x = SymSum.from_term(SymTerm.make(1, [(1, 0, 1)]))
    with pytest.raises(ValueError):
        crossing_transform(B21, x)


def test_series_order_zero_is_one():
    for name in ("B(1|1)", "D(2|1)"):
        ctx = BoxContext(parse_spec(name))
        assert generating_series_coeff(ctx, "column", 0, 3) == ONE
        assert generating_series_coeff(ctx, "row", 0, 3) == ONE


def test_series_truncation_guard():
    ctx = BoxContext(B21)
    with pytest.raises(TruncationTooSmall):
        generating_series_coeff(ctx, "column", 5, 3)
    with pytest.raises(TruncationTooSmall):
        generating_series_coeff(ctx, "row", -1, 3)


@pytest.mark.parametrize("name", ["B(1|1)", "B(0|2)", "D(2|1)"])
def test_series_matches_direct(name):
    spec = parse_spec(name)
    ctx = BoxContext(spec)
    for n in range(0, 4):
        col = generating_series_coeff(ctx, "column", n, 4)
        assert col == shift_u(column_dvf(ctx, n), n - 1)
        row = generating_series_coeff(ctx, "row", n, 4)
        assert row == shift_u(row_dvf(ctx, n), n - 1)


def test_isolated_term_d31():
    # T^2 for D(3|1) minus its isolated piece drops exactly one term,
    # the all-phi square
    spec = parse_spec("D(3|1)")
    ctx = BoxContext(spec)
    t2 = build_dvf(ctx, SkewDiagram.straight((1, 1)))
    h2 = isolated_column_term(spec, 2)
    assert h2 == SymTerm.make(1, (), [(-1, 2), (3, 2)])
    remaining = t2 - SymSum.from_term(h2)
    assert len(remaining) == len(t2) - 1
    # and the dropped term is the [1 over 1bar] tableau
    tab = signed_box(ctx, unb(1), 1) * signed_box(ctx, bar(1), -1)
    assert tab == h2


def test_d22_has_no_isolated_term():
    spec = parse_spec("D(2|2)")
    t2 = build_dvf(BoxContext(spec), SkewDiagram.straight((1, 1)))
    pure_phi = [t for t in t2.terms if not t.qs]
    assert not pure_phi


def test_b01_fundamental_against_per_box_oracle():
    # brute-force oracle: assemble the three box values of the B(0|1)
    # fundamental sum from raw products, bypassing the symbolic layer
    from bethe_dvf.symbolic import Assignment, evaluate

    spec = parse_spec("B(0|1)")
    t1 = build_dvf(BoxContext(spec), SkewDiagram.straight((1,)))
    u = Fraction(7, 3)
    roots = (Fraction(1, 2), Fraction(-5, 4))
    inhoms = (Fraction(2), Fraction(-1, 3))

    def q1(v):
        out = Fraction(1)
        for r in roots:
            out *= v - r
        return out

    def phi(v):
        out = Fraction(1)
        for w in inhoms:
            out *= v - w
        return out

    # boxes for s = 1, r = 0 with their psi prefactors and grading signs
    box1 = phi(u - 2) * phi(u - 3) * q1(u + 1) / q1(u - 1)
    box0 = phi(u) * phi(u - 3) * q1(u) * q1(u - 3) / (q1(u - 2) * q1(u - 1))
    box1bar = phi(u) * phi(u - 1) * q1(u - 4) / q1(u - 2)
    oracle = -box1 + box0 - box1bar

    asg = Assignment.exact_point(u, {1: roots}, inhoms)
    assert evaluate(t1, asg) == oracle
