"""Dressed vacuum forms: tableaux sums of box functions.

A box [a]_u is an exact ratio of shifted Q-functions times a vacuum factor
psi_a(u) (two shifted phi's).  The eigenvalue candidate attached to a skew
diagram is the signed sum over admissible tableaux of box products, the box
of cell (i, j) being evaluated at u - mu_1 + mu'_1 - 2i + 2j.  Setting
``include_vacuum=False`` drops the psi factors ("dress part" only), the mode
in which several exact identities below are stated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (AlgebraSpec, IndexLabel, UnsupportedShape, WrongAlgebra,
                      ZERO_LABEL, bar, grading, unb, validate_label)
from .symbolic import (ONE, ONE_TERM, RatLike, SymSum, SymTerm, ZERO, shift_u)
from .tableaux import SkewDiagram, _iter_b_fillings, _iter_d_lines, _labels_ordered, conjugate


class TruncationTooSmall(ValueError):
    """Requested series coefficient beyond the expansion order."""


@dataclass(frozen=True)
class BoxContext:
    spec: AlgebraSpec
    include_vacuum: bool = True


def _q(color: int, shift: RatLike, exp: int):
    """Q factor entry, silently dropping the color-0 convention Q_0 = 1."""
    if color == 0:
        return []
    return [(color, shift, exp)]


def _vacuum_shifts(spec: AlgebraSpec, label: IndexLabel) -> tuple[int, int]:
    s, r = spec.s, spec.r
    edge = -2 * s + 2 * r - (1 if spec.family == "B" else 2)
    if label == unb(1):
        return (-2, edge)
    if label == bar(1):
        return (0, edge + 2)
    return (0, edge)


def box(ctx: BoxContext, label: IndexLabel, u_shift: RatLike = 0) -> SymTerm:
    """The box function [label]_{u + u_shift} as a single canonical term."""
    spec = ctx.spec
    validate_label(spec, label)
    s, r = spec.s, spec.r
    n = s + r
    qs: list[tuple[int, RatLike, int]] = []

    if spec.family == "B":
        if label.kind == "unbarred" and label.value <= s:
            a = label.value
            qs += _q(a - 1, -a - 1, 1) + _q(a, -a + 2, 1)
            qs += _q(a - 1, -a + 1, -1) + _q(a, -a, -1)
        elif label.kind == "unbarred":
            a = label.value
            qs += _q(a - 1, -2 * s + a + 1, 1) + _q(a, -2 * s + a - 2, 1)
            qs += _q(a - 1, -2 * s + a - 1, -1) + _q(a, -2 * s + a, -1)
        elif label.kind == "zero":
            qs += _q(n, -s + r + 1, 1) + _q(n, -s + r - 2, 1)
            qs += _q(n, -s + r - 1, -1) + _q(n, -s + r, -1)
        elif label.value > s:  # barred, outer block
            a = label.value
            qs += _q(a - 1, 2 * r - a - 2, 1) + _q(a, 2 * r - a + 1, 1)
            qs += _q(a - 1, 2 * r - a, -1) + _q(a, 2 * r - a - 1, -1)
        else:                  # barred, inner block
            a = label.value
            c = -2 * s + 2 * r + a
            qs += _q(a - 1, c, 1) + _q(a, c - 3, 1)
            qs += _q(a - 1, c - 2, -1) + _q(a, c - 1, -1)
    else:  # D family
        if label.kind == "unbarred" and label.value <= s:
            a = label.value
            qs += _q(a - 1, -a - 1, 1) + _q(a, -a + 2, 1)
            qs += _q(a - 1, -a + 1, -1) + _q(a, -a, -1)
        elif label.kind == "unbarred" and label.value <= n - 2:
            a = label.value
            qs += _q(a - 1, -2 * s + a + 1, 1) + _q(a, -2 * s + a - 2, 1)
            qs += _q(a - 1, -2 * s + a - 1, -1) + _q(a, -2 * s + a, -1)
        elif label == unb(n - 1):
            qs += _q(n - 2, -s + r, 1) + _q(n - 1, -s + r - 3, 1)
            qs += _q(n - 2, -s + r - 2, -1) + _q(n - 1, -s + r - 1, -1)
            qs += _q(n, -s + r - 3, 1) + _q(n, -s + r - 1, -1)
        elif label == unb(n):
            qs += _q(n - 1, -s + r + 1, 1) + _q(n, -s + r - 3, 1)
            qs += _q(n - 1, -s + r - 1, -1) + _q(n, -s + r - 1, -1)
        elif label == bar(n):
            qs += _q(n - 1, -s + r - 3, 1) + _q(n, -s + r + 1, 1)
            qs += _q(n - 1, -s + r - 1, -1) + _q(n, -s + r - 1, -1)
        elif label == bar(n - 1):
            qs += _q(n - 2, -s + r - 2, 1) + _q(n - 1, -s + r + 1, 1)
            qs += _q(n - 2, -s + r, -1) + _q(n - 1, -s + r - 1, -1)
            qs += _q(n, -s + r + 1, 1) + _q(n, -s + r - 1, -1)
        elif label.value > s:  # barred, outer block
            a = label.value
            qs += _q(a - 1, 2 * r - a - 3, 1) + _q(a, 2 * r - a, 1)
            qs += _q(a - 1, 2 * r - a - 1, -1) + _q(a, 2 * r - a - 2, -1)
        else:                  # barred, inner block
            a = label.value
            c = -2 * s + 2 * r + a
            qs += _q(a - 1, c - 1, 1) + _q(a, c - 4, 1)
            qs += _q(a - 1, c - 3, -1) + _q(a, c - 2, -1)

    phis: list[tuple[RatLike, int]] = []
    if ctx.include_vacuum:
        for c in _vacuum_shifts(spec, label):
            phis.append((c, 1))
    return SymTerm.make(1, qs, phis).shifted(u_shift)


def signed_box(ctx: BoxContext, label: IndexLabel, u_shift: RatLike = 0) -> SymTerm:
    t = box(ctx, label, u_shift)
    return SymTerm(-t.coeff, t.qs, t.phis) if grading(ctx.spec, label) else t


# ---------------------------------------------------------------------------
# the tableaux sum


def cell_shift(shape: SkewDiagram, i: int, j: int) -> Fraction:
    mu1 = shape.mu[1]
    mu1p = conjugate(shape.mu)[1]
    return Fraction(-mu1 + mu1p - 2 * i + 2 * j)


def build_dvf(ctx: BoxContext, shape: SkewDiagram) -> SymSum:
    """Signed sum over admissible tableaux of shifted box products."""
    spec = ctx.spec
    if shape.n_cells() == 0:
        return ONE
    cells = shape.cells()
    shifts = [cell_shift(shape, i, j) for i, j in cells]

    if spec.family == "B":
        labels = _labels_ordered(spec)
        boxes = {(k, lab): signed_box(ctx, lab, shifts[k])
                 for k in range(len(cells)) for lab in labels}
        terms = []
        for fill in _iter_b_fillings(spec, shape):
            t = ONE_TERM
            for k, (i, j) in enumerate(cells):
                t = t * boxes[(k, labels[fill[(i, j)]])]
            terms.append(t)
        return SymSum.make(terms)

    if not (shape.is_column() or shape.is_row()):
        raise UnsupportedShape(
            "D-family tableaux sums are defined only for (1^a) and (m^1)")
    boxes = {(k, lab): signed_box(ctx, lab, shifts[k])
             for k in range(len(cells)) for lab in _labels_ordered(spec)}
    terms = []
    for line in _iter_d_lines(spec, shape):
        t = ONE_TERM
        for k, lab in enumerate(line):
            t = t * boxes[(k, lab)]
        terms.append(t)
    return SymSum.make(terms)


@lru_cache(maxsize=None)
def column_dvf(ctx: BoxContext, a: int) -> SymSum:
    """T^a: the DVF of a single column of height a (1 for a = 0, 0 for a < 0)."""
    if a < 0:
        return ZERO
    if a == 0:
        return ONE
    return build_dvf(ctx, SkewDiagram.straight((1,) * a))


@lru_cache(maxsize=None)
def row_dvf(ctx: BoxContext, m: int) -> SymSum:
    """T_m: the DVF of a single row of length m (1 for m = 0, 0 for m < 0)."""
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    return build_dvf(ctx, SkewDiagram.straight((m,)))


def rect_dvf(ctx: BoxContext, m: int, a: int) -> SymSum:
    """T_m^a: the DVF of the rectangle with a rows of length m."""
    if m < 0 or a < 0:
        return ZERO
    if m == 0 or a == 0:
        return ONE
    return build_dvf(ctx, SkewDiagram.straight((m,) * a))


# ---------------------------------------------------------------------------
# osp(1|2s) normalization


def _f_term(s: int, m: int, offset: RatLike) -> SymTerm:
    """The row normalizer F_m(u + offset) as a single phi term."""
    off = Fraction(offset)
    if m < 0:
        raise ValueError("F_m needs m >= 0")
    if m == 0:
        return SymTerm.make(1, (), [(off + 1, -1), (off - Fraction(2 * s + 2), -1)])
    phis = []
    for j in range(1, m):
        phis.append((off - m + 2 * j + 1, 1))
        phis.append((off - 2 * s - m + 2 * j - 2, 1))
    return SymTerm.make(1, (), phis)


def normalize_b0s(spec: AlgebraSpec, x: SymSum, shape: SkewDiagram,
                  rows: int | None = None) -> SymSum:
    """Divide a B(0|s) DVF by its product of row normalizers F.

    ``rows`` overrides the number of rows entering the product; it matters
    only for formally zero-length rows (rectangles m = 0).
    """
    if spec.family != "B" or spec.r != 0:
        raise WrongAlgebra("normalization is defined for B(0|s) only")
    mu, lam = shape.mu, shape.lam
    nrows = len(mu.parts) if rows is None else rows
    mu1 = mu[1]
    mu1p = nrows
    div = ONE_TERM
    for j in range(1, nrows + 1):
        off = Fraction(-mu1 + mu1p + mu[j] + lam[j] - 2 * j + 1)
        div = div * _f_term(spec.s, mu[j] - lam[j], off)
    return x * div.inverse()


def normalized_rect_dvf(spec: AlgebraSpec, m: int, a: int,
                        include_vacuum: bool = True) -> SymSum:
    """Normalized T_m^a for B(0|s); handles the m = 0 boundary products."""
    if spec.family != "B" or spec.r != 0:
        raise WrongAlgebra("normalization is defined for B(0|s) only")
    if m < 0 or a < 0:
        return ZERO
    if a == 0:
        return ONE
    ctx = BoxContext(spec, include_vacuum)
    raw = rect_dvf(ctx, m, a)
    if not include_vacuum:
        return raw
    div = ONE_TERM
    for j in range(1, a + 1):
        div = div * _f_term(spec.s, m, Fraction(a - 2 * j + 1))
    return raw * div.inverse()


def vacuum_row_term(spec: AlgebraSpec, m: int = 0) -> SymSum:
    """Normalized T_0 (m-fold product form used by the T-system g functions)."""
    if spec.family != "B" or spec.r != 0:
        raise WrongAlgebra("defined for B(0|s) only")
    t = ONE_TERM
    for j in range(1, m + 1):
        off = Fraction(2 * j - m - 1)
        t = t * SymTerm.make(1, (), [(off + 1, 1), (off - Fraction(2 * spec.s + 2), 1)])
    return SymSum.from_term(t)


# ---------------------------------------------------------------------------
# top terms


def top_term(ctx: BoxContext, shape: SkewDiagram) -> SymTerm:
    """The distinguished highest-weight term of the tableaux sum."""
    spec = ctx.spec
    if shape.n_cells() == 0:
        return ONE_TERM
    if shape.lam.size() != 0:
        raise UnsupportedShape("top term defined for straight shapes only")
    mu = shape.mu
    mup = conjugate(mu)
    s, r = spec.s, spec.r

    if spec.family == "B":
        if mu[r + 1] > s:
            raise UnsupportedShape(f"need mu_{r + 1} <= s for a highest weight")
        t = ONE_TERM
        for i, j in shape.cells():
            lab = unb(j) if j <= s else unb(i + s)
            t = t * signed_box(ctx, lab, cell_shift(shape, i, j))
        return t

    if shape.is_column():
        a = shape.n_cells()
        t = ONE_TERM
        for i in range(1, a + 1):
            t = t * signed_box(ctx, unb(1), cell_shift(shape, i, 1))
        return t
    if shape.is_row():
        m = shape.n_cells()
        t = ONE_TERM
        for j in range(1, m + 1):
            lab = unb(j) if j <= s else unb(s + 1)
            t = t * signed_box(ctx, lab, cell_shift(shape, 1, j))
        return t
    raise UnsupportedShape("D-family top terms exist for (1^a) and (m^1) only")


def isolated_column_term(spec: AlgebraSpec, a: int) -> SymTerm:
    """h^a: the candidate isolated piece of T^a for D when r - s - 1 >= 0."""
    if spec.family != "D":
        raise WrongAlgebra("isolated terms are a D-family feature")
    ctx = BoxContext(spec, include_vacuum=True)
    t = ONE_TERM
    for j in range(1, a + 1 - spec.r + spec.s + 1):
        psi1 = box(ctx, unb(1), 0)
        psi1b = box(ctx, bar(1), 0)
        up = Fraction(a - 2 * j + 1)
        dn = Fraction(-a + 2 * j - 1)
        t = t * SymTerm.make(1, (), [(sh + up, e) for sh, e in psi1.phis])
        t = t * SymTerm.make(1, (), [(sh + dn, e) for sh, e in psi1b.phis])
    return t


def isolated_row_term(spec: AlgebraSpec, m: int) -> SymTerm:
    """h_m: the candidate isolated piece of T_m for D when s - r + 1 >= 0."""
    if spec.family != "D":
        raise WrongAlgebra("isolated terms are a D-family feature")
    ctx = BoxContext(spec, include_vacuum=True)
    t = ONE_TERM
    for j in range(1, m + spec.r - spec.s - 1 + 1):
        pj = box(ctx, unb(j), 0)
        pjb = box(ctx, bar(j), 0)
        t = t * SymTerm.make(1, (), [(sh + Fraction(-m + 2 * j - 1), e)
                                     for sh, e in pj.phis])
        t = t * SymTerm.make(1, (), [(sh + Fraction(m - 2 * j + 1), e)
                                     for sh, e in pjb.phis])
    return t


# ---------------------------------------------------------------------------
# crossing


def crossing_transform(spec: AlgebraSpec, x: SymSum) -> SymSum:
    """Image under u -> -(u + 2r - 2s - 1) (B) or -(u + 2r - 2s - 2) (D),
    with all Bethe roots and inhomogeneities negated.

    Rewritten back in the original variables this maps every factor argument
    shift c to K - c with K the constant above.  The sign picked up from
    (-z) = -(z) cancels only when every color's net exponent and the net phi
    exponent are even, which holds for any product of boxes; other inputs
    are rejected.
    """
    k = 2 * spec.r - 2 * spec.s - (1 if spec.family == "B" else 2)
    out = []
    for t in x.terms:
        per_color, phi_net = t.net_exponents()
        if phi_net % 2 or any(e % 2 for e in per_color.values()):
            raise ValueError("crossing image is root-count dependent for "
                             "terms with odd net exponents")
        out.append(SymTerm.make(t.coeff,
                                [(c, k - s_, e) for c, s_, e in t.qs],
                                [(k - s_, e) for s_, e in t.phis]))
    return SymSum.make(out)


# ---------------------------------------------------------------------------
# generating series

# A series is a list of SymSum coefficients of X^0..X^max_order where X is
# the two-step shift operator: moving X across a coefficient shifts it by 2.


def _series_mul(a: list[SymSum], b: list[SymSum]) -> list[SymSum]:
    order = len(a) - 1
    out = [ZERO] * (order + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(0, order + 1 - i):
            bj = b[j]
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * shift_u(bj, 2 * i)
    return out


def _series_linear(t: SymTerm, sign: int, order: int) -> list[SymSum]:
    """(1 + sign * [t] X) as a series."""
    out = [ZERO] * (order + 1)
    out[0] = ONE
    if order >= 1:
        out[1] = SymSum.from_term(SymTerm(t.coeff * sign, t.qs, t.phis))
    return out


def _series_geometric(t: SymTerm, sign: int, order: int) -> list[SymSum]:
    """(1 - sign * [t] X)^(-1) expanded; sound because X carries degree 1."""
    out = [ZERO] * (order + 1)
    out[0] = ONE
    power = ONE_TERM
    for k in range(1, order + 1):
        power = power * t.shifted(2 * (k - 1))
        out[k] = SymSum.from_term(SymTerm(power.coeff * (sign ** k),
                                          power.qs, power.phis))
    return out


def _series_geometric_pair(t1: SymTerm, t2: SymTerm, order: int) -> list[SymSum]:
    """(1 - [t1] X [t2] X)^(-1): the D column middle factor, stepping by X^2."""
    pair = t1 * t2.shifted(2)
    out = [ZERO] * (order + 1)
    out[0] = ONE
    power = ONE_TERM
    k = 1
    while 2 * k <= order:
        power = power * pair.shifted(4 * (k - 1))
        out[2 * k] = SymSum.from_term(power)
        k += 1
    return out


def _series_d_row_bracket(t1: SymTerm, t2: SymTerm, order: int) -> list[SymSum]:
    """(1 - [t1] X)^(-1) + (1 - [t2] X)^(-1) - 1."""
    g1 = _series_geometric(t1, +1, order)
    g2 = _series_geometric(t2, +1, order)
    out = [g1[k] + g2[k] for k in range(order + 1)]
    out[0] = out[0] - ONE
    return out


def generating_series_coeff(ctx: BoxContext, kind: str, n: int,
                            max_order: int | None = None) -> SymSum:
    """Coefficient of X^n of the ordered box generating series.

    ``kind`` is "column" (produces T^n(u + n - 1)) or "row" (produces
    T_n(u + n - 1)).  Factors are composed left to right with the shift rule
    X f(u) = f(u + 2) X; inverse factors are truncated geometric series,
    exact for coefficients up to the truncation order.
    """
    if max_order is None:
        max_order = n
    if n < 0 or n > max_order:
        raise TruncationTooSmall(f"coefficient {n} beyond order {max_order}")
    spec = ctx.spec
    s, n_rank = spec.s, spec.rank
    b = lambda lab: box(ctx, lab, 0)

    factors: list[list[SymSum]] = []
    if kind == "column":
        for v in range(1, s + 1):                       # (1 + [vb] X)^(-1), v = 1..s
            factors.append(_series_geometric(b(bar(v)), -1, max_order))
        for v in range(s + 1, n_rank + 1):
            factors.append(_series_linear(b(bar(v)), +1, max_order))
        if spec.family == "B":
            factors.append(_series_geometric(b(ZERO_LABEL), +1, max_order))
        else:
            factors.append(_series_geometric_pair(b(unb(n_rank)), b(bar(n_rank)),
                                                  max_order))
        for v in range(n_rank, s, -1):
            factors.append(_series_linear(b(unb(v)), +1, max_order))
        for v in range(s, 0, -1):
            factors.append(_series_geometric(b(unb(v)), -1, max_order))
    elif kind == "row":
        for v in range(1, s + 1):
            factors.append(_series_linear(b(unb(v)), -1, max_order))
        top = n_rank if spec.family == "B" else n_rank - 1
        for v in range(s + 1, top + 1):
            factors.append(_series_geometric(b(unb(v)), +1, max_order))
        if spec.family == "B":
            factors.append(_series_linear(b(ZERO_LABEL), +1, max_order))
            for v in range(n_rank, s, -1):
                factors.append(_series_geometric(b(bar(v)), +1, max_order))
        else:
            factors.append(_series_d_row_bracket(b(unb(n_rank)), b(bar(n_rank)),
                                                 max_order))
            for v in range(n_rank - 1, s, -1):
                factors.append(_series_geometric(b(bar(v)), +1, max_order))
        for v in range(s, 0, -1):
            factors.append(_series_linear(b(bar(v)), -1, max_order))
    else:
        raise ValueError(f"kind must be column or row, got {kind!r}")

    series = factors[0]
    for f in factors[1:]:
        series = _series_mul(series, f)
    return series[n]
