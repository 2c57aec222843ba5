"""Functional relations between tableaux sums.

Everything here reduces a family of eigenvalue candidates to the fundamental
ones: bideterminant (Jacobi-Trudi style) expressions over single columns or
single rows, the Hirota bilinear recursion among rectangles, the
self-duality of the normalized B(0|s) family, the closed T-system it
generates, and the term-count/dimension correspondence.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .algebra import (AlgebraSpec, KacDynkinLabel, UnsupportedShape,
                      WrongAlgebra, ZERO_LABEL, bar, dimension_b0s, unb)
from .dvf import (BoxContext, box, build_dvf, column_dvf, normalized_rect_dvf,
                  rect_dvf, row_dvf, vacuum_row_term)
from .reports import IdentityReport, merge_reports
from .symbolic import (ONE, PoleHit, SAMPLE_RETRY_CAP, SamplingExhausted,
                       SymSum, ZERO, colors_of,
                       equal_as_rational_functions, equal_group_sums,
                       evaluate, exact_det, random_assignment, shift_u)
from .tableaux import SkewDiagram, conjugate, count_tableaux


class OddSpinLabel(ValueError):
    """The last T-system row is indexed by even integers only."""


# ---------------------------------------------------------------------------
# determinants


def _det(matrix: list[list[SymSum]]) -> SymSum:
    """Cofactor expansion with canonical cancellation after each product."""
    n = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> SymSum:
        if row == n:
            return ONE
        total = ZERO
        sign = 1
        for j in sorted(cols):
            entry = matrix[row][j]
            if not entry.is_zero():
                sub = minor(row + 1, cols - {j})
                piece = entry * sub
                total = total + (piece if sign > 0 else -piece)
            sign = -sign
        return total

    return minor(0, frozenset(range(n)))


def det_formula(spec: AlgebraSpec, shape: SkewDiagram, variant: str) -> SymSum:
    """Determinant expression of the tableaux sum over fundamental blocks.

    ``column`` expands over single-column sums T^a, ``row`` over single-row
    sums T_m (both B family, any skew shape); ``d_row`` is the D-family
    expression of T_m over the T^a.
    """
    ctx = BoxContext(spec)
    lam, mu = shape.lam, shape.mu
    mup, lamp = conjugate(mu), conjugate(lam)

    if variant == "column":
        if spec.family != "B":
            raise UnsupportedShape("column determinant applies to the B family")
        size = mu[1]
        blocks = {a: column_dvf(ctx, a) for a in
                  {mup[i] - lamp[j] - i + j
                   for i in range(1, size + 1) for j in range(1, size + 1)}}
        matrix = [[shift_u(blocks[mup[i] - lamp[j] - i + j],
                           Fraction(-mu[1] + mup[1] - mup[i] - lamp[j] + i + j - 1))
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
        return _det(matrix)
    if variant == "row":
        if spec.family != "B":
            raise UnsupportedShape("row determinant applies to the B family")
        size = mup[1]
        blocks = {m: row_dvf(ctx, m) for m in
                  {mu[j] - lam[i] + i - j
                   for i in range(1, size + 1) for j in range(1, size + 1)}}
        matrix = [[shift_u(blocks[mu[j] - lam[i] + i - j],
                           Fraction(-mu[1] + mup[1] + mu[j] + lam[i] - i - j + 1))
                   for j in range(1, size + 1)] for i in range(1, size + 1)]
        return _det(matrix)
    if variant == "d_row":
        if spec.family != "D":
            raise UnsupportedShape("d_row applies to the D family")
        if not shape.is_row():
            raise UnsupportedShape("d_row needs a single-row shape")
        m = shape.n_cells()
        blocks = {a: column_dvf(ctx, a) for a in
                  {1 - i + j for i in range(1, m + 1) for j in range(1, m + 1)}}
        matrix = [[shift_u(blocks[1 - i + j], Fraction(-m + i + j - 1))
                   for j in range(1, m + 1)] for i in range(1, m + 1)]
        return _det(matrix)
    raise ValueError(f"unknown variant {variant!r}")


def _det_entry_matrix(spec: AlgebraSpec, shape: SkewDiagram,
                      variant: str) -> list[list[SymSum]]:
    ctx = BoxContext(spec)
    lam, mu = shape.lam, shape.mu
    mup, lamp = conjugate(mu), conjugate(lam)
    if variant == "column":
        size = mu[1]
        return [[shift_u(column_dvf(ctx, mup[i] - lamp[j] - i + j),
                         Fraction(-mu[1] + mup[1] - mup[i] - lamp[j] + i + j - 1))
                 for j in range(1, size + 1)] for i in range(1, size + 1)]
    if variant == "row":
        size = mup[1]
        return [[shift_u(row_dvf(ctx, mu[j] - lam[i] + i - j),
                         Fraction(-mu[1] + mup[1] + mu[j] + lam[i] - i - j + 1))
                 for j in range(1, size + 1)] for i in range(1, size + 1)]
    if variant == "d_row":
        m = shape.n_cells()
        return [[shift_u(column_dvf(ctx, 1 - i + j), Fraction(-m + i + j - 1))
                 for j in range(1, m + 1)] for i in range(1, m + 1)]
    raise ValueError(f"unknown variant {variant!r}")


def check_det_vs_tableaux(spec: AlgebraSpec, shape: SkewDiagram, variant: str,
                          trials: int = 20, seed: int = 0) -> IdentityReport:
    """Randomized-exact: numeric determinant of the entry matrix against the
    direct tableaux sum, both evaluated at random rational points."""
    from random import Random

    if variant == "d_row":
        if spec.family != "D" or not shape.is_row():
            raise UnsupportedShape("d_row needs a D-family single row")
    elif spec.family != "B":
        raise UnsupportedShape(f"{variant} determinant applies to the B family")
    direct = build_dvf(BoxContext(spec), shape)
    matrix = _det_entry_matrix(spec, shape, variant)
    rng = Random(seed)
    cols = colors_of(direct, *(e for row in matrix for e in row)) or {1}
    worst = Fraction(0)
    for _ in range(trials):
        for _ in range(SAMPLE_RETRY_CAP):
            asg = random_assignment(rng, cols)
            cache: dict = {}
            try:
                det_val = exact_det([[evaluate(e, asg, cache) for e in row]
                                     for row in matrix])
                delta = det_val - evaluate(direct, asg, cache)
            except PoleHit:
                continue
            if abs(delta) > abs(worst):
                worst = delta
            break
        else:
            raise SamplingExhausted("no pole-free point for determinant check")
    return IdentityReport(
        name=f"determinant[{variant}] {spec} {shape.mu.parts}/{shape.lam.parts}",
        mode="randomized-exact", samples=trials, max_deviation=worst,
        passed=(worst == 0), details={}, seed=seed)


# ---------------------------------------------------------------------------
# Hirota recursion (B family, raw sums)


def check_hirota(spec: AlgebraSpec, a: int, m: int, trials: int = 20,
                 seed: int = 0) -> IdentityReport:
    """T_m^a(u-1) T_m^a(u+1) = T_{m-1}^a T_{m+1}^a + T_m^{a-1} T_m^{a+1}."""
    if spec.family != "B":
        raise WrongAlgebra("the bilinear recursion is checked for B only")
    if a < 1 or m < 1:
        raise ValueError("need a, m >= 1")
    ctx = BoxContext(spec)
    t = rect_dvf(ctx, m, a)
    lhs = [[shift_u(t, -1), shift_u(t, 1)]]
    rhs = [[rect_dvf(ctx, m - 1, a), rect_dvf(ctx, m + 1, a)],
           [rect_dvf(ctx, m, a - 1), rect_dvf(ctx, m, a + 1)]]
    return equal_group_sums(lhs, rhs, trials=trials, seed=seed,
                            name=f"hirota {spec} a={a} m={m}")


# ---------------------------------------------------------------------------
# duality of the normalized B(0|s) family


def _row_of_boxes(spec: AlgebraSpec, labels, shifts) -> SymSum:
    ctx = BoxContext(spec, include_vacuum=False)
    t = None
    for lab, sh in zip(labels, shifts):
        piece = box(ctx, lab, sh)
        t = piece if t is None else t * piece
    return SymSum.from_term(t) if t is not None else ONE


def _b0s_label(s: int, k: int):
    """Row label with the convention that slot s+1 holds the 0 label."""
    return unb(k) if k <= s else ZERO_LABEL


def _b0s_label_bar(s: int, k: int):
    return bar(k) if k <= s else ZERO_LABEL


def verify_modi1(s: int, a: int) -> bool:
    """[abar]_u x [1..a] at u-2s-1, u-2s+1, ... equals [1..a-1] at u-2s+1, ...

    Exact statement used in the duality proof; a runs over 1..s+1 with the
    slot convention above.  Dress parts only.
    """
    spec = AlgebraSpec("B", 0, s)
    lhs = _row_of_boxes(spec, [_b0s_label_bar(s, a)], [Fraction(0)]) \
        * _row_of_boxes(spec, [_b0s_label(s, k) for k in range(1, a + 1)],
                        [Fraction(-2 * s - 3 + 2 * k) for k in range(1, a + 1)])
    rhs = _row_of_boxes(spec, [_b0s_label(s, k) for k in range(1, a)],
                        [Fraction(-2 * s - 1 + 2 * k) for k in range(1, a)])
    return lhs == rhs


def verify_modi(s: int, a: int) -> bool:
    """[a]_u x [abar..1bar] at u-2a+2s+3, ... equals [(a-1)bar..1bar]."""
    spec = AlgebraSpec("B", 0, s)
    down = list(range(a, 0, -1))
    lhs = _row_of_boxes(spec, [_b0s_label(s, a)], [Fraction(0)]) \
        * _row_of_boxes(spec, [_b0s_label_bar(s, k) for k in down],
                        [Fraction(-2 * k + 2 * s + 3) for k in down])
    down1 = list(range(a - 1, 0, -1))
    rhs = _row_of_boxes(spec, [_b0s_label_bar(s, k) for k in down1],
                        [Fraction(-2 * k + 2 * s + 1) for k in down1])
    return lhs == rhs


def verify_const(s: int) -> bool:
    """The full-width strict row [1..s|0|sbar..1bar] multiplies out to 1."""
    spec = AlgebraSpec("B", 0, s)
    labels = [unb(k) for k in range(1, s + 1)] + [ZERO_LABEL] \
        + [bar(k) for k in range(s, 0, -1)]
    shifts = [Fraction(-2 * s + 2 * j) for j in range(2 * s + 1)]
    return _row_of_boxes(spec, labels, shifts) == ONE


def check_duality(s: int, a: int, m: int, trials: int = 20,
                  seed: int = 0) -> IdentityReport:
    """Normalized T_m^a = T_{2s-m+1}^a for B(0|s), vacuum parts included."""
    if not 0 <= m <= 2 * s + 1:
        raise ValueError("duality range is 0 <= m <= 2s+1")
    spec = AlgebraSpec("B", 0, s)
    lhs = normalized_rect_dvf(spec, m, a)
    rhs = normalized_rect_dvf(spec, 2 * s - m + 1, a)
    rep = equal_as_rational_functions(lhs, rhs, trials=trials, seed=seed)
    return IdentityReport(name=f"duality B(0|{s}) a={a} m={m}", mode=rep.mode,
                          samples=rep.samples, max_deviation=rep.max_deviation,
                          passed=rep.passed, details=rep.details, seed=seed)


def check_duality_suite(s: int, trials: int = 8, seed: int = 0) -> IdentityReport:
    """Full duality sweep plus the three exact helper identities."""
    reports = [check_duality(s, a, m, trials=trials, seed=seed + a * 100 + m)
               for a in (1, 2) for m in range(0, 2 * s + 2)]
    helper_ok = all(verify_modi1(s, a) and verify_modi(s, a)
                    for a in range(1, s + 2)) and verify_const(s)
    reports.append(IdentityReport(
        name=f"duality-helpers B(0|{s})", mode="exact-symbolic",
        samples=2 * (s + 1) + 1, max_deviation=Fraction(0), passed=helper_ok,
        details={}, seed=seed))
    return merge_reports(f"duality B(0|{s})", reports)


# ---------------------------------------------------------------------------
# the closed B(0|s) T-system


def _fundamental_rows(s: int) -> dict[int, SymSum]:
    """Normalized single-row sums indexed 0..2s+1 (zero outside)."""
    spec = AlgebraSpec("B", 0, s)
    return {k: normalized_rect_dvf(spec, k, 1) if k else vacuum_row_term(spec, 1)
            for k in range(0, 2 * s + 2)}


def _row_entry(rows: dict[int, SymSum], k: int) -> SymSum:
    return rows.get(k, ZERO) if k >= 0 else ZERO


def tsystem_block(s: int, a: int, m: int,
                  rows: dict[int, SymSum] | None = None) -> SymSum:
    """Determinant solution for T_m^(a); index n of T_n^(s) must be even."""
    if a == 0 or m == 0:
        return ONE
    if not 1 <= a <= s:
        raise ValueError(f"node index {a} out of range 1..{s}")
    if rows is None:
        rows = _fundamental_rows(s)
    matrix = [[shift_u(_row_entry(rows, a + i - j), Fraction(m - i - j + 1))
               for j in range(1, m + 1)] for i in range(1, m + 1)]
    return _det(matrix)


def tsystem_g(s: int, b: int, m: int) -> SymSum:
    """Scalar factor attached to node b at level m of the relation family.

    Nontrivial only where the inhomogeneity polynomial enters: node 1, where
    it is an m-fold product of normalized empty-row terms.  For s = 1 the
    single node plays both roles and its level-2m factor is the same m-fold
    product.
    """
    spec = AlgebraSpec("B", 0, s)
    if b != 1:
        return ONE
    return vacuum_row_term(spec, m)


def tsystem_block_by_label(s: int, a: int, n: int,
                           rows: dict[int, SymSum] | None = None) -> SymSum:
    """T_n^(a) by its weight label n; the tail node accepts even n only."""
    if a == s:
        if n % 2:
            raise OddSpinLabel(f"tail label must be even, got {n}")
        return tsystem_block(s, a, n // 2, rows)
    return tsystem_block(s, a, n, rows)


def check_t_system(s: int, depth: int, trials: int = 8,
                   seed: int = 0) -> IdentityReport:
    """Verify the closed relation family on determinant-built blocks.

    Every node relation at levels m <= depth is checked, together with the
    bilinear relation of the g factors and a cross-check of the determinant
    blocks against directly built rectangle sums.
    """
    spec = AlgebraSpec("B", 0, s)
    rows = _fundamental_rows(s)
    reports = []

    def block(a: int, m: int) -> SymSum:
        return tsystem_block(s, a, m, rows)

    def add_eq(name: str, lhs, rhs, salt: int):
        reports.append(equal_group_sums(lhs, rhs, trials=trials,
                                        seed=seed + salt, name=name))

    salt = 0
    for m in range(1, depth + 1):
        for a in range(1, s - 1):          # inner nodes
            t = block(a, m)
            lhs = [[shift_u(t, -1), shift_u(t, 1)]]
            rhs = [[block(a, m - 1), block(a, m + 1)],
                   [tsystem_g(s, a, m), block(a - 1, m), block(a + 1, m)]]
            add_eq(f"t-system B(0|{s}) node {a} m={m}", lhs, rhs, salt)
            salt += 1
        if s >= 2:                          # node s-1 couples to the tail
            t = block(s - 1, m)
            lhs = [[shift_u(t, -1), shift_u(t, 1)]]
            rhs = [[block(s - 1, m - 1), block(s - 1, m + 1)],
                   [tsystem_g(s, s - 1, m), block(s - 2, m), block(s, m)]]
            add_eq(f"t-system B(0|{s}) node {s - 1} m={m}", lhs, rhs, salt)
            salt += 1
        t = block(s, m)                     # tail node, label 2m
        g_tail = tsystem_g(s, 1, m) if s == 1 else ONE
        lhs = [[shift_u(t, -1), shift_u(t, 1)]]
        rhs = [[block(s, m - 1), block(s, m + 1)],
               [g_tail, block(s - 1, m), t]]
        add_eq(f"t-system B(0|{s}) tail m={m}", lhs, rhs, salt)
        salt += 1

    g_ok = all(tsystem_g(s, 1, m + 1) * tsystem_g(s, 1, m - 1)
               == shift_u(tsystem_g(s, 1, m), 1) * shift_u(tsystem_g(s, 1, m), -1)
               for m in range(1, depth + 1))
    reports.append(IdentityReport(name=f"g-bilinear B(0|{s})",
                                  mode="exact-symbolic", samples=depth,
                                  max_deviation=Fraction(0), passed=g_ok,
                                  details={}, seed=seed))

    for a in range(1, s + 1):
        for m in range(1, depth + 1):
            direct = normalized_rect_dvf(spec, a, m)
            add_eq(f"block-vs-tableaux B(0|{s}) a={a} m={m}",
                   [[block(a, m)]], [[direct]], salt)
            salt += 1
    return merge_reports(f"t-system B(0|{s}) depth {depth}", reports)


# ---------------------------------------------------------------------------
# term count vs dimension (conjectural correspondence)


def _label_vectors(s: int, a: int, m: int):
    """Nonnegative k with k_1+..+k_a <= m and k_j = m delta_{ja} mod 2."""
    ranges = []
    for j in range(1, a + 1):
        par = m % 2 if j == a else 0
        ranges.append([k for k in range(0, m + 1) if k % 2 == par])
    for ks in iproduct(*ranges):
        if sum(ks) <= m:
            yield ks


def term_count_prediction(s: int, a: int, m: int) -> int:
    """Dimension sum predicted for the number of terms in T_m^(a)."""
    if not 1 <= a <= s:
        raise ValueError(f"node index {a} out of range 1..{s}")
    total = 0
    for ks in _label_vectors(s, a, m):
        label = [Fraction(0)] * s
        for j, k in enumerate(ks, start=1):
            label[j - 1] = Fraction(k)
        if a == s:
            label[s - 1] = Fraction(2 * ks[s - 1])
        total += dimension_b0s(s, KacDynkinLabel(tuple(label)))
    return total


def check_term_count_conjecture(s: int, a: int, m: int) -> IdentityReport:
    """Compare tableaux count of the (a^m) rectangle with the dimension sum.

    A conjectural correspondence: disagreement is reported, not raised.
    """
    spec = AlgebraSpec("B", 0, s)
    shape = SkewDiagram.straight((a,) * m)
    n_terms = count_tableaux(spec, shape)
    predicted = term_count_prediction(s, a, m)
    label = 2 * m if a == s else m
    return IdentityReport(
        name=f"term-count B(0|{s}) node {a} label {label}", mode="exact-symbolic",
        samples=1, max_deviation=Fraction(abs(n_terms - predicted)),
        passed=n_terms == predicted,
        details={"tableaux": n_terms, "dimension_sum": predicted})
