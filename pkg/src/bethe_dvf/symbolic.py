"""Exact algebra of shifted Q-functions and vacuum polynomials.

Every quantity handled by this package is a finite signed sum of monomials

    c * prod_i Q_{a_i}(u + c_i)^{e_i} * prod_j phi(u + d_j)^{f_j}

with an exact rational coefficient c, integer exponents (negative exponents
are denominators) and exact rational argument shifts.  Here Q_a is the
polynomial whose zeros are the color-a Bethe roots and phi the polynomial
whose zeros are the inhomogeneities:

    Q_a(u) = prod_{j=1..N_a} (u - u_j^(a)),      phi(u) = prod_{j=1..N} (u - w_j).

The building block (u - z) is hard-wired; other additive choices would need
a different evaluator.

A ``SymTerm`` is one monomial in canonical form: factors keyed by
(color, shift) resp. shift, merged exponents, no zero exponents.  A
``SymSum`` is a sum of terms in a deterministic canonical order, so two
equal sums serialize identically.  All values are immutable; every
operation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

SAMPLE_BOUND = 10**4     # numerators/denominators of random sample points
SAMPLE_RETRY_CAP = 100   # resampling attempts before SamplingExhausted


class PoleHit(ArithmeticError):
    """A denominator factor evaluated to zero.

    ``color`` is the Q color, or None when the phi part is responsible.
    """

    def __init__(self, color: int | None, shift: Fraction):
        self.color = color
        self.shift = shift
        what = "phi" if color is None else f"Q_{color}"
        super().__init__(f"pole hit: {what}(u + {shift}) = 0")


class SamplingExhausted(RuntimeError):
    """Could not find a pole-free random sample point within the retry cap."""


class HigherOrderPole(ArithmeticError):
    """A single term carries the matching Q factor with exponent <= -2."""


class GenericityViolation(ArithmeticError):
    """Root configuration too degenerate for simple-pole residue analysis."""


def _rat(x: RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _canon_q(qs: Iterable[tuple[int, RatLike, int]]) -> tuple[tuple[int, Fraction, int], ...]:
    merged: dict[tuple[int, Fraction], int] = {}
    for color, shift, exp in qs:
        if color < 1:
            raise ValueError(f"Q color must be >= 1, got {color}")
        key = (color, _rat(shift))
        merged[key] = merged.get(key, 0) + exp
    return tuple(sorted((c, s, e) for (c, s), e in merged.items() if e != 0))


def _canon_phi(phis: Iterable[tuple[RatLike, int]]) -> tuple[tuple[Fraction, int], ...]:
    merged: dict[Fraction, int] = {}
    for shift, exp in phis:
        key = _rat(shift)
        merged[key] = merged.get(key, 0) + exp
    return tuple(sorted((s, e) for s, e in merged.items() if e != 0))


@dataclass(frozen=True)
class SymTerm:
    """One canonical monomial: coefficient * Q factors * phi factors."""

    coeff: Fraction
    qs: tuple[tuple[int, Fraction, int], ...] = ()
    phis: tuple[tuple[Fraction, int], ...] = ()

    @staticmethod
    def make(coeff: RatLike,
             qs: Iterable[tuple[int, RatLike, int]] = (),
             phis: Iterable[tuple[RatLike, int]] = ()) -> SymTerm:
        return SymTerm(_rat(coeff), _canon_q(qs), _canon_phi(phis))

    @property
    def key(self) -> tuple:
        """Factor signature; terms with equal keys merge under addition."""
        return (self.qs, self.phis)

    def __mul__(self, other: SymTerm) -> SymTerm:
        return SymTerm.make(self.coeff * other.coeff,
                            self.qs + other.qs, self.phis + other.phis)

    def inverse(self) -> SymTerm:
        """Reciprocal term; coefficient must be nonzero."""
        if self.coeff == 0:
            raise ZeroDivisionError("cannot invert the zero term")
        return SymTerm.make(1 / self.coeff,
                            [(c, s, -e) for c, s, e in self.qs],
                            [(s, -e) for s, e in self.phis])

    def shifted(self, delta: RatLike) -> SymTerm:
        d = _rat(delta)
        return SymTerm(self.coeff,
                       tuple((c, s + d, e) for c, s, e in self.qs),
                       tuple((s + d, e) for s, e in self.phis))

    def net_exponents(self) -> tuple[dict[int, int], int]:
        """Per-color net Q exponent and the net phi exponent."""
        per_color: dict[int, int] = {}
        for c, _, e in self.qs:
            per_color[c] = per_color.get(c, 0) + e
        return per_color, sum(e for _, e in self.phis)


ONE_TERM = SymTerm.make(1)


@dataclass(frozen=True)
class SymSum:
    """Canonical signed sum of SymTerms (empty tuple is the zero sum)."""

    terms: tuple[SymTerm, ...] = ()

    @staticmethod
    def make(terms: Iterable[SymTerm]) -> SymSum:
        merged: dict[tuple, SymTerm] = {}
        for t in terms:
            prev = merged.get(t.key)
            if prev is None:
                merged[t.key] = t
            else:
                merged[t.key] = SymTerm(prev.coeff + t.coeff, t.qs, t.phis)
        kept = sorted((t for t in merged.values() if t.coeff != 0),
                      key=lambda t: (t.qs, t.phis, t.coeff))
        return SymSum(tuple(kept))

    @staticmethod
    def from_term(t: SymTerm) -> SymSum:
        return SymSum.make([t])

    @staticmethod
    def constant(c: RatLike) -> SymSum:
        return SymSum.make([SymTerm.make(c)])

    def __add__(self, other: SymSum) -> SymSum:
        return SymSum.make(self.terms + other.terms)

    def __neg__(self) -> SymSum:
        return SymSum(tuple(SymTerm(-t.coeff, t.qs, t.phis) for t in self.terms))

    def __sub__(self, other: SymSum) -> SymSum:
        return self + (-other)

    def __mul__(self, other: SymSum | SymTerm) -> SymSum:
        if isinstance(other, SymTerm):
            other = SymSum.from_term(other)
        return SymSum.make([a * b for a in self.terms for b in other.terms])

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)


ZERO = SymSum()
ONE = SymSum.constant(1)


def mul_terms(a: SymTerm, b: SymTerm) -> SymTerm:
    """Product of canonical terms; shared factor keys add and may cancel."""
    return a * b


def add(a: SymSum, b: SymSum) -> SymSum:
    """Canonical sum; identical factor signatures merge coefficients."""
    return a + b


def shift_u(x: SymSum | SymTerm, delta: RatLike):
    """Shift the spectral parameter: every factor argument moves by delta."""
    if isinstance(x, SymTerm):
        return x.shifted(delta)
    return SymSum(tuple(t.shifted(delta) for t in x.terms))


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class Assignment:
    """Numeric specialization of u, the Bethe roots and the inhomogeneities.

    ``roots`` maps a color to the tuple of roots of that color (so N_a is
    implied by the tuple length).  ``exact`` selects bit-exact Fraction
    arithmetic; otherwise values are coerced to complex floats.
    """

    u: object
    roots: Mapping[int, tuple]
    inhoms: tuple = ()
    exact: bool = False

    @staticmethod
    def exact_point(u: RatLike, roots: Mapping[int, Sequence[RatLike]],
                    inhoms: Sequence[RatLike] = ()) -> Assignment:
        return Assignment(_rat(u),
                          {c: tuple(_rat(v) for v in vs) for c, vs in roots.items()},
                          tuple(_rat(w) for w in inhoms), exact=True)

    @staticmethod
    def float_point(u, roots: Mapping[int, Sequence], inhoms: Sequence = ()) -> Assignment:
        return Assignment(complex(u),
                          {c: tuple(complex(v) for v in vs) for c, vs in roots.items()},
                          tuple(complex(w) for w in inhoms), exact=False)


def _eval_q(asg: Assignment, color: int, arg):
    roots = asg.roots.get(color, ())
    prod = Fraction(1) if asg.exact else complex(1)
    for root in roots:
        prod *= arg - root
    return prod


def _eval_phi(asg: Assignment, arg):
    prod = Fraction(1) if asg.exact else complex(1)
    for w in asg.inhoms:
        prod *= arg - w
    return prod


def _factor_value(asg: Assignment, color: int | None, shift: Fraction, cache: dict):
    """Base value of Q_color(u + shift) or phi(u + shift), memoized per point.

    In exact mode the cached value is the integer pair (numerator,
    denominator): per-term products then run on plain integers, which is far
    cheaper than chained Fraction multiplication.  Cache keys avoid Fraction
    hashing (slow) by using the integer pair of the shift.
    """
    key = (color, shift.numerator, shift.denominator)
    val = cache.get(key)
    if val is None:
        if asg.exact:
            frac = (_eval_phi(asg, asg.u + shift) if color is None
                    else _eval_q(asg, color, asg.u + shift))
            val = (frac.numerator, frac.denominator)
        else:
            arg = asg.u + complex(shift)
            val = _eval_phi(asg, arg) if color is None else _eval_q(asg, color, arg)
        cache[key] = val
    return val


def _powered(base: complex, exp: int) -> complex:
    if exp == 1:
        return base
    if exp == -1:
        return 1 / base
    return base ** exp


def evaluate_term(t: SymTerm, asg: Assignment, _cache: dict | None = None):
    """Value of one term at the assignment; raises PoleHit on zero denominators."""
    cache = {} if _cache is None else _cache
    if not asg.exact:
        val = complex(t.coeff)
        for color, shift, exp in t.qs:
            base = _factor_value(asg, color, shift, cache)
            if base == 0:
                if exp < 0:
                    raise PoleHit(color, shift)
                return complex(0)
            val *= _powered(base, exp)
        for shift, exp in t.phis:
            base = _factor_value(asg, None, shift, cache)
            if base == 0:
                if exp < 0:
                    raise PoleHit(None, shift)
                return complex(0)
            val *= _powered(base, exp)
        return val

    num = t.coeff.numerator
    den = t.coeff.denominator
    for color, shift, exp in t.qs:
        bn, bd = _factor_value(asg, color, shift, cache)
        if bn == 0:
            if exp < 0:
                raise PoleHit(color, shift)
            return Fraction(0)
        if exp > 0:
            num *= bn if exp == 1 else bn ** exp
            den *= bd if exp == 1 else bd ** exp
        else:
            num *= bd if exp == -1 else bd ** -exp
            den *= bn if exp == -1 else bn ** -exp
    for shift, exp in t.phis:
        bn, bd = _factor_value(asg, None, shift, cache)
        if bn == 0:
            if exp < 0:
                raise PoleHit(None, shift)
            return Fraction(0)
        if exp > 0:
            num *= bn if exp == 1 else bn ** exp
            den *= bd if exp == 1 else bd ** exp
        else:
            num *= bd if exp == -1 else bd ** -exp
            den *= bn if exp == -1 else bn ** -exp
    return Fraction(num, den)


def evaluate(x: SymSum, asg: Assignment, _cache: dict | None = None):
    """Value of the rational expression at the assignment (0 for the empty sum)."""
    cache = {} if _cache is None else _cache
    if not asg.exact:
        return sum((evaluate_term(t, asg, cache) for t in x.terms), complex(0))
    total = Fraction(0)
    for t in x.terms:
        total += evaluate_term(t, asg, cache)
    return total


# ---------------------------------------------------------------------------
# randomized-exact identity checking


def colors_of(*sums: SymSum) -> set[int]:
    return {c for x in sums for t in x.terms for c, _, _ in t.qs}


def random_rational(rng: Random, bound: int = SAMPLE_BOUND) -> Fraction:
    # small denominators keep exact arithmetic cheap over long products
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 8))


def random_assignment(rng: Random, colors: Iterable[int],
                      roots_per_color: int = 2, n_inhom: int = 2) -> Assignment:
    roots = {c: tuple(random_rational(rng) for _ in range(roots_per_color))
             for c in sorted(set(colors))}
    inhoms = tuple(random_rational(rng) for _ in range(n_inhom))
    return Assignment.exact_point(random_rational(rng), roots, inhoms)


def equal_as_rational_functions(a: SymSum, b: SymSum, trials: int = 20, *,
                                seed: int = 0, roots_per_color: int = 2,
                                n_inhom: int = 2):
    """Randomized-exact equality test of two sums.

    Evaluates a - b at ``trials`` random exact-rational assignments of u, all
    roots and all inhomogeneities, resampling on pole hits (cap
    SAMPLE_RETRY_CAP per trial).  Sound per point; a nonzero difference that
    vanishes at every sampled point is astronomically unlikely but the report
    mode is labeled "randomized-exact", not "proof".
    """
    from .reports import IdentityReport

    if trials < 1:
        raise ValueError("trials must be >= 1")
    diff = a - b
    if diff.is_zero():
        return IdentityReport(name="equal-as-rational-functions",
                              mode="exact-symbolic", samples=0,
                              max_deviation=Fraction(0), passed=True,
                              details={"note": "canonical forms identical"},
                              seed=seed)
    rng = Random(seed)
    cols = colors_of(diff) or {1}
    points = []
    worst = Fraction(0)
    for _ in range(trials):
        for attempt in range(SAMPLE_RETRY_CAP):
            asg = random_assignment(rng, cols, roots_per_color, n_inhom)
            try:
                val = evaluate(diff, asg)
            except PoleHit:
                continue
            points.append(str(asg.u))
            if abs(val) > abs(worst):
                worst = val
            break
        else:
            raise SamplingExhausted(
                f"no pole-free sample point found in {SAMPLE_RETRY_CAP} tries")
    return IdentityReport(name="equal-as-rational-functions",
                          mode="randomized-exact", samples=trials,
                          max_deviation=worst, passed=(worst == 0),
                          details={"points_u": points}, seed=seed)


def evaluate_group_sum(groups: Sequence[Sequence[SymSum]], asg: Assignment):
    """Value of sum-of-products form without symbolic expansion."""
    total = Fraction(0) if asg.exact else complex(0)
    for group in groups:
        prod = Fraction(1) if asg.exact else complex(1)
        for factor in group:
            prod *= evaluate(factor, asg)
        total += prod
    return total


def equal_group_sums(lhs: Sequence[Sequence[SymSum]],
                     rhs: Sequence[Sequence[SymSum]], trials: int = 20, *,
                     seed: int = 0, roots_per_color: int = 2,
                     n_inhom: int = 2, name: str = "group-sums"):
    """Randomized-exact equality of two sum-of-products expressions.

    Factors are evaluated individually at each sample point, so large
    products never get expanded.
    """
    from .reports import IdentityReport

    rng = Random(seed)
    all_sums = [f for side in (lhs, rhs) for g in side for f in g]
    cols = colors_of(*all_sums) or {1}
    worst = Fraction(0)
    used = 0
    for _ in range(trials):
        for _ in range(SAMPLE_RETRY_CAP):
            asg = random_assignment(rng, cols, roots_per_color, n_inhom)
            try:
                delta = evaluate_group_sum(lhs, asg) - evaluate_group_sum(rhs, asg)
            except PoleHit:
                continue
            used += 1
            if abs(delta) > abs(worst):
                worst = delta
            break
        else:
            raise SamplingExhausted(
                f"no pole-free sample point found in {SAMPLE_RETRY_CAP} tries")
    return IdentityReport(name=name, mode="randomized-exact", samples=used,
                          max_deviation=worst, passed=(worst == 0), details={},
                          seed=seed)


def exact_det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant of an exact rational matrix by Gaussian elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# residues


def _term_residue(t: SymTerm, color: int, root_index: int, shift: Fraction,
                  asg: Assignment, tol: float = 1e-9) -> complex:
    roots = asg.roots.get(color, ())
    u_k = roots[root_index]
    pole = u_k + complex(shift)

    match_exp = 0
    for c, s, e in t.qs:
        if c == color and s == -shift:
            match_exp = e
    if match_exp >= 0:
        # no matching simple-pole factor: term is regular here (numerator
        # zeros of other factors only push the value to 0)
        return 0j
    if match_exp <= -2:
        raise HigherOrderPole(
            f"Q_{color}(u + {-shift}) appears with exponent {match_exp}")

    deriv = complex(1)
    for j, other in enumerate(roots):
        if j == root_index:
            continue
        d = u_k - other
        if abs(d) < tol:
            raise GenericityViolation(
                f"color {color} roots {root_index} and {j} coincide")
        deriv *= d

    rest = complex(t.coeff)
    for c, s, e in t.qs:
        if c == color and s == -shift:
            if e != -1:
                rest *= _eval_q(asg, c, pole + complex(s)) ** (e + 1)
            continue
        base = _eval_q(asg, c, pole + complex(s))
        if base == 0 or (e < 0 and abs(base) < tol):
            if e < 0:
                raise GenericityViolation(
                    f"pole of Q_{c}(u + {s}) coincides with the residue point")
            return 0j
        rest *= base ** e
    for s, e in t.phis:
        base = _eval_phi(asg, pole + complex(s))
        if base == 0 or (e < 0 and abs(base) < tol):
            if e < 0:
                raise GenericityViolation(
                    f"pole of phi(u + {s}) coincides with the residue point")
            return 0j
        rest *= base ** e
    return rest / deriv


def residue_breakdown(x: SymSum, color: int, root_index: int, shift: RatLike,
                      asg: Assignment) -> list[complex]:
    """Per-term simple-pole residues of x at u = u_{root_index}^(color) + shift."""
    s = _rat(shift)
    return [_term_residue(t, color, root_index, s, asg) for t in x.terms]


def residue_at(x: SymSum, color: int, root_index: int, shift: RatLike,
               asg: Assignment) -> complex:
    """Total residue of x at u = u_{root_index}^(color) + shift.

    Each term may carry the matching Q factor at most to the first negative
    power (HigherOrderPole otherwise); terms without the factor contribute 0.
    """
    return sum(residue_breakdown(x, color, root_index, shift, asg), 0j)


# ---------------------------------------------------------------------------
# serialization


def _rat_str(x: Fraction) -> str:
    return str(x)


def term_to_json(t: SymTerm) -> dict:
    return {"coeff": _rat_str(t.coeff),
            "Q": [[c, _rat_str(s), e] for c, s, e in t.qs],
            "phi": [[_rat_str(s), e] for s, e in t.phis]}


def term_from_json(d: Mapping) -> SymTerm:
    return SymTerm.make(Fraction(d["coeff"]),
                        [(c, Fraction(s), e) for c, s, e in d.get("Q", [])],
                        [(Fraction(s), e) for s, e in d.get("phi", [])])


def sum_to_json(x: SymSum) -> dict:
    return {"schema": 1, "terms": [term_to_json(t) for t in x.terms]}


def sum_from_json(d: Mapping) -> SymSum:
    return SymSum.make([term_from_json(t) for t in d["terms"]])


def dumps(x: SymSum, indent: int | None = None) -> str:
    return json.dumps(sum_to_json(x), indent=indent, sort_keys=True)


def loads(text: str) -> SymSum:
    return sum_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# display


def _arg_str(shift: Fraction) -> str:
    if shift == 0:
        return "u"
    sign = "+" if shift > 0 else "-"
    return f"u{sign}{abs(shift)}"


def term_to_latex(t: SymTerm) -> str:
    num, den = [], []
    for s, e in t.phis:
        (num if e > 0 else den).extend([rf"\phi({_arg_str(s)})"] * abs(e))
    for c, s, e in t.qs:
        (num if e > 0 else den).extend([rf"Q_{{{c}}}({_arg_str(s)})"] * abs(e))
    if t.coeff == 1:
        coeff = ""
    elif t.coeff == -1:
        coeff = "-"
    else:
        coeff = str(t.coeff) + " "
    if den:
        return rf"{coeff}\frac{{{''.join(num) or '1'}}}{{{''.join(den)}}}"
    return coeff + ("".join(num) or "1")


def sum_to_latex(x: SymSum) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for i, t in enumerate(x.terms):
        s = term_to_latex(t)
        if i and not s.startswith("-"):
            s = "+ " + s
        elif s.startswith("-"):
            s = "- " + s[1:]
        parts.append(s)
    return "\n".join(parts)


def term_to_text(t: SymTerm) -> str:
    num, den = [], []
    for s, e in t.phis:
        (num if e > 0 else den).extend([f"phi({_arg_str(s)})"] * abs(e))
    for c, s, e in t.qs:
        (num if e > 0 else den).extend([f"Q{c}({_arg_str(s)})"] * abs(e))
    head = "" if t.coeff == 1 else ("-" if t.coeff == -1 else f"{t.coeff}*")
    body = "*".join(num) or "1"
    if den:
        body += " / (" + "*".join(den) + ")"
    return head + body


def sum_to_text(x: SymSum) -> str:
    if x.is_zero():
        return "0"
    lines = []
    for t in x.terms:
        s = term_to_text(t)
        lines.append("- " + s[1:] if s.startswith("-") else "+ " + s)
    return "\n".join(lines)
