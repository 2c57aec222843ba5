"""Root data of the orthosymplectic families osp(2r+1|2s) and osp(2r|2s).

The two families are written B(r|s) (odd orthogonal, r >= 0) and D(r|s)
(even orthogonal, r >= 2), always with the distinguished simple root system.
Simple roots live in the span of epsilon_1..epsilon_r, delta_1..delta_s with

    (eps_i|eps_j) = delta_ij,  (delta_i|delta_j) = -delta_ij,  (eps|delta) = 0.

Box labels form the index set J: unbarred 1..s+r, their bars, and (for B
only) the extra label 0.  B carries a total order on J; D leaves s+r and
bar(s+r) mutually incomparable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class UnsupportedShape(ValueError):
    """Shape outside the domain where the construction is defined."""


class WrongAlgebra(ValueError):
    """Operation restricted to a different algebra family."""


class NotFiniteDimensional(ValueError):
    """Kac-Dynkin label violates the finite-dimensionality condition."""


@dataclass(frozen=True)
class AlgebraSpec:
    family: str  # "B" or "D"
    r: int
    s: int

    def __post_init__(self):
        if self.family not in ("B", "D"):
            raise ValueError(f"family must be B or D, got {self.family!r}")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.family == "B" and self.r < 0:
            raise ValueError("B family needs r >= 0")
        if self.family == "D" and self.r < 2:
            raise ValueError("D family needs r >= 2")

    @property
    def rank(self) -> int:
        return self.s + self.r

    def __str__(self) -> str:
        return f"{self.family}({self.r}|{self.s})"


_SPEC_RE = re.compile(r"^\s*([BD])\((\d+)\|(\d+)\)\s*$")


def parse_spec(text: str) -> AlgebraSpec:
    """Parse compact algebra names like "B(2|1)", "D(3|1)", "B(0|2)"."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse algebra spec {text!r}")
    return AlgebraSpec(m.group(1), int(m.group(2)), int(m.group(3)))


# ---------------------------------------------------------------------------
# simple roots and the bilinear form


def _simple_root(spec: AlgebraSpec, a: int) -> tuple[dict[int, int], dict[int, int]]:
    """Simple root alpha_a as (delta coefficients, epsilon coefficients)."""
    s, r = spec.s, spec.r
    if not 1 <= a <= s + r:
        raise ValueError(f"root index {a} out of range 1..{s + r}")
    de: dict[int, int] = {}
    ep: dict[int, int] = {}
    if a < s:
        de = {a: 1, a + 1: -1}
    elif a == s:
        if spec.family == "B" and r == 0:
            de = {s: 1}
        else:
            de = {s: 1}
            ep = {1: -1}
    elif spec.family == "B":
        j = a - s
        ep = {j: 1, j + 1: -1} if j < r else {r: 1}
    else:  # D
        j = a - s
        if j <= r - 2:
            ep = {j: 1, j + 1: -1}
        elif a == s + r - 1:
            ep = {r - 1: 1, r: -1}
        else:
            ep = {r - 1: 1, r: 1}
    return de, ep


def bilinear_form(spec: AlgebraSpec, a: int, b: int) -> Fraction:
    """(alpha_a | alpha_b) in the normalization |(alpha|alpha)| = 2 for the longest root."""
    da, ea = _simple_root(spec, a)
    db, eb = _simple_root(spec, b)
    val = sum(ea[i] * eb.get(i, 0) for i in ea) - sum(da[i] * db.get(i, 0) for i in da)
    return Fraction(val)


def root_degree(spec: AlgebraSpec, a: int) -> int:
    """Grading of the simple root: 1 for the odd root alpha_s, else 0."""
    return 1 if a == spec.s else 0


# ---------------------------------------------------------------------------
# box labels


@dataclass(frozen=True)
class IndexLabel:
    kind: str            # "unbarred" | "barred" | "zero"
    value: int = 0       # in [1, s+r]; unused for "zero"

    def __post_init__(self):
        if self.kind not in ("unbarred", "barred", "zero"):
            raise ValueError(f"bad label kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "zero":
            return "0"
        return f"{self.value}b" if self.kind == "barred" else str(self.value)


def unb(value: int) -> IndexLabel:
    return IndexLabel("unbarred", value)


def bar(value: int) -> IndexLabel:
    return IndexLabel("barred", value)


ZERO_LABEL = IndexLabel("zero")


def parse_label(text: str) -> IndexLabel:
    if text == "0":
        return ZERO_LABEL
    if text.endswith("b"):
        return bar(int(text[:-1]))
    return unb(int(text))


def bar_image(label: IndexLabel) -> IndexLabel:
    """The bar involution; 0 is self-conjugate."""
    if label.kind == "zero":
        return label
    return IndexLabel("barred" if label.kind == "unbarred" else "unbarred",
                      label.value)


def index_set(spec: AlgebraSpec) -> tuple[IndexLabel, ...]:
    """All labels in the deterministic iteration order used for enumeration.

    Unbarred ascending, then 0 (B only), then barred descending; for D the
    incomparable pair appears as s+r then bar(s+r).
    """
    n = spec.rank
    out = [unb(v) for v in range(1, n + 1)]
    if spec.family == "B":
        out.append(ZERO_LABEL)
    out.extend(bar(v) for v in range(n, 0, -1))
    return tuple(out)


def validate_label(spec: AlgebraSpec, label: IndexLabel) -> None:
    if label.kind == "zero":
        if spec.family != "B":
            raise ValueError("label 0 only exists in the B family")
        return
    if not 1 <= label.value <= spec.rank:
        raise ValueError(f"label value {label.value} out of range 1..{spec.rank}")


def _level(spec: AlgebraSpec, x: IndexLabel) -> int:
    """Position along the order chain; D maps s+r and bar(s+r) to one level."""
    n = spec.rank
    if spec.family == "B":
        if x.kind == "unbarred":
            return x.value
        if x.kind == "zero":
            return n + 1
        return 2 * n + 2 - x.value
    if x.kind == "unbarred":
        return x.value
    return 2 * n - x.value


def order_relation(spec: AlgebraSpec, x: IndexLabel, y: IndexLabel) -> str:
    """Compare two labels: "less", "equal", "greater" or "incomparable"."""
    validate_label(spec, x)
    validate_label(spec, y)
    if x == y:
        return "equal"
    lx, ly = _level(spec, x), _level(spec, y)
    if lx == ly:
        return "incomparable"  # only {s+r, bar(s+r)} for D
    return "less" if lx < ly else "greater"


def grading(spec: AlgebraSpec, x: IndexLabel) -> int:
    """1 for labels built from delta weights (1..s and bars), 0 otherwise."""
    validate_label(spec, x)
    if x.kind == "zero":
        return 0
    return 1 if x.value <= spec.s else 0


# ---------------------------------------------------------------------------
# Kac-Dynkin labels


@dataclass(frozen=True)
class KacDynkinLabel:
    b: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.b)


def _conj(mu: tuple[int, ...]) -> tuple[int, ...]:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= i) for i in range(1, mu[0] + 1))


def _part(seq: tuple[int, ...], i: int) -> int:
    """1-indexed access with zero padding."""
    return seq[i - 1] if 1 <= i <= len(seq) else 0


def kac_dynkin_from_diagram(spec: AlgebraSpec, mu: tuple[int, ...]) -> KacDynkinLabel:
    """Highest-weight label of the Young diagram mu.

    B family: any mu with mu_{r+1} <= s (r >= 1) or mu_1 <= s (r = 0).
    D family: only single columns (1^a) and single rows (m^1).
    """
    s, r = spec.s, spec.r
    mu = tuple(p for p in mu if p > 0)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"{mu} is not weakly decreasing")
    mup = _conj(mu)
    n = s + r
    if spec.family == "B":
        if _part(mu, r + 1) > s:
            raise UnsupportedShape(
                f"diagram {mu} has mu_{r + 1} > s; no finite-dimensional label")
        out = [Fraction(0)] * n
        if r == 0:
            for i in range(1, s):
                out[i - 1] = Fraction(_part(mup, i) - _part(mup, i + 1))
            out[s - 1] = Fraction(2 * _part(mup, s))
            return KacDynkinLabel(tuple(out))
        eta = [max(_part(mu, i) - s, 0) for i in range(1, r + 2)]
        for i in range(1, s):
            out[i - 1] = Fraction(_part(mup, i) - _part(mup, i + 1))
        out[s - 1] = Fraction(_part(mup, s) + eta[0])
        for j in range(1, r):
            out[s + j - 1] = Fraction(eta[j - 1] - eta[j])
        out[n - 1] = Fraction(2 * eta[r - 1])
        return KacDynkinLabel(tuple(out))

    # D family
    if len(mu) == 0:
        return KacDynkinLabel((Fraction(0),) * n)
    if all(p == 1 for p in mu):          # column (1^a)
        a = len(mu)
        return KacDynkinLabel(tuple(Fraction(a if j == 1 else 0)
                                    for j in range(1, n + 1)))
    if len(mu) == 1:                     # row (m^1)
        m = mu[0]
        out = [Fraction(0)] * n
        if m <= s:
            out[m - 1] = Fraction(1)
        elif r >= 3:
            out[s - 1] = Fraction(m - s + 1)
            out[s] = Fraction(m - s)
        else:  # r == 2
            out[s - 1] = Fraction(m - s + 1)
            out[s] = Fraction(m - s)
            out[s + 1] = Fraction(m - s)
        return KacDynkinLabel(tuple(out))
    raise UnsupportedShape(
        f"D-family labels defined only for single rows/columns, got {mu}")


def dimension_b0s(s: int, label: KacDynkinLabel) -> int:
    """Dimension of the irreducible osp(1|2s) module with the given label.

    The label must satisfy the finite-dimensionality condition: b_j a
    nonnegative integer for j < s and b_s a nonnegative even integer.
    """
    if len(label) != s:
        raise ValueError(f"label length {len(label)} != s = {s}")
    b = label.b
    for j, v in enumerate(b, start=1):
        if v.denominator != 1 or v < 0:
            raise NotFiniteDimensional(f"b_{j} = {v} not a nonnegative integer")
    if b[s - 1] % 2 != 0:
        raise NotFiniteDimensional(f"b_s = {b[s - 1]} must be even")

    def seg(j: int, k: int) -> Fraction:
        # b_j + b_{j+1} + ... + b_{k-1}; empty (= 0) when j >= k
        return sum(b[j - 1:k - 1], Fraction(0))

    val = Fraction(1)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            val *= (seg(i, j) + (j - i)) / (j - i)
            val *= (seg(i, j) + 2 * seg(j, s) + b[s - 1] + 2 * s - i - j + 1) \
                / (2 * s - i - j + 1)
    for k in range(1, s + 1):
        val *= (2 * seg(k, s) + b[s - 1] + 2 * s - 2 * k + 1) / (2 * s - 2 * k + 1)
    if val.denominator != 1:
        raise ArithmeticError(f"dimension came out non-integer: {val}")
    return int(val)
