"""Skew Young superdiagrams and admissible fillings.

Coordinates follow the matrix convention: cell (i, j) has the row index i
growing downward, the column index j growing rightward, and (1, 1) at the
top left corner of the outer diagram.

Admissibility for the B family is local (per adjacent cell pair): entries
weakly increase along rows and columns, strictly down columns when the upper
entry lies in J_+ \\ {0}, and strictly along rows when the left entry lies
in J_- u {0}.  For the D family only single columns (1^a) and single rows
(m^1) are defined; the column rule admits the incomparable pair
{s+r, bar(s+r)} in either adjacent order (repeated alternation included),
and the row rule adds the non-local constraint that s+r and bar(s+r) never
appear together.  General skew shapes for D are refused rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import (AlgebraSpec, IndexLabel, UnsupportedShape,
                      bar, grading, index_set, parse_label, unb, validate_label)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    @staticmethod
    def make(parts) -> Partition:
        seq = tuple(int(p) for p in parts)
        if any(p < 0 for p in seq):
            raise ValueError("negative part")
        if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while seq and seq[-1] == 0:
            seq = seq[:-1]
        return Partition(seq)

    def __getitem__(self, i: int) -> int:
        """1-indexed part, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: Partition) -> bool:
        return all(other[i] <= self[i] for i in range(1, len(other) + 1))


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram."""
    if not p.parts:
        return p
    return Partition.make(tuple(sum(1 for q in p.parts if q >= i)
                                for i in range(1, p.parts[0] + 1)))


@dataclass(frozen=True)
class SkewDiagram:
    lam: Partition
    mu: Partition

    @staticmethod
    def make(lam, mu) -> SkewDiagram:
        lam_p = lam if isinstance(lam, Partition) else Partition.make(lam)
        mu_p = mu if isinstance(mu, Partition) else Partition.make(mu)
        if not mu_p.contains(lam_p):
            raise ValueError(f"lambda {lam_p.parts} not contained in mu {mu_p.parts}")
        return SkewDiagram(lam_p, mu_p)

    @staticmethod
    def straight(mu) -> SkewDiagram:
        return SkewDiagram.make((), mu)

    def cells(self) -> list[tuple[int, int]]:
        """Skew cells in row-major order, 1-indexed."""
        out = []
        for i in range(1, len(self.mu) + 1):
            for j in range(self.lam[i] + 1, self.mu[i] + 1):
                out.append((i, j))
        return out

    def n_cells(self) -> int:
        return self.mu.size() - self.lam.size()

    def is_column(self) -> bool:
        return self.lam.size() == 0 and all(p == 1 for p in self.mu.parts)

    def is_row(self) -> bool:
        return self.lam.size() == 0 and len(self.mu) <= 1


@dataclass(frozen=True)
class Tableau:
    shape: SkewDiagram
    entries: tuple[tuple[int, int, IndexLabel], ...]  # row-major (i, j, label)

    def entry(self, i: int, j: int) -> IndexLabel:
        for ei, ej, lab in self.entries:
            if (ei, ej) == (i, j):
                return lab
        raise KeyError((i, j))

    def to_json(self) -> dict:
        return {"shape": {"lambda": list(self.shape.lam.parts),
                          "mu": list(self.shape.mu.parts)},
                "cells": [[i, j, str(lab)] for i, j, lab in self.entries]}

    @staticmethod
    def from_json(d: dict) -> Tableau:
        shape = SkewDiagram.make(d["shape"]["lambda"], d["shape"]["mu"])
        cells = tuple((i, j, parse_label(lab)) for i, j, lab in d["cells"])
        return Tableau(shape, cells)


# ---------------------------------------------------------------------------
# admissibility


def _labels_ordered(spec: AlgebraSpec) -> tuple[IndexLabel, ...]:
    return index_set(spec)


def _b_row_ok(spec: AlgebraSpec, left: IndexLabel, cur: IndexLabel,
              pos: dict[IndexLabel, int]) -> bool:
    # weakly increasing, strict when the left entry is in J_- u {0}
    if pos[left] > pos[cur]:
        return False
    strict = grading(spec, left) == 1 or left.kind == "zero"
    return pos[left] < pos[cur] if strict else True


def _b_col_ok(spec: AlgebraSpec, top: IndexLabel, cur: IndexLabel,
              pos: dict[IndexLabel, int]) -> bool:
    # weakly increasing, strict when the upper entry is in J_+ \ {0}
    if pos[top] > pos[cur]:
        return False
    strict = grading(spec, top) == 0 and top.kind != "zero"
    return pos[top] < pos[cur] if strict else True


def _d_col_ok(spec: AlgebraSpec, top: IndexLabel, cur: IndexLabel) -> bool:
    n = spec.rank
    extreme = {unb(n), bar(n)}
    if top in extreme and cur in extreme and top != cur:
        return True  # the allowed incomparable adjacency, any number of times
    lv_top, lv_cur = _d_level(spec, top), _d_level(spec, cur)
    if grading(spec, cur) == 1:      # entry below in J_-: weak
        return lv_top <= lv_cur
    if top in extreme and cur in extreme:
        return False                 # equal extreme labels are not strict
    return lv_top < lv_cur


def _d_row_ok(spec: AlgebraSpec, left: IndexLabel, cur: IndexLabel) -> bool:
    n = spec.rank
    extreme = {unb(n), bar(n)}
    lv_left, lv_cur = _d_level(spec, left), _d_level(spec, cur)
    if grading(spec, cur) == 0:      # entry to the right in J_+: weak
        if left in extreme and cur in extreme and left != cur:
            return False             # incomparable; also banned non-locally
        return lv_left <= lv_cur
    return lv_left < lv_cur


def _d_level(spec: AlgebraSpec, x: IndexLabel) -> int:
    n = spec.rank
    return x.value if x.kind == "unbarred" else 2 * n - x.value


def is_admissible(spec: AlgebraSpec, t: Tableau) -> bool:
    """Check every rule for the tableau, including the non-local D row rule."""
    for _, _, lab in t.entries:
        validate_label(spec, lab)
    entry = {(i, j): lab for i, j, lab in t.entries}
    expected = set(t.shape.cells())
    if set(entry) != expected:
        raise ValueError("tableau does not cover exactly the skew cells")

    if spec.family == "B":
        pos = {lab: k for k, lab in enumerate(_labels_ordered(spec))}
        for (i, j), lab in entry.items():
            left = entry.get((i, j - 1))
            if left is not None and not _b_row_ok(spec, left, lab, pos):
                return False
            top = entry.get((i - 1, j))
            if top is not None and not _b_col_ok(spec, top, lab, pos):
                return False
        return True

    if t.shape.is_column():
        col = [entry[(i, 1)] for i in range(1, t.shape.n_cells() + 1)]
        return all(_d_col_ok(spec, col[k], col[k + 1]) for k in range(len(col) - 1))
    if t.shape.is_row():
        row = [entry[(1, j)] for j in range(1, t.shape.n_cells() + 1)]
        if not all(_d_row_ok(spec, row[k], row[k + 1]) for k in range(len(row) - 1)):
            return False
        n = spec.rank
        return not ({unb(n), bar(n)} <= set(row))
    raise UnsupportedShape(
        "D-family admissibility is defined only for (1^a) and (m^1)")


# ---------------------------------------------------------------------------
# enumeration


def _iter_b_fillings(spec: AlgebraSpec, shape: SkewDiagram) -> Iterator[dict]:
    labels = _labels_ordered(spec)
    nlab = len(labels)
    pos_strict_row = [grading(spec, lab) == 1 or lab.kind == "zero"
                      for lab in labels]
    pos_strict_col = [grading(spec, lab) == 0 and lab.kind != "zero"
                      for lab in labels]
    cells = shape.cells()
    fill: dict[tuple[int, int], int] = {}

    def rec(k: int) -> Iterator[dict]:
        if k == len(cells):
            yield dict(fill)
            return
        i, j = cells[k]
        lo = 0
        left = fill.get((i, j - 1))
        if left is not None:
            lo = max(lo, left + (1 if pos_strict_row[left] else 0))
        top = fill.get((i - 1, j))
        if top is not None:
            lo = max(lo, top + (1 if pos_strict_col[top] else 0))
        for v in range(lo, nlab):
            fill[(i, j)] = v
            yield from rec(k + 1)
        fill.pop((i, j), None)

    yield from rec(0)


def _iter_d_lines(spec: AlgebraSpec, shape: SkewDiagram) -> Iterator[list[IndexLabel]]:
    labels = _labels_ordered(spec)
    n_cells = shape.n_cells()
    column = shape.is_column()
    n = spec.rank
    line: list[IndexLabel] = []
    extreme_counts = {unb(n): 0, bar(n): 0}  # row rule 3 bookkeeping

    def rec(k: int) -> Iterator[list[IndexLabel]]:
        if k == n_cells:
            yield list(line)
            return
        for lab in labels:
            if line:
                prev = line[-1]
                ok = _d_col_ok(spec, prev, lab) if column else _d_row_ok(spec, prev, lab)
                if not ok:
                    continue
            if not column and lab in extreme_counts:
                other = bar(n) if lab == unb(n) else unb(n)
                if extreme_counts[other] > 0:
                    continue
                extreme_counts[lab] += 1
            line.append(lab)
            yield from rec(k + 1)
            line.pop()
            if not column and lab in extreme_counts:
                extreme_counts[lab] -= 1

    yield from rec(0)


def enumerate_tableaux(spec: AlgebraSpec, shape: SkewDiagram) -> Iterator[Tableau]:
    """All admissible tableaux, each exactly once, in a deterministic order."""
    if spec.family == "B":
        labels = _labels_ordered(spec)
        cells = shape.cells()
        for fill in _iter_b_fillings(spec, shape):
            yield Tableau(shape, tuple((i, j, labels[fill[(i, j)]])
                                       for i, j in cells))
        return
    if not (shape.is_column() or shape.is_row()):
        raise UnsupportedShape(
            "D-family enumeration is defined only for (1^a) and (m^1)")
    cells = shape.cells()
    for line in _iter_d_lines(spec, shape):
        yield Tableau(shape, tuple((i, j, lab)
                                   for (i, j), lab in zip(cells, line)))


def count_tableaux(spec: AlgebraSpec, shape: SkewDiagram) -> int:
    """Number of admissible tableaux, without materializing Tableau objects."""
    if spec.family == "B":
        return sum(1 for _ in _iter_b_fillings(spec, shape))
    if not (shape.is_column() or shape.is_row()):
        raise UnsupportedShape(
            "D-family enumeration is defined only for (1^a) and (m^1)")
    return sum(1 for _ in _iter_d_lines(spec, shape))
