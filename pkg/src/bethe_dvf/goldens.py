"""Frozen reference expansions for osp(5|2) = B(2|1).

The three expansions below (single box column, height-2 column, length-2
row) were transcribed term by term from the published eigenvalue formulas
and are used as exact regression anchors: the tableaux-sum builder must
reproduce them after canonicalization.  Each line is one term in a small
text notation, ``phi(u+c)`` and ``Qa(u+c)`` factors with an optional leading
sign and a single ``/`` separating numerator from denominator.
"""

from __future__ import annotations

import re

from .symbolic import SymSum, SymTerm

_FACTOR_RE = re.compile(r"(phi|Q(\d+))\(u(?:([+-])(\d+))?\)")


def parse_term(text: str) -> SymTerm:
    """Parse one golden line into a canonical term."""
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    elif text.startswith("+"):
        text = text[1:]
    num_part, _, den_part = text.partition("/")
    qs: list[tuple[int, int, int]] = []
    phis: list[tuple[int, int]] = []
    for part, expsign in ((num_part, 1), (den_part, -1)):
        for m in _FACTOR_RE.finditer(part):
            shift = 0
            if m.group(3):
                shift = int(m.group(4)) * (1 if m.group(3) == "+" else -1)
            if m.group(1) == "phi":
                phis.append((shift, expsign))
            else:
                qs.append((int(m.group(2)), shift, expsign))
    return SymTerm.make(sign, qs, phis)


def parse_sum(lines: list[str], prefactor: str | None = None) -> SymSum:
    terms = [parse_term(line) for line in lines]
    total = SymSum.make(terms)
    if prefactor is not None:
        total = total * parse_term(prefactor)
    return total


# T^1 for B(2|1): the seven single-box terms.
T1_B21_LINES = [
    "- phi(u-2) phi(u+1) Q1(u+1) / Q1(u-1)",
    "+ phi(u) phi(u+1) Q1(u+1) Q2(u-2) / Q1(u-1) Q2(u)",
    "+ phi(u) phi(u+1) Q1(u) Q2(u+3) / Q1(u+2) Q2(u+1)",
    "+ phi(u) phi(u+1) Q2(u+2) Q3(u-1) / Q2(u) Q3(u+1)",
    "+ phi(u) phi(u+1) Q2(u-1) Q3(u+2) / Q2(u+1) Q3(u)",
    "+ phi(u) phi(u+1) Q3(u-1) Q3(u+2) / Q3(u) Q3(u+1)",
    "- phi(u) phi(u+3) Q1(u) / Q1(u+2)",
]

# T^2 for B(2|1): common prefactor phi(u-1) phi(u+2) times 24 terms.
T2_B21_PREFACTOR = "+ phi(u-1) phi(u+2)"
T2_B21_LINES = [
    "+ phi(u-3) phi(u) Q1(u+2) / Q1(u-2)",
    "+ phi(u-1) phi(u+2) Q1(u-1) Q1(u+2) / Q1(u) Q1(u+1)",
    "+ phi(u+1) phi(u+4) Q1(u-1) / Q1(u+3)",
    "- phi(u-1) phi(u) Q1(u+2) Q2(u-3) / Q1(u-2) Q2(u-1)",
    "- phi(u+1) phi(u+2) Q1(u-1) Q1(u+2) Q2(u-1) / Q1(u) Q1(u+1) Q2(u+1)",
    "- phi(u-1) phi(u) Q1(u-1) Q1(u+2) Q2(u+2) / Q1(u) Q1(u+1) Q2(u)",
    "+ phi(u) phi(u+1) Q1(u-1) Q1(u+2) Q2(u-1) Q2(u+2) / Q1(u) Q1(u+1) Q2(u) Q2(u+1)",
    "- phi(u+1) phi(u+2) Q1(u-1) Q2(u+4) / Q1(u+3) Q2(u+2)",
    "+ phi(u) phi(u+1) Q1(u+2) Q3(u-2) / Q1(u) Q3(u)",
    "- phi(u-1) phi(u) Q1(u+2) Q2(u+1) Q3(u-2) / Q1(u) Q2(u-1) Q3(u)",
    "- phi(u-1) phi(u) Q1(u+2) Q2(u-2) Q3(u+1) / Q1(u) Q2(u) Q3(u-1)",
    "+ phi(u) phi(u+1) Q1(u+2) Q2(u-2) Q2(u-1) Q3(u+1) / Q1(u) Q2(u) Q2(u+1) Q3(u-1)",
    "- phi(u-1) phi(u) Q1(u+2) Q3(u-2) Q3(u+1) / Q1(u) Q3(u-1) Q3(u)",
    "+ phi(u) phi(u+1) Q1(u+2) Q2(u-1) Q3(u-2) Q3(u+1) / Q1(u) Q2(u+1) Q3(u-1) Q3(u)",
    "- phi(u+1) phi(u+2) Q1(u-1) Q2(u+3) Q3(u) / Q1(u+1) Q2(u+1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q1(u-1) Q2(u+2) Q2(u+3) Q3(u) / Q1(u+1) Q2(u) Q2(u+1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q2(u+3) Q3(u-2) Q3(u+1) / Q2(u+1) Q3(u-1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q2(u-2) Q2(u+3) Q3(u) Q3(u+1) / Q2(u) Q2(u+1) Q3(u-1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q1(u-1) Q3(u+3) / Q1(u+1) Q3(u+1)",
    "- phi(u+1) phi(u+2) Q1(u-1) Q2(u) Q3(u+3) / Q1(u+1) Q2(u+2) Q3(u+1)",
    "+ phi(u) phi(u+1) Q3(u-2) Q3(u+3) / Q3(u-1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q2(u-2) Q3(u) Q3(u+3) / Q2(u) Q3(u-1) Q3(u+2)",
    "- phi(u+1) phi(u+2) Q1(u-1) Q3(u) Q3(u+3) / Q1(u+1) Q3(u+1) Q3(u+2)",
    "+ phi(u) phi(u+1) Q1(u-1) Q2(u+2) Q3(u) Q3(u+3) / Q1(u+1) Q2(u) Q3(u+1) Q3(u+2)",
]

# T_2 for B(2|1): common prefactor phi(u) phi(u+1) times 25 terms.
T21_B21_PREFACTOR = "+ phi(u) phi(u+1)"
T21_B21_LINES = [
    "+ phi(u-3) phi(u+4) Q1(u) Q1(u+1) / Q1(u-2) Q1(u+3)",
    "- phi(u-1) phi(u+4) Q1(u) Q1(u+1) Q2(u-3) / Q1(u-2) Q1(u+3) Q2(u-1)",
    "+ phi(u-1) phi(u+2) Q1(u+2) Q2(u-3) / Q1(u-2) Q2(u+1)",
    "- phi(u-3) phi(u+2) Q1(u+2) Q2(u-1) / Q1(u-2) Q2(u+1)",
    "- phi(u-1) phi(u+4) Q1(u-1) Q2(u+2) / Q1(u+3) Q2(u)",
    "+ phi(u-1) phi(u+2) Q1(u-1) Q2(u+4) / Q1(u+3) Q2(u)",
    "- phi(u-3) phi(u+2) Q1(u) Q1(u+1) Q2(u+4) / Q1(u-2) Q1(u+3) Q2(u+2)",
    "+ phi(u-1) phi(u+2) Q1(u) Q1(u+1) Q2(u-3) Q2(u+4) / Q1(u-2) Q1(u+3) Q2(u-1) Q2(u+2)",
    "- phi(u-1) phi(u+4) Q1(u+1) Q2(u+1) Q3(u-2) / Q1(u+3) Q2(u-1) Q3(u)",
    "+ phi(u-1) phi(u+2) Q1(u+1) Q2(u+1) Q2(u+4) Q3(u-2) / Q1(u+3) Q2(u-1) Q2(u+2) Q3(u)",
    "- phi(u-1) phi(u+4) Q1(u+1) Q2(u-2) Q3(u+1) / Q1(u+3) Q2(u) Q3(u-1)",
    "+ phi(u-1) phi(u+2) Q1(u+1) Q2(u-2) Q2(u+4) Q3(u+1) / Q1(u+3) Q2(u) Q2(u+2) Q3(u-1)",
    "- phi(u-1) phi(u+4) Q1(u+1) Q3(u-2) Q3(u+1) / Q1(u+3) Q3(u-1) Q3(u)",
    "+ phi(u-1) phi(u+2) Q1(u+1) Q2(u+4) Q3(u-2) Q3(u+1) / Q1(u+3) Q2(u+2) Q3(u-1) Q3(u)",
    "+ phi(u-1) phi(u+2) Q2(u+3) Q3(u-2) / Q2(u-1) Q3(u+2)",
    "- phi(u-3) phi(u+2) Q1(u) Q2(u+3) Q3(u) / Q1(u-2) Q2(u+1) Q3(u+2)",
    "+ phi(u-1) phi(u+2) Q1(u) Q2(u-3) Q2(u+3) Q3(u) / Q1(u-2) Q2(u-1) Q2(u+1) Q3(u+2)",
    "+ phi(u-1) phi(u+2) Q2(u-2) Q3(u+3) / Q2(u+2) Q3(u-1)",
    "+ phi(u-1) phi(u+2) Q2(u) Q3(u-2) Q3(u+3) / Q2(u+2) Q3(u-1) Q3(u)",
    "- phi(u-3) phi(u+2) Q1(u) Q2(u) Q3(u+3) / Q1(u-2) Q2(u+2) Q3(u+1)",
    "+ phi(u-1) phi(u+2) Q1(u) Q2(u-3) Q2(u) Q3(u+3) / Q1(u-2) Q2(u-1) Q2(u+2) Q3(u+1)",
    "+ phi(u-1) phi(u+2) Q2(u) Q2(u+1) Q3(u-2) Q3(u+3) / Q2(u-1) Q2(u+2) Q3(u) Q3(u+1)",
    "+ phi(u-1) phi(u+2) Q2(u+1) Q3(u-2) Q3(u+3) / Q2(u-1) Q3(u+1) Q3(u+2)",
    "- phi(u-3) phi(u+2) Q1(u) Q3(u) Q3(u+3) / Q1(u-2) Q3(u+1) Q3(u+2)",
    "+ phi(u-1) phi(u+2) Q1(u) Q2(u-3) Q3(u) Q3(u+3) / Q1(u-2) Q2(u-1) Q3(u+1) Q3(u+2)",
]


def golden_t1_b21() -> SymSum:
    return parse_sum(T1_B21_LINES)


def golden_t2_b21() -> SymSum:
    return parse_sum(T2_B21_LINES, T2_B21_PREFACTOR)


def golden_t21_b21() -> SymSum:
    return parse_sum(T21_B21_LINES, T21_B21_PREFACTOR)


GOLDENS = {
    "B(2|1) column height 1": golden_t1_b21,
    "B(2|1) column height 2": golden_t2_b21,
    "B(2|1) row length 2": golden_t21_b21,
}
