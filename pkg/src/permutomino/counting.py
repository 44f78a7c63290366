"""Exact counts of convex permutominoes and their subclasses."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .geometry import DIRECTED, PARALLELOGRAM, STACK, Permutomino, class_of

CLASSES = ("convex", "parallelogram", "directed", "stack")


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return comb(2 * n, n)


def convex_count(n: int) -> int:
    """Number of convex permutominoes of size ``n``: 2(n+3)4^(n-2) - (n/2)C(2n, n).

    Evaluated over the rationals so that n = 1 (where 4^(n-2) = 1/4) needs no
    special case; the result is asserted integral.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    value = 2 * (n + 3) * Fraction(4) ** (n - 2) - Fraction(n, 2) * comb(2 * n, n)
    assert value.denominator == 1, value
    return int(value)


def parallelogram_count(n: int) -> int:
    return catalan(n)


def directed_count(n: int) -> int:
    b = central_binomial(n)
    assert b % 2 == 0
    return b // 2


def stack_count(n: int) -> int:
    return 2 ** (n - 1)


# Sizes of the sets of first permutations pi1 realised by each subclass.

def parallelogram_perm_count(n: int) -> int:
    return catalan(n - 1)


def directed_perm_count(n: int) -> int:
    return central_binomial(n - 1)


def stack_perm_count(n: int) -> int:
    return 2 ** (n - 1)


@dataclass(frozen=True)
class CountReport:
    n: int
    convex: int
    parallelogram: int
    directed: int
    stack: int
    source: str  # "formula" | "generated" | "oracle"

    def __post_init__(self):
        if min(self.convex, self.parallelogram, self.directed, self.stack) < 0:
            raise ValueError("counts must be non-negative")

    def to_json(self) -> dict:
        return asdict(self)

    def table_rows(self) -> list[str]:
        return [f"{name:<14}{getattr(self, name):>12}" for name in CLASSES]


def formula_report(n: int) -> CountReport:
    return CountReport(n, convex_count(n), parallelogram_count(n), directed_count(n),
                       stack_count(n), "formula")


def tally(objects: Iterable[Permutomino], n: int, source: str) -> CountReport:
    counts = dict.fromkeys(CLASSES, 0)
    for p in objects:
        counts["convex"] += 1
        flags = class_of(p)
        counts["parallelogram"] += PARALLELOGRAM in flags
        counts["directed"] += DIRECTED in flags
        counts["stack"] += STACK in flags
    return CountReport(n, source=source, **counts)


def verify_counts(n: int, stats: CountReport) -> dict[str, bool]:
    """Per-class equality flags of ``stats`` against the closed formulas."""
    expected = formula_report(n)
    return {name: getattr(stats, name) == getattr(expected, name) for name in CLASSES}
