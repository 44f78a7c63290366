"""Brute-force enumeration of convex permutominoes, independent of the generator.

Candidates are all sequences of ``n`` column intervals inside ``n`` rows that
form a convex polyomino with an ``n x n`` bounding box.  A candidate is kept
when every abscissa and ordinate carries exactly one maximal boundary side.
Nothing here imports the ECO or generator modules.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from . import counting
from .geometry import Cols, NotPermutomino, Permutomino, count_runs, from_columns

DEFAULT_BOUND = 6


class BoundExceeded(ValueError):
    pass


def oracle_bound() -> int:
    return int(os.environ.get("PERMUTOMINO_ORACLE_MAX", DEFAULT_BOUND))


def _check_bound(n: int, bound: int | None) -> None:
    bound = oracle_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"oracle limited to n <= {bound}, asked for {n}")


def _vertical_sides(prev: tuple[int, int], cur: tuple[int, int]) -> int:
    a = set(range(prev[0], prev[1] + 1))
    b = set(range(cur[0], cur[1] + 1))
    return count_runs(a ^ b)


def convex_candidates(n: int, prune_sides: bool = False) -> Iterator[Cols]:
    """All column-interval sequences forming a convex polyomino with an n x n box.

    With ``prune_sides`` a partial sequence is abandoned as soon as an
    abscissa between two placed columns carries other than one vertical side.
    """
    intervals = [(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1)]
    prefix: list[tuple[int, int]] = []

    # lo must fall then rise; hi must rise then fall.  The flags record
    # whether the second phase has started.
    def extend(lo_rising: bool, hi_falling: bool) -> Iterator[Cols]:
        if len(prefix) == n:
            if min(lo for lo, _ in prefix) == 1 and max(hi for _, hi in prefix) == n:
                yield tuple(prefix)
            return
        plo, phi = prefix[-1]
        for lo, hi in intervals:
            if max(lo, plo) > min(hi, phi):
                continue
            if lo_rising and lo < plo or hi_falling and hi > phi:
                continue
            if prune_sides and _vertical_sides((plo, phi), (lo, hi)) != 1:
                continue
            prefix.append((lo, hi))
            yield from extend(lo_rising or lo > plo, hi_falling or hi < phi)
            prefix.pop()

    for first in intervals:
        prefix.append(first)
        yield from extend(False, False)
        prefix.pop()


def brute_force_enumerate(n: int, bound: int | None = None) -> dict[Cols, Permutomino]:
    """Map canonical key -> permutomino for every convex permutomino of size ``n``."""
    if n < 1:
        raise ValueError("size must be at least 1")
    _check_bound(n, bound)
    found = {}
    for cols in convex_candidates(n, prune_sides=True):
        try:
            p = from_columns(n, cols)
        except NotPermutomino:
            continue
        found[p.cols] = p
    return found


@dataclass
class CrossCheck:
    n: int
    oracle: counting.CountReport
    formula: counting.CountReport
    generated_count: int
    sets_equal: bool
    missing: list = field(default_factory=list)  # in oracle, not generated
    extra: list = field(default_factory=list)  # generated, not in oracle (or repeated)

    @property
    def formula_equal(self) -> bool:
        return all(counting.verify_counts(self.n, self.oracle).values())

    @property
    def all_equal(self) -> bool:
        return self.sets_equal and self.formula_equal and self.generated_count == self.formula.convex

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "oracle": self.oracle.to_json(),
            "formula": self.formula.to_json(),
            "generated_count": self.generated_count,
            "sets_equal": self.sets_equal,
            "formula_equal": self.formula_equal,
            "all_equal": self.all_equal,
        }


def cross_check(n: int, generated, bound: int | None = None) -> CrossCheck:
    """Compare the oracle set against ``generated`` (an iterable of permutominoes).

    The caller supplies the generated stream, which keeps this module free of
    any dependency on the generator.
    """
    truth = brute_force_enumerate(n, bound)
    seen: set[Cols] = set()
    extra = []
    count = 0
    for p in generated:
        count += 1
        if p.cols in seen or p.cols not in truth:
            extra.append(p.cols)
        seen.add(p.cols)
    missing = [key for key in truth if key not in seen]
    return CrossCheck(
        n=n,
        oracle=counting.tally(truth.values(), n, "oracle"),
        formula=counting.formula_report(n),
        generated_count=count,
        sets_equal=not missing and not extra,
        missing=missing,
        extra=extra,
    )

