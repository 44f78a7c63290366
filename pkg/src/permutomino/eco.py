"""ECO expansions of a convex permutomino on its rightmost column.

Each operation maps a permutomino of size ``n`` to one of size ``n + 1``; over
all sources and all applicable operations every convex permutomino of size
``n + 1`` is produced exactly once.

Placement of the new cells, with the rightmost column spanning rows
``lo..hi``:

* ``alpha`` (rightmost column reaches the top row): new column ``lo..hi+1``.
* ``delta`` (rightmost column reaches the bottom row): new column one row
  below ``lo`` up to ``hi``, then shift everything up.
* ``beta(i)``: duplicate row ``r = lo + i - 1``; the new column covers the
  ``i`` rows ``lo..r`` under the copy.
* ``gamma(i)``: duplicate row ``r``; the new column covers the
  ``hi - r + 1`` rows from above the copy to the top of the old column.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

from .geometry import Cols, GeometryError, Permutomino


class OpNotApplicable(GeometryError):
    pass


class EcoOp(NamedTuple):
    kind: str  # "alpha" | "beta" | "gamma" | "delta"
    index: int = 0  # cell of the rightmost column, 1 from the bottom; 0 for alpha/delta

    def __str__(self) -> str:
        return f"{self.kind}:{self.index}" if self.kind in ("beta", "gamma") else self.kind

    @classmethod
    def parse(cls, text: str) -> "EcoOp":
        kind, _, idx = text.partition(":")
        if kind in ("alpha", "delta") and not idx:
            return cls(kind)
        if kind in ("beta", "gamma") and idx.isdigit() and int(idx) >= 1:
            return cls(kind, int(idx))
        raise ValueError(f"not an ECO operation: {text!r}")


ALPHA = EcoOp("alpha")
DELTA = EcoOp("delta")


def beta(i: int) -> EcoOp:
    return EcoOp("beta", i)


def gamma(i: int) -> EcoOp:
    return EcoOp("gamma", i)


def satisfies_u1(p: Permutomino) -> bool:
    return p.cols[-1][1] == p.size


def satisfies_u2(p: Permutomino) -> bool:
    return p.cols[-1][0] == 1


def applicable_ops(p: Permutomino) -> list[EcoOp]:
    lo, hi = p.cols[-1]
    ell = hi - lo + 1
    ops = [ALPHA] if satisfies_u1(p) else []
    ops += [beta(i) for i in range(1, ell + 1)]
    ops += [gamma(i) for i in range(1, ell + 1)]
    if satisfies_u2(p):
        ops.append(DELTA)
    return ops


def _duplicate_row(cols: Cols, r: int) -> Cols:
    return tuple((lo + 1, hi + 1) if lo > r else (lo, hi + 1) if hi >= r else (lo, hi)
                 for lo, hi in cols)


def expand(cols: Cols, n: int, skip_alpha: bool = False) -> Iterator[tuple[EcoOp, Cols]]:
    """Yield ``(op, child_cols)`` for every applicable op, in canonical order.

    Works on raw interval tuples for use in the generation hot loop.  Each
    duplicated row is computed once and shared by the matching beta and
    gamma children.
    """
    lo, hi = cols[-1]
    if hi == n and not skip_alpha:
        yield ALPHA, cols + ((lo, n + 1),)
    gammas = []
    for i, r in enumerate(range(lo, hi + 1), 1):
        dup = _duplicate_row(cols, r)
        yield EcoOp("beta", i), dup + ((lo, r),)
        gammas.append((EcoOp("gamma", i), dup + ((r + 1, hi + 1),)))
    yield from gammas
    if lo == 1:
        yield DELTA, tuple((a + 1, b + 1) for a, b in cols) + ((1, hi + 1),)


def apply_op(p: Permutomino, op: EcoOp) -> Permutomino:
    cols, n = p.cols, p.size
    lo, hi = cols[-1]
    ell = hi - lo + 1
    if op.kind == "alpha" and hi == n:
        return Permutomino(n + 1, cols + ((lo, n + 1),))
    if op.kind == "delta" and lo == 1:
        return Permutomino(n + 1, tuple((a + 1, b + 1) for a, b in cols) + ((1, hi + 1),))
    if op.kind in ("beta", "gamma") and 1 <= op.index <= ell:
        r = lo + op.index - 1
        dup = _duplicate_row(cols, r)
        last = (lo, r) if op.kind == "beta" else (r + 1, hi + 1)
        return Permutomino(n + 1, dup + (last,))
    raise OpNotApplicable(f"{op} does not apply to {cols}")


def children(p: Permutomino) -> list[tuple[EcoOp, Permutomino]]:
    n1 = p.size + 1
    return [(op, Permutomino(n1, c)) for op, c in expand(p.cols, p.size)]
