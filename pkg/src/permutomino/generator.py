"""Exhaustive generation of convex permutominoes of a fixed size.

The generating tree has the staircase as its root.  The children of an active
node ``Q`` are the ECO expansions of ``psi(Q)``, the permutomino one size
smaller obtained by deleting the row of ``Q``'s single leftmost cell.  Only
active children are expanded further, so the traversal keeps ``O(n)`` pending
nodes per level and never needs a set of already-seen objects.
"""
from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Iterator, NamedTuple, Optional

from .eco import EcoOp, expand
from .geometry import Cols, GeometryError, Permutomino, corner_points, unit_cell


class SizeTooSmall(GeometryError):
    pass


class NotActive(GeometryError):
    pass


class GenNode(NamedTuple):
    value: Permutomino
    level: int
    parent: Optional[Cols] = None  # canonical key of the parent node
    op: Optional[EcoOp] = None


def root(n: int) -> Permutomino:
    if n < 1:
        raise SizeTooSmall("size must be at least 1")
    return Permutomino(n, tuple((1, i) for i in range(1, n + 1)))


def _active(cols: Cols) -> bool:
    # Single leftmost cell, and column 2 rises above it (alpha point at abscissa 2).
    lo, hi = cols[0]
    return lo == hi and cols[1][1] > hi


def _alpha_points(p: Permutomino) -> list[tuple[int, int]]:
    return sorted(c.pos for c in corner_points(p) if c.cls == "alpha")


def is_active(p: Permutomino) -> bool:
    if p.size < 2:
        raise SizeTooSmall("activity is defined for size 2 and up")
    lo, hi = p.cols[0]
    alphas = _alpha_points(p)
    return lo == hi and bool(alphas) and alphas[0][0] == 2


def alpha_run(p: Permutomino) -> int:
    """Length of the diagonal run of alpha points ``(2, h), (3, h+1), ...``.

    Bounds the longest downward path from an active node of the tree.
    """
    alphas = set(_alpha_points(p))
    left = [pos for pos in alphas if pos[0] == 2]
    if not left:
        return 0
    x, y = left[0]
    run = 0
    while (x, y) in alphas:
        run += 1
        x, y = x + 1, y + 1
    return run


def _psi(cols: Cols) -> Cols:
    r = cols[0][0]
    return tuple((lo - 1, hi - 1) if lo > r else (lo, hi - 1) if hi >= r else (lo, hi)
                 for lo, hi in cols[1:])


def _psi_inv(cols: Cols) -> Cols:
    r = cols[0][0]
    k = 0
    while k < len(cols) and cols[k][0] <= r <= cols[k][1]:
        k += 1
    rest = tuple((lo, hi + 1) if j < k else (lo + 1, hi + 1) if lo > r else (lo, hi)
                 for j, (lo, hi) in enumerate(cols))
    return ((r, r),) + rest


def psi(p: Permutomino) -> Permutomino:
    """Delete the row holding the single cell of the leftmost column."""
    if p.size < 2 or not is_active(p):
        raise NotActive(f"{p.cols} is not active")
    return Permutomino(p.size - 1, _psi(p.cols))


def psi_inv(p: Permutomino) -> Permutomino:
    """Insert, below the row of the start vertex, a row one cell longer on the left."""
    return Permutomino(p.size + 1, _psi_inv(p.cols))


def _edges_from(start: GenNode, n: int, order: str) -> Iterator[tuple[GenNode, EcoOp, GenNode]]:
    depth_first = order == "dfs"
    pending = deque([start])
    pop = pending.pop if depth_first else pending.popleft
    while pending:
        q = pop()
        level = q.level + 1
        key = q.value.cols
        active = []
        # alpha on psi(root) gives the root back
        for op, cols in expand(_psi(key), n - 1, skip_alpha=q.parent is None):
            child = GenNode(Permutomino(n, cols), level, key, op)
            yield q, op, child
            if _active(cols):
                active.append(child)
        pending.extend(reversed(active) if depth_first else active)


def tree_edges(n: int, order: str = "dfs") -> Iterator[tuple[GenNode, EcoOp, GenNode]]:
    """Edges ``(parent, op, child)`` of the generating tree in emission order."""
    if n < 2:
        raise SizeTooSmall("the generating tree has edges from size 2 on")
    if order not in ("dfs", "bfs"):
        raise ValueError(f"unknown traversal order {order!r}")
    return _edges_from(GenNode(root(n), 0), n, order)


def _subtree(start: GenNode, n: int) -> list[GenNode]:
    return [child for _, _, child in _edges_from(start, n, "dfs")]


def generate_all(n: int, order: str = "dfs", workers: Optional[int] = None) -> Iterator[GenNode]:
    """Lazily yield every convex permutomino of size ``n`` exactly once.

    ``order`` is ``"dfs"`` (default) or ``"bfs"``; the latter emits the tree
    level by level.  ``workers`` expands the subtrees below the root's active
    children in that many processes; emission order then depends on
    scheduling.
    """
    if n < 1:
        raise SizeTooSmall("size must be at least 1")
    if n == 1:
        yield GenNode(unit_cell(), 0)
        return
    if workers is None:
        start = GenNode(root(n), 0)
        yield start
        for _, _, child in tree_edges(n, order):
            yield child
        return
    yield from _generate_parallel(n, workers)


def _generate_parallel(n: int, workers: int) -> Iterator[GenNode]:
    start = GenNode(root(n), 0)
    yield start
    first = []
    for op, cols in expand(_psi(start.value.cols), n - 1, skip_alpha=True):
        child = GenNode(Permutomino(n, cols), 1, start.value.cols, op)
        yield child
        if _active(cols):
            first.append(child)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_subtree, node, n) for node in first]
        for fut in as_completed(futures):
            yield from fut.result()


def iter_permutominoes(n: int) -> Iterator[Permutomino]:
    for node in generate_all(n):
        yield node.value
