"""Convex permutominoes stored as column intervals.

A permutomino of size ``n`` lives on an ``n x n`` cell grid whose bottom-left
corner is the lattice point ``(1, 1)``.  Column ``i`` (1-based, left to right)
holds the cells of rows ``lo..hi`` inclusive; the cell in column ``x`` and row
``y`` is the unit square ``[x, x+1] x [y, y+1]``.  Every other view (boundary
word, corner points, permutation pair, ASCII) is derived from the intervals.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence

Cols = tuple  # tuple[tuple[int, int], ...]

DIRECTED = "directed"
PARALLELOGRAM = "parallelogram"
STACK = "stack"

_STEP = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}

SALIENT_PAIRS = {"NE", "ES", "SW", "WN"}
REENTRANT_CLASSES = {"EN": "alpha", "SE": "beta", "WS": "gamma", "NW": "delta"}


class GeometryError(ValueError):
    """Base class for rejected shapes and words."""


class BadDimensions(GeometryError):
    pass


class NotNormalized(GeometryError):
    pass


class NotConnected(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class NotPermutomino(GeometryError):
    pass


class BadWord(GeometryError):
    """Letters outside {N, E, S, W} or a start other than the canonical one."""


class NotClosed(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class Permutomino(NamedTuple):
    """An immutable convex permutomino.

    Construct through :func:`from_columns` unless the intervals are already
    known to be valid (the generator builds instances directly).
    """

    size: int
    cols: Cols

    def key(self) -> Cols:
        return canonical_key(self)

    def __str__(self) -> str:
        return render_ascii(self)


class CornerPoint(NamedTuple):
    pos: tuple[int, int]
    kind: str  # "salient" | "reentrant"
    cls: str  # salient: "NE"/"ES"/"SW"/"WN"; reentrant: "alpha"/"beta"/"gamma"/"delta"


class PermutationPair(NamedTuple):
    pi1: tuple[int, ...]
    pi2: tuple[int, ...]


def _unimodal(seq: Sequence[int], valley: bool) -> bool:
    """True when ``seq`` is non-increasing then non-decreasing (valley) or the mirror."""
    sign = 1 if valley else -1
    i, m = 1, len(seq)
    while i < m and sign * (seq[i] - seq[i - 1]) <= 0:
        i += 1
    while i < m and sign * (seq[i] - seq[i - 1]) >= 0:
        i += 1
    return i == m


def count_runs(values: Iterable[int]) -> int:
    """Number of maximal runs of consecutive integers in ``values``."""
    ordered = sorted(values)
    return sum(1 for k, v in enumerate(ordered) if k == 0 or v != ordered[k - 1] + 1)


def side_counts(cols: Sequence[tuple[int, int]]) -> tuple[list[int], list[int]]:
    """Count maximal vertical and horizontal boundary sides of a cell set.

    Returns ``(vertical, horizontal)`` where ``vertical[x - 1]`` is the number
    of maximal vertical sides on abscissa ``x`` and ``horizontal[y - 1]`` the
    number on ordinate ``y``, for coordinates ``1..m+1`` with ``m`` the larger
    bounding-box side.  Works on unit boundary edges, so it makes no convexity
    assumption.
    """
    cells = {(x, y) for x, (lo, hi) in enumerate(cols, 1) for y in range(lo, hi + 1)}
    top = max((y for _, y in cells), default=0)
    m = max(len(cols), top)
    vertical = []
    for x in range(1, m + 2):
        edges = [y for y in range(1, m + 1) if ((x - 1, y) in cells) != ((x, y) in cells)]
        vertical.append(count_runs(edges))
    horizontal = []
    for y in range(1, m + 2):
        edges = [x for x in range(1, m + 1) if ((x, y - 1) in cells) != ((x, y) in cells)]
        horizontal.append(count_runs(edges))
    return vertical, horizontal


def from_columns(size: int, cols: Iterable[Sequence[int]]) -> Permutomino:
    """Validate column intervals and return the permutomino they describe.

    Raises the :class:`GeometryError` subclass naming the first invariant that
    fails, checked in the order dimensions, normalization, connectivity,
    convexity, permutomino property.
    """
    cols = tuple((int(lo), int(hi)) for lo, hi in cols)
    if size < 1 or len(cols) != size:
        raise BadDimensions(f"expected {size} columns, got {len(cols)}")
    for i, (lo, hi) in enumerate(cols, 1):
        if lo > hi:
            raise BadDimensions(f"column {i} is empty: ({lo}, {hi})")
    if min(lo for lo, _ in cols) != 1 or max(hi for _, hi in cols) != size:
        raise NotNormalized(f"bounding box is not rows 1..{size}")
    for i in range(1, size):
        (a, b), (c, d) = cols[i - 1], cols[i]
        if max(a, c) > min(b, d):
            raise NotConnected(f"columns {i} and {i + 1} do not share a row")
    if not (_unimodal([lo for lo, _ in cols], valley=True)
            and _unimodal([hi for _, hi in cols], valley=False)):
        raise NotConvex("some row is not a single interval")
    vertical, horizontal = side_counts(cols)
    for x, count in enumerate(vertical, 1):
        if count != 1:
            raise NotPermutomino(f"{count} vertical sides on abscissa {x}")
    for y, count in enumerate(horizontal, 1):
        if count != 1:
            raise NotPermutomino(f"{count} horizontal sides on ordinate {y}")
    return Permutomino(size, cols)


def boundary_word(p: Permutomino) -> str:
    """Clockwise boundary word starting at ``(1, lo_1)``, going north first."""
    cols = p.cols
    out = ["N" * (cols[0][1] - cols[0][0] + 1)]
    for i, (_, hi) in enumerate(cols):
        out.append("E")
        if i + 1 < len(cols):
            step = cols[i + 1][1] - hi
            out.append("N" * step if step > 0 else "S" * -step)
    out.append("S" * (cols[-1][1] - cols[-1][0] + 1))
    for i in range(len(cols) - 1, -1, -1):
        out.append("W")
        if i > 0:
            step = cols[i - 1][0] - cols[i][0]
            out.append("N" * step if step > 0 else "S" * -step)
    return "".join(out)


def _walk(word: str, start: tuple[int, int]) -> list[tuple[int, int]]:
    x, y = start
    points = [(x, y)]
    for letter in word:
        dx, dy = _STEP[letter]
        x, y = x + dx, y + dy
        points.append((x, y))
    return points


def from_boundary_word(word: str) -> Permutomino:
    """Rebuild a permutomino from its canonical clockwise boundary word."""
    if not word or set(word) - set(_STEP):
        raise BadWord(f"word must be non-empty over N, E, S, W: {word!r}")
    if word[0] != "N":
        raise BadWord("canonical word starts with N")
    points = _walk(word, (0, 0))
    if points[-1] != (0, 0):
        raise NotClosed("path does not return to its start")
    if len(set(points[:-1])) != len(word):
        raise SelfIntersecting("path visits a lattice point twice")
    min_x = min(x for x, _ in points)
    min_y_left = min(y for x, y in points if x == min_x)
    if (min_x, min_y_left) != (0, 0):
        raise BadWord("word does not start at the lowest point of the leftmost side")
    min_y = min(y for _, y in points)
    points = [(x - min_x + 1, y - min_y + 1) for x, y in points]
    # Shoelace: clockwise traversal has negative signed area.
    area2 = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(points, points[1:]))
    if area2 >= 0:
        raise BadWord("boundary is not traversed clockwise")
    width = max(x for x, _ in points) - 1
    crossings: list[list[int]] = [[] for _ in range(width)]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y0 == y1:
            crossings[min(x0, x1) - 1].append(y0)
    cols = []
    for x, ys in enumerate(crossings, 1):
        if len(ys) != 2:
            raise NotConvex(f"column {x} is not a single interval")
        lo, hi = sorted(ys)
        cols.append((lo, hi - 1))
    return from_columns(width, cols)


_TURNS = {pair: ("salient", pair) for pair in SALIENT_PAIRS}
_TURNS.update((pair, ("reentrant", cls)) for pair, cls in REENTRANT_CLASSES.items())


def _corners(word: str, start: tuple[int, int]) -> list[CornerPoint]:
    points = _walk(word, start)  # points[len(word)] is the start again
    corners = []
    for k, pair in enumerate(map(str.__add__, word, word[1:] + word[0]), 1):
        turn = _TURNS.get(pair)
        if turn is not None:
            corners.append(CornerPoint(points[k], *turn))
    return corners


def corner_points(p: Permutomino) -> list[CornerPoint]:
    """Salient and reentrant points in clockwise order.

    The corner after letter ``k`` comes ``k``-th; the wrap-around corner at the
    start vertex is listed last.
    """
    return _corners(boundary_word(p), (1, p.cols[0][0]))


def _pair_from_corners(corners: list[CornerPoint], size: int) -> PermutationPair:
    # A_1 is the start vertex, i.e. the wrap-around corner listed last.
    verts = [corners[-1].pos] + [c.pos for c in corners[:-1]]
    pi1 = [0] * (size + 1)
    pi2 = [0] * (size + 1)
    for k, (x, y) in enumerate(verts):
        (pi1 if k % 2 == 0 else pi2)[x - 1] = y
    return PermutationPair(tuple(pi1), tuple(pi2))


def vertices(p: Permutomino) -> list[tuple[int, int]]:
    """Boundary vertices ``A_1, A_2, ...`` with ``A_1 = (1, lo_1)``."""
    corners = corner_points(p)
    return [corners[-1].pos] + [c.pos for c in corners[:-1]]


def permutations(p: Permutomino) -> PermutationPair:
    """The pair ``(pi1, pi2)`` read from odd and even boundary vertices."""
    return _pair_from_corners(corner_points(p), p.size)


def is_valid_pair(pair: PermutationPair) -> bool:
    m = len(pair.pi1)
    target = set(range(1, m + 1))
    return (len(pair.pi2) == m and set(pair.pi1) == target and set(pair.pi2) == target
            and all(a != b for a, b in zip(pair.pi1, pair.pi2)))


def cells(p: Permutomino) -> set[tuple[int, int]]:
    return {(x, y) for x, (lo, hi) in enumerate(p.cols, 1) for y in range(lo, hi + 1)}


def is_directed(p: Permutomino) -> bool:
    """Every cell is reachable from cell (1, 1) by north and east steps inside P."""
    shape = cells(p)
    if (1, 1) not in shape:
        return False
    seen = {(1, 1)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for nxt in ((x + 1, y), (x, y + 1)):
            if nxt in shape and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(shape)


def class_of(p: Permutomino) -> frozenset[str]:
    """Subclass flags.  Directedness uses the root-cell shortcut, which on
    convex shapes agrees with :func:`is_directed` (checked in the tests)."""
    if p.cols[0][0] != 1:
        return frozenset()
    flags = {DIRECTED}
    if p.cols[-1][1] == p.size:
        flags.add(PARALLELOGRAM)
    if all(lo == 1 for lo, _ in p.cols):
        flags.add(STACK)
    return frozenset(flags)


def degree(p: Permutomino) -> int:
    lo, hi = p.cols[-1]
    return hi - lo + 1


def canonical_key(p: Permutomino) -> Cols:
    # Shapes are already normalized, so the interval tuple identifies the cell set.
    return p.cols


def render_ascii(p: Permutomino) -> str:
    rows = []
    for y in range(p.size, 0, -1):
        rows.append("".join("#" if lo <= y <= hi else "." for lo, hi in p.cols))
    return "\n".join(rows)


def to_json(p: Permutomino) -> dict:
    word = boundary_word(p)
    pair = _pair_from_corners(_corners(word, (1, p.cols[0][0])), p.size)
    return {
        "size": p.size,
        "cols": [[lo, hi] for lo, hi in p.cols],
        "word": word,
        "pi1": list(pair.pi1),
        "pi2": list(pair.pi2),
        "classes": sorted(class_of(p)),
    }


def from_json(obj: dict) -> Permutomino:
    return from_columns(obj["size"], obj["cols"])


def unit_cell() -> Permutomino:
    return Permutomino(1, ((1, 1),))
