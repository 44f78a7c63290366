"""Independent reference routines used only by the tests.

These work from raw cell sets and never call the library's word, corner or
validation code, so they can serve as oracles for it.
"""
from collections import Counter
from functools import lru_cache

from permutomino import generator


def cells_of(cols):
    return {(x, y) for x, (lo, hi) in enumerate(cols, 1) for y in range(lo, hi + 1)}


def trace_word(cells):
    """Clockwise boundary word of a simply connected cell set, from its lowest-left vertex."""
    edges = Counter()
    for x, y in cells:
        corners = [(x, y), (x, y + 1), (x + 1, y + 1), (x + 1, y)]
        for a, b in zip(corners, corners[1:] + corners[:1]):
            edges[(a, b)] += 1
    boundary = {e for e in edges if (e[1], e[0]) not in edges}
    nxt = {}
    for a, b in boundary:
        assert a not in nxt, "pinched boundary"
        nxt[a] = b
    min_x = min(x for x, _ in nxt)
    start = (min_x, min(y for x, y in nxt if x == min_x))
    letters = []
    cur = start
    while True:
        b = nxt[cur]
        dx, dy = b[0] - cur[0], b[1] - cur[1]
        letters.append({(0, 1): "N", (1, 0): "E", (0, -1): "S", (-1, 0): "W"}[(dx, dy)])
        cur = b
        if cur == start:
            return "".join(letters)


def side_coordinates(word, start=(1, 1)):
    """Abscissae of maximal vertical runs and ordinates of maximal horizontal runs."""
    xs, ys = [], []
    x, y = start
    prev = None
    for letter in word:
        vertical = letter in "NS"
        if letter != prev:
            (xs if vertical else ys).append(x if vertical else y)
        x += {"E": 1, "W": -1}.get(letter, 0)
        y += {"N": 1, "S": -1}.get(letter, 0)
        prev = letter
    return xs, ys


def is_convex_polyomino(cells):
    if not cells:
        return False
    seen = {next(iter(cells))}
    stack = list(seen)
    while stack:
        x, y = stack.pop()
        for c in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if c in cells and c not in seen:
                seen.add(c)
                stack.append(c)
    if seen != cells:
        return False
    for axis in (0, 1):
        lines = {}
        for c in cells:
            lines.setdefault(c[axis], []).append(c[1 - axis])
        for vals in lines.values():
            if max(vals) - min(vals) + 1 != len(vals):
                return False
    return True


def is_permutomino_by_trace(size, cols):
    """Convex permutomino test from cells alone: tight n x n box plus one side per line."""
    cells = cells_of(cols)
    if not is_convex_polyomino(cells):
        return False
    if {x for x, _ in cells} != set(range(1, size + 1)):
        return False
    if {y for _, y in cells} != set(range(1, size + 1)):
        return False
    word = trace_word(cells)
    start = (1, min(y for x, y in cells if x == 1))
    xs, ys = side_coordinates(word, start)
    full = list(range(1, size + 2))
    return sorted(xs) == full and sorted(ys) == full


@lru_cache(maxsize=None)
def generated(n):
    return tuple(node.value for node in generator.generate_all(n))
