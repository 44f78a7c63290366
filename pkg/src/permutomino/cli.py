"""Command-line interface: generate, count, verify, tree, bench.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 bound exceeded.
"""
from __future__ import annotations

import argparse
import gc
import json
import sys
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from . import counting, generator, geometry, oracle
from .generator import GenNode

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

FORMATS = ("word", "perms", "intervals", "ascii", "json")
CLASS_FILTERS = ("all", "parallelogram", "directed", "stack", "active")
TREE_BOUND = 7


@dataclass(frozen=True)
class BenchRecord:
    n: int
    objects: int
    wall_time: float  # seconds, minimum over repeats
    per_object: float  # seconds

    def to_json(self) -> dict:
        return asdict(self)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _matches(node: GenNode, class_filter: str) -> bool:
    if class_filter == "all":
        return True
    p = node.value
    if class_filter == "active":
        return p.size >= 2 and generator.is_active(p)
    return class_filter in geometry.class_of(p)


def format_node(node: GenNode, fmt: str) -> str:
    p = node.value
    if fmt == "word":
        return geometry.boundary_word(p)
    if fmt == "perms":
        pair = geometry.permutations(p)
        return " ".join(map(str, pair.pi1)) + " / " + " ".join(map(str, pair.pi2))
    if fmt == "intervals":
        return " ".join(f"{lo}-{hi}" for lo, hi in p.cols)
    if fmt == "ascii":
        return geometry.render_ascii(p) + "\n"
    obj = geometry.to_json(p)
    obj["level"] = node.level
    obj["op"] = None if node.op is None else str(node.op)
    return json.dumps(obj)


def cmd_generate(size: int, fmt: str = "word", class_filter: str = "all",
                 limit: int | None = None, order: str = "dfs", workers: int | None = None,
                 out=None) -> int:
    out = out or sys.stdout
    emitted = 0
    for node in generator.generate_all(size, order=order, workers=workers):
        if limit is not None and emitted >= limit:
            break
        if _matches(node, class_filter):
            out.write(format_node(node, fmt) + "\n")
            emitted += 1
    return EXIT_OK


def cmd_count(size: int, method: str = "formula", table: bool = False, out=None) -> int:
    out = out or sys.stdout
    if method == "formula":
        report = counting.formula_report(size)
    elif method == "generate":
        report = counting.tally(generator.iter_permutominoes(size), size, "generated")
    else:
        try:
            found = oracle.brute_force_enumerate(size)
        except oracle.BoundExceeded as exc:
            sys.stderr.write(f"{exc}\n")
            return EXIT_BOUND
        report = counting.tally(found.values(), size, "oracle")
    if table:
        out.write(f"n = {size} ({report.source})\n")
        out.write("\n".join(report.table_rows()) + "\n")
    else:
        _emit(report.to_json(), out)
    return EXIT_OK


def cmd_verify(size: int, workers: int | None = None, out=None) -> int:
    out = out or sys.stdout
    nodes = lambda: (node.value for node in generator.generate_all(size, workers=workers))
    generated = counting.tally(nodes(), size, "generated")
    flags = counting.verify_counts(size, generated)
    ok = all(flags.values())
    _emit({"check": "formula-vs-generated", "n": size, "pass": ok, "flags": flags,
           "generated": generated.to_json()}, out)
    if size <= oracle.oracle_bound():
        report = oracle.cross_check(size, nodes())
        ok = ok and report.all_equal
        _emit({"check": "oracle", "pass": report.all_equal, **report.to_json()}, out)
    else:
        _emit({"check": "oracle", "skipped": True,
               "reason": f"size {size} above oracle bound {oracle.oracle_bound()}"}, out)
    _emit({"n": size, "result": "pass" if ok else "fail"}, out)
    return EXIT_OK if ok else EXIT_MISMATCH


def tree_dot(size: int) -> Iterator[str]:
    ids: dict = {}

    def node_line(node: GenNode) -> str:
        ids[node.value.cols] = name = f"n{len(ids)}"
        word = geometry.boundary_word(node.value)
        extra = ", peripheries=2" if node.parent is None else ""
        return f'  {name} [label="{word}", level={node.level}{extra}];'

    yield f'digraph "C{size}_tree" {{'
    yield "  node [shape=box, fontname=monospace];"
    yield node_line(GenNode(generator.root(size), 0))
    for parent, op, child in generator.tree_edges(size):
        yield node_line(child)
        yield f'  {ids[parent.value.cols]} -> {ids[child.value.cols]} [label="{op}"];'
    yield "}"


def cmd_tree(size: int, bound: int = TREE_BOUND, out=None) -> int:
    out = out or sys.stdout
    if size > bound:
        sys.stderr.write(f"tree rendering limited to size <= {bound}\n")
        return EXIT_BOUND
    for line in tree_dot(size):
        out.write(line + "\n")
    return EXIT_OK


def time_generation(n: int, repeats: int = 1) -> BenchRecord:
    best = None
    count = 0
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            count = 0
            start = time.perf_counter()
            for _node in generator.generate_all(n):
                count += 1
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
    finally:
        if gc_was_enabled:
            gc.enable()
    return BenchRecord(n, count, best, best / count)


def run_bench(sizes: Iterable[int], repeats: int = 1) -> list[BenchRecord]:
    sizes = list(sizes)
    records = []
    # untimed pass so the first size does not pay interpreter warm-up
    time_generation(sizes[0])
    for n in sizes:
        record = time_generation(n, repeats)
        if record.objects != counting.convex_count(n):
            raise AssertionError(f"n={n}: generated {record.objects}, expected "
                                 f"{counting.convex_count(n)}")
        records.append(record)
    return records


def per_object_ratio(records: Sequence[BenchRecord]) -> float:
    costs = [r.per_object for r in records]
    return max(costs) / min(costs)


def cmd_bench(max_size: int, repeats: int = 1, min_size: int = 3, out=None) -> int:
    out = out or sys.stdout
    try:
        records = run_bench(range(min_size, max_size + 1), repeats)
    except AssertionError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_MISMATCH
    for record in records:
        _emit(record.to_json(), out)
    _emit({"sizes": [min_size, max_size], "repeats": repeats,
           "per_object_ratio": per_object_ratio(records)}, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permutomino",
                                     description="Exhaustive generation of convex permutominoes.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="stream every convex permutomino of a size")
    gen.add_argument("--size", type=_positive, required=True)
    gen.add_argument("--format", choices=FORMATS, default="word")
    gen.add_argument("--class", dest="class_filter", choices=CLASS_FILTERS, default="all")
    gen.add_argument("--limit", type=_positive)
    gen.add_argument("--order", choices=("dfs", "bfs"), default="dfs")
    gen.add_argument("--parallel", type=_positive, metavar="WORKERS",
                     help="expand subtrees in worker processes (unordered output)")

    cnt = sub.add_parser("count", help="count by formula, generation, or brute force")
    cnt.add_argument("--size", type=_positive, required=True)
    cnt.add_argument("--method", choices=("formula", "generate", "oracle"), default="formula")
    cnt.add_argument("--table", action="store_true", help="print rows instead of JSON")

    ver = sub.add_parser("verify", help="check generation against formulas and the oracle")
    ver.add_argument("--size", type=_positive, required=True)
    ver.add_argument("--parallel", type=_positive, metavar="WORKERS")

    tree = sub.add_parser("tree", help="export the generating tree")
    tree.add_argument("--size", type=_positive, required=True)
    tree.add_argument("--dot", action="store_true", required=True)
    tree.add_argument("--bound", type=_positive, default=TREE_BOUND)

    bench = sub.add_parser("bench", help="time generation per object")
    bench.add_argument("--max-size", type=int, required=True)
    bench.add_argument("--min-size", type=_positive, default=3)
    bench.add_argument("--repeats", type=_positive, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate":
        return cmd_generate(args.size, args.format, args.class_filter, args.limit,
                            args.order, args.parallel)
    if args.command == "count":
        return cmd_count(args.size, args.method, args.table)
    if args.command == "verify":
        return cmd_verify(args.size, args.parallel)
    if args.command == "tree":
        if args.size < 2:
            parser.error("tree needs --size of at least 2")
        return cmd_tree(args.size, args.bound)
    if args.max_size < 3 or args.min_size > args.max_size:
        parser.error("bench needs 3 <= --max-size and --min-size <= --max-size")
    return cmd_bench(args.max_size, args.repeats, args.min_size)


if __name__ == "__main__":
    sys.exit(main())
