"""Command-line front end.

Subcommands: c1p, interval, verify, gen, bench.  Exit codes: 0 for a
positive recognition (or successful verification), 1 when a certificate
is emitted (or verification fails), 2 for input errors.
"""

from __future__ import annotations

import argparse
import gc
import sys
import time

from .c1p import test_c1p
from .errors import InputDomainError
from .generate import gen_instances
from .graph import SimpleGraph, format_graph, parse_graph
from .lb import (
    format_interval_model,
    format_lb_certificate,
    parse_interval_model,
    parse_lb_certificate,
    recognize_interval,
)
from .matrix import (
    SparseBinaryMatrix,
    format_matrix,
    matrix_size,
    parse_matrix,
)
from .tucker import format_tucker_certificate, parse_tucker_certificate, tucker_submatrix
from .verify import (
    verify_interval_model,
    verify_lb_certificate,
    verify_tucker_certificate,
)

_RECURSION_LIMIT = 100000


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_c1p(args) -> int:
    m = parse_matrix(_read(args.path))
    outcome = test_c1p(m)
    if outcome.ok:
        print("C1P")
        print(" ".join(str(c) for c in outcome.ordering.perm))
        return 0
    print("NOT-C1P")
    print(format_tucker_certificate(tucker_submatrix(m)), end="")
    return 1


def cmd_interval(args) -> int:
    g = parse_graph(_read(args.path))
    result = recognize_interval(g)
    if result.is_interval:
        print("INTERVAL")
        print(format_interval_model(result.model), end="")
        return 0
    print("NOT-INTERVAL")
    print(format_lb_certificate(result.certificate), end="")
    return 1


def cmd_verify(args) -> int:
    cert_text = _read(args.certificate)
    first = cert_text.split("\n", 1)[0]
    if first.startswith("TUCKER"):
        m = parse_matrix(_read(args.path))
        verdict = verify_tucker_certificate(m, parse_tucker_certificate(cert_text))
    elif first.startswith("LB"):
        g = parse_graph(_read(args.path))
        verdict = verify_lb_certificate(
            g, parse_lb_certificate(cert_text), minimality=args.minimality_check
        )
    else:
        g = parse_graph(_read(args.path))
        verdict = verify_interval_model(g, parse_interval_model(cert_text))
    if verdict.ok:
        print("OK")
        return 0
    print(f"FAIL: {verdict.reason}")
    return 1


def cmd_gen(args) -> int:
    instance = gen_instances(args.spec, args.seed)
    if isinstance(instance, SparseBinaryMatrix):
        text = format_matrix(instance)
    elif isinstance(instance, SimpleGraph):
        text = format_graph(instance)
    else:  # pragma: no cover - generators return one of the two
        raise InputDomainError("generator produced an unknown instance type")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def bench_ladder(min_size: int, max_size: int, seed: int):
    """Matrix and graph runs over a doubling ladder of instance sizes.

    Yields (track, target_size, actual_size, elapsed_seconds) rows; the
    matrix track runs Tucker extraction on planted non-C1P instances, the
    graph track runs interval recognition on random interval graphs.
    Garbage collection is paused while timing so collector pauses do not
    distort the large sizes.
    """

    def timed(fn):
        gc.collect()
        gc.disable()
        try:
            start = time.perf_counter()
            out = fn()
            return out, time.perf_counter() - start
        finally:
            gc.enable()

    target = min_size
    while target <= max_size:
        cols = max(12, target // 40)
        rows = max(8, target // 6)
        spec = f"planted family=M_III k=5 pad_rows={rows} pad_cols={cols}"
        m = gen_instances(spec, seed)
        cert, elapsed = timed(lambda: tucker_submatrix(m))
        assert cert.kind is not None
        yield ("matrix", target, matrix_size(m), elapsed)

        g = gen_instances(f"interval n={max(4, target // 8)}", seed)
        result, elapsed = timed(lambda: recognize_interval(g))
        assert result.is_interval
        yield ("graph", target, g.num_vertices + g.num_edges, elapsed)
        target *= 2


def cmd_bench(args) -> int:
    print(f"{'track':<8} {'target':>10} {'size':>10} {'seconds':>10}")
    for track, target, size, elapsed in bench_ladder(
        args.min_size, args.max_size, args.seed
    ):
        print(f"{track:<8} {target:>10} {size:>10} {elapsed:>10.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuckerlb",
        description="Certifying consecutive-ones and interval-graph recognition.",
    )
    parser.add_argument("--format", choices=["text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("c1p", help="test a matrix; emit ordering or Tucker certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_c1p)

    p = sub.add_parser("interval", help="test a graph; emit model or LB certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("verify", help="check a certificate against its input")
    p.add_argument("path")
    p.add_argument("certificate")
    p.add_argument("--minimality-check", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a test instance from a spec string")
    p.add_argument("spec")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="scaling smoke test over a doubling ladder")
    p.add_argument("--min-size", type=int, default=10000)
    p.add_argument("--max-size", type=int, default=1000000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    sys.setrecursionlimit(_RECURSION_LIMIT)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputDomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
