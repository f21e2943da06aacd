"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage, resource or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import kernels
from .census import count_graph_mosaics, lucas
from .kernels import CountOverflowError
from .magnified import BACKENDS, build_magnified
from .mosaic import (MosaicParseError, boundary_state, is_graph_mosaic, is_suitably_connected,
                     parse_mosaic, render_ascii)
from .oracle import (MAX_GRAPH_CELLS, brute_bridge_count, brute_count_graph_mosaics,
                     brute_magnified, brute_state_matrix)
from .statematrix import KINDS, ResourceLimitError, build_state_matrices, format_matrix, normalize_kind

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Mismatch(Exception):
    pass


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_count(args) -> int:
    threads = args.threads or kernels.default_threads()
    res = count_graph_mosaics(args.rows, args.cols, backend=args.backend, impl=args.impl, threads=threads)
    if args.json:
        print(json.dumps({
            "command": "count",
            "rows": res.rows,
            "cols": res.cols,
            "count": str(res.count),
            "method": res.method,
            "elapsed_ms": round(res.elapsed * 1000, 3),
            "backend": res.backend,
            "threads": res.threads,
            "peak_dim": res.peak_dim,
        }))
    else:
        print(res.count)
    return EXIT_OK


def _compare(label, got, want):
    """Raise _Mismatch naming the first differing entry of two int matrices."""
    for i, (grow, wrow) in enumerate(zip(got, want), start=1):
        for j, (g, w) in enumerate(zip(grow, wrow), start=1):
            if int(g) != int(w):
                raise _Mismatch(f"{label} entry ({i}, {j}): formula {int(g)} != oracle {int(w)}")


def _graph_sizes(max_cells):
    return [(r, c) for r in range(1, max_cells + 1) for c in range(1, max_cells + 1) if r * c <= max_cells]


def _verify_suites(max_cells, backend, impl, threads):
    def state_matrices():
        n = 0
        for m in range(1, min(3, max_cells) + 1):
            built = build_state_matrices(m)
            for kind in KINDS:
                _compare(f"state {kind} m={m}", built.by_kind(kind).tolist(), brute_state_matrix(m, kind).tolist())
                n += 1
        return n

    def magnified():
        n = 0
        for m, k in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)]:
            if m * k <= max_cells:
                mat = build_magnified(m, k, backend=backend, impl=impl, threads=threads)
                _compare(f"magnified ({m}, {k})", mat.to_ints(), brute_magnified(m, k))
                n += 1
        return n

    def graph_counts():
        n = 0
        for r, c in _graph_sizes(max_cells):
            got = count_graph_mosaics(r, c, backend=backend, impl=impl, threads=threads).count
            want = brute_count_graph_mosaics(r, c)
            if got != want:
                raise _Mismatch(f"graph count ({r}, {c}): formula {got} != oracle {want}")
            n += 1
        return n

    def bridge_counts():
        for t in range(1, 13):
            if lucas(t) != brute_bridge_count(t):
                raise _Mismatch(f"bridge count t={t}: lucas {lucas(t)} != oracle {brute_bridge_count(t)}")
        return 12

    return [("state-matrices", state_matrices), ("magnified", magnified),
            ("graph-counts", graph_counts), ("bridge-counts", bridge_counts)]


def cmd_verify(args) -> int:
    if not 1 <= args.max_cells <= MAX_GRAPH_CELLS:
        return _fail(f"max_cells must be in 1..{MAX_GRAPH_CELLS} (oracle guard)")
    threads = args.threads or kernels.default_threads()
    status = EXIT_OK
    print(f"{'suite':<16}{'checks':>8}{'seconds':>10}  result")
    for name, suite in _verify_suites(args.max_cells, args.backend, args.impl, threads):
        start = time.perf_counter()
        try:
            n, result, detail = suite(), "pass", None
        except _Mismatch as exc:
            n, result, detail = "-", "FAIL", str(exc)
        print(f"{name:<16}{n:>8}{time.perf_counter() - start:>10.2f}  {result}")
        if detail:
            print(f"  first mismatch: {detail}")
            status = EXIT_MISMATCH
            break
    return status


def cmd_matrix(args) -> int:
    if args.which == "state":
        rows = build_state_matrices(args.m).by_kind(normalize_kind(args.kind)).tolist()
    else:
        threads = args.threads or kernels.default_threads()
        rows = build_magnified(args.m, args.n, backend=args.backend, impl=args.impl, threads=threads).to_ints()
    text = format_matrix(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_mosaic(args) -> int:
    try:
        with open(args.path) as fh:
            mosaic = parse_mosaic(fh.read())
    except OSError as exc:
        return _fail(f"cannot read {args.path}: {exc.strerror}")
    except MosaicParseError as exc:
        return _fail(f"{args.path}: {exc}")
    if args.action == "render":
        sys.stdout.write(render_ascii(mosaic))
        return EXIT_OK
    if is_graph_mosaic(mosaic):
        print("graph-mosaic")
    elif is_suitably_connected(mosaic):
        print("suitably-connected")
    else:
        print("invalid")
    for side in "lrtb":
        print(f"{side}-state: {boundary_state(mosaic, side)}")
    return EXIT_OK


def _kernel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=BACKENDS, default="auto",
                   help="count arithmetic: fixed 128-bit, Python big ints, or fixed with promotion")
    p.add_argument("--threads", type=int, default=None, metavar="N",
                   help="worker threads for the compiled kernels (default: all available)")
    p.add_argument("--impl", choices=sorted(kernels.IMPLEMENTATIONS), default=None,
                   help=f"kernel implementation (default: {kernels.DEFAULT_IMPLEMENTATION})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphmosaic", description="Exact enumeration of graph mosaics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count graph mosaics of a rows x cols grid")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    _kernel_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check formula results against brute force")
    p.add_argument("max_cells", type=int)
    _kernel_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrix", help="dump a state or magnified state matrix")
    msub = p.add_subparsers(dest="which", required=True)
    q = msub.add_parser("state")
    q.add_argument("kind", help="one of " + ", ".join(KINDS))
    q.add_argument("m", type=int)
    q.add_argument("--out", metavar="PATH")
    q = msub.add_parser("magnified")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--out", metavar="PATH")
    _kernel_flags(q)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("mosaic", help="validate or render a .mosaic file")
    p.add_argument("action", choices=("validate", "render"))
    p.add_argument("path")
    p.set_defaults(func=cmd_mosaic)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None) is not None and args.threads < 1:
        return _fail("--threads must be at least 1")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        return _fail(str(exc))
    except CountOverflowError as exc:
        return _fail(f"overflow: {exc}")
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
