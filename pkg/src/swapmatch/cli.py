"""Command-line front end: search, verify, bench, inspect.

Search reads inputs as raw bytes in 64 KiB chunks and reports 0-based end
positions, one per line (grep-style start positions on request). Exit
codes: 0 with at least one match, 1 with none, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import BenchMismatchError, run_bench, to_csv
from .bitvec import WORD_BITS, words_for
from .core import build_explicit_swap_nfa, derive_even_odd, swap_nfa_dot
from .encoded import build_swap_engine
from .engines import CHUNK_SIZE, ENGINE_NAMES, SWAP_ENGINES, make_searcher
from .factorize import greedy_one_factorization
from .verify import run_verify


def _pattern_bytes(arg: str) -> bytes:
    return os.fsencode(arg)


def _printable(data: bytes) -> str:
    return data.decode("latin-1").encode("unicode_escape").decode("ascii")


def _open_input(name: str):
    if name == "-":
        return sys.stdin.buffer
    return open(name, "rb")


def cmd_search(args) -> int:
    pattern = _pattern_bytes(args.pattern)
    if not pattern:
        print("swapmatch: pattern must be nonempty", file=sys.stderr)
        return 2
    inputs = args.files or ["-"]
    multi = len(inputs) > 1
    shift = len(pattern) - 1 if args.start_positions else 0
    json_rows = []
    any_match = False
    for name in inputs:
        try:
            stream = _open_input(name)
        except OSError as exc:
            print(f"swapmatch: {name}: {exc.strerror or exc}", file=sys.stderr)
            return 2
        searcher = make_searcher(args.engine, pattern)
        count = 0
        try:
            while True:
                chunk = stream.read(CHUNK_SIZE)
                if not chunk:
                    break
                for pos in searcher.feed(chunk):
                    any_match = True
                    count += 1
                    if args.count:
                        continue
                    shown = pos - shift
                    if args.json:
                        json_rows.append({"file": name, "position": shown})
                    elif multi:
                        print(f"{name}:{shown}")
                    else:
                        print(shown)
        except OSError as exc:
            print(f"swapmatch: {name}: {exc.strerror or exc}", file=sys.stderr)
            return 2
        finally:
            if stream is not sys.stdin.buffer:
                stream.close()
        if args.count:
            if args.json:
                json_rows.append({"file": name, "count": count})
            elif multi:
                print(f"{name}:{count}")
            else:
                print(count)
    if args.json:
        print(json.dumps(json_rows))
    return 0 if any_match else 1


def cmd_verify(args) -> int:
    try:
        sigmas = tuple(int(s) for s in args.sigma.split(","))
    except ValueError:
        print(f"swapmatch: bad --sigma list {args.sigma!r}", file=sys.stderr)
        return 2
    report = run_verify(sigmas=sigmas, m_max=args.m_max, n=args.n,
                        iterations=args.iterations, seed=args.seed)
    for line in report.summary_lines():
        print(line)
    if not report.ok:
        for failure in report.failures:
            print()
            print(failure.dump())
        return 1
    return 0


def cmd_bench(args) -> int:
    try:
        with open(args.corpus, "rb") as fh:
            corpus = fh.read()
    except OSError as exc:
        print(f"swapmatch: {args.corpus}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    patterns = [_pattern_bytes(p) for p in args.pattern]
    engines = args.engines.split(",")
    for engine in engines:
        if engine not in ENGINE_NAMES:
            print(f"swapmatch: unknown engine {engine!r}", file=sys.stderr)
            return 2
    try:
        records = run_bench(patterns, corpus, engines, repeat=args.repeat)
    except BenchMismatchError as exc:
        print(f"swapmatch: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(to_csv(records))
    if args.plot:
        from .report import render_bench_figure

        render_bench_figure(records, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def cmd_inspect(args) -> int:
    pattern = _pattern_bytes(args.pattern)
    if not pattern:
        print("swapmatch: pattern must be nonempty", file=sys.stderr)
        return 2
    if args.dot:
        sys.stdout.write(swap_nfa_dot(build_explicit_swap_nfa(pattern)))
        return 0
    triple = derive_even_odd(pattern)
    engine = build_swap_engine(pattern)
    coll = engine.collection
    names = ("p", "p_even", "p_odd")
    print(f"pattern: {_printable(pattern)}  (m={len(pattern)}, sigma={engine.codemap.sigma})")
    print(f"p_even: {_printable(triple.p_even.data)}")
    print(f"p_odd:  {_printable(triple.p_odd.data)}")
    for name, s in zip(names, triple.strings()):
        fact = greedy_one_factorization(s)
        factors = "|".join(_printable(f) for f in fact.factors(s))
        suffix = f"  (k'={fact.k})" if name == "p" else ""
        print(f"greedy {name}: {factors}{suffix}")
    for name, factors in zip(names, coll.factors()):
        joined = "|".join(_printable(f) for f in factors)
        suffix = f"  (k={coll.k})" if name == "p" else ""
        print(f"collection {name}: {joined}{suffix}")
    space = engine.space_report()
    print(f"words per mask: {space['words_per_mask']}  (k={space['k']}, w={WORD_BITS})")
    print(f"pair masks per table: {space['masks_per_pair_table']} "
          f"((sigma+1)^2 with sigma={space['sigma']})")
    print(f"total table words: {space['total_words']}")
    plain_words = words_for(len(pattern))
    print(f"plain-swap words per step: {plain_words}; "
          f"encoded-swap words per step: {space['words_per_mask']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapmatch",
        description="Find pattern occurrences up to swaps of adjacent characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="search files or stdin")
    p.add_argument("-p", "--pattern", required=True, help="pattern (raw bytes)")
    p.add_argument("-e", "--engine", default="encoded-swap", choices=ENGINE_NAMES)
    p.add_argument("--count", action="store_true", help="print match counts only")
    p.add_argument("--json", action="store_true",
                   help='emit [{"file": ..., "position": ...}] on stdout')
    p.add_argument("--start-positions", action="store_true",
                   help="report window start positions instead of end positions")
    p.add_argument("files", nargs="*", help="input files ('-' or none for stdin)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="randomized cross-verification of all engines")
    p.add_argument("--sigma", default="2,4", help="comma-separated alphabet sizes")
    p.add_argument("--m-max", type=int, default=25)
    p.add_argument("-n", type=int, default=2000, help="text length per case")
    p.add_argument("--iterations", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark engines over a corpus (CSV on stdout)")
    p.add_argument("-p", "--pattern", action="append", required=True,
                   help="pattern to bench (repeatable)")
    p.add_argument("corpus", help="corpus file")
    p.add_argument("--engines", default=",".join(SWAP_ENGINES[:2]),
                   help="comma-separated engine list")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--plot", metavar="FILE",
                   help="also render a throughput figure to FILE")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("inspect", help="show derived strings, factorizations, table sizes")
    p.add_argument("pattern")
    p.add_argument("--dot", action="store_true",
                   help="emit Graphviz DOT of the explicit swap NFA instead")
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
