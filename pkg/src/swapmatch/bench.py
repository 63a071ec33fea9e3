"""Engine benchmarking over a shared corpus.

Feeds the corpus through each engine in streaming chunks, keeps the best
of `repeat` timings, and refuses to produce output when engines disagree
on the number of matches for the same pattern: a benchmark of a wrong
engine is worse than no benchmark.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .core import as_bytes, derive_even_odd
from .engines import CHUNK_SIZE, make_searcher
from .factorize import greedy_one_factorization, one_collection


class BenchMismatchError(RuntimeError):
    """Engines disagreed on match counts for the same pattern/corpus."""


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    n: int
    m: int
    sigma: int
    k: int
    k_prime: int
    ns_per_byte: float
    matches: int


CSV_FIELDS = ("engine", "n", "m", "sigma", "k", "k_prime", "ns_per_byte", "matches")


def _timed_search(engine: str, pattern: bytes, corpus: bytes,
                  chunk: int = CHUNK_SIZE) -> tuple[int, int]:
    searcher = make_searcher(engine, pattern)
    matches = 0
    start = time.perf_counter_ns()
    for lo in range(0, len(corpus), chunk):
        matches += len(searcher.feed(corpus[lo:lo + chunk]))
    return time.perf_counter_ns() - start, matches


def run_bench(patterns, corpus: bytes, engines, repeat: int = 3,
              chunk: int = CHUNK_SIZE) -> list[BenchRecord]:
    records = []
    n = len(corpus)
    for pattern in patterns:
        pattern = as_bytes(pattern)
        k_prime = greedy_one_factorization(pattern).k
        k = one_collection(derive_even_odd(pattern)).k
        sigma = len(set(pattern))
        counts = {}
        for engine in engines:
            # throwaway pass: JIT compilation / cache loading must not
            # leak into the timings
            _timed_search(engine, pattern, corpus[:chunk], chunk)
            best = None
            matches = 0
            for _ in range(max(1, repeat)):
                elapsed, matches = _timed_search(engine, pattern, corpus, chunk)
                best = elapsed if best is None else min(best, elapsed)
            counts[engine] = matches
            records.append(BenchRecord(engine, n, len(pattern), sigma, k,
                                       k_prime, best / max(n, 1), matches))
        if len(set(counts.values())) > 1:
            raise BenchMismatchError(
                f"match counts diverge for pattern {pattern!r}: {counts}")
    return records


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow([r.engine, r.n, r.m, r.sigma, r.k, r.k_prime,
                         f"{r.ns_per_byte:.3f}", r.matches])
    return buf.getvalue()
