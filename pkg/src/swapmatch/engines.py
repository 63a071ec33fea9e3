"""Streaming searchers: one resumable per-symbol engine per search flavor.

Every searcher is built once per (engine, pattern) and fed chunks of raw
bytes; it returns absolute 0-based end positions and keeps its automaton
state across chunk boundaries, so memory stays independent of input
size. Engine tables are immutable and may be shared; each searcher owns
its mutable state.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .bitvec import words_for
from .core import CodeMap, as_bytes, build_explicit_swap_nfa, oracle_dp_search
from .encoded import build_swap_engine, build_encoded
from .factorize import greedy_one_factorization
from .plain import build_match_table, build_plain_masks

CHUNK_SIZE = 64 * 1024

ENGINE_NAMES = (
    "encoded-swap",
    "plain-swap",
    "oracle-dp",
    "nfa",
    "shift-and",
    "encoded-prefix",
)

SWAP_ENGINES = ("encoded-swap", "plain-swap", "oracle-dp", "nfa")
EXACT_ENGINES = ("shift-and", "encoded-prefix")


def _fin(bit: int) -> tuple[int, np.uint64]:
    return bit >> 6, np.uint64(1) << np.uint64(bit & 63)


class _StreamingSearcher:
    """Shared chunk bookkeeping; subclasses implement _feed_bytes."""

    def __init__(self, pattern):
        self.pattern = as_bytes(pattern)
        if len(self.pattern) < 1:
            raise ValueError("pattern must be nonempty")
        self.m = len(self.pattern)
        self.offset = 0

    def feed(self, data: bytes) -> list[int]:
        if not data:
            return []
        hits = self._feed_bytes(data)
        self.offset += len(data)
        return hits


class _KernelSearcher(_StreamingSearcher):
    codemap: CodeMap

    def _feed_bytes(self, data: bytes) -> list[int]:
        codes = self.codemap.encode(data)
        out = np.empty(len(codes), dtype=np.int64)
        cnt = self._run(codes, out)
        return (out[:cnt] + self.offset).tolist()


class ShiftAndSearcher(_KernelSearcher):
    def __init__(self, pattern):
        super().__init__(pattern)
        self.codemap = CodeMap(self.pattern)
        self.btab = build_match_table(self.pattern, self.codemap)
        self.state = np.zeros(self.btab.shape[1], dtype=np.uint64)
        self.fin_word, self.fin_mask = _fin(self.m - 1)

    def _run(self, codes, out):
        return _kernels.shift_and_kernel(codes, self.btab, self.state,
                                         self.fin_word, self.fin_mask, out)


class PlainSwapSearcher(_KernelSearcher):
    def __init__(self, pattern):
        super().__init__(pattern)
        self.masks = build_plain_masks(self.pattern)
        self.codemap = self.masks.codemap
        self.state = np.zeros((6, self.masks.nwords), dtype=np.uint64)
        self.fin_word, self.fin_mask = _fin(self.m - 1)

    def _run(self, codes, out):
        return _kernels.plain_swap_kernel(codes, self.masks.b,
                                          self.masks.pos_even.words,
                                          self.masks.pos_odd.words, self.state,
                                          self.fin_word, self.fin_mask, out)


class EncodedPrefixSearcher(_KernelSearcher):
    def __init__(self, pattern):
        super().__init__(pattern)
        self.codemap = CodeMap(self.pattern)
        self.aut = build_encoded(self.pattern,
                                 greedy_one_factorization(self.pattern),
                                 self.codemap)
        S = self.codemap.sigma + 1
        self.intra = self.aut.intra.reshape(S * S, -1)
        self.cross = self.aut.cross.reshape(S * S, -1)
        self.state = np.zeros(self.aut.nwords, dtype=np.uint64)
        self.labels = np.zeros(1, dtype=np.int64)
        self.fin_word, self.fin_mask = _fin(self.aut.k - 1)

    def _run(self, codes, out):
        return _kernels.encoded_prefix_kernel(codes, self.intra, self.cross,
                                              self.aut.init, self.state,
                                              self.labels, self.fin_word,
                                              self.fin_mask, self.aut.last_code,
                                              out)


class EncodedSwapSearcher(_KernelSearcher):
    def __init__(self, pattern):
        super().__init__(pattern)
        self.engine = build_swap_engine(self.pattern)
        self.codemap = self.engine.codemap
        self.tables = self.engine.kernel_tables()
        self.state = np.zeros((3, self.engine.nwords), dtype=np.uint64)
        self.labels = np.zeros(1, dtype=np.int64)
        self.fin_word, self.fin_mask = _fin(self.engine.k - 1)

    def _run(self, codes, out):
        eng = self.engine
        t = self.tables
        return _kernels.encoded_swap_kernel(codes, t["intra"], t["cross"],
                                            t["init"], t["tri"], t["trx"],
                                            self.state, self.labels,
                                            self.fin_word, self.fin_mask,
                                            eng.a1.last_code, eng.a2.last_code,
                                            eng.a3.last_code, self.m % 2, out)


class NfaSearcher(_StreamingSearcher):
    """Explicit swap-NFA subset simulation.

    Uses the int64 bitmask kernel while the automaton fits (2m <= 62),
    otherwise falls back to the set-based simulator, carrying the active
    configuration either way.
    """

    def __init__(self, pattern):
        super().__init__(pattern)
        self.nfa = build_explicit_swap_nfa(self.pattern)
        self.codemap = CodeMap(self.pattern)
        if self.nfa.num_states <= 62:
            self.succ = self.nfa.to_code_matrix(self.codemap)
            self.config_io = np.ones(1, dtype=np.int64)  # {q0}
            self.final_bit = np.int64(1) << np.int64(self.nfa.final)
        else:
            self.succ = None
            self.config = {0}

    def _feed_bytes(self, data: bytes) -> list[int]:
        if self.succ is not None:
            codes = self.codemap.encode(data)
            out = np.empty(len(codes), dtype=np.int64)
            cnt = _kernels.nfa_subset_kernel(codes, self.succ, self.config_io,
                                             self.final_bit, out)
            return (out[:cnt] + self.offset).tolist()
        hits = []
        final = self.nfa.final
        config = self.config
        for j, symbol in enumerate(data):
            nxt = set()
            for q in config:
                nxt.update(self.nfa.delta(q, symbol))
            config = nxt
            if final in config:
                hits.append(self.offset + j)
        self.config = config
        return hits


class OracleDpSearcher(_StreamingSearcher):
    """Windowed-DP oracle with an m-1 byte overlap buffer across chunks."""

    def __init__(self, pattern):
        super().__init__(pattern)
        self.tail = b""

    def _feed_bytes(self, data: bytes) -> list[int]:
        buf = self.tail + data
        base = self.offset - len(self.tail)
        hits = [base + j for j in oracle_dp_search(buf, self.pattern)
                if base + j >= self.offset]
        keep = min(len(buf), self.m - 1)
        self.tail = buf[len(buf) - keep:] if keep else b""
        return hits


_SEARCHERS = {
    "encoded-swap": EncodedSwapSearcher,
    "plain-swap": PlainSwapSearcher,
    "oracle-dp": OracleDpSearcher,
    "nfa": NfaSearcher,
    "shift-and": ShiftAndSearcher,
    "encoded-prefix": EncodedPrefixSearcher,
}


def make_searcher(engine: str, pattern):
    try:
        cls = _SEARCHERS[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINE_NAMES}")
    return cls(pattern)


def search(engine: str, pattern, text: bytes) -> list[int]:
    """One-shot search with any engine by name."""
    return make_searcher(engine, pattern).feed(as_bytes(text))


def words_per_step(engine: str, pattern) -> int:
    """Words touched per text symbol per automaton vector."""
    pattern = as_bytes(pattern)
    if engine == "encoded-swap":
        return build_swap_engine(pattern).nwords
    if engine == "encoded-prefix":
        return words_for(greedy_one_factorization(pattern).k)
    return words_for(len(pattern))
