"""Pair-encoded automata: k-bit configurations over factor decompositions.

A 1-factorization of a string partitions the prefix-automaton states
(minus the initial one) into k groups, one per factor, with at most one
state per incoming symbol in each group. A configuration after reading
text symbol `a` is then the pair (D, a): bit f of the k-bit vector D says
that the state of factor f with incoming label `a` is active. Stepping
costs a few table lookups per symbol and ceil(k/64) words of work.

The swap engine applies this encoding to all three automata of the
derived triple over the shared boundaries of their collection, so paired
states land on the same bit position. Cross-activations move states
between automata; because a state's incoming symbol generally differs
between source and target automaton, the transfer cannot be a plain
relabeling of the source vector. Instead it is consumed through
translation tables indexed by the last two text symbols (b, c): bit f is
set when the position of b in the source automaton's factor f has the
required parity and c sits at the successor position in the target
automaton (same factor, or the next one for the shifted variant). This
keeps the transfer exact for every history at the same O(sigma^2) table
budget.

Engines are immutable after build and shareable across threads; each
search owns its private state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import encoded_prefix_kernel, encoded_swap_kernel
from .bitvec import BitVector, words_for
from .core import CodeMap, DerivedTriple, as_bytes, derive_even_odd
from .factorize import OneCollection, OneFactorization, greedy_one_factorization, one_collection


def _set_bit(row: np.ndarray, bit: int) -> None:
    row[bit >> 6] |= np.uint64(1) << np.uint64(bit & 63)


class EncodedAutomaton:
    """Mask tables of one pair-encoded prefix automaton.

    intra[a, c]: bit f set iff factor f contains c immediately after a.
    cross[a, c]: bit f set iff a ends factor f and c starts factor f+1.
    init[c]:     bit 0 set iff c is the string's first symbol.
    idtab[f, c]: position of symbol c inside factor f (as a 0-based
                 position in the whole string), or -1 when absent.

    Sentinel-code rows stay all-zero, so out-of-alphabet text symbols
    reset search paths without branching.
    """

    __slots__ = ("string", "boundaries", "codemap", "k", "nwords",
                 "intra", "cross", "init", "idtab", "last_code")

    def __init__(self, string, boundaries, codemap, intra, cross, init, idtab, last_code):
        self.string = string
        self.boundaries = boundaries
        self.codemap = codemap
        self.k = len(boundaries) - 1
        self.nwords = intra.shape[2]
        self.intra = intra
        self.cross = cross
        self.init = init
        self.idtab = idtab
        self.last_code = last_code

    def _wrap(self, row: np.ndarray) -> BitVector:
        return BitVector.wrap(self.k, row.copy())

    def intra_mask(self, a: int, c: int) -> BitVector:
        return self._wrap(self.intra[a, c])

    def cross_mask(self, a: int, c: int) -> BitVector:
        return self._wrap(self.cross[a, c])

    def init_mask(self, c: int) -> BitVector:
        return self._wrap(self.init[c])

    def id_of(self, f: int, c: int) -> int:
        """Position id of code c in factor f, or -1."""
        return int(self.idtab[f, c])

    def table_word_counts(self) -> dict[str, int]:
        """Exact words held by each mask table (space accounting)."""
        return {
            "intra": self.intra.size,
            "cross": self.cross.size,
            "init": self.init.size,
        }

    def decode(self, d: BitVector, label: int) -> set[int]:
        """Active prefix-automaton state indices encoded by (d, label)."""
        states = set()
        for f in d.to_indices():
            pos = self.id_of(f, label)
            assert pos >= 0, "encoded bit without a labeled state"
            states.add(pos + 1)
        return states


def build_encoded(s, fact: OneFactorization, codemap: CodeMap) -> EncodedAutomaton:
    """Populate the mask tables for `s` under the given factor boundaries.

    Rejects boundary sequences that repeat a symbol inside a factor.
    """
    data = as_bytes(s)
    bounds = fact.boundaries
    if bounds[0] != 0 or bounds[-1] != len(data):
        raise ValueError("boundaries do not cover the string")
    k = fact.k
    S = codemap.sigma + 1
    nw = words_for(k)
    intra = np.zeros((S, S, nw), dtype=np.uint64)
    cross = np.zeros((S, S, nw), dtype=np.uint64)
    init = np.zeros((S, nw), dtype=np.uint64)
    idtab = np.full((k, S), -1, dtype=np.int32)
    for f in range(k):
        lo, hi = bounds[f], bounds[f + 1]
        prev = -1
        for pos in range(lo, hi):
            c = codemap.code_of(data[pos])
            if c == 0:
                raise ValueError("string contains a symbol outside the code map")
            if idtab[f, c] != -1:
                raise ValueError(f"factor {f} repeats symbol {data[pos]!r}")
            idtab[f, c] = pos
            if prev >= 0:
                _set_bit(intra[prev, c], f)
            prev = c
        if f + 1 < k:
            _set_bit(cross[prev, codemap.code_of(data[bounds[f + 1]])], f)
    _set_bit(init[codemap.code_of(data[0])], 0)
    return EncodedAutomaton(data, bounds, codemap, intra, cross, init, idtab,
                            codemap.code_of(data[-1]))


def encoded_prefix_step(d: BitVector, a: int, c: int, aut: EncodedAutomaton) -> BitVector:
    """Advance the pair (d, a) by symbol c; the result pairs with label c.

    Distributes over union of configurations, which is what allows the
    swap engine to merge independently stepped contributions.
    """
    stay = d & aut.intra_mask(a, c)
    move = (d & aut.cross_mask(a, c)).shl1()
    return stay | move | aut.init_mask(c)


def encoded_prefix_search(t, p) -> list[int]:
    """Exact-match end positions using the pair-encoded prefix automaton
    over the greedy minimal factorization of the pattern."""
    t = as_bytes(t)
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if len(t) < m:
        return []
    codemap = CodeMap(data)
    aut = build_encoded(data, greedy_one_factorization(data), codemap)
    state = np.zeros(aut.nwords, dtype=np.uint64)
    labels = np.zeros(1, dtype=np.int64)
    codes = codemap.encode(t)
    k = aut.k
    fin_word, fin_mask = (k - 1) >> 6, np.uint64(1) << np.uint64((k - 1) & 63)
    out = np.empty(len(t), dtype=np.int64)
    S = codemap.sigma + 1
    cnt = encoded_prefix_kernel(codes, aut.intra.reshape(S * S, -1),
                                aut.cross.reshape(S * S, -1), aut.init, state,
                                labels, fin_word, fin_mask, aut.last_code, out)
    return out[:cnt].tolist()


class ParityMasks:
    """Per-symbol selectors on the parity of the labeled position.

    ev[c]: bit f set iff the id of c in factor f is even and >= 1;
    od[c]: bit f set iff that id is odd. Position 0 stays out of ev: the
    state it would transfer is activated by the target automaton's own
    initial transition anyway (the triple's first symbols cover each
    other).
    """

    __slots__ = ("k", "ev", "od")

    def __init__(self, k: int, ev: np.ndarray, od: np.ndarray):
        self.k = k
        self.ev = ev
        self.od = od

    def ev_mask(self, c: int) -> BitVector:
        return BitVector.wrap(self.k, self.ev[c].copy())

    def od_mask(self, c: int) -> BitVector:
        return BitVector.wrap(self.k, self.od[c].copy())


def build_parity_masks(aut: EncodedAutomaton) -> ParityMasks:
    S = aut.codemap.sigma + 1
    ev = np.zeros((S, aut.nwords), dtype=np.uint64)
    od = np.zeros((S, aut.nwords), dtype=np.uint64)
    for f in range(aut.k):
        for c in range(1, S):
            pos = aut.id_of(f, c)
            if pos < 0:
                continue
            if pos % 2 == 1:
                _set_bit(od[c], f)
            elif pos >= 1:
                _set_bit(ev[c], f)
    return ParityMasks(aut.k, ev, od)


class TransferTables:
    """Cross-automaton activation transfer for one direction.

    A state of the source automaton at string position p (p of the
    required parity) moves to the target automaton and is immediately
    advanced: intra[b, c] keeps bit f when b sits at position p of the
    source's factor f and c sits at position p+1 of the target's same
    factor; cross[b, c] marks the factor-boundary case, where the
    contribution shifts to bit f+1. Indexing by the actual last two text
    symbols keeps the transfer exact under any swap history.
    """

    __slots__ = ("k", "intra", "cross")

    def __init__(self, k: int, intra: np.ndarray, cross: np.ndarray):
        self.k = k
        self.intra = intra
        self.cross = cross

    def intra_mask(self, b: int, c: int) -> BitVector:
        return BitVector.wrap(self.k, self.intra[b, c].copy())

    def cross_mask(self, b: int, c: int) -> BitVector:
        return BitVector.wrap(self.k, self.cross[b, c].copy())


def build_transfer_tables(src: EncodedAutomaton, dst: EncodedAutomaton,
                          parity: int) -> TransferTables:
    """Tables moving source states at positions of `parity` into `dst`."""
    codemap = src.codemap
    S = codemap.sigma + 1
    bounds = src.boundaries
    k = src.k
    m = len(src.string)
    intra = np.zeros((S, S, src.nwords), dtype=np.uint64)
    cross = np.zeros((S, S, src.nwords), dtype=np.uint64)
    for f in range(k):
        lo, hi = bounds[f], bounds[f + 1]
        for pos in range(lo, hi):
            if pos % 2 != parity or pos + 1 >= m:
                continue
            b = codemap.code_of(src.string[pos])
            c = codemap.code_of(dst.string[pos + 1])
            if pos + 1 < hi:
                _set_bit(intra[b, c], f)
            else:
                _set_bit(cross[b, c], f)
    return TransferTables(k, intra, cross)


@dataclass
class EncodedSwapEngine:
    """Three pair-encoded automata over shared collection boundaries,
    plus the four transfer directions between them."""

    m: int
    codemap: CodeMap
    triple: DerivedTriple
    collection: OneCollection
    a1: EncodedAutomaton
    a2: EncodedAutomaton
    a3: EncodedAutomaton
    pm1: ParityMasks
    pm2: ParityMasks
    pm3: ParityMasks
    t12: TransferTables   # spine -> even companion (even positions)
    t13: TransferTables   # spine -> odd companion (odd positions)
    t21: TransferTables   # even companion -> spine (even positions)
    t31: TransferTables   # odd companion -> spine (odd positions)
    _tables: dict = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return self.a1.k

    @property
    def nwords(self) -> int:
        return self.a1.nwords

    def automata(self) -> tuple[EncodedAutomaton, EncodedAutomaton, EncodedAutomaton]:
        return self.a1, self.a2, self.a3

    def transfers(self) -> tuple[TransferTables, ...]:
        return self.t12, self.t13, self.t21, self.t31

    def kernel_tables(self) -> dict[str, np.ndarray]:
        """Contiguous stacked tables for the streaming kernel (cached)."""
        if not self._tables:
            S = self.codemap.sigma + 1
            auts = self.automata()
            trs = self.transfers()
            self._tables = {
                "intra": np.ascontiguousarray(
                    np.stack([a.intra.reshape(S * S, -1) for a in auts])),
                "cross": np.ascontiguousarray(
                    np.stack([a.cross.reshape(S * S, -1) for a in auts])),
                "init": np.ascontiguousarray(np.stack([a.init for a in auts])),
                "tri": np.ascontiguousarray(
                    np.stack([t.intra.reshape(S * S, -1) for t in trs])),
                "trx": np.ascontiguousarray(
                    np.stack([t.cross.reshape(S * S, -1) for t in trs])),
            }
        return self._tables

    def space_report(self) -> dict:
        """Mask counts and word totals for the space-accounting checks."""
        S = self.codemap.sigma + 1
        per = {name: a.table_word_counts() for name, a in
               zip(("p", "p_even", "p_odd"), self.automata())}
        transfer_words = sum(t.intra.size + t.cross.size for t in self.transfers())
        return {
            "sigma": self.codemap.sigma,
            "k": self.k,
            "words_per_mask": self.nwords,
            "masks_per_pair_table": S * S,
            "automata": per,
            "transfer_words": transfer_words,
            "total_words": sum(sum(t.values()) for t in per.values()) + transfer_words,
        }


def build_swap_engine(p) -> EncodedSwapEngine:
    """Derive the triple, build its collection, and encode all three
    automata plus the transfer tables over the shared boundaries."""
    data = as_bytes(p)
    if len(data) < 1:
        raise ValueError("pattern must be nonempty")
    codemap = CodeMap(data)
    triple = derive_even_odd(data)
    coll = one_collection(triple)
    fact = coll.factorization()
    a1, a2, a3 = (build_encoded(s, fact, codemap) for s in triple.strings())
    return EncodedSwapEngine(len(data), codemap, triple, coll, a1, a2, a3,
                             build_parity_masks(a1), build_parity_masks(a2),
                             build_parity_masks(a3),
                             build_transfer_tables(a1, a2, 0),
                             build_transfer_tables(a1, a3, 1),
                             build_transfer_tables(a2, a1, 0),
                             build_transfer_tables(a3, a1, 1))


@dataclass(frozen=True)
class SwapEngineState:
    """Six k-bit vectors plus the two trailing text symbols labeling them.

    The d-vectors are labeled by the last symbol read (`last`); the
    c-vectors hold the pending cross-activations filtered out of the
    d-vectors, still expressed in their source automaton's id space.
    """

    d1: BitVector
    d2: BitVector
    d3: BitVector
    c1: BitVector
    c2: BitVector
    c3: BitVector
    last: int = 0
    prev: int = 0

    @classmethod
    def zeros(cls, k: int) -> "SwapEngineState":
        return cls(*(BitVector.zeros(k) for _ in range(6)))


def _translate(v: BitVector, tables: TransferTables, b: int, c: int) -> BitVector:
    stay = v & tables.intra_mask(b, c)
    move = (v & tables.cross_mask(b, c)).shl1()
    return stay | move


def encoded_swap_step(state: SwapEngineState, a: int, a2: int, c: int,
                      eng: EncodedSwapEngine) -> SwapEngineState:
    """Consume symbol c given labels a (last) and a2 (second-to-last).

    Each automaton advances its own configuration and absorbs the
    transfers aimed at it, all under the label pair (a, c). Reference
    implementation over BitVectors, mirrored word-for-word by the
    streaming kernel.
    """
    assert state.last == a and state.prev == a2, "state labels out of sync"
    auts = eng.automata()
    own = [encoded_prefix_step(getattr(state, f"d{l + 1}"), a, c, auts[l])
           for l in range(3)]
    d1 = own[0] | _translate(state.d2, eng.t21, a, c) | _translate(state.d3, eng.t31, a, c)
    d2 = own[1] | _translate(state.d1, eng.t12, a, c)
    d3 = own[2] | _translate(state.d1, eng.t13, a, c)
    c1 = (d2 & eng.pm2.ev_mask(c)) | (d3 & eng.pm3.od_mask(c))
    c2 = d1 & eng.pm1.ev_mask(c)
    c3 = d1 & eng.pm1.od_mask(c)
    return SwapEngineState(d1, d2, d3, c1, c2, c3, last=c, prev=a)


def encoded_swap_accepts(state: SwapEngineState, eng: EncodedSwapEngine) -> bool:
    """Occurrence test after a step.

    The final spine bit arrives either directly (automaton 1, labeled by
    the pattern's last symbol) or through a swap completion, which shows
    up in automaton 2 or 3 depending on the parity of the final position.
    """
    fin = eng.k - 1
    c = state.last
    if state.d1.test(fin) and c == eng.a1.last_code:
        return True
    if eng.m % 2 == 1:
        return state.d2.test(fin) and c == eng.a2.last_code
    return state.d3.test(fin) and c == eng.a3.last_code


def encoded_swap_search(t, p) -> list[int]:
    """End positions of swap matches via the pair-encoded engine."""
    t = as_bytes(t)
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if len(t) < m:
        return []
    eng = build_swap_engine(data)
    tables = eng.kernel_tables()
    state = np.zeros((3, eng.nwords), dtype=np.uint64)
    labels = np.zeros(1, dtype=np.int64)
    codes = eng.codemap.encode(t)
    k = eng.k
    fin_word, fin_mask = (k - 1) >> 6, np.uint64(1) << np.uint64((k - 1) & 63)
    out = np.empty(len(t), dtype=np.int64)
    cnt = encoded_swap_kernel(codes, tables["intra"], tables["cross"],
                              tables["init"], tables["tri"], tables["trx"],
                              state, labels, fin_word, fin_mask,
                              eng.a1.last_code, eng.a2.last_code,
                              eng.a3.last_code, m % 2, out)
    return out[:cnt].tolist()
