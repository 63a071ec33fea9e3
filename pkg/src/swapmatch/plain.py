"""Bit-parallel baselines over ceil(m/64) words per automaton.

`shift_and_search` is the classic exact matcher. The swap matcher runs
three prefix automata simultaneously, one per string of the derived
triple, with cross-activation vectors shuttling states between them:
bit p of a vector stands for spine state p+1. A match is a set bit m-1
in d1 | c1 (the final activation can first surface in the
cross-activation vector at the reporting step).

Mask tables are immutable after build and shareable across threads; all
search state is per-call local.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import plain_swap_kernel, shift_and_kernel
from .bitvec import BitVector, words_for
from .core import CodeMap, DerivedTriple, as_bytes, derive_even_odd


def _set_bit(row: np.ndarray, bit: int) -> None:
    row[bit >> 6] |= np.uint64(1) << np.uint64(bit & 63)


def build_match_table(s: bytes, codemap: CodeMap) -> np.ndarray:
    """(sigma+1, ceil(len/64)) masks: bit p of row c set iff s[p] has code c."""
    nw = words_for(len(s))
    table = np.zeros((codemap.sigma + 1, nw), dtype=np.uint64)
    for p, symbol in enumerate(s):
        _set_bit(table[codemap.code_of(symbol)], p)
    return table


@dataclass(frozen=True)
class PlainMasks:
    """Match masks for the derived triple plus the position-parity masks."""

    m: int
    codemap: CodeMap
    triple: DerivedTriple
    b: np.ndarray          # (3, sigma+1, nw)
    pos_even: BitVector    # bits at even positions
    pos_odd: BitVector

    @property
    def nwords(self) -> int:
        return self.b.shape[2]

    @property
    def b1(self) -> np.ndarray:
        return self.b[0]

    @property
    def b2(self) -> np.ndarray:
        return self.b[1]

    @property
    def b3(self) -> np.ndarray:
        return self.b[2]

    def match_mask(self, automaton: int, code: int) -> BitVector:
        """Mask of automaton 1..3 for a dense code, as a BitVector."""
        return BitVector.wrap(self.m, self.b[automaton - 1, code].copy())


def build_plain_masks(p) -> PlainMasks:
    data = as_bytes(p)
    triple = derive_even_odd(data)
    codemap = CodeMap(data)
    m = len(data)
    b = np.stack([build_match_table(s, codemap) for s in triple.strings()])
    pos_even = BitVector.from_indices(m, range(0, m, 2))
    pos_odd = BitVector.from_indices(m, range(1, m, 2))
    return PlainMasks(m, codemap, triple, b, pos_even, pos_odd)


@dataclass(frozen=True)
class PlainSwapState:
    """The six per-step vectors: three automaton configurations plus the
    cross-activations computed from them."""

    d1: BitVector
    d2: BitVector
    d3: BitVector
    c1: BitVector
    c2: BitVector
    c3: BitVector

    @classmethod
    def zeros(cls, m: int) -> "PlainSwapState":
        return cls(*(BitVector.zeros(m) for _ in range(6)))


def plain_swap_step(state: PlainSwapState, masks: PlainMasks, c: int) -> PlainSwapState:
    """Advance one text symbol (given as a dense code).

    Reference implementation over BitVectors; the streaming kernel in
    `_kernels` computes the identical transition word-by-word.
    """
    new_d = []
    for l in range(3):
        d = getattr(state, f"d{l + 1}")
        cc = getattr(state, f"c{l + 1}")
        merged = (d | cc).shl1()
        merged.set(0)
        new_d.append(merged & masks.match_mask(l + 1, c))
    d1, d2, d3 = new_d
    c1 = (d2 & masks.pos_even) | (d3 & masks.pos_odd)
    c2 = d1 & masks.pos_even
    c3 = d1 & masks.pos_odd
    return PlainSwapState(d1, d2, d3, c1, c2, c3)


def plain_swap_accepts(state: PlainSwapState, m: int) -> bool:
    return (state.d1 | state.c1).test(m - 1)


def _run_kernel_search(kernel_call, n: int) -> list[int]:
    out = np.empty(n, dtype=np.int64)
    cnt = kernel_call(out)
    return out[:cnt].tolist()


def shift_and_search(t, p) -> list[int]:
    """Exact-match end positions (swaps deliberately not recognized)."""
    t = as_bytes(t)
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if len(t) < m:
        return []
    codemap = CodeMap(data)
    btab = build_match_table(data, codemap)
    state = np.zeros(btab.shape[1], dtype=np.uint64)
    codes = codemap.encode(t)
    fin_word, fin_mask = (m - 1) >> 6, np.uint64(1) << np.uint64((m - 1) & 63)
    return _run_kernel_search(
        lambda out: shift_and_kernel(codes, btab, state, fin_word, fin_mask, out), len(t))


def plain_swap_search(t, p) -> list[int]:
    """End positions of swap matches via the three-automaton simulation."""
    t = as_bytes(t)
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if len(t) < m:
        return []
    masks = build_plain_masks(data)
    state = np.zeros((6, masks.nwords), dtype=np.uint64)
    codes = masks.codemap.encode(t)
    fin_word, fin_mask = (m - 1) >> 6, np.uint64(1) << np.uint64((m - 1) & 63)
    return _run_kernel_search(
        lambda out: plain_swap_kernel(codes, masks.b, masks.pos_even.words,
                                      masks.pos_odd.words, state, fin_word,
                                      fin_mask, out), len(t))
