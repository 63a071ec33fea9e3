"""Word-level search loops, JIT-compiled when numba is available.

Each kernel consumes a chunk of code-mapped text and carries its engine
state across calls, so callers can stream arbitrarily large inputs.
Match positions are written into a caller-provided int64 buffer as
chunk-local indices; the return value is the match count.

With numba missing (or NUMBA_DISABLE_JIT set) the same functions run as
plain Python over numpy scalars: slow but identical.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - mirror environments without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap

_U1 = np.uint64(1)
_U63 = np.uint64(63)


@njit(cache=True)
def shift_and_kernel(codes, btab, state, fin_word, fin_mask, out):
    """Classic Shift-And over ceil(m/64) words. state: (nw,) carried."""
    nw = state.shape[0]
    cnt = 0
    for t in range(codes.shape[0]):
        c = np.int64(codes[t])
        carry = _U1  # initial-state injection at bit 0
        for i in range(nw):
            w = state[i]
            state[i] = ((w << _U1) | carry) & btab[c, i]
            carry = w >> _U63
        if state[fin_word] & fin_mask:
            out[cnt] = t
            cnt += 1
    return cnt


@njit(cache=True)
def plain_swap_kernel(codes, btab, pos_even, pos_odd, state, fin_word, fin_mask, out):
    """Three-automaton swap simulation over ceil(m/64) words.

    btab: (3, sigma+1, nw) match masks; state rows d1,d2,d3,c1,c2,c3.
    Each D advances from D|C by Shift-And; the C rows are then rebuilt
    from the new D rows through the position-parity masks. A match is a
    set final bit in d1|c1.
    """
    nw = pos_even.shape[0]
    cnt = 0
    for t in range(codes.shape[0]):
        c = np.int64(codes[t])
        for l in range(3):
            carry = _U1
            for i in range(nw):
                w = state[l, i] | state[3 + l, i]
                state[l, i] = ((w << _U1) | carry) & btab[l, c, i]
                carry = w >> _U63
        for i in range(nw):
            d1 = state[0, i]
            state[3, i] = (state[1, i] & pos_even[i]) | (state[2, i] & pos_odd[i])
            state[4, i] = d1 & pos_even[i]
            state[5, i] = d1 & pos_odd[i]
        if (state[0, fin_word] | state[3, fin_word]) & fin_mask:
            out[cnt] = t
            cnt += 1
    return cnt


@njit(cache=True)
def encoded_prefix_kernel(codes, intra, cross, init, state, labels, fin_word,
                          fin_mask, last_code, out):
    """Pair-encoded prefix automaton over ceil(k/64) words.

    intra/cross: (S*S, nw) keyed by previous*S+current code; init: (S, nw).
    labels[0] carries the previous text symbol. The final factor bit only
    counts when the symbol just read is the last pattern symbol.
    """
    S = init.shape[0]
    nw = init.shape[1]
    a = labels[0]
    cnt = 0
    for t in range(codes.shape[0]):
        c = np.int64(codes[t])
        row = a * S + c
        carry = np.uint64(0)
        for i in range(nw):
            w = state[i]
            x = w & cross[row, i]
            state[i] = (w & intra[row, i]) | ((x << _U1) | carry) | init[c, i]
            carry = x >> _U63
        if (state[fin_word] & fin_mask) != np.uint64(0) and c == last_code:
            out[cnt] = t
            cnt += 1
        a = c
    labels[0] = a
    return cnt


@njit(cache=True)
def encoded_swap_kernel(codes, intra, cross, init, tri, trx, state, labels,
                        fin_word, fin_mask, last1, last2, last3, m_odd, out):
    """Pair-encoded swap simulation over ceil(k/64) words.

    intra/cross: (3, S*S, nw) own-automaton tables; init: (3, S, nw);
    tri/trx: (4, S*S, nw) transfer tables in direction order 1->2, 1->3,
    2->1, 3->1. state rows are the three automaton configurations, all
    labeled by the last symbol (labels[0]). Every table row is selected
    by previous*S+current code, so transfers stay exact under any swap
    history.
    """
    S = init.shape[1]
    nw = init.shape[2]
    a = labels[0]
    cnt = 0
    for t in range(codes.shape[0]):
        c = np.int64(codes[t])
        row = a * S + c
        cy1 = np.uint64(0)
        cy2 = np.uint64(0)
        cy3 = np.uint64(0)
        cy12 = np.uint64(0)
        cy13 = np.uint64(0)
        cy21 = np.uint64(0)
        cy31 = np.uint64(0)
        for i in range(nw):
            d1 = state[0, i]
            d2 = state[1, i]
            d3 = state[2, i]
            x1 = d1 & cross[0, row, i]
            x2 = d2 & cross[1, row, i]
            x3 = d3 & cross[2, row, i]
            x12 = d1 & trx[0, row, i]
            x13 = d1 & trx[1, row, i]
            x21 = d2 & trx[2, row, i]
            x31 = d3 & trx[3, row, i]
            n1 = ((d1 & intra[0, row, i]) | ((x1 << _U1) | cy1) | init[0, c, i]
                  | (d2 & tri[2, row, i]) | ((x21 << _U1) | cy21)
                  | (d3 & tri[3, row, i]) | ((x31 << _U1) | cy31))
            n2 = ((d2 & intra[1, row, i]) | ((x2 << _U1) | cy2) | init[1, c, i]
                  | (d1 & tri[0, row, i]) | ((x12 << _U1) | cy12))
            n3 = ((d3 & intra[2, row, i]) | ((x3 << _U1) | cy3) | init[2, c, i]
                  | (d1 & tri[1, row, i]) | ((x13 << _U1) | cy13))
            cy1 = x1 >> _U63
            cy2 = x2 >> _U63
            cy3 = x3 >> _U63
            cy12 = x12 >> _U63
            cy13 = x13 >> _U63
            cy21 = x21 >> _U63
            cy31 = x31 >> _U63
            state[0, i] = n1
            state[1, i] = n2
            state[2, i] = n3
        p1 = state[0, fin_word]
        p2 = state[1, fin_word]
        p3 = state[2, fin_word]
        hit = False
        if (p1 & fin_mask) != np.uint64(0) and c == last1:
            hit = True
        elif m_odd == 1:
            if (p2 & fin_mask) != np.uint64(0) and c == last2:
                hit = True
        else:
            if (p3 & fin_mask) != np.uint64(0) and c == last3:
                hit = True
        if hit:
            out[cnt] = t
            cnt += 1
        a = c
    labels[0] = a
    return cnt


@njit(cache=True)
def nfa_subset_kernel(codes, succ, config_io, final_bit, out):
    """Subset simulation with the whole configuration in one int64.

    succ: (num_states, sigma+1) successor bitmasks; usable while
    num_states <= 62. config_io[0] carries the active-state mask.
    """
    cfg = config_io[0]
    cnt = 0
    for t in range(codes.shape[0]):
        c = np.int64(codes[t])
        nxt = np.int64(0)
        tmp = cfg
        idx = 0
        while tmp != 0:
            if tmp & np.int64(1):
                nxt |= succ[idx, c]
            tmp >>= 1
            idx += 1
        cfg = nxt
        if cfg & final_bit:
            out[cnt] = t
            cnt += 1
    config_io[0] = cfg
    return cnt
