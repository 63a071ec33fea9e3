"""Pattern representation, swap semantics, oracles, and the explicit swap NFA.

A swapped version of a pattern P is obtained by exchanging disjoint pairs
of adjacent, unequal characters. The functions here define that language
three independent ways (enumeration, window DP, explicit NFA simulation);
the bit-parallel engines in `plain` and `encoded` are validated against
them.

All values are immutable after construction and safe to share across
threads; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_ENUM_M = 25


@dataclass(frozen=True)
class Pattern:
    """A nonempty byte string to search for."""

    data: bytes

    def __post_init__(self):
        if len(self.data) < 1:
            raise ValueError("pattern must be nonempty")

    @property
    def m(self) -> int:
        return len(self.data)


def as_bytes(p) -> bytes:
    """Coerce Pattern | bytes | str to raw bytes."""
    if isinstance(p, Pattern):
        return p.data
    if isinstance(p, str):
        return p.encode()
    return bytes(p)


class CodeMap:
    """Dense alphabet remap for one pattern.

    Symbols occurring in the pattern get codes 1..sigma (in symbol order);
    every other byte maps to the sentinel code 0, whose mask-table rows
    are always all-zero. This bounds table sizes to (sigma+1)^2 instead
    of 256^2.
    """

    __slots__ = ("table", "sigma", "symbols")

    def __init__(self, pattern):
        data = as_bytes(pattern)
        syms = sorted(set(data))
        self.sigma = len(syms)
        self.symbols = bytes(syms)  # code c maps back to symbols[c-1]
        self.table = np.zeros(256, dtype=np.uint16)
        for c, s in enumerate(syms, start=1):
            self.table[s] = c

    def code_of(self, symbol: int) -> int:
        return int(self.table[symbol])

    def symbol_of(self, code: int) -> int:
        if not 1 <= code <= self.sigma:
            raise ValueError(f"code {code} has no symbol")
        return self.symbols[code - 1]

    def encode(self, data: bytes) -> np.ndarray:
        return self.table[np.frombuffer(data, dtype=np.uint8)]


def phi(s) -> bytes:
    """Exchange adjacent pairs in the even-length head of `s`.

    Positions 2t and 2t+1 swap for 2t+1 < len(s); a trailing character of
    an odd-length input stays put. phi is an involution.
    """
    s = as_bytes(s)
    bound = (len(s) // 2) * 2
    out = bytearray(s)
    out[0:bound:2] = s[1:bound:2]
    out[1:bound:2] = s[0:bound:2]
    return bytes(out)


@dataclass(frozen=True)
class DerivedTriple:
    """A pattern with its two pair-exchanged companions.

    p_even keeps position 0 and applies phi to the rest; p_odd is phi of
    the whole pattern. Both are permutations of p's symbols and drive the
    even/odd halves of the swap decomposition.
    """

    p: Pattern
    p_even: Pattern
    p_odd: Pattern

    def strings(self) -> tuple[bytes, bytes, bytes]:
        return self.p.data, self.p_even.data, self.p_odd.data


def derive_even_odd(p) -> DerivedTriple:
    data = as_bytes(p)
    if len(data) < 1:
        raise ValueError("pattern must be nonempty")
    p_even = data[:1] + phi(data[1:])
    p_odd = phi(data)
    return DerivedTriple(Pattern(data), Pattern(p_even), Pattern(p_odd))


@dataclass(frozen=True)
class SwapPermutation:
    """A permutation made of disjoint adjacent transpositions.

    Valid when it is an involution (a), moves positions at most one step
    (b), and never exchanges equal characters of its pattern (c).
    """

    mapping: tuple[int, ...]

    def validate_for(self, pattern) -> None:
        data = as_bytes(pattern)
        pi = self.mapping
        if len(pi) != len(data) or sorted(pi) != list(range(len(data))):
            raise ValueError("not a permutation of the pattern positions")
        for i, j in enumerate(pi):
            if pi[j] != i:
                raise ValueError(f"position {i}: not an involution")
            if j not in (i - 1, i, i + 1):
                raise ValueError(f"position {i}: moves more than one step")
            if j != i and data[j] == data[i]:
                raise ValueError(f"position {i}: swaps equal characters")

    def apply(self, pattern) -> bytes:
        data = as_bytes(pattern)
        return bytes(data[j] for j in self.mapping)


def enumerate_swapped_versions(p) -> set[bytes]:
    """All swapped versions of the pattern, the identity included.

    Enumerates by deciding, left to right, whether each position starts a
    swapped pair. Rejects patterns longer than MAX_ENUM_M: the result
    grows like a Fibonacci sequence, so this is oracle-scale only.
    """
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if m > MAX_ENUM_M:
        raise ValueError(f"enumeration limited to m <= {MAX_ENUM_M}, got {m}")
    # tails[i] = versions of the suffix starting at i; each valid set of
    # swaps yields a distinct string, so no dedup is needed.
    tails: list[list[bytes]] = [[] for _ in range(m + 2)]
    tails[m] = [b""]
    tails[m + 1] = [b""]
    for i in range(m - 1, -1, -1):
        out = [data[i:i + 1] + t for t in tails[i + 1]]
        if i + 1 < m and data[i] != data[i + 1]:
            swapped = data[i + 1:i + 2] + data[i:i + 1]
            out.extend(swapped + t for t in tails[i + 2])
        tails[i] = out
    return set(tails[0])


def oracle_dp_search(t, p) -> list[int]:
    """End positions of swap matches via an independent per-window DP.

    For each window x the DP tracks ok(i) = "the first i pattern
    positions can be matched", with ok(i+1) fed by a direct character
    match and ok(i+2) by a pair swap. The equal-character restriction on
    swaps is dropped deliberately: swapping equal characters is the
    identity on strings, so the matched language is unchanged.
    """
    t = as_bytes(t)
    data = as_bytes(p)
    n, m = len(t), len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if n < m:
        return []
    text = np.frombuffer(t, dtype=np.uint8)
    nwin = n - m + 1
    ok = np.ones(nwin, dtype=bool)          # ok(0)
    pend = np.zeros(nwin, dtype=bool)       # swap contribution to ok(i+1)
    for i in range(m):
        window = text[i:i + nwin]
        direct = ok & (window == data[i])
        if i + 1 < m:
            new_pend = ok & (window == data[i + 1]) & (text[i + 1:i + 1 + nwin] == data[i])
        else:
            new_pend = np.zeros(nwin, dtype=bool)
        ok = direct | pend
        pend = new_pend
    return [int(x) + m - 1 for x in np.nonzero(ok)[0]]


def oracle_enum_search(t, p) -> list[int]:
    """End positions found by matching every swapped version of the pattern.

    Multi-pattern search over the full enumerated set; subject to the
    same length bound as the enumeration.
    """
    t = as_bytes(t)
    data = as_bytes(p)
    versions = enumerate_swapped_versions(data)
    n, m = len(t), len(data)
    if n < m:
        return []
    return [x + m - 1 for x in range(n - m + 1) if t[x:x + m] in versions]


class ExplicitSwapNfa:
    """Set-based swap NFA: ground truth for the bit-parallel engines.

    States 0..2m-1: a spine 0..m recognizing the pattern plus m-1
    auxiliary states m+1..2m-1, where state m+i records that a swap was
    started at position i-1 (its partner character is still owed). State
    m is final. State 0 keeps a self-loop on every symbol.

    Overlapping transition cases union: when adjacent pattern characters
    are equal, both the direct and the swap-start transition fire. This
    leaves the language unchanged and is what keeps the per-step
    configurations aligned with the three-automaton decomposition.
    """

    __slots__ = ("m", "pattern", "table")

    def __init__(self, m: int, pattern: bytes, table: dict):
        self.m = m
        self.pattern = pattern
        self.table = table  # (state, symbol) -> tuple of successors

    @property
    def num_states(self) -> int:
        return 2 * self.m

    @property
    def final(self) -> int:
        return self.m

    def delta(self, state: int, symbol: int) -> tuple[int, ...]:
        succ = self.table.get((state, symbol))
        if succ is not None:
            return succ
        return (0,) if state == 0 else ()

    def edges(self):
        """All labeled edges except the state-0 self-loop."""
        for (state, symbol), succs in sorted(self.table.items()):
            for dst in succs:
                if not (state == 0 and dst == 0):
                    yield state, symbol, dst

    def to_code_matrix(self, codemap: CodeMap) -> np.ndarray:
        """(num_states, sigma+1) successor bitmasks for the fast simulator."""
        assert self.num_states <= 62, "bitmask simulation limited to 2m <= 62"
        succ = np.zeros((self.num_states, codemap.sigma + 1), dtype=np.int64)
        succ[0, :] = 1  # self-loop
        for (state, symbol), succs in self.table.items():
            code = codemap.code_of(symbol)
            mask = 0
            for dst in succs:
                mask |= 1 << dst
            succ[state, code] |= mask
        return succ


def build_explicit_swap_nfa(p) -> ExplicitSwapNfa:
    data = as_bytes(p)
    m = len(data)
    if m < 1:
        raise ValueError("pattern must be nonempty")
    table: dict[tuple[int, int], set[int]] = {}

    def add(state, symbol, dst):
        table.setdefault((state, symbol), set()).add(dst)

    add(0, data[0], 1)
    add(0, data[0], 0)
    if m >= 2:
        add(0, data[1], m + 1)
        add(0, data[1], 0)
    for i in range(1, m):
        add(i, data[i], i + 1)
    for i in range(1, m - 1):
        add(i, data[i + 1], i + m + 1)
    for i in range(m + 1, 2 * m):
        add(i, data[i - m - 1], i - m + 1)
    frozen = {key: tuple(sorted(v)) for key, v in table.items()}
    return ExplicitSwapNfa(m, data, frozen)


def nfa_simulate(nfa: ExplicitSwapNfa, t, record_sets: bool = True):
    """Subset simulation of the swap NFA.

    Returns (end positions, per-step active-state sets). State 0 is
    re-injected at every step through its self-loop. The recorded sets
    are the reference for the decomposition correspondence tests; pass
    record_sets=False to skip them on long texts.
    """
    t = as_bytes(t)
    positions: list[int] = []
    sets: list[frozenset[int]] | None = [] if record_sets else None
    config = {0}
    final = nfa.final
    for j, symbol in enumerate(t):
        nxt: set[int] = set()
        for q in config:
            nxt.update(nfa.delta(q, symbol))
        config = nxt
        if final in config:
            positions.append(j)
        if sets is not None:
            sets.append(frozenset(config))
    return positions, sets


def swap_nfa_dot(nfa: ExplicitSwapNfa) -> str:
    """Graphviz DOT for the explicit swap NFA.

    Nodes q0..q{2m-1}; edge labels are symbol literals, with the state-0
    self-loop rendered once with label `*`.
    """
    def label(symbol: int) -> str:
        ch = chr(symbol)
        if ch.isprintable() and ch not in '"\\':
            return ch
        return f"\\\\x{symbol:02x}"

    lines = ["digraph swap_nfa {", "  rankdir=LR;", '  q0 [shape=circle];']
    for s in range(1, nfa.num_states):
        shape = "doublecircle" if s == nfa.final else "circle"
        lines.append(f"  q{s} [shape={shape}];")
    lines.append('  q0 -> q0 [label="*"];')
    for state, symbol, dst in nfa.edges():
        lines.append(f'  q{state} -> q{dst} [label="{label(symbol)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
