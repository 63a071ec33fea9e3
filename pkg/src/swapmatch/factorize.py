"""Factorizations into runs of pairwise-distinct characters.

A 1-factorization splits a string into factors that each contain at most
one occurrence of any symbol; its size k is what the pair-encoded engines
pay for instead of the pattern length. The collection variant factorizes
a pattern together with its two pair-exchanged companions under one
shared boundary sequence, which is what lets paired states of the three
automata land on the same bit position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DerivedTriple, as_bytes


def one_len(s, start: int) -> int:
    """Length of the maximal distinct-symbol run of `s` starting at `start`."""
    s = as_bytes(s)
    if not 0 <= start < len(s):
        raise ValueError(f"start {start} out of range")
    seen = set()
    i = start
    while i < len(s) and s[i] not in seen:
        seen.add(s[i])
        i += 1
    return i - start


@dataclass(frozen=True)
class OneFactorization:
    """Factor boundaries 0 = r_0 < r_1 < ... < r_k = m.

    Factor f covers positions [boundaries[f], boundaries[f+1]).
    """

    boundaries: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.boundaries) - 1

    def factor_slices(self):
        b = self.boundaries
        return [(b[f], b[f + 1]) for f in range(self.k)]

    def factors(self, s) -> list[bytes]:
        s = as_bytes(s)
        return [s[lo:hi] for lo, hi in self.factor_slices()]

    def is_valid_for(self, s) -> bool:
        """Concatenation covers `s` and every factor has distinct symbols."""
        s = as_bytes(s)
        b = self.boundaries
        if b[0] != 0 or b[-1] != len(s) or list(b) != sorted(set(b)):
            return False
        return all(len(set(s[lo:hi])) == hi - lo for lo, hi in self.factor_slices())


def greedy_one_factorization(s) -> OneFactorization:
    """Cut maximal distinct-symbol factors left to right.

    The greedy cut is minimal: no 1-factorization of `s` has fewer
    factors.
    """
    s = as_bytes(s)
    if len(s) < 1:
        raise ValueError("cannot factorize the empty string")
    bounds = [0]
    while bounds[-1] < len(s):
        bounds.append(bounds[-1] + one_len(s, bounds[-1]))
    return OneFactorization(tuple(bounds))


@dataclass(frozen=True)
class OneCollection:
    """Aligned 1-factorizations of (p, p_even, p_odd) with shared boundaries.

    Each factor length is the minimum of the three maximal run lengths at
    that position, so one boundary sequence is valid for all three
    strings by construction.
    """

    boundaries: tuple[int, ...]
    triple: DerivedTriple

    @property
    def k(self) -> int:
        return len(self.boundaries) - 1

    def factorization(self) -> OneFactorization:
        return OneFactorization(self.boundaries)

    def factors(self) -> tuple[list[bytes], list[bytes], list[bytes]]:
        fact = self.factorization()
        return tuple(fact.factors(s) for s in self.triple.strings())


def one_collection(triple: DerivedTriple) -> OneCollection:
    strings = triple.strings()
    m = len(strings[0])
    assert all(len(s) == m for s in strings)
    bounds = [0]
    while bounds[-1] < m:
        pos = bounds[-1]
        bounds.append(pos + min(one_len(s, pos) for s in strings))
    return OneCollection(tuple(bounds), triple)
