"""Fixed logical-length bit vectors backed by 64-bit machine words.

Bit 0 is the least significant bit of word 0. Every operation preserves
the invariant that bits at positions >= len are zero, so word arrays of
equal-length vectors compare directly. These vectors carry every engine
configuration and mask table in the package.
"""

from __future__ import annotations

import numpy as np

WORD_BITS = 64

_ONE = np.uint64(1)
_SHIFT_CARRY = np.uint64(WORD_BITS - 1)
_ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


def words_for(nbits: int) -> int:
    """Number of 64-bit words required to hold `nbits` logical bits."""
    return (nbits + WORD_BITS - 1) // WORD_BITS


def _tail_mask(nbits):
    r = nbits % WORD_BITS
    return _ALL_ONES if r == 0 else np.uint64((1 << r) - 1)


class BitVector:
    """A bit vector of fixed logical length.

    Plain data: clone with copy(), share read-only freely. Binary
    operations require equal lengths (violations are programming errors
    and trip an assertion).
    """

    __slots__ = ("n", "words")

    def __init__(self, n: int, _words: np.ndarray | None = None):
        if n < 1:
            raise ValueError("BitVector length must be >= 1")
        self.n = n
        if _words is None:
            self.words = np.zeros(words_for(n), dtype=np.uint64)
        else:
            self.words = _words

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        v = cls(n, np.full(words_for(n), _ALL_ONES, dtype=np.uint64))
        v.words[-1] &= _tail_mask(n)
        return v

    @classmethod
    def from_indices(cls, n: int, indices) -> "BitVector":
        v = cls(n)
        for i in indices:
            v.set(i)
        return v

    @classmethod
    def wrap(cls, n: int, words: np.ndarray) -> "BitVector":
        """Adopt an existing normalized word array (no copy)."""
        assert words.dtype == np.uint64 and words.shape == (words_for(n),)
        return cls(n, words)

    @property
    def nwords(self) -> int:
        return len(self.words)

    def copy(self) -> "BitVector":
        return BitVector(self.n, self.words.copy())

    def test(self, i: int) -> bool:
        assert 0 <= i < self.n
        return bool((self.words[i >> 6] >> np.uint64(i & 63)) & _ONE)

    def set(self, i: int) -> None:
        assert 0 <= i < self.n
        self.words[i >> 6] |= _ONE << np.uint64(i & 63)

    def clear(self, i: int) -> None:
        assert 0 <= i < self.n
        self.words[i >> 6] &= ~(_ONE << np.uint64(i & 63))

    def is_zero(self) -> bool:
        return not self.words.any()

    def popcount(self) -> int:
        return sum(int(w).bit_count() for w in self.words)

    def __and__(self, other: "BitVector") -> "BitVector":
        assert self.n == other.n
        return BitVector(self.n, self.words & other.words)

    def __or__(self, other: "BitVector") -> "BitVector":
        assert self.n == other.n
        return BitVector(self.n, self.words | other.words)

    def and_not(self, other: "BitVector") -> "BitVector":
        assert self.n == other.n
        return BitVector(self.n, self.words & ~other.words)

    def __invert__(self) -> "BitVector":
        w = ~self.words
        w[-1] &= _tail_mask(self.n)
        return BitVector(self.n, w)

    def shl1(self) -> "BitVector":
        """Shift left by one: bit i moves to i+1, bit n-1 is discarded,
        zero enters at bit 0. Carries propagate across word boundaries."""
        w = self.words
        out = w << _ONE
        if len(w) > 1:
            out[1:] |= w[:-1] >> _SHIFT_CARRY
        out[-1] &= _tail_mask(self.n)
        return BitVector(self.n, out)

    def to_indices(self) -> list[int]:
        out = []
        for wi, w in enumerate(self.words):
            w = int(w)
            while w:
                low = w & -w
                out.append(wi * WORD_BITS + low.bit_length() - 1)
                w ^= low
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"BitVector(n={self.n}, bits={self.to_indices()})"
