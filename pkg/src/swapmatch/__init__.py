"""Pattern matching with swaps of adjacent characters.

Four cross-verified search engines over one problem: an explicit
swap-NFA simulation and a windowed DP as oracles, a three-automaton
bit-parallel matcher paying ceil(m/64) words per symbol, and a
pair-encoded matcher paying ceil(k/64) words, where k is the size of the
shared factor decomposition of the pattern and its two pair-exchanged
companions.
"""

from .bitvec import WORD_BITS, BitVector, words_for
from .core import (CodeMap, DerivedTriple, ExplicitSwapNfa, MAX_ENUM_M,
                   Pattern, SwapPermutation, build_explicit_swap_nfa,
                   derive_even_odd, enumerate_swapped_versions, nfa_simulate,
                   oracle_dp_search, oracle_enum_search, phi, swap_nfa_dot)
from .encoded import (EncodedAutomaton, EncodedSwapEngine, ParityMasks,
                      SwapEngineState, build_encoded, build_parity_masks,
                      build_swap_engine, encoded_prefix_search,
                      encoded_prefix_step, encoded_swap_accepts,
                      encoded_swap_search, encoded_swap_step)
from .engines import ENGINE_NAMES, make_searcher, search, words_per_step
from .factorize import (OneCollection, OneFactorization,
                        greedy_one_factorization, one_collection, one_len)
from .plain import (PlainMasks, PlainSwapState, build_plain_masks,
                    plain_swap_accepts, plain_swap_search, plain_swap_step,
                    shift_and_search)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
