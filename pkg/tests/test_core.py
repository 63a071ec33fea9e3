"""Pattern transforms, swap enumeration, oracles, and the explicit NFA."""

import numpy as np
import pytest

from swapmatch.core import (MAX_ENUM_M, Pattern, SwapPermutation,
                            build_explicit_swap_nfa, derive_even_odd,
                            enumerate_swapped_versions, nfa_simulate,
                            oracle_dp_search, oracle_enum_search, phi)
from swapmatch.verify import random_pattern, random_text


def test_phi_worked_example():
    assert phi(b"cagca") == b"accga"


def test_phi_trivial_and_short():
    assert phi(b"") == b""
    assert phi(b"abc") == b"bac"
    assert phi(b"x") == b"x"


def test_phi_is_involution_and_preserves_multiset():
    rng = np.random.default_rng(21)
    for _ in range(200):
        s = random_pattern(rng, int(rng.integers(1, 30)), int(rng.integers(0, 40)) + 1)
        assert phi(phi(s)) == s
        assert sorted(phi(s)) == sorted(s)


def test_derive_even_odd_worked_example():
    tr = derive_even_odd(b"cagca")
    assert (tr.p_even.data, tr.p_odd.data) == (b"cgaac", b"accga")


def test_derive_even_odd_short():
    assert derive_even_odd(b"a").p_even.data == b"a"
    assert derive_even_odd(b"a").p_odd.data == b"a"
    tr = derive_even_odd(b"ab")
    assert (tr.p_even.data, tr.p_odd.data) == (b"ab", b"ba")


def test_derived_strings_are_permutations():
    rng = np.random.default_rng(3)
    for _ in range(100):
        p = random_pattern(rng, 4, int(rng.integers(1, 40)))
        tr = derive_even_odd(p)
        assert sorted(tr.p_even.data) == sorted(p)
        assert sorted(tr.p_odd.data) == sorted(p)


def test_pattern_rejects_empty():
    with pytest.raises(ValueError):
        Pattern(b"")


def test_codemap_roundtrip_and_sentinel():
    from swapmatch.core import CodeMap

    cm = CodeMap(b"cagca")
    assert cm.sigma == 3
    codes = {cm.code_of(s) for s in b"acg"}
    assert codes == {1, 2, 3}
    for s in b"acg":
        assert cm.symbol_of(cm.code_of(s)) == s
    assert cm.code_of(ord("z")) == 0
    assert list(cm.encode(b"caz")) == [cm.code_of(ord("c")), cm.code_of(ord("a")), 0]
    with pytest.raises(ValueError):
        cm.symbol_of(0)


def test_enumerate_base_cases():
    assert enumerate_swapped_versions(b"ab") == {b"ab", b"ba"}
    assert enumerate_swapped_versions(b"aa") == {b"aa"}
    assert enumerate_swapped_versions(b"abc") == {b"abc", b"bac", b"acb"}


def test_enumerate_rejects_long_patterns():
    with pytest.raises(ValueError):
        enumerate_swapped_versions(bytes(MAX_ENUM_M + 1))


def test_enumerate_contains_identity_and_fibonacci_count():
    fib = [1, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    for m in (1, 2, 5, 9, 13):
        p = bytes(range(m))  # all adjacent pairs distinct
        versions = enumerate_swapped_versions(p)
        assert p in versions
        assert len(versions) == fib[m]  # F(m+1) with F(1)=F(2)=1


def test_every_version_comes_from_a_valid_permutation():
    rng = np.random.default_rng(9)
    for _ in range(60):
        p = random_pattern(rng, int(rng.integers(2, 5)), int(rng.integers(2, 10)))
        for v in enumerate_swapped_versions(p):
            # reconstruct the permutation from the diff positions
            mapping = list(range(len(p)))
            i = 0
            while i < len(p):
                if v[i] != p[i]:
                    assert i + 1 < len(p) and v[i] == p[i + 1] and v[i + 1] == p[i]
                    mapping[i], mapping[i + 1] = i + 1, i
                    i += 2
                else:
                    i += 1
            perm = SwapPermutation(tuple(mapping))
            perm.validate_for(p)
            assert perm.apply(p) == v


def test_swap_permutation_rejects_bad_cases():
    with pytest.raises(ValueError):
        SwapPermutation((1, 0)).validate_for(b"aa")  # equal characters
    with pytest.raises(ValueError):
        SwapPermutation((2, 1, 0)).validate_for(b"abc")  # moves two steps
    with pytest.raises(ValueError):
        SwapPermutation((0, 0)).validate_for(b"ab")  # not a permutation


def test_oracle_dp_examples():
    assert oracle_dp_search(b"cagac", b"cagca") == [4]
    assert oracle_dp_search(b"cagca", b"cagca") == [4]
    assert oracle_dp_search(b"xxxxx", b"cagca") == []
    assert oracle_dp_search(b"ab", b"abc") == []


def test_oracle_enum_examples():
    assert oracle_enum_search(b"acgca", b"cagca") == [4]
    assert oracle_enum_search(b"cagcacagac", b"cagca") == [4, 9]
    assert oracle_enum_search(b"ba", b"ab") == [1]


def test_oracles_agree_on_random_inputs():
    rng = np.random.default_rng(40)
    for _ in range(150):
        sigma = int(rng.choice([2, 4, 20]))
        p = random_pattern(rng, sigma, int(rng.integers(1, 13)))
        t = random_text(rng, sigma, 300)
        assert oracle_dp_search(t, p) == oracle_enum_search(t, p)


def test_nfa_construction_worked_example():
    nfa = build_explicit_swap_nfa(b"cagca")
    assert nfa.num_states == 10
    assert nfa.final == 5
    edges = set(nfa.edges())
    spine = {(0, ord("c"), 1), (1, ord("a"), 2), (2, ord("g"), 3),
             (3, ord("c"), 4), (4, ord("a"), 5)}
    swaps = {(0, ord("a"), 6), (6, ord("c"), 2), (2, ord("c"), 8),
             (8, ord("g"), 4), (1, ord("g"), 7), (7, ord("a"), 3),
             (3, ord("a"), 9), (9, ord("c"), 5)}
    assert edges == spine | swaps


def test_nfa_construction_short_patterns():
    nfa = build_explicit_swap_nfa(b"ab")
    assert nfa.num_states == 4
    assert set(nfa.edges()) == {(0, ord("a"), 1), (1, ord("b"), 2),
                                (0, ord("b"), 3), (3, ord("a"), 2)}
    nfa1 = build_explicit_swap_nfa(b"a")
    assert nfa1.num_states == 2
    assert set(nfa1.edges()) == {(0, ord("a"), 1)}


def test_nfa_aux_states_have_one_outgoing_edge():
    rng = np.random.default_rng(77)
    for _ in range(50):
        p = random_pattern(rng, int(rng.integers(1, 5)), int(rng.integers(2, 20)))
        nfa = build_explicit_swap_nfa(p)
        m = nfa.m
        for aux in range(m + 1, 2 * m):
            out = [(sym, dst) for (state, sym), succs in nfa.table.items()
                   if state == aux for dst in succs]
            assert out == [(p[aux - m - 1], aux - m + 1)]


def test_nfa_state_zero_loops_on_every_symbol():
    nfa = build_explicit_swap_nfa(b"cagca")
    for symbol in (ord("c"), ord("a"), ord("z"), 0):
        assert 0 in nfa.delta(0, symbol)


def test_nfa_simulation_trace():
    nfa = build_explicit_swap_nfa(b"cagca")
    positions, sets = nfa_simulate(nfa, b"cagac")
    assert positions == [4]
    assert 9 in sets[3]
    assert 5 in sets[4]


def test_nfa_simulation_two_state_path():
    nfa = build_explicit_swap_nfa(b"ab")
    positions, sets = nfa_simulate(nfa, b"ba")
    assert positions == [1]
    assert 3 in sets[0]
    assert 2 in sets[1]


def test_nfa_empty_text():
    nfa = build_explicit_swap_nfa(b"cagca")
    positions, sets = nfa_simulate(nfa, b"")
    assert positions == [] and sets == []


def test_nfa_matches_oracle():
    rng = np.random.default_rng(50)
    for _ in range(80):
        sigma = int(rng.choice([2, 4]))
        p = random_pattern(rng, sigma, int(rng.integers(1, 15)))
        t = random_text(rng, sigma, 250)
        positions, _ = nfa_simulate(build_explicit_swap_nfa(p), t)
        assert positions == oracle_dp_search(t, p)
