"""Randomized cross-verification of every engine against the oracles.

One deterministic PRNG drives pattern/text generation; each case runs
the full engine chain plus the structural checks (per-step decomposition
correspondence, collection size bounds, id-mapping identities). Failures
are minimized by greedily trimming the text and pattern while the
disagreement persists, so a reported counterexample is small enough to
trace by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (MAX_ENUM_M, build_explicit_swap_nfa, derive_even_odd,
                   nfa_simulate, oracle_dp_search, oracle_enum_search)
from .encoded import build_swap_engine, encoded_swap_search
from .engines import make_searcher
from .factorize import greedy_one_factorization, one_collection
from .plain import (PlainSwapState, build_plain_masks, plain_swap_search,
                    plain_swap_step)


def random_pattern(rng: np.random.Generator, sigma: int, m: int) -> bytes:
    return bytes(rng.integers(0, sigma, size=m, dtype=np.uint8))


def random_text(rng: np.random.Generator, sigma: int, n: int) -> bytes:
    return bytes(rng.integers(0, sigma, size=n, dtype=np.uint8))


@dataclass
class Failure:
    check: str
    pattern: bytes
    text: bytes | None
    detail: str

    def dump(self) -> str:
        lines = [f"check: {self.check}",
                 f"pattern ({len(self.pattern)} bytes): {self.pattern.hex()}"]
        if self.text is not None:
            lines.append(f"text ({len(self.text)} bytes): {self.text.hex()}")
        lines.append(self.detail)
        return "\n".join(lines)


def engine_results(p: bytes, t: bytes, include_enum: bool = True,
                   include_nfa: bool = True) -> dict[str, list[int]]:
    results = {
        "oracle-dp": oracle_dp_search(t, p),
        "plain-swap": plain_swap_search(t, p),
        "encoded-swap": encoded_swap_search(t, p),
    }
    if include_enum and len(p) <= MAX_ENUM_M:
        results["oracle-enum"] = oracle_enum_search(t, p)
    if include_nfa:
        results["nfa"] = make_searcher("nfa", p).feed(t)
    return results


def equivalence_mismatch(p: bytes, t: bytes, **kw) -> str | None:
    """None when every engine agrees, else a summary of the split."""
    results = engine_results(p, t, **kw)
    reference = results["oracle-dp"]
    bad = {name: out for name, out in results.items() if out != reference}
    if not bad:
        return None
    lines = [f"oracle-dp: {reference}"]
    lines += [f"{name}: {out}" for name, out in sorted(bad.items())]
    return "; ".join(lines)


def decode_plain_state(state: PlainSwapState, m: int) -> frozenset[int]:
    """Explicit-NFA state set encoded by the six decomposition vectors.

    Spine state i (1..m) is active iff bit i-1 is in d1 | c1; auxiliary
    state m+i iff bit i-1 is in d2 (i even) or d3 (i odd), for i < m.
    """
    states = set()
    for bit in (state.d1 | state.c1).to_indices():
        states.add(bit + 1)
    for bit in state.d2.to_indices():
        i = bit + 1
        if i % 2 == 0 and i < m:
            states.add(m + i)
    for bit in state.d3.to_indices():
        i = bit + 1
        if i % 2 == 1 and i < m:
            states.add(m + i)
    return frozenset(states)


def stepwise_mismatch(p: bytes, t: bytes) -> str | None:
    """Compare explicit swap-NFA active sets with the decoded
    decomposition vectors after every text symbol."""
    nfa = build_explicit_swap_nfa(p)
    _, sets = nfa_simulate(nfa, t)
    masks = build_plain_masks(p)
    state = PlainSwapState.zeros(len(p))
    for j, symbol in enumerate(t):
        state = plain_swap_step(state, masks, masks.codemap.code_of(symbol))
        expected = frozenset(q for q in sets[j] if q != 0)
        got = decode_plain_state(state, len(p))
        if got != expected:
            return (f"step {j}: explicit {sorted(expected)} != decoded {sorted(got)}")
    return None


def bounds_mismatch(p: bytes) -> str | None:
    """Factor-count bounds relating the collection to the greedy minimum."""
    m = len(p)
    sigma = len(set(p))
    k_prime = greedy_one_factorization(p).k
    triple = derive_even_odd(p)
    coll = one_collection(triple)
    k = coll.k
    fact = coll.factorization()
    if not all(fact.is_valid_for(s) for s in triple.strings()):
        return "collection boundaries are not a valid factorization of the triple"
    if not (-(-m // sigma) <= k <= m):
        return f"k={k} outside [ceil(m/sigma)={-(-m // sigma)}, m={m}]"
    if k > min(3 * k_prime - 2, m):
        return f"k={k} exceeds min(3k'-2, m) with k'={k_prime}"
    if k_prime > k:
        return f"greedy k'={k_prime} larger than collection k={k}"
    return None


def mapping_mismatch(p: bytes) -> str | None:
    """Position-id identities between the triple's factorizations.

    Inside every factor, an even position j of the pattern must carry the
    same id in automaton 2 under the previous symbol, and symmetrically
    for odd positions in automaton 3 (and back through the companions).
    """
    eng = build_swap_engine(p)
    p_even = eng.triple.p_even.data
    p_odd = eng.triple.p_odd.data
    cm = eng.codemap
    bounds = eng.collection.boundaries
    for f in range(eng.k):
        lo, hi = bounds[f], bounds[f + 1]
        for j in range(max(lo, 1), hi):
            if j % 2 == 0:
                pairs = ((eng.a2, p[j - 1], "id2(P[j-1])"),
                         (eng.a1, p_even[j - 1], "id1(Pe[j-1])"))
            else:
                pairs = ((eng.a3, p[j - 1], "id3(P[j-1])"),
                         (eng.a1, p_odd[j - 1], "id1(Po[j-1])"))
            for aut, symbol, what in pairs:
                got = aut.id_of(f, cm.code_of(symbol))
                if got != j:
                    return f"factor {f}, position {j}: {what} = {got}, expected {j}"
    return None


def minimize_case(p: bytes, t: bytes, still_failing) -> tuple[bytes, bytes]:
    """Greedy shrink of (pattern, text) preserving the failure."""
    changed = True
    while changed:
        changed = False
        half = len(t) // 2
        for cand in (t[:half], t[half:], t[1:], t[:-1]):
            if len(cand) < 1:
                continue
            if still_failing(p, cand):
                t = cand
                changed = True
                break
        if changed:
            continue
        for cand in (p[1:], p[:-1]):
            if len(cand) < 1:
                continue
            if still_failing(cand, t):
                p = cand
                changed = True
                break
    return p, t


@dataclass
class VerifyReport:
    cases: int = 0
    checks: dict = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    def count(self, name: str):
        self.checks[name] = self.checks.get(name, 0) + 1

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_lines(self) -> list[str]:
        lines = [f"cases: {self.cases}"]
        for name in sorted(self.checks):
            lines.append(f"{name}: {self.checks[name]} checks")
        lines.append("result: " + ("OK" if self.ok else f"{len(self.failures)} FAILURES"))
        return lines


def run_verify(sigmas=(2, 4), m_max: int = 25, n: int = 2000,
               iterations: int = 200, seed: int = 1,
               max_failures: int = 3) -> VerifyReport:
    """Drive all structural and equivalence checks on random cases."""
    rng = np.random.default_rng(seed)
    report = VerifyReport()
    sigmas = tuple(sigmas)
    for _ in range(iterations):
        sigma = int(sigmas[rng.integers(0, len(sigmas))])
        m = int(rng.integers(1, m_max + 1))
        p = random_pattern(rng, sigma, m)
        t = random_text(rng, sigma, n)
        report.cases += 1

        detail = equivalence_mismatch(p, t, include_enum=m <= MAX_ENUM_M)
        report.count("engine equivalence")
        if detail is not None:
            sp, st = minimize_case(p, t, lambda pp, tt:
                                   equivalence_mismatch(pp, tt, include_enum=False) is not None)
            report.failures.append(Failure("engine equivalence", sp, st,
                                           equivalence_mismatch(sp, st) or detail))

        if m <= MAX_ENUM_M:
            detail = stepwise_mismatch(p, t[:256])
            report.count("stepwise decomposition")
            if detail is not None:
                sp, st = minimize_case(p, t[:256],
                                       lambda pp, tt: stepwise_mismatch(pp, tt) is not None)
                report.failures.append(Failure("stepwise decomposition", sp, st,
                                               stepwise_mismatch(sp, st) or detail))

        for name, check in (("collection bounds", bounds_mismatch),
                            ("id mapping", mapping_mismatch)):
            detail = check(p)
            report.count(name)
            if detail is not None:
                report.failures.append(Failure(name, p, None, detail))

        if len(report.failures) >= max_failures:
            break
    return report
