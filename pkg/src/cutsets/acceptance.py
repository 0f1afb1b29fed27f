"""The nine acceptance checks, runnable from pytest and from ``cutsets verify-paper``.

Each check returns a :class:`CriterionResult`; a check passes only when its
exact condition holds *and* it finishes within its time budget.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import oracles
from .constructions import (
    BlockPartition,
    TreeUniverse,
    dense_subset_of_maximal_chain,
    leaf_cuts,
    lemma1_chain,
    lemma3b_antichain,
    separator_count,
    theorem3_cutset,
    tree_chain_family,
    tree_order_compare,
)
from .cutset_analysis import (
    is_cutset,
    is_minimal_cutset,
    is_nontrivial,
    largest_antichain_in_family,
    longest_chain_in_family,
    theorem1_antichain_extraction,
    theorem1_chain_extraction,
)
from .lattice_core import Chain, Family, Order, comparable, enumerate_maximal_chains
from .survey import census, dsw_check

ORACLE_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    budget: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.number}. {self.name} "
                f"({self.elapsed:.2f}s / {self.budget:g}s) {self.detail}").rstrip()


def _timed(number, name, budget, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - t0
    if elapsed >= budget:
        detail = f"{detail}; over time budget".lstrip("; ")
    return CriterionResult(number, name, ok and elapsed < budget, elapsed, budget, detail)


def lemma1_suite() -> CriterionResult:
    def body():
        cases = bad = 0
        for n in range(6):
            everything = range(1 << n)
            for a in everything:
                cases += 1
                chain = lemma1_chain(a, n)
                sets = chain.sets
                ok = (chain.is_maximal() and a in sets and len(sets) == n + 1)
                if ok:
                    for s in everything:
                        if s not in sets and all(comparable(s, m) for m in sets):
                            ok = False
                            break
                bad += not ok
        return bad == 0, f"cases={cases} failures={bad}"
    return _timed(1, "Lemma 1 chains are maximal", 1.0, body)


def theorem3_suite() -> CriterionResult:
    def body():
        cases = bad = 0
        for n in range(2, 6):
            for x, y in itertools.permutations(range(n), 2):
                cases += 1
                c = theorem3_cutset(x, y, n)
                ok = (is_nontrivial(c) and oracles.is_cutset_brute(c) and is_cutset(c)
                      and oracles.is_minimal_cutset_brute(c) and is_minimal_cutset(c))
                bad += not ok
        return bad == 0, f"cases={cases} failures={bad}"
    return _timed(2, "Theorem 3 cutsets are non-trivial minimal cutsets", 5.0, body)


def oracle_equivalence(samples: int = 10_000, seed: int = ORACLE_SEED) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        disagreements = checked = 0
        for bits in range(256):
            fam = Family(3, tuple(m for m in range(8) if bits >> m & 1))
            checked += 1
            disagreements += is_cutset(fam) != oracles.is_cutset_brute(fam)
        for n in (4, 5):
            for _ in range(samples):
                bits = rng.getrandbits(1 << n)
                fam = Family(n, tuple(m for m in range(1 << n) if bits >> m & 1))
                checked += 1
                disagreements += is_cutset(fam) != oracles.is_cutset_brute(fam)
        return disagreements == 0, f"families={checked} disagreements={disagreements}"
    return _timed(3, "reachability cutset test agrees with n!-chain brute force", 10.0, body)


def dsw_suite(max_n: int = 4) -> CriterionResult:
    def body():
        notes = []
        ok = True
        for n in range(max_n + 1):
            t0 = time.perf_counter()
            holds = dsw_check(n)
            dt = time.perf_counter() - t0
            notes.append(f"n={n}:{'ok' if holds else 'FAILED'}")
            ok &= holds
            if n == 4 and dt >= 60.0:
                ok = False
                notes.append("n=4 census over 60s")
        rep = census(2)
        ie_cut = oracles.count_cutsets_ie(2)
        ie_nontriv = oracles.count_cutsets_ie(2, nontrivial=True)
        ok &= rep.cutsets == 13 == ie_cut and rep.nontrivial_cutsets == 1 == ie_nontriv
        notes.append(f"census(2): cutsets={rep.cutsets} nontrivial={rep.nontrivial_cutsets}")
        return ok, " ".join(notes)
    return _timed(4, "every cutset contains a maximal antichain", 60.0, body)


def lemma3b_suite() -> CriterionResult:
    def body():
        cases = bad = 0
        for p, q, s in itertools.product(range(1, 4), range(1, 4), range(1, 3)):
            cases += 1
            fam = lemma3b_antichain(BlockPartition(p, q, s))
            ms = fam.members
            ok = len(ms) == q ** p
            for a, b in itertools.combinations(ms, 2):
                if comparable(a, b) or (a & ~b).bit_count() < s or (b & ~a).bit_count() < s:
                    ok = False
            bad += not ok
        return bad == 0, f"cases={cases} failures={bad}"
    return _timed(5, "block-partition antichains", 1.0, body)


def tree_order_suite() -> CriterionResult:
    def body():
        cases = bad = 0
        for k, depth in itertools.product(range(1, 4), range(0, 4)):
            u = TreeUniverse(k, depth)
            elems = u.partials + u.leaves
            ok = True
            cmp = {(f, g): tree_order_compare(f, g) for f in elems for g in elems}
            for (f, g), r in cmp.items():
                flipped = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS,
                           Order.EQUAL: Order.EQUAL}[r]
                if cmp[(g, f)] is not flipped or (r is Order.EQUAL) != (f == g):
                    ok = False
            for f, g, h in itertools.product(elems, repeat=3):
                if cmp[(f, g)] is Order.LESS and cmp[(g, h)] is Order.LESS \
                        and cmp[(f, h)] is not Order.LESS:
                    ok = False
            if depth >= 1 and u.partial_count <= 63:
                cuts = dict(zip(u.leaves, leaf_cuts(u)))
                for f, g in itertools.product(u.leaves, repeat=2):
                    if cmp[(f, g)] is not Order.GREATER and cuts[f] & ~cuts[g]:
                        ok = False
                    if cmp[(f, g)] is Order.LESS:
                        zero = separator_count(f, g, u) == 0
                        if zero != (f[:depth - 1] == g[:depth - 1]):
                            ok = False
                if k >= 2 and len(tree_chain_family(k, depth)) != k ** (depth - 1):
                    ok = False
            cases += 1
            bad += not ok
        return bad == 0, f"universes={cases} failures={bad}"
    return _timed(6, "tree order, C_f monotonicity, separator law", 2.0, body)


def theorem1_pipeline() -> CriterionResult:
    def body():
        c3 = theorem3_cutset(0, 1, 3)
        full = lemma1_chain(0b100, 3)
        source = Chain(3, tuple(m for m in full.sets if m in (0b000, 0b100, 0b101)))
        chain = theorem1_chain_extraction(c3, source)
        ok_chain = chain.sets == (0b001, 0b101)
        c4 = theorem3_cutset(0, 1, 4)
        src = lemma3b_antichain(BlockPartition(2, 2, 1))
        anti = theorem1_antichain_extraction(c4, src)
        ok_anti = anti == src
        return ok_chain and ok_anti, f"chain={chain} antichain={anti}"
    return _timed(7, "Theorem 1 extraction pipeline", 1.0, body)


def remark_suite() -> CriterionResult:
    def body():
        cases = bad = 0
        for n in range(6):
            for mc in enumerate_maximal_chains(n):
                cases += 1
                sets = mc.sets
                dense = dense_subset_of_maximal_chain(mc)
                image = set(dense.values())
                closed = all((a & b) in sets for a in sets for b in sets)
                ok = (len(dense) == n and len(image) == n
                      and image == set(sets) - {0} and closed)
                bad += not ok
        return bad == 0, f"chains={cases} failures={bad}"
    return _timed(8, "dense subset of maximal chains", 5.0, body)


def dilworth_mirsky(samples: int = 500, seed: int = ORACLE_SEED) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        disagreements = 0
        for _ in range(samples):
            n = rng.randint(1, 6)
            size = rng.randint(0, min(15, 1 << n))
            fam = Family.of(n, rng.sample(range(1 << n), size))
            anti = largest_antichain_in_family(fam)
            chain = longest_chain_in_family(fam)
            valid = (set(anti.members) <= fam.lookup and set(chain.sets) <= fam.lookup
                     and not any(comparable(a, b) for a, b in itertools.combinations(anti, 2)))
            if (not valid or len(anti) != oracles.largest_antichain_size_brute(fam)
                    or len(chain) != oracles.longest_chain_size_brute(fam)):
                disagreements += 1
        return disagreements == 0, f"families={samples} disagreements={disagreements}"
    return _timed(9, "Dilworth/Mirsky extremal sizes match exhaustive search", 30.0, body)


def run_all(max_n: int = 4) -> list[CriterionResult]:
    return [
        lemma1_suite(),
        theorem3_suite(),
        oracle_equivalence(),
        dsw_suite(max_n),
        lemma3b_suite(),
        tree_order_suite(),
        theorem1_pipeline(),
        remark_suite(),
        dilworth_mirsky(),
    ]
