"""Brute-force reference implementations.

These deliberately share no code path with the fast procedures: cutsets are
decided by walking all n! maximal chains, censuses by inclusion-exclusion,
and extremal chains/antichains by scanning every subfamily.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .lattice_core import Family, check_ground


@lru_cache(maxsize=None)
def chain_bitsets(n: int) -> tuple[int, ...]:
    """Each maximal chain of P(n) as a 2^n-bit integer over masks."""
    check_ground(n, 8)
    out = []
    for perm in itertools.permutations(range(n)):
        m, bits = 0, 1
        for e in perm:
            m |= 1 << e
            bits |= 1 << m
        out.append(bits)
    return tuple(out)


def family_bits(family: Family) -> int:
    bits = 0
    for m in family:
        bits |= 1 << m
    return bits


def is_cutset_brute(family: Family) -> bool:
    fb = family_bits(family)
    return all(c & fb for c in chain_bitsets(family.n))


def avoided_chains_brute(family: Family) -> list[int]:
    fb = family_bits(family)
    return [i for i, c in enumerate(chain_bitsets(family.n)) if not c & fb]


def is_minimal_cutset_brute(family: Family) -> bool:
    if not is_cutset_brute(family):
        return False
    return not any(is_cutset_brute(family.without(m)) for m in family)


def count_cutsets_ie(n: int, nontrivial: bool = False) -> int:
    """Number of families over P(n) meeting every maximal chain, by inclusion-exclusion.

    With ``nontrivial`` the empty and full sets are removed from the universe.
    """
    chains = list(chain_bitsets(n))
    universe = (1 << (1 << n)) - 1
    if nontrivial:
        universe &= ~1 & ~(1 << ((1 << n) - 1))
        chains = [c & universe for c in chains]
    size = universe.bit_count()
    total = 0
    for r in range(len(chains) + 1):
        for combo in itertools.combinations(chains, r):
            union = 0
            for c in combo:
                union |= c
            total += (-1) ** r * (1 << (size - union.bit_count()))
    return total


def _subfamily_flags(members, related) -> np.ndarray:
    """flags[T] is True iff no two members selected by T are related."""
    k = len(members)
    flags = np.ones(1 << k, dtype=bool)
    for i in range(k):
        block = 1 << i
        low = np.arange(block)
        conflict = 0
        for j in range(i):
            if related(members[i], members[j]):
                conflict |= 1 << j
        flags[block:2 * block] = flags[:block] & ((low & conflict) == 0)
    return flags


def _best_size(flags) -> int:
    idx = np.nonzero(flags)[0]
    return int(np.bitwise_count(idx).max())


def largest_antichain_size_brute(family: Family) -> int:
    """Size of the largest pairwise-incomparable subfamily, over all 2^|F| subfamilies."""
    members = list(family)
    def related(a, b):
        return (a & b) in (a, b)
    return _best_size(_subfamily_flags(members, related))


def longest_chain_size_brute(family: Family) -> int:
    """Size of the largest pairwise-comparable subfamily, over all 2^|F| subfamilies."""
    members = list(family)
    def related(a, b):
        return (a & b) not in (a, b)
    return _best_size(_subfamily_flags(members, related))


def is_maximal_antichain_brute(masks, n: int) -> bool:
    masks = list(masks)
    for a, b in itertools.combinations(masks, 2):
        if (a & b) in (a, b):
            return False
    return all(any((s & m) in (s, m) for m in masks) for s in range(1 << n))
