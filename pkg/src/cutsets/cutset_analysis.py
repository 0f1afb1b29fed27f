"""Decision procedures and extraction for cutsets of P(n).

A family meets every maximal chain of P(n) exactly when the cover digraph
has no saturated path from the empty set to the full set avoiding it, so all
decisions here are reachability sweeps (see :mod:`cutsets.reach`) rather than
enumerations of the n! maximal chains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import Direction, lemma2_witness
from .errors import CapacityError, PreconditionError, UsageError
from .lattice_core import (
    Chain,
    Family,
    MaximalChain,
    check_ground,
    comparable,
    elements,
    full_set,
)
from .reach import co_reach, forward_reach, walk_up

MAX_REACH_GROUND = 25
MAX_CHAIN_FAMILY = 1 << 20
MAX_ANTICHAIN_FAMILY = 5000
MAX_ANTICHAIN_SEARCH_GROUND = 6


def _reach_ground(family: Family) -> int:
    return check_ground(family.n, MAX_REACH_GROUND)


def is_nontrivial(family: Family) -> bool:
    return 0 not in family and full_set(family.n) not in family


def is_cutset(family: Family) -> bool:
    """True iff every maximal chain of P(n) contains a member of ``family``."""
    n = _reach_ground(family)
    if 0 in family or full_set(n) in family:
        return True
    return not co_reach(n, family.lookup, 0, full_set(n))[0]


def find_avoiding_chain(family: Family) -> Optional[MaximalChain]:
    """A maximal chain disjoint from ``family``, or None when it is a cutset.

    Among avoiding chains the one with the lexicographically smallest
    permutation is returned.
    """
    n = _reach_ground(family)
    table = co_reach(n, family.lookup, 0, full_set(n))
    if not table[0]:
        return None
    return MaximalChain(n, tuple(walk_up(table, 0, full_set(n))))


def sole_meeting_chain(family: Family, s: int) -> Optional[MaximalChain]:
    """A maximal chain whose only member in ``family`` is ``s``, or None."""
    n = _reach_ground(family)
    if s not in family:
        raise UsageError(f"{s:#x} is not a member of the family")
    blocked = family.lookup - {s}
    below = co_reach(n, blocked, 0, s)
    if not below[0]:
        return None
    above = co_reach(n, blocked, s, full_set(n))
    if not above[s]:
        return None
    return MaximalChain(n, tuple(walk_up(below, 0, s) + walk_up(above, s, full_set(n))))


def sole_meeting_members(family: Family) -> list[int]:
    """Members S for which some maximal chain meets ``family`` only at S.

    One forward and one backward sweep serve every member: S qualifies iff a
    predecessor of S is reachable from the empty set avoiding the family and
    a successor of S reaches the full set avoiding it.
    """
    n = _reach_ground(family)
    top = full_set(n)
    blocked = family.lookup
    fwd = forward_reach(n, blocked, 0, top)
    back = co_reach(n, blocked, 0, top)
    out = []
    for s in family:
        below = s == 0 or any(fwd[s ^ (1 << e)] for e in elements(s))
        above = s == top or any(back[s | (1 << e)] for e in elements(top & ~s))
        if below and above:
            out.append(s)
    return out


def is_minimal_cutset(family: Family) -> bool:
    """True iff ``family`` is a cutset and no proper subfamily is one."""
    if not is_cutset(family):
        return False
    return len(sole_meeting_members(family)) == len(family)


# -- chains and antichains inside a family ------------------------------------


def longest_chain_in_family(family: Family) -> Chain:
    """A longest chain of members; ties go to the lexicographically smallest sequence."""
    if len(family) > MAX_CHAIN_FAMILY:
        raise CapacityError("family size for longest chain", MAX_CHAIN_FAMILY, len(family))
    members = family.members
    # length of the longest chain starting at each member, built from the top
    best = {}
    succ = {}
    for i in range(len(members) - 1, -1, -1):
        a = members[i]
        length, nxt = 1, None
        for b in members[i + 1:]:
            if a & b == a and best[b] + 1 > length:
                # members ascend, so the first b reaching a length is the smallest
                length, nxt = best[b] + 1, b
        best[a] = length
        succ[a] = nxt
    if not members:
        return Chain(family.n, ())
    top = max(best.values())
    cur = next(m for m in members if best[m] == top)
    out = []
    while cur is not None:
        out.append(cur)
        cur = succ[cur]
    return Chain(family.n, tuple(out))


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Maximum matching of a bipartite graph given as left-vertex adjacency lists.

    Returns ``(match_left, match_right)`` with -1 for unmatched vertices.
    """
    n_left = len(adj)
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    inf = n_left + 1
    while True:
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_left[u] < 0:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w < 0:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            return match_left, match_right
        pos = [0] * n_left
        for root in range(n_left):
            if match_left[root] >= 0:
                continue
            # iterative DFS along the layered graph
            stack = [root]
            path = []
            while stack:
                u = stack[-1]
                if pos[u] == len(adj[u]):
                    dist[u] = inf
                    stack.pop()
                    if path:
                        path.pop()
                    continue
                v = adj[u][pos[u]]
                pos[u] += 1
                w = match_right[v]
                if w < 0:
                    path.append(v)
                    for uu, vv in zip(stack, path):
                        match_left[uu] = vv
                        match_right[vv] = uu
                    break
                if dist[w] == dist[u] + 1:
                    path.append(v)
                    stack.append(w)


def largest_antichain_in_family(family: Family) -> Family:
    """A maximum antichain of members via Dilworth/Koenig on the comparability graph."""
    size = len(family)
    if size > MAX_ANTICHAIN_FAMILY:
        raise CapacityError("family size for largest antichain", MAX_ANTICHAIN_FAMILY, size)
    members = family.members
    adj = [[j for j in range(i + 1, size) if members[i] & members[j] == members[i]]
           for i in range(size)]
    match_left, match_right = hopcroft_karp(adj, size)
    # Koenig: alternating reachability from unmatched left copies
    seen_left = [False] * size
    seen_right = [False] * size
    queue = deque(u for u in range(size) if match_left[u] < 0)
    for u in queue:
        seen_left[u] = True
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen_right[v]:
                seen_right[v] = True
                w = match_right[v]
                if w >= 0 and not seen_left[w]:
                    seen_left[w] = True
                    queue.append(w)
    picked = [members[i] for i in range(size) if seen_left[i] and not seen_right[i]]
    matched = sum(1 for v in match_left if v >= 0)
    assert len(picked) == size - matched
    return Family(family.n, tuple(picked))


def comparability_cover(n: int) -> list[int]:
    """For each mask m of P(n), the set of masks comparable to m as a 2^n-bit integer."""
    out = []
    for m in range(1 << n):
        bits = 0
        for s in range(1 << n):
            if comparable(m, s):
                bits |= 1 << s
        out.append(bits)
    return out


def is_maximal_antichain(family: Family) -> bool:
    """Pairwise incomparable, and every subset of P(n) is comparable to a member."""
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if comparable(a, b):
                return False
    full = (1 << (1 << family.n)) - 1
    covered = 0
    for m in members:
        for s in range(1 << family.n):
            if comparable(m, s):
                covered |= 1 << s
    return covered == full


def contains_maximal_antichain(family: Family) -> Optional[Family]:
    """A subfamily that is a maximal antichain of P(n), or None.

    Backtracking over members in ascending order, trying inclusion first;
    a branch is cut once the chosen members together with the remaining
    candidates no longer cover P(n) by comparability.
    """
    n = check_ground(family.n, MAX_ANTICHAIN_SEARCH_GROUND)
    cover = comparability_cover(n)
    full = (1 << (1 << n)) - 1
    members = family.members

    def search(chosen, chosen_cover, cands):
        if chosen_cover == full:
            return chosen
        pool = chosen_cover
        for m in cands:
            pool |= cover[m]
        if pool != full:
            return None
        first, rest = cands[0], cands[1:]
        found = search(chosen + [first], chosen_cover | cover[first],
                       [m for m in rest if not comparable(first, m)])
        if found is not None:
            return found
        return search(chosen, chosen_cover, rest)

    found = search([], 0, list(members))
    return None if found is None else Family.of(n, found)


# -- extraction along the Theorem 1 pipeline ----------------------------------


@dataclass(frozen=True)
class Extraction:
    """Outcome of grouping sources by their witness and mapping the largest group.

    ``image`` is the deduplicated image of the selected group, ``collisions``
    counts sources lost to deduplication and ``dropped`` counts image members
    removed to keep an antichain (always 0 for chain extraction).
    """

    direction: Direction
    alpha: int
    group: tuple[int, ...]
    image: tuple[int, ...]
    collisions: int
    dropped: int
    groups: dict


def _require_cutset(c: Family):
    avoiding = find_avoiding_chain(c)
    if avoiding is not None:
        raise PreconditionError(f"not a cutset: the maximal chain {avoiding} avoids it")


def group_witnesses(c: Family, sources) -> dict:
    """Map (direction, alpha) to the sources whose witness has that key."""
    groups: dict = {}
    for a in sources:
        w = lemma2_witness(c, a)
        if w is not None:
            groups.setdefault(w.key, []).append(a)
    return groups


def _select(groups):
    order = {Direction.UNION: 0, Direction.MINUS: 1}
    return min(groups, key=lambda k: (-len(groups[k]), order[k[0]], k[1]))


def theorem1_extraction(c: Family, sources, antichain: bool = False) -> Optional[Extraction]:
    _require_cutset(c)
    sources = list(sources)
    for a in sources:
        if a >> c.n:
            raise UsageError(f"source set {a:#x} lies outside ground of size {c.n}")
    groups = group_witnesses(c, sources)
    if not groups:
        return None
    direction, alpha = _select(groups)
    seg = (1 << alpha) - 1
    group = groups[(direction, alpha)]
    mapped = [a | seg if direction is Direction.UNION else a & ~seg for a in group]
    image = sorted(set(mapped))
    dropped = 0
    if antichain:
        kept = []
        for m in image:
            if all(not comparable(m, k) for k in kept):
                kept.append(m)
        dropped = len(image) - len(kept)
        image = kept
    return Extraction(direction, alpha, tuple(group), tuple(image),
                      len(group) - len(set(mapped)), dropped,
                      {k: tuple(v) for k, v in groups.items()})


def theorem1_chain_extraction(c: Family, source: Chain) -> Chain:
    """A chain inside cutset ``c`` obtained from the largest witness group of ``source``."""
    if source.n != c.n:
        raise UsageError(f"ground mismatch: {c.n} vs {source.n}")
    ext = theorem1_extraction(c, source.sets)
    if ext is None:
        return Chain(c.n, ())
    return Chain.of(c.n, ext.image)


def theorem1_antichain_extraction(c: Family, source: Family) -> Family:
    """An antichain inside cutset ``c`` obtained from the largest witness group of ``source``."""
    if source.n != c.n:
        raise UsageError(f"ground mismatch: {c.n} vs {source.n}")
    ext = theorem1_extraction(c, source.members, antichain=True)
    if ext is None:
        return Family(c.n, ())
    return Family.of(c.n, ext.image)
