"""Finite versions of the chain and antichain constructions.

* ``lemma1_chain``: the maximal chain obtained from a set A by deleting or
  adding initial segments.
* ``lemma2_witness``: where a cutset meets that chain.
* ``theorem3_cutset``: the minimal cutset {S : |S & {x, y}| = 1}.
* ``lemma3b_antichain``: unions of one block per row of a block partition.
* tree order on digit sequences, the chain of down-sets ``C_f`` and the
  separator scan between leaves.
* ``dense_subset_of_maximal_chain``: the smallest chain member containing x.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from typing import Iterator, Optional

from .errors import CapacityError, UsageError
from .lattice_core import (
    MAX_GROUND,
    Chain,
    Family,
    MaximalChain,
    Order,
    check_ground,
    check_mask,
    full_set,
)


class Direction(enum.Enum):
    UNION = "union"
    MINUS = "minus"


@dataclass(frozen=True)
class WitnessResult:
    direction: Direction
    alpha: int
    result: int

    @property
    def key(self) -> tuple[Direction, int]:
        return self.direction, self.alpha


def apply_witness(direction: Direction, alpha: int, a: int) -> int:
    seg = (1 << alpha) - 1
    return a | seg if direction is Direction.UNION else a & ~seg


def lemma1_chain(a: int, n: int) -> Chain:
    """The chain {0, X} + {A - alpha} + {A | alpha} for alpha in [0, n]."""
    check_ground(n)
    check_mask(a, n)
    sets = {0, full_set(n)}
    for alpha in range(n + 1):
        seg = (1 << alpha) - 1
        sets.add(a & ~seg)
        sets.add(a | seg)
    return Chain.of(n, sets)


def lemma2_witness(c: Family, a: int) -> Optional[WitnessResult]:
    """First member of ``c`` on the chain through ``a``, or None.

    Scan order: union with alpha = 0..n, then minus with alpha = 0..n.
    """
    n = c.n
    try:
        check_mask(a, n)
    except UsageError:
        raise UsageError(f"set {a:#x} does not belong to the family's ground of size {n}") from None
    for direction in (Direction.UNION, Direction.MINUS):
        for alpha in range(n + 1):
            s = apply_witness(direction, alpha, a)
            if s in c:
                return WitnessResult(direction, alpha, s)
    return None


def theorem3_cutset(x: int, y: int, n: int) -> Family:
    """All subsets containing exactly one of ``x`` and ``y``."""
    check_ground(n)
    if n < 2:
        raise UsageError(f"need at least two ground elements, got n={n}")
    if not (0 <= x < n and 0 <= y < n):
        raise UsageError(f"x={x}, y={y} must lie in [0, {n})")
    if x == y:
        raise UsageError("x and y must be distinct")
    pair = (1 << x) | (1 << y)
    return Family(n, tuple(m for m in range(1 << n) if (m & pair).bit_count() == 1))


# -- block partition antichain ------------------------------------------------


@dataclass(frozen=True)
class BlockPartition:
    """p rows of q blocks, each block a run of s consecutive ground elements.

    Block (alpha, beta) occupies [(alpha*q + beta)*s, (alpha*q + beta + 1)*s).
    """

    p: int
    q: int
    s: int

    def __post_init__(self):
        for name in ("p", "q", "s"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise UsageError(f"{name} must be a positive integer, got {v!r}")
        if self.n > MAX_GROUND:
            raise CapacityError("block partition ground size p*q*s", MAX_GROUND, self.n)

    @property
    def n(self) -> int:
        return self.p * self.q * self.s

    def block(self, alpha: int, beta: int) -> int:
        start = (alpha * self.q + beta) * self.s
        return ((1 << self.s) - 1) << start

    def row(self, alpha: int) -> int:
        return ((1 << (self.q * self.s)) - 1) << (alpha * self.q * self.s)

    def selection(self, f) -> int:
        mask = 0
        for alpha, beta in enumerate(f):
            mask |= self.block(alpha, beta)
        return mask


def lemma3b_members(part: BlockPartition) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(f, S_f)`` for every f: [p] -> [q] in lexicographic order of f."""
    for f in itertools.product(range(part.q), repeat=part.p):
        yield f, part.selection(f)


def lemma3b_antichain(part: BlockPartition) -> Family:
    return Family.of(part.n, (s for _, s in lemma3b_members(part)))


# -- tree order -------------------------------------------------------------


def tree_order_compare(f: tuple[int, ...], g: tuple[int, ...]) -> Order:
    """Proper extensions are larger; otherwise the first differing digit decides."""
    for a, b in zip(f, g):
        if a != b:
            return Order.LESS if a < b else Order.GREATER
    if len(f) == len(g):
        return Order.EQUAL
    return Order.LESS if len(f) < len(g) else Order.GREATER


def tree_less(f, g) -> bool:
    return tree_order_compare(f, g) is Order.LESS


_RANK = {Order.LESS: -1, Order.EQUAL: 0, Order.GREATER: 1}
tree_sort_key = cmp_to_key(lambda f, g: _RANK[tree_order_compare(f, g)])


@dataclass(frozen=True)
class TreeUniverse:
    """Digit sequences over {0..k-1} of length at most ``depth``.

    ``partials`` are the sequences shorter than ``depth`` and ``leaves`` those
    of length exactly ``depth``; both are listed in ascending tree order, and
    a partial's position in ``partials`` is its ground element index.
    """

    k: int
    depth: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise UsageError(f"alphabet size must be >= 1, got {self.k!r}")
        if not isinstance(self.depth, int) or self.depth < 0:
            raise UsageError(f"depth must be >= 0, got {self.depth!r}")

    @property
    def partial_count(self) -> int:
        return sum(self.k ** i for i in range(self.depth))

    @cached_property
    def partials(self) -> tuple[tuple[int, ...], ...]:
        out = []

        def walk(prefix):
            out.append(prefix)
            if len(prefix) + 1 < self.depth:
                for d in range(self.k):
                    walk(prefix + (d,))

        if self.depth > 0:
            walk(())
        return tuple(out)

    @cached_property
    def leaves(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(range(self.k), repeat=self.depth))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {d: i for i, d in enumerate(self.partials)}

    def elements(self) -> list[tuple[int, ...]]:
        return sorted(self.partials + self.leaves, key=tree_sort_key)

    def check(self, f, leaf: bool = False) -> tuple[int, ...]:
        f = tuple(f)
        if any(not (isinstance(d, int) and 0 <= d < self.k) for d in f):
            raise UsageError(f"{f} has digits outside the alphabet of size {self.k}")
        if len(f) > self.depth:
            raise UsageError(f"{f} is longer than depth {self.depth}")
        if leaf and len(f) != self.depth:
            raise UsageError(f"{f} is not a leaf (length {self.depth} required)")
        return f


def down_set(f, universe: TreeUniverse) -> int:
    """C_f as a mask over the partials: every partial strictly below ``f``."""
    f = universe.check(f)
    mask = 0
    for i, d in enumerate(universe.partials):
        if tree_less(d, f):
            mask |= 1 << i
    return mask


def leaf_cuts(universe: TreeUniverse) -> list[int]:
    """C_f for every leaf, in ascending leaf order (collapsed siblings repeat)."""
    if universe.partial_count > MAX_GROUND:
        raise CapacityError("number of partial sequences", MAX_GROUND, universe.partial_count)
    return [down_set(f, universe) for f in universe.leaves]


def tree_chain_family(k: int, depth: int) -> Chain:
    """The distinct C_f over all leaves, as a chain of subsets of the partials."""
    if k < 2 or depth < 1:
        raise UsageError(f"need k >= 2 and depth >= 1, got k={k}, depth={depth}")
    universe = TreeUniverse(k, depth)
    cuts = leaf_cuts(universe)
    distinct = [m for i, m in enumerate(cuts) if i == 0 or m != cuts[i - 1]]
    return Chain(universe.partial_count, tuple(distinct))


def separators(f1, f2, universe: TreeUniverse) -> list[tuple[int, ...]]:
    f1 = universe.check(f1, leaf=True)
    f2 = universe.check(f2, leaf=True)
    if not tree_less(f1, f2):
        raise UsageError(f"separators need f1 < f2, got {f1} and {f2}")
    return [d for d in universe.partials if tree_less(f1, d) and tree_less(d, f2)]


def separator_count(f1, f2, universe: TreeUniverse) -> int:
    """Number of partial sequences strictly between leaves ``f1 < f2``."""
    return len(separators(f1, f2, universe))


# -- dense subset of a maximal chain ------------------------------------------


def dense_subset_of_maximal_chain(chain: MaximalChain) -> dict[int, int]:
    """Map each ground element x to the smallest member of ``chain`` containing x."""
    out = {}
    acc = 0
    for e in chain.perm:
        acc |= 1 << e
        out[e] = acc
    return out
