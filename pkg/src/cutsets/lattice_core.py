"""Subset arithmetic on the finite Boolean lattice P(n).

Subsets of the ground set {0, ..., n-1} are plain ``int`` bit patterns
(bit ``i`` set means element ``i`` is present). Containers (:class:`Family`,
:class:`Chain`, :class:`MaximalChain`) carry the ground size ``n``.

An ordinal ``alpha`` is identified with its set of predecessors, so
``initial_segment(alpha, n)`` is {0, ..., alpha-1}.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, UsageError

MAX_GROUND = 63
MAX_CHAIN_ENUMERATION = 10


class Order(enum.Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def check_ground(n: int, limit: int = MAX_GROUND) -> int:
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"ground size must be a non-negative integer, got {n!r}")
    if n > limit:
        raise CapacityError("ground size", limit, n)
    return n


def full_set(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def elements(mask: int) -> list[int]:
    """Elements of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(elems: Iterable[int], n: int) -> int:
    mask = 0
    for e in elems:
        if not 0 <= e < n:
            raise UsageError(f"element {e} outside ground set of size {n}")
        mask |= 1 << e
    return mask


def check_mask(mask: int, n: int) -> int:
    if mask < 0 or mask >> n:
        raise UsageError(f"subset {mask:#x} has bits outside ground set of size {n}")
    return mask


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def initial_segment(alpha: int, n: int) -> int:
    """The ordinal ``alpha`` as the subset {0, ..., alpha-1} of P(n)."""
    check_ground(n)
    if not 0 <= alpha <= n:
        raise UsageError(f"ordinal index {alpha} outside [0, {n}]")
    return (1 << alpha) - 1


def compare_sets(a: int, b: int) -> Order:
    if a == b:
        return Order.EQUAL
    if a & b == a:
        return Order.LESS
    if a & b == b:
        return Order.GREATER
    return Order.INCOMPARABLE


def comparable(a: int, b: int) -> bool:
    inter = a & b
    return inter == a or inter == b


@dataclass(frozen=True)
class Family:
    """A duplicate-free collection of subsets of P(n), sorted by bit pattern."""

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        check_ground(self.n)
        prev = -1
        for m in self.members:
            check_mask(m, self.n)
            if m <= prev:
                raise UsageError("family members must be strictly sorted and distinct")
            prev = m

    @classmethod
    def of(cls, n: int, masks: Iterable[int]) -> Family:
        """Build a family from any iterable of masks (sorted, deduplicated)."""
        return cls(n, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Family:
        return cls.of(n, (mask_of(s, n) for s in sets))

    @cached_property
    def lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def union(self, other: Family) -> Family:
        if other.n != self.n:
            raise UsageError(f"ground mismatch: {self.n} vs {other.n}")
        return Family.of(self.n, self.lookup | other.lookup)

    def without(self, mask: int) -> Family:
        return Family(self.n, tuple(m for m in self.members if m != mask))

    def as_lists(self) -> list[list[int]]:
        return [elements(m) for m in self.members]

    def __str__(self):
        return "{" + ", ".join(format_set(m) for m in self.members) + "}"


@dataclass(frozen=True)
class Chain:
    """Sets of P(n), each a proper subset of the next."""

    n: int
    sets: tuple[int, ...] = ()

    def __post_init__(self):
        check_ground(self.n)
        for m in self.sets:
            check_mask(m, self.n)
        for a, b in zip(self.sets, self.sets[1:]):
            if a == b or a & b != a:
                raise UsageError(f"not a chain: {format_set(a)} is not a proper subset of {format_set(b)}")

    @classmethod
    def of(cls, n: int, masks: Iterable[int]) -> Chain:
        """Sort pairwise comparable masks into a chain (duplicates dropped)."""
        return cls(n, tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m))))

    def is_saturated(self) -> bool:
        return all((b ^ a).bit_count() == 1 for a, b in zip(self.sets, self.sets[1:]))

    def is_maximal(self) -> bool:
        return (len(self.sets) == self.n + 1 and self.sets[0] == 0
                and self.sets[-1] == full_set(self.n) and self.is_saturated())

    def to_family(self) -> Family:
        return Family.of(self.n, self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __str__(self):
        return " < ".join(format_set(m) for m in self.sets)


@dataclass(frozen=True)
class MaximalChain:
    """A maximal chain of P(n), stored as the order in which elements are added."""

    n: int
    perm: tuple[int, ...]

    def __post_init__(self):
        check_ground(self.n)
        if sorted(self.perm) != list(range(self.n)):
            raise UsageError(f"{self.perm} is not a permutation of range({self.n})")

    @property
    def sets(self) -> tuple[int, ...]:
        """The n+1 prefix sets, from the empty set up to the full ground set."""
        out = [0]
        for e in self.perm:
            out.append(out[-1] | (1 << e))
        return tuple(out)

    def to_chain(self) -> Chain:
        return Chain(self.n, self.sets)

    def __str__(self):
        return " < ".join(format_set(m) for m in self.sets)


def chain_sets(perm: Sequence[int]) -> list[int]:
    out = [0]
    for e in perm:
        out.append(out[-1] | (1 << e))
    return out


def enumerate_maximal_chains(n: int) -> Iterator[MaximalChain]:
    """All n! maximal chains of P(n) in lexicographic permutation order."""
    check_ground(n, MAX_CHAIN_ENUMERATION)
    for perm in itertools.permutations(range(n)):
        yield MaximalChain(n, perm)


def complete_to_maximal_chain(chain: Chain) -> MaximalChain:
    """Extend ``chain`` to a maximal chain.

    Within each gap between consecutive sets the missing elements are added
    in ascending order, so the result is deterministic.
    """
    n = chain.n
    stops = list(chain.sets)
    if not stops or stops[0] != 0:
        stops.insert(0, 0)
    if stops[-1] != full_set(n):
        stops.append(full_set(n))
    perm = []
    for lo, hi in zip(stops, stops[1:]):
        perm.extend(elements(hi & ~lo))
    return MaximalChain(n, tuple(perm))


def level(n: int, k: int) -> Family:
    """All k-element subsets of the ground set."""
    check_ground(n)
    return Family.of(n, (mask_of(c, n) for c in itertools.combinations(range(n), k)))


# -- family text format ------------------------------------------------------
#
#   n=<int>
#   0 2        one subset per line, space-separated elements
#   -          the empty set
#   # ...      comment


def parse_family(text: str) -> Family:
    n = None
    masks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, sep, value = line.partition("=")
            if key.strip() != "n" or not sep:
                raise UsageError(f"line {lineno}: expected 'n=<int>' header, got {line!r}")
            try:
                n = check_ground(int(value))
            except ValueError as exc:
                if isinstance(exc, (UsageError, CapacityError)):
                    raise
                raise UsageError(f"line {lineno}: bad ground size {value!r}") from None
            continue
        if line == "-":
            masks.append(0)
            continue
        try:
            elems = [int(tok) for tok in line.split()]
        except ValueError:
            raise UsageError(f"line {lineno}: expected integers, got {line!r}") from None
        try:
            masks.append(mask_of(elems, n))
        except UsageError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    if n is None:
        raise UsageError("missing 'n=<int>' header")
    return Family.of(n, masks)


def format_family(family: Family, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n={family.n}")
    for m in family.members:
        lines.append(" ".join(map(str, elements(m))) if m else "-")
    return "\n".join(lines) + "\n"


def read_family(path) -> Family:
    with open(path) as fh:
        return parse_family(fh.read())


def write_family(path, family: Family, comments: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_family(family, comments))
