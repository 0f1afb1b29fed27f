import itertools

import pytest
from hypothesis import given, strategies as st

from cutsets.constructions import (
    BlockPartition,
    Direction,
    TreeUniverse,
    WitnessResult,
    apply_witness,
    dense_subset_of_maximal_chain,
    down_set,
    leaf_cuts,
    lemma1_chain,
    lemma2_witness,
    lemma3b_antichain,
    lemma3b_members,
    separator_count,
    separators,
    theorem3_cutset,
    tree_chain_family,
    tree_order_compare,
)
from cutsets.errors import CapacityError, UsageError
from cutsets.lattice_core import (
    Family,
    MaximalChain,
    Order,
    comparable,
    enumerate_maximal_chains,
    initial_segment,
    mask_of,
)
from cutsets.oracles import is_cutset_brute


def S(*elems):
    return mask_of(elems, 63)


# -- lemma1_chain ----------------------------------------------------------------


@pytest.mark.parametrize("a, n, expected", [
    (S(1), 3, (S(), S(1), S(0, 1), S(0, 1, 2))),
    (S(), 2, (S(), S(0), S(0, 1))),
    (S(0, 1, 2), 3, (S(), S(2), S(1, 2), S(0, 1, 2))),
])
def test_lemma1_examples(a, n, expected):
    assert lemma1_chain(a, n).sets == expected


def test_lemma1_is_maximal_exhaustive():
    for n in range(6):
        for a in range(1 << n):
            chain = lemma1_chain(a, n)
            assert chain.is_maximal() and a in chain.sets
            # nothing outside is comparable to every member
            for s in range(1 << n):
                if s not in chain.sets:
                    assert not all(comparable(s, m) for m in chain.sets)


def test_lemma1_rejects_out_of_ground():
    with pytest.raises(UsageError):
        lemma1_chain(S(3), 3)


# -- lemma2_witness ----------------------------------------------------------------


def test_lemma2_examples():
    c = theorem3_cutset(0, 1, 3)
    assert lemma2_witness(c, S(2)) == WitnessResult(Direction.UNION, 1, S(0, 2))
    assert lemma2_witness(c, S(0)) == WitnessResult(Direction.UNION, 0, S(0))
    assert lemma2_witness(Family.of(3, [S(0)]), S(1, 2)) is None


def test_lemma2_ground_mismatch():
    with pytest.raises(UsageError):
        lemma2_witness(theorem3_cutset(0, 1, 3), S(4))


def witness_brute(c, a, n):
    for direction in (Direction.UNION, Direction.MINUS):
        for alpha in range(n + 1):
            seg = set(range(alpha))
            aset = {e for e in range(n) if a >> e & 1}
            r = aset | seg if direction is Direction.UNION else aset - seg
            if mask_of(r, n) in c:
                return direction, alpha
    return None


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(0, (1 << n) - 1)), st.integers(0, (1 << n) - 1))))
def test_lemma2_matches_set_arithmetic(case):
    n, masks, a = case
    c = Family.of(n, masks)
    w = lemma2_witness(c, a)
    expected = witness_brute(c, a, n)
    if expected is None:
        assert w is None
    else:
        assert (w.direction, w.alpha) == expected
        assert w.result == apply_witness(w.direction, w.alpha, a)
        seg = initial_segment(w.alpha, n)
        assert w.result == (a | seg if w.direction is Direction.UNION else a & ~seg)


def test_lemma2_never_absent_for_cutsets():
    # every family over P(3), and the cutsets among random families over P(4)
    import random
    rng = random.Random(7)
    fams = [Family(3, tuple(m for m in range(8) if b >> m & 1)) for b in range(256)]
    fams += [Family.of(4, rng.sample(range(16), rng.randint(1, 10))) for _ in range(400)]
    for fam in fams:
        if is_cutset_brute(fam):
            for a in range(1 << fam.n):
                assert lemma2_witness(fam, a) is not None


# -- theorem3_cutset ----------------------------------------------------------------


@pytest.mark.parametrize("x, y, n, expected", [
    (0, 1, 2, [S(0), S(1)]),
    (0, 1, 3, [S(0), S(1), S(0, 2), S(1, 2)]),
])
def test_theorem3_examples(x, y, n, expected):
    assert theorem3_cutset(x, y, n) == Family.of(n, expected)


def test_theorem3_size_and_nontrivial():
    for n in range(2, 7):
        for x, y in itertools.permutations(range(n), 2):
            c = theorem3_cutset(x, y, n)
            assert len(c) == 2 ** (n - 1)
            assert 0 not in c and (1 << n) - 1 not in c


@pytest.mark.parametrize("x, y, n", [(0, 0, 3), (0, 3, 3), (-1, 1, 3), (0, 1, 1)])
def test_theorem3_usage_errors(x, y, n):
    with pytest.raises(UsageError):
        theorem3_cutset(x, y, n)


# -- lemma3b ---------------------------------------------------------------------


def test_lemma3b_examples():
    fam = lemma3b_antichain(BlockPartition(2, 2, 1))
    assert fam == Family.of(4, [S(0, 2), S(0, 3), S(1, 2), S(1, 3)])
    assert [m for _, m in lemma3b_members(BlockPartition(2, 2, 1))] == [
        S(0, 2), S(0, 3), S(1, 2), S(1, 3)]
    assert lemma3b_antichain(BlockPartition(1, 1, 2)).members == (S(0, 1),)
    fam = lemma3b_antichain(BlockPartition(2, 3, 1))
    assert len(fam) == 9 and all(m.bit_count() == 2 for m in fam)


def test_block_partition_blocks_tile_the_ground():
    for p, q, s in itertools.product(range(1, 4), range(1, 4), range(1, 3)):
        part = BlockPartition(p, q, s)
        union = 0
        for a, b in itertools.product(range(p), range(q)):
            blk = part.block(a, b)
            assert blk.bit_count() == s and not union & blk
            assert blk & part.row(a) == blk
            union |= blk
        assert union == (1 << part.n) - 1


def test_lemma3b_difference_law_exhaustive():
    for p, q, s in itertools.product(range(1, 4), range(1, 4), range(1, 3)):
        members = list(lemma3b_members(BlockPartition(p, q, s)))
        assert len(members) == q ** p
        for (f, a), (g, b) in itertools.combinations(members, 2):
            disagree = sum(x != y for x, y in zip(f, g))
            assert (a & ~b).bit_count() == s * disagree >= s
            assert not comparable(a, b)
        assert all(m.bit_count() == p * s for _, m in members)


def test_block_partition_capacity():
    with pytest.raises(CapacityError):
        BlockPartition(4, 4, 4)
    with pytest.raises(UsageError):
        BlockPartition(0, 1, 1)


# -- tree order --------------------------------------------------------------------


@pytest.mark.parametrize("f, g, expected", [
    ((), (0,), Order.LESS),
    ((0, 1), (1,), Order.LESS),
    ((1, 0), (1, 0), Order.EQUAL),
    ((1,), (0, 1), Order.GREATER),
])
def test_tree_order_examples(f, g, expected):
    assert tree_order_compare(f, g) is expected


@given(st.lists(st.integers(0, 3), max_size=4), st.lists(st.integers(0, 3), max_size=4))
def test_tree_order_matches_tuple_order(f, g):
    # Python compares tuples lexicographically with proper prefixes first
    f, g = tuple(f), tuple(g)
    expected = Order.EQUAL if f == g else (Order.LESS if f < g else Order.GREATER)
    assert tree_order_compare(f, g) is expected


@pytest.mark.parametrize("k, depth", list(itertools.product(range(1, 4), range(0, 4))))
def test_tree_order_is_total(k, depth):
    u = TreeUniverse(k, depth)
    elems = u.partials + u.leaves
    flip = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS, Order.EQUAL: Order.EQUAL}
    for f, g in itertools.product(elems, repeat=2):
        r = tree_order_compare(f, g)
        assert r is not Order.INCOMPARABLE
        assert tree_order_compare(g, f) is flip[r]
        assert (r is Order.EQUAL) == (f == g)
    for f, g, h in itertools.product(elems, repeat=3):
        if tree_order_compare(f, g) is Order.LESS and tree_order_compare(g, h) is Order.LESS:
            assert tree_order_compare(f, h) is Order.LESS


def test_universe_sizes_and_order():
    for k, depth in itertools.product(range(1, 4), range(0, 4)):
        u = TreeUniverse(k, depth)
        assert len(u.partials) == u.partial_count == sum(k ** i for i in range(depth))
        assert len(u.leaves) == k ** depth
        assert list(u.partials) == sorted(u.partials)
        assert u.elements() == sorted(u.partials + u.leaves)


def test_universe_check():
    u = TreeUniverse(2, 2)
    with pytest.raises(UsageError):
        u.check((2,))
    with pytest.raises(UsageError):
        u.check((0, 0, 0))
    with pytest.raises(UsageError):
        u.check((0,), leaf=True)


@pytest.mark.parametrize("k, depth, expected", [
    (2, 2, [(S(0, 1)), S(0, 1, 2)]),
    (2, 1, [S(0)]),
])
def test_tree_chain_examples(k, depth, expected):
    assert list(tree_chain_family(k, depth).sets) == expected


def test_tree_chain_distinct_count():
    for k, depth in itertools.product(range(2, 4), range(1, 4)):
        chain = tree_chain_family(k, depth)
        assert len(chain) == k ** (depth - 1)
        assert len(leaf_cuts(TreeUniverse(k, depth))) == k ** depth


def test_tree_chain_capacity():
    with pytest.raises(CapacityError):
        tree_chain_family(2, 7)
    with pytest.raises(UsageError):
        tree_chain_family(1, 2)


def test_down_sets_are_monotone():
    for k, depth in itertools.product(range(1, 4), range(1, 4)):
        u = TreeUniverse(k, depth)
        cuts = dict(zip(u.leaves, leaf_cuts(u)))
        for f, g in itertools.product(u.leaves, repeat=2):
            if f <= g:
                assert cuts[f] & ~cuts[g] == 0
        assert all(down_set(f, u) == cuts[f] for f in u.leaves)


@pytest.mark.parametrize("f1, f2, k, depth, expected", [
    ((0, 1), (1, 0), 2, 2, 1),
    ((0, 0), (0, 1), 2, 2, 0),
    ((0, 1, 1), (1, 0, 0), 2, 3, 2),
])
def test_separator_examples(f1, f2, k, depth, expected):
    assert separator_count(f1, f2, TreeUniverse(k, depth)) == expected


def test_separator_witnesses_named():
    assert separators((0, 1, 1), (1, 0, 0), TreeUniverse(2, 3)) == [(1,), (1, 0)]


def test_separator_law_exhaustive():
    for k, depth in itertools.product(range(1, 4), range(1, 4)):
        u = TreeUniverse(k, depth)
        for f1, f2 in itertools.combinations(u.leaves, 2):
            count = separator_count(f1, f2, u)
            assert (count == 0) == (f1[:depth - 1] == f2[:depth - 1])


def test_separator_precondition():
    u = TreeUniverse(2, 2)
    with pytest.raises(UsageError):
        separator_count((1, 0), (0, 1), u)
    with pytest.raises(UsageError):
        separator_count((0,), (1, 0), u)


# -- dense subset ------------------------------------------------------------------


def test_dense_subset_examples():
    m = MaximalChain(3, (1, 0, 2))
    assert dense_subset_of_maximal_chain(m) == {0: S(0, 1), 1: S(1), 2: S(0, 1, 2)}
    assert dense_subset_of_maximal_chain(MaximalChain(1, (0,))) == {0: S(0)}
    assert dense_subset_of_maximal_chain(MaximalChain(0, ())) == {}


def test_dense_subset_reconstitutes_chain():
    for n in range(6):
        for mc in enumerate_maximal_chains(n):
            dense = dense_subset_of_maximal_chain(mc)
            assert set(dense.values()) | {0} == set(mc.sets)
            for x, mx in dense.items():
                # smallest member containing x, computed as an intersection
                containing = [s for s in mc.sets if s >> x & 1]
                inter = containing[0]
                for s in containing:
                    inter &= s
                assert mx == inter
