import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import downsets
from qgauss.birkhoff import (
    FinitePoset,
    Ideal,
    antichain,
    boolean_lattice,
    chain,
    chain_product,
    decompose_birkhoff,
    ideal_lattice,
    ideal_to_partition,
    ideals,
    is_cover_free,
    is_isomorphic,
    labeled_posets,
    maximal_cover_free_subsets,
    omega_pair_subset,
    parse_poset,
    parse_subset,
    phi_ideal,
    psi_ideal,
    random_poset,
)
from qgauss.errors import CapExceededError, PosetError, QGaussError
from qgauss.omega_lattice import decompose
from qgauss.qpoly import eval_at, gaussian_oracle
from qgauss.words import partition_to_word


def members(I):
    return sorted(I.members)


def test_chain_product_shapes():
    assert chain_product(1, 1).size == 1 and not chain_product(1, 1).covers
    d = chain_product(2, 2)
    assert d.size == 4 and len(d.covers) == 4
    assert len(ideals(d)) == 6 == eval_at(gaussian_oracle(4, 2), 1)
    assert len(ideals(chain_product(2, 3))) == 10 == eval_at(gaussian_oracle(5, 2), 1)
    with pytest.raises(QGaussError):
        chain_product(0, 3)


def test_ideal_examples():
    assert len(ideals(antichain(2))) == 4
    c3 = ideals(chain(3))
    assert [members(I) for I in c3] == [[], [0], [0, 1], [0, 1, 2]]
    lattice, _ = ideal_lattice(antichain(2))
    assert is_isomorphic(lattice, boolean_lattice(2))


def test_ideal_order_is_canonical():
    js = ideals(chain_product(2, 3))
    keys = [(len(I), I.mask) for I in js]
    assert keys == sorted(keys)


def test_ideals_cap():
    with pytest.raises(CapExceededError) as info:
        ideals(antichain(12), cap=100)
    assert info.value.reached == 101


def test_cover_free_examples():
    assert is_cover_free(chain(2), set())
    assert not is_cover_free(chain(2), {0, 1})
    assert is_cover_free(chain(3), {0, 2})
    assert not is_cover_free(chain(3), {0, 2}, strict=True)
    with pytest.raises(QGaussError):
        is_cover_free(chain(2), {5})


def test_phi_psi_ideal_examples():
    c2, anti = chain(2), antichain(2)
    assert members(phi_ideal(c2, {1}, {0, 1})) == [0]
    assert members(phi_ideal(c2, {1}, set())) == []
    assert members(phi_ideal(anti, {0, 1}, {0})) == []
    assert members(psi_ideal(c2, {1}, {0})) == [0, 1]
    assert members(psi_ideal(c2, {1}, set())) == []
    assert members(psi_ideal(anti, {0, 1}, set())) == [0, 1]
    with pytest.raises(QGaussError):
        phi_ideal(c2, {0, 1}, {0})
    with pytest.raises(QGaussError):
        psi_ideal(c2, {1}, {1})


def test_decompose_birkhoff_examples():
    blocks = decompose_birkhoff(antichain(2), {0, 1})
    assert len(blocks) == 1
    assert members(blocks[0].bottom) == [] and len(blocks[0].interval) == 4
    blocks = decompose_birkhoff(chain(2), {1})
    assert [(members(b.bottom), members(b.top)) for b in blocks] == [([], []), ([0], [0, 1])]


def test_transport_block_sizes_for_4_2():
    blocks = decompose_birkhoff(chain_product(2, 2), omega_pair_subset(2, 2))
    assert sorted(len(b.interval) for b in blocks) == [1, 1, 4]


def test_ideal_to_partition_examples():
    P = chain_product(2, 2)
    js = ideals(P)
    assert ideal_to_partition(P, js[0]).parts == (0, 0)
    assert ideal_to_partition(P, js[-1]).parts == (2, 2)
    assert ideal_to_partition(P, Ideal.of([0])).parts == (0, 1)
    assert sorted(ideal_to_partition(P, I).size for I in js) == [0, 1, 2, 2, 3, 4]
    with pytest.raises(QGaussError):
        ideal_to_partition(chain(2), js[0])


def test_ideals_match_brute_force():
    rng = random.Random(3)
    for _ in range(60):
        P = random_poset(rng, rng.randint(0, 8), rng.random())
        below = [set(e for e in range(P.size) if P.less(e, v)) for v in range(P.size)]
        got = [I.members for I in ideals(P)]
        assert len(got) == len(set(got))
        assert set(got) == set(downsets(P.size, below))


def test_parse_poset():
    P = parse_poset("# diamond\nposet 4\n0 < 1\n0 < 2\n\n1 < 3  # right\n2 < 3\n")
    assert P == chain_product(2, 2)
    assert parse_poset(P.to_text()) == P
    for bad in ["", "poset x", "poset 2\n0 > 1", "poset 2\n0 < 1\n1 < 0",
                "poset 3\n0 < 1\n1 < 2\n0 < 2", "poset 2\n0 < 5", "poset 2\n0 < 1\n0 < 1",
                "poset 1\n0 < 0", "poset 2\na < b"]:
        with pytest.raises(PosetError):
            parse_poset(bad)


def test_parse_subset():
    assert parse_subset("2,5,7") == {2, 5, 7}
    assert parse_subset("") == frozenset()
    with pytest.raises(QGaussError):
        parse_subset("1,x")


def test_from_relations_reduces():
    P = FinitePoset.from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert P.covers == {(0, 1), (1, 2)}
    with pytest.raises(PosetError):
        FinitePoset.from_relations(2, [(0, 1), (1, 0)])


def test_labeled_poset_counts():
    # number of labelled posets on 0..4 elements
    assert [sum(1 for _ in labeled_posets(m)) for m in range(5)] == [1, 1, 3, 19, 219]


def test_maximal_cover_free():
    assert sorted(map(sorted, maximal_cover_free_subsets(chain(2)))) == [[0], [1]]
    assert sorted(map(sorted, maximal_cover_free_subsets(chain(3)))) == [[0, 2], [1]]


def _relabel(P, perm):
    return FinitePoset(P.size, [(perm[u], perm[v]) for u, v in P.covers])


@settings(max_examples=60)
@given(st.integers(0, 2**32), st.integers(1, 8))
def test_isomorphism_invariant_under_relabeling(seed, size):
    rng = random.Random(seed)
    P = random_poset(rng, size, rng.random())
    perm = list(range(size))
    rng.shuffle(perm)
    assert is_isomorphic(P, _relabel(P, perm))


def test_isomorphism_brute_force_small():
    posets = list(labeled_posets(3))
    for P in posets:
        for Q in posets:
            brute = any(
                all(P.less(u, v) == Q.less(p[u], p[v]) for u in range(3) for v in range(3))
                for p in permutations(range(3))
            )
            assert is_isomorphic(P, Q) == brute


def test_isomorphism_negative():
    assert not is_isomorphic(chain(4), boolean_lattice(2))
    assert not is_isomorphic(chain_product(2, 3), chain_product(1, 6))
    # same invariants multiset is not enough: two non-isomorphic 6-element posets
    assert not is_isomorphic(chain_product(2, 3), antichain(6))


@pytest.mark.parametrize("m", range(5))
def test_birkhoff_decomposition_exhaustive(m):
    for P in labeled_posets(m):
        all_ideals = set(I.mask for I in ideals(P))
        for A in maximal_cover_free_subsets(P):
            seen = []
            for b in decompose_birkhoff(P, A):
                assert len(b.interval) == 2 ** len(b.free)
                seen += [I.mask for I in b.interval]
                for I in b.interval:
                    assert phi_ideal(P, A, I) == b.bottom
                    assert b.bottom <= I <= psi_ideal(P, A, b.bottom)
            assert sorted(seen) == sorted(all_ideals)


def test_phi_image_is_bottoms():
    rng = random.Random(11)
    for _ in range(40):
        P = random_poset(rng, rng.randint(1, 7), rng.uniform(0.1, 0.6))
        for A in maximal_cover_free_subsets(P):
            bottoms = {b.bottom for b in decompose_birkhoff(P, A)}
            images = set()
            for I in ideals(P):
                f = phi_ideal(P, A, I)
                assert phi_ideal(P, A, f) == f
                assert f <= I <= psi_ideal(P, A, I)
                images.add(f)
            assert images == bottoms


def _transport(a, b, A):
    P = chain_product(a, b)
    img = lambda I: str(partition_to_word(ideal_to_partition(P, I)))
    return sorted((img(blk.bottom), tuple(sorted(img(I) for I in blk.interval)))
                  for blk in decompose_birkhoff(P, A))


def _direct(n, k):
    return sorted((str(b.bottom), tuple(map(str, b.members))) for b in decompose(n, k))


def test_search_for_subset_reproducing_pair_decomposition():
    """Exhaustive search over cover-free subsets of C_a x C_b for n <= 6."""
    for n in range(2, 7):
        for k in range(1, n):
            a = n - k
            P = chain_product(a, k)
            target = Counter(len(b) for b in decompose(n, k))
            exact = []
            for mask in range(1 << P.size):
                if not is_cover_free(P, mask):
                    continue
                A = {e for e in range(P.size) if mask >> e & 1}
                sizes = Counter(len(b.interval) for b in decompose_birkhoff(P, A))
                if sizes == target and _transport(a, k, A) == _direct(n, k):
                    exact.append(frozenset(A))
            assert exact == [omega_pair_subset(a, k)]


@pytest.mark.parametrize("n", range(2, 9))
def test_pair_subset_transports_decomposition(n):
    for k in range(1, n):
        assert _transport(n - k, k, omega_pair_subset(n - k, k)) == _direct(n, k)
        assert is_cover_free(chain_product(n - k, k), omega_pair_subset(n - k, k))
