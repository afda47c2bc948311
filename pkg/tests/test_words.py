from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import all_words, inversion_poly, inversions
from qgauss.counting import WeakPartition, box_partitions
from qgauss.errors import CapExceededError, QGaussError
from qgauss.qpoly import gaussian_oracle
from qgauss.words import (
    Word,
    asc_odd,
    block_stat_b,
    enumerate_omega,
    enumerate_omega_r,
    inv,
    is_block_sorted,
    macmahon_sum,
    partition_to_word,
    phi,
    psi,
    word_to_partition,
)

W = Word.from_str
words_st = st.integers(0, 12).flatmap(
    lambda n: st.integers(0, (1 << n) - 1).map(lambda m: Word(n, m))
)


def strs(ws):
    return [str(w) for w in ws]


def test_word_basics():
    w = W("0101")
    assert w.n == 4 and w.k == 2
    assert w.bits == (0, 1, 0, 1)
    assert w.letter(1) == 0 and w.letter(4) == 1
    assert str(W("")) == ""
    with pytest.raises(QGaussError):
        W("012")
    with pytest.raises(QGaussError):
        Word(65, 0)
    with pytest.raises(IndexError):
        w.letter(0)


def test_enumerate_omega_examples():
    assert strs(enumerate_omega(2, 1)) == ["01", "10"]
    assert strs(enumerate_omega(3, 2)) == ["011", "101", "110"]
    assert len(enumerate_omega(4, 2)) == 6
    assert enumerate_omega(3, 4) == []
    assert enumerate_omega(3, -1) == []
    assert strs(enumerate_omega(0, 0)) == [""]


@pytest.mark.parametrize("n", range(11))
def test_enumerate_omega_matches_brute_force(n):
    for k in range(n + 1):
        got = strs(enumerate_omega(n, k))
        assert got == all_words(n, k)
        assert len(got) == comb(n, k)


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_omega(25, 3)
    assert len(enumerate_omega(25, 1, cap=25)) == 25
    with pytest.raises(QGaussError):
        enumerate_omega(65, 1, cap=100)


@pytest.mark.parametrize("word,expected", [("0011", 0), ("0101", 1), ("1100", 4)])
def test_inv_examples(word, expected):
    assert inv(W(word)) == expected


@pytest.mark.parametrize("word,expected", [("0101", 2), ("0011", 0), ("110", 0), ("01", 1), ("1", 0)])
def test_asc_odd_examples(word, expected):
    assert asc_odd(W(word)) == expected


def test_phi_psi_examples():
    assert str(phi(W("10"))) == "01"
    assert str(phi(W("10010"))) == "01010"
    assert str(psi(W("01"))) == "10"
    assert str(psi(W("01010"))) == "10100"
    assert str(psi(W("1100"))) == "1100"
    for v in enumerate_omega_r(6, 3, 2):
        assert phi(v) == v


def test_enumerate_omega_r_examples():
    assert strs(enumerate_omega_r(4, 2, 2)) == ["0011", "0101", "1100"]
    assert strs(enumerate_omega_r(6, 3, 3)) == ["000111", "001011", "011001", "111000"]
    assert len(enumerate_omega_r(10, 5, 2)) == 51
    with pytest.raises(QGaussError):
        enumerate_omega_r(4, 2, 0)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_enumerate_omega_r_is_filter(r):
    for n in range(10):
        for k in range(n + 1):
            expected = [w for w in all_words(n, k)
                        if all(list(w[j:j + r]) == sorted(w[j:j + r])
                               for j in range(0, n - n % r, r))]
            assert strs(enumerate_omega_r(n, k, r)) == expected


def test_r2_is_phi_fixed_points():
    for n in range(11):
        for k in range(n + 1):
            fixed = [w for w in enumerate_omega(n, k) if phi(w) == w]
            assert enumerate_omega_r(n, k, 2) == fixed


def test_block_stat_examples():
    assert block_stat_b(W("001011"), 3, 1) == 2
    assert block_stat_b(W("111000"), 3, 1) == 0
    assert block_stat_b(W("0101"), 2, 1) == 2 == asc_odd(W("0101"))
    with pytest.raises(QGaussError):
        block_stat_b(W("0101"), 2, 2)
    with pytest.raises(QGaussError):
        block_stat_b(W("1001"), 2, 1)


def test_block_stat_ignores_tail():
    # the trailing "1" never counts
    assert block_stat_b(W("01011"), 2, 1) == 2
    assert is_block_sorted(W("00110"), 2)


def test_word_to_partition_examples():
    assert word_to_partition(W("0011")).parts == (0, 0)
    assert word_to_partition(W("1100")).parts == (2, 2)
    assert word_to_partition(W("0101")).parts == (0, 1)


@pytest.mark.parametrize("n", range(13))
def test_word_partition_bijection(n):
    for k in range(n + 1):
        words = enumerate_omega(n, k)
        images = [word_to_partition(w) for w in words]
        assert len(set(images)) == len(words)
        assert sorted(images) == sorted(box_partitions(n - k, k))
        for w, lam in zip(words, images):
            assert lam.size == inv(w)
            assert partition_to_word(lam) == w


def test_macmahon_examples():
    assert macmahon_sum(2, 1).coeffs == (1, 1)
    assert macmahon_sum(4, 2).coeffs == (1, 1, 2, 1, 1)
    for n in range(10):
        assert macmahon_sum(n, 0).coeffs == (1,)


@pytest.mark.parametrize("n", range(13))
def test_macmahon_equals_oracle(n):
    for k in range(n + 1):
        assert macmahon_sum(n, k) == gaussian_oracle(n, k)
        if n <= 9:
            assert list(macmahon_sum(n, k).coeffs) == inversion_poly(n, k)


@given(words_st)
def test_inv_matches_pair_count(w):
    assert inv(w) == inversions(str(w))


@given(words_st)
def test_phi_psi_properties(w):
    assert phi(phi(w)) == phi(w)
    assert psi(psi(w)) == psi(w)
    assert phi(psi(w)) == phi(w)
    assert psi(phi(w)) == psi(w)
    assert inv(phi(w)) <= inv(w) <= inv(psi(w))
    assert inv(psi(w)) - inv(phi(w)) == asc_odd(phi(w))
    assert phi(w).k == w.k == psi(w).k


@given(words_st)
def test_psi_keeps_pair_multisets(w):
    s, t = str(w), str(psi(phi(w)))
    pairs = lambda x: [sorted(x[i:i + 2]) for i in range(0, len(x), 2)]
    assert pairs(s) == pairs(t)


def test_weak_partition_validation():
    with pytest.raises(ValueError):
        WeakPartition((2, 1), 3)
    with pytest.raises(ValueError):
        WeakPartition((0, 4), 3)
