"""0-1 words: statistics, the pair-sorting maps, and the word sets.

Positions are 1-based in every public function. Internally a word is an
``n``-bit integer whose most significant bit is position 1, so integer
order coincides with lexicographic order (0 < 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .counting import WeakPartition
from .errors import CapExceededError, QGaussError
from .qpoly import Polynomial

__all__ = [
    "Word",
    "MAX_WORD_LENGTH",
    "DEFAULT_MAX_N",
    "enumerate_omega",
    "enumerate_omega_r",
    "inv",
    "asc_odd",
    "phi",
    "psi",
    "block_sums",
    "is_block_sorted",
    "block_stat_b",
    "word_to_partition",
    "partition_to_word",
    "macmahon_sum",
]

MAX_WORD_LENGTH = 64
DEFAULT_MAX_N = 24


@dataclass(frozen=True, order=True)
class Word:
    """A word of length ``n`` over {0, 1}, stored as a bit mask."""

    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_WORD_LENGTH:
            raise QGaussError(f"word length {self.n} outside 0..{MAX_WORD_LENGTH}")
        if not 0 <= self.mask < (1 << self.n):
            raise QGaussError(f"mask {self.mask} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> "Word":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise QGaussError(f"not a 0-1 word: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Word":
        return cls.from_str("".join(str(int(b)) for b in bits))

    @property
    def k(self) -> int:
        return self.mask.bit_count()

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def letter(self, i: int) -> int:
        """The letter at 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return (self.mask >> (self.n - i)) & 1

    def __len__(self):
        return self.n

    def __str__(self):
        return format(self.mask, f"0{self.n}b") if self.n else ""


def _check_n(n: int, k: int, cap: int) -> None:
    if n < 0:
        raise QGaussError("n must be non-negative")
    if n > MAX_WORD_LENGTH:
        raise QGaussError(f"n = {n} exceeds the {MAX_WORD_LENGTH}-bit word encoding")
    if n > cap:
        raise CapExceededError(f"n = {n} exceeds the enumeration cap {cap}")


def enumerate_omega(n: int, k: int, cap: int = DEFAULT_MAX_N) -> list[Word]:
    """All words with ``n - k`` zeros and ``k`` ones, in lexicographic order."""
    _check_n(n, k, cap)
    return [Word(n, m) for m in kernels.combinations_masks(n, k)]


def _block_sorted_masks(n: int, k: int, r: int) -> list[int]:
    nb, tail = divmod(n, r)
    out: list[int] = []
    tails: dict[int, list[int]] = {}

    def rec(j: int, mask: int, ones: int):
        room = (nb - j) * r + tail
        if ones > room:
            return
        if j == nb:
            if ones not in tails:
                tails[ones] = kernels.combinations_masks(tail, ones)
            for t in tails[ones]:
                out.append((mask << tail) | t)
            return
        # block 0^(r-s) 1^s grows lexicographically with s
        for s in range(min(r, ones) + 1):
            rec(j + 1, (mask << r) | ((1 << s) - 1), ones - s)

    rec(0, 0, k)
    return out


def enumerate_omega_r(n: int, k: int, r: int, cap: int = DEFAULT_MAX_N) -> list[Word]:
    """Words weakly increasing inside each full block of ``r`` positions.

    The last ``n mod r`` positions are unconstrained. ``r = 2`` gives the
    pair-sorted words counted by :func:`qgauss.counting.er`.
    """
    if r < 1:
        raise QGaussError("block size r must be at least 1")
    _check_n(n, k, cap)
    if k < 0 or k > n:
        return []
    return [Word(n, m) for m in _block_sorted_masks(n, k, r)]


def inv(w: Word) -> int:
    """Number of pairs ``i < j`` with ``w_i > w_j``."""
    return kernels.inversions(w.mask, w.n)


def asc_odd(w: Word) -> int:
    """Number of odd ``i < n`` with ``w_i < w_{i+1}``."""
    return kernels.odd_ascents(w.mask, w.n)


def _sort_pairs(w: Word, descending: bool) -> Word:
    mask = w.mask
    s = w.n - 1
    while s >= 1:
        hi = (mask >> s) & 1
        lo = (mask >> (s - 1)) & 1
        if hi != lo and bool(hi) != descending:
            mask ^= 0b11 << (s - 1)
        s -= 2
    return Word(w.n, mask)


def phi(w: Word) -> Word:
    """Sort each pair of positions (1,2), (3,4), ... into ascending order."""
    return _sort_pairs(w, descending=False)


def psi(w: Word) -> Word:
    """Sort each pair of positions (1,2), (3,4), ... into descending order."""
    return _sort_pairs(w, descending=True)


def block_sums(w: Word, r: int) -> list[int]:
    """Letter sums of the full blocks of length ``r``, left to right."""
    if r < 1:
        raise QGaussError("block size r must be at least 1")
    nb = w.n // r
    low = (1 << r) - 1
    return [((w.mask >> (w.n - r * (j + 1))) & low).bit_count() for j in range(nb)]


def is_block_sorted(w: Word, r: int) -> bool:
    if r < 1:
        raise QGaussError("block size r must be at least 1")
    low = (1 << r) - 1
    for j, s in enumerate(block_sums(w, r)):
        if (w.mask >> (w.n - r * (j + 1))) & low != (1 << s) - 1:
            return False
    return True


def block_stat_b(w: Word, r: int, i: int) -> int:
    """Number of full blocks whose letter sum is ``i`` or ``r - i``."""
    if not 1 <= i <= r // 2:
        raise QGaussError(f"statistic index i = {i} outside 1..{r // 2}")
    if not is_block_sorted(w, r):
        raise QGaussError(f"word {w} is not sorted within blocks of {r}")
    return sum(1 for s in block_sums(w, r) if s in (i, r - i))


def word_to_partition(w: Word) -> WeakPartition:
    """Part ``i`` is the number of ones strictly before the ``i``-th zero."""
    parts = []
    ones = 0
    for b in w.bits:
        if b:
            ones += 1
        else:
            parts.append(ones)
    return WeakPartition(tuple(parts), w.k)


def partition_to_word(lam: WeakPartition) -> Word:
    """Inverse of :func:`word_to_partition`."""
    bits = []
    ones = 0
    for p in lam.parts:
        bits.extend([1] * (p - ones))
        bits.append(0)
        ones = p
    bits.extend([1] * (lam.max_part - ones))
    return Word.from_bits(bits)


def macmahon_sum(n: int, k: int, cap: int = DEFAULT_MAX_N) -> Polynomial:
    """Sum of ``q^inv(w)`` over all words with ``k`` ones among ``n`` letters."""
    _check_n(n, k, cap)
    return Polynomial(kernels.inversion_counts(n, k))
