"""The lattice of 0-1 words under ``u01v < u10v`` and its decompositions.

Two decompositions live here: Boolean intervals ``[v, psi(v)]`` indexed by
pair-sorted words, and for general block size ``r`` the fibres of block
sorting, each a product of smaller word lattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import kernels
from .birkhoff import FinitePoset, is_isomorphic, MAX_ISO_SIZE
from .errors import CapExceededError, QGaussError
from .qpoly import ONE, ZERO, Polynomial, gaussian_oracle, monomial
from .words import (
    DEFAULT_MAX_N,
    Word,
    block_stat_b,
    block_sums,
    enumerate_omega,
    enumerate_omega_r,
    inv,
    is_block_sorted,
    phi,
    word_to_partition,
)

__all__ = [
    "DecompositionBlock",
    "upper_covers",
    "leq",
    "boolean_interval",
    "decompose",
    "fiber_r",
    "decompose_r",
    "q1q_binomial",
    "r_analogue_binomial",
    "rank_factor_text",
    "omega_poset",
    "block_poset",
    "subposet_isomorphic",
]


@dataclass(frozen=True)
class DecompositionBlock:
    """One fibre of a decomposition of the word lattice.

    ``block_stats[i - 1]`` is the number of full blocks whose letter sum is
    ``i`` or ``r - i``; the rank polynomial is
    ``q^inv(bottom) * prod_i G(r, i) ** block_stats[i - 1]``.
    """

    bottom: Word
    members: tuple[Word, ...]
    rank_poly: Polynomial
    r: int = 2
    block_stats: tuple[int, ...] = ()

    def __len__(self):
        return len(self.members)

    def rank_text(self, var: str = "q") -> str:
        return rank_factor_text(inv(self.bottom), self.r, self.block_stats, var)

    def to_json(self) -> dict:
        return {
            "bottom": str(self.bottom),
            "members": [str(w) for w in self.members],
            "size": len(self.members),
            "rank_poly": list(self.rank_poly.coeffs),
            "rank_factored": self.rank_text(),
        }


def rank_factor_text(shift: int, r: int, stats, var: str = "q") -> str:
    """Factored form such as ``q*(1 + q)^2`` or ``q^4*(1 + q + q^2)^2``."""
    parts = []
    if shift:
        parts.append(var if shift == 1 else f"{var}^{shift}")
    for i, b in enumerate(stats, 1):
        if b:
            base = "(" + gaussian_oracle(r, i).to_text(var) + ")"
            parts.append(base if b == 1 else f"{base}^{b}")
    return "*".join(parts) if parts else "1"


def _same_shape(u: Word, w: Word) -> None:
    if u.n != w.n or u.k != w.k:
        raise QGaussError(f"words {u} and {w} lie in different lattices")


def upper_covers(w: Word) -> list[Word]:
    """Words obtained by turning one factor ``01`` into ``10``, in lexicographic order."""
    out = []
    for s in range(w.n - 1, 0, -1):
        if not (w.mask >> s) & 1 and (w.mask >> (s - 1)) & 1:
            out.append(Word(w.n, w.mask ^ (0b11 << (s - 1))))
    return sorted(out)


def leq(u: Word, w: Word) -> bool:
    """Containment of the associated Ferrers diagrams."""
    _same_shape(u, w)
    return all(a <= b for a, b in zip(word_to_partition(u).parts, word_to_partition(w).parts))


def _pair_sorted(v: Word) -> bool:
    return phi(v) == v


def boolean_interval(v: Word) -> DecompositionBlock:
    """The fibre ``phi^-1(v)`` of a pair-sorted word, equal to ``[v, psi(v)]``."""
    if not _pair_sorted(v):
        raise QGaussError(f"{v} is not sorted within pairs")
    return fiber_r(v.n, v.k, 2, v)


def fiber_r(n: int, k: int, r: int, v: Word) -> DecompositionBlock:
    """All rearrangements of ``v`` inside each full block of ``r`` positions."""
    if r < 1:
        raise QGaussError("block size r must be at least 1")
    if v.n != n or v.k != k:
        raise QGaussError(f"{v} is not a word with {n} letters and {k} ones")
    if not is_block_sorted(v, r):
        raise QGaussError(f"{v} is not sorted within blocks of {r}")
    nb, tail = divmod(n, r)
    sums = block_sums(v, r)
    tail_bits = v.mask & ((1 << tail) - 1)
    choices = [kernels.combinations_masks(r, s) for s in sums]
    members = []
    for pick in product(*choices):
        mask = 0
        for blk in pick:
            mask = (mask << r) | blk
        members.append(Word(n, (mask << tail) | tail_bits))
    members.sort()
    stats = tuple(block_stat_b(v, r, i) for i in range(1, r // 2 + 1))
    poly = monomial(inv(v))
    for i, b in enumerate(stats, 1):
        poly = poly * gaussian_oracle(r, i) ** b
    return DecompositionBlock(v, tuple(members), poly, r, stats)


def decompose(n: int, k: int, cap: int = DEFAULT_MAX_N) -> list[DecompositionBlock]:
    """Boolean intervals ``[v, psi(v)]``, one per pair-sorted word ``v``."""
    return [boolean_interval(v) for v in enumerate_omega_r(n, k, 2, cap)]


def decompose_r(n: int, k: int, r: int, cap: int = DEFAULT_MAX_N) -> list[DecompositionBlock]:
    return [fiber_r(n, k, r, v) for v in enumerate_omega_r(n, k, r, cap)]


def q1q_binomial(n: int, k: int, cap: int = DEFAULT_MAX_N) -> Polynomial:
    """Sum over pair-sorted words of ``q^inv(v) * (1 + q)^asc_odd(v)``."""
    words = enumerate_omega_r(n, k, 2, cap)
    invs, ascs = kernels.word_stats([w.mask for w in words], n)
    # group by (inv, asc) so each power is expanded once
    tally: dict[tuple[int, int], int] = {}
    for a, b in zip(invs, ascs):
        tally[(a, b)] = tally.get((a, b), 0) + 1
    one_q = Polynomial([1, 1])
    total = ZERO
    for (a, b), c in tally.items():
        total = total + (one_q**b).shift(a) * c
    return total


def r_analogue_binomial(n: int, k: int, r: int, cap: int = DEFAULT_MAX_N) -> Polynomial:
    """Sum over block-sorted words of ``q^inv(v) * prod_i G(r, i)^b_i(v)``."""
    if r < 1:
        raise QGaussError("block size r must be at least 1")
    total = ZERO
    for v in enumerate_omega_r(n, k, r, cap):
        term = ONE
        for i in range(1, r // 2 + 1):
            term = term * gaussian_oracle(r, i) ** block_stat_b(v, r, i)
        total = total + term.shift(inv(v))
    return total


def omega_poset(n: int, k: int, cap: int = DEFAULT_MAX_N) -> tuple[FinitePoset, list[Word]]:
    """The word lattice as a FinitePoset; element ``t`` is the ``t``-th word."""
    words = enumerate_omega(n, k, cap)
    index = {w: t for t, w in enumerate(words)}
    covers = [(index[w], index[u]) for w in words for u in upper_covers(w)]
    return FinitePoset(len(words), covers), words


def block_poset(block: DecompositionBlock) -> FinitePoset:
    """Members of a block under the order induced from the word lattice."""
    size = len(block.members)
    if size > MAX_ISO_SIZE:
        raise CapExceededError(f"block of {size} elements exceeds {MAX_ISO_SIZE}")
    parts = [word_to_partition(w).parts for w in block.members]
    pairs = [
        (s, t)
        for s in range(size)
        for t in range(size)
        if s != t and all(a <= b for a, b in zip(parts[s], parts[t]))
    ]
    return FinitePoset.from_relations(size, pairs)


def subposet_isomorphic(block: DecompositionBlock, reference: FinitePoset) -> bool:
    """Whether the block, ordered as in the word lattice, is isomorphic to ``reference``."""
    return is_isomorphic(block_poset(block), reference)
