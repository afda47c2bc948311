"""Finite posets, their lattices of lower order ideals, and the Boolean
decomposition of ``J(P)`` induced by a cover-free subset ``A``.

Elements are ``0..m-1`` and subsets are bit masks (at most 64 elements).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from . import kernels
from .counting import WeakPartition
from .errors import CapExceededError, PosetError, QGaussError
from .qpoly import Polynomial, monomial

__all__ = [
    "FinitePoset",
    "Ideal",
    "BirkhoffBlock",
    "MAX_POSET_SIZE",
    "DEFAULT_MAX_IDEALS",
    "parse_poset",
    "load_poset",
    "parse_subset",
    "chain",
    "antichain",
    "chain_product",
    "ideals",
    "ideal_lattice",
    "is_ideal",
    "is_cover_free",
    "maximal_in",
    "phi_ideal",
    "psi_ideal",
    "decompose_birkhoff",
    "ideal_to_partition",
    "omega_pair_subset",
    "is_isomorphic",
    "random_poset",
    "labeled_posets",
    "poset_product",
    "boolean_lattice",
    "maximal_cover_free_subsets",
]

MAX_POSET_SIZE = 64
DEFAULT_MAX_IDEALS = 10**6
MAX_ISO_SIZE = 1000


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _topological_order(size: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(size)]
    indeg = [0] * size
    for u, v in pairs:
        succ[u].append(v)
        indeg[v] += 1
    ready = [e for e in range(size) if indeg[e] == 0]
    ready.reverse()
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in sorted(succ[u], reverse=True):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if len(order) != size:
        raise PosetError("cover relation contains a cycle")
    return order


class FinitePoset:
    """A finite poset given by its cover pairs ``(u, v)``: ``u`` is covered by ``v``.

    Construction rejects cycles and any listed pair that is implied by
    other pairs (i.e. not a genuine cover).
    """

    def __init__(self, size: int, covers: Iterable[tuple[int, int]] = (), *, grid_shape=None):
        if size < 0:
            raise PosetError("poset size must be non-negative")
        if size > MAX_POSET_SIZE:
            raise PosetError(f"at most {MAX_POSET_SIZE} elements supported, got {size}")
        covers = frozenset((int(u), int(v)) for u, v in covers)
        for u, v in covers:
            if not (0 <= u < size and 0 <= v < size):
                raise PosetError(f"cover {u} < {v} names an element outside 0..{size - 1}")
            if u == v:
                raise PosetError(f"self-cover {u} < {v}")
        self.size = size
        self.covers = covers
        self.grid_shape = grid_shape
        self.order = _topological_order(size, covers)

        self.lower_covers = [0] * size
        self.upper_covers = [0] * size
        for u, v in covers:
            self.lower_covers[v] |= 1 << u
            self.upper_covers[u] |= 1 << v
        self.below = [0] * size
        for v in self.order:
            acc = 0
            for u in _bits(self.lower_covers[v]):
                acc |= self.below[u] | (1 << u)
            self.below[v] = acc
        self.above = [0] * size
        for v in range(size):
            for u in _bits(self.below[v]):
                self.above[u] |= 1 << v

        for u, v in sorted(covers):
            for w in _bits(self.lower_covers[v] & ~(1 << u)):
                if self.below[w] >> u & 1:
                    raise PosetError(f"{u} < {v} is not a cover: {u} < {w} < {v}")

    @classmethod
    def from_relations(cls, size: int, pairs: Iterable[tuple[int, int]], **kw) -> "FinitePoset":
        """Poset generated by arbitrary strict relations; keeps only the covers."""
        pairs = {(int(u), int(v)) for u, v in pairs}
        order = _topological_order(size, pairs)
        direct = [0] * size
        for u, v in pairs:
            direct[v] |= 1 << u
        below = [0] * size
        for v in order:
            acc = 0
            for u in _bits(direct[v]):
                acc |= below[u] | (1 << u)
            below[v] = acc
        covers = []
        for v in range(size):
            for u in _bits(below[v]):
                # u < w < v for some w means u is below some w in below[v]
                if not any(below[w] >> u & 1 for w in _bits(below[v])):
                    covers.append((u, v))
        return cls(size, covers, **kw)

    def less(self, u: int, v: int) -> bool:
        return bool(self.below[v] >> u & 1)

    def leq(self, u: int, v: int) -> bool:
        return u == v or self.less(u, v)

    def __repr__(self):
        return f"FinitePoset({self.size}, {sorted(self.covers)})"

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.size == other.size and self.covers == other.covers

    def __hash__(self):
        return hash((self.size, self.covers))

    def to_text(self) -> str:
        lines = [f"poset {self.size}"]
        lines += [f"{u} < {v}" for u, v in sorted(self.covers)]
        return "\n".join(lines) + "\n"


def parse_poset(text: str) -> FinitePoset:
    """Parse the ``poset <m>`` / ``<u> < <v>`` text format."""
    header = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2 or fields[0] != "poset" or not fields[1].isdigit():
                raise PosetError(f"line {lineno}: expected 'poset <m>', got {raw!r}")
            header = int(fields[1])
            continue
        if len(fields) != 3 or fields[1] != "<":
            raise PosetError(f"line {lineno}: expected '<u> < <v>', got {raw!r}")
        try:
            covers.append((int(fields[0]), int(fields[2])))
        except ValueError:
            raise PosetError(f"line {lineno}: element names must be integers") from None
    if header is None:
        raise PosetError("missing 'poset <m>' header")
    if len(set(covers)) != len(covers):
        raise PosetError("duplicate cover pair")
    return FinitePoset(header, covers)


def load_poset(path) -> FinitePoset:
    return parse_poset(Path(path).read_text(encoding="utf-8"))


def parse_subset(text: str) -> frozenset[int]:
    """Comma-separated element indices, e.g. ``"2,5,7"``; empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise QGaussError(f"malformed subset {text!r}") from None


def chain(m: int) -> FinitePoset:
    return FinitePoset(m, [(i, i + 1) for i in range(m - 1)])


def antichain(m: int) -> FinitePoset:
    return FinitePoset(m, [])


def chain_product(a: int, b: int) -> FinitePoset:
    """``C_a x C_b``; element ``(i, j)`` (column ``i``, level ``j``) is ``i*b + j``."""
    if a < 1 or b < 1:
        raise QGaussError("chain lengths must be at least 1")
    covers = []
    for i in range(a):
        for j in range(b):
            e = i * b + j
            if i + 1 < a:
                covers.append((e, e + b))
            if j + 1 < b:
                covers.append((e, e + 1))
    return FinitePoset(a * b, covers, grid_shape=(a, b))


@dataclass(frozen=True)
class Ideal:
    """A lower order ideal, stored as a bit mask of its members."""

    mask: int

    @classmethod
    def of(cls, members: Iterable[int]) -> "Ideal":
        return cls(_mask_of(members))

    @property
    def members(self) -> frozenset[int]:
        return frozenset(_bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, e: int):
        return bool(self.mask >> e & 1)

    def __le__(self, other: "Ideal"):
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal"):
        return self <= other and self.mask != other.mask

    def sort_key(self):
        return (self.mask.bit_count(), self.mask)

    def __str__(self):
        return "{" + ",".join(map(str, sorted(_bits(self.mask)))) + "}"


def is_ideal(P: FinitePoset, mask: int) -> bool:
    return all(P.below[e] & ~mask == 0 for e in _bits(mask))


def ideals(P: FinitePoset, cap: int = DEFAULT_MAX_IDEALS) -> list[Ideal]:
    """All lower order ideals, ordered by cardinality then by mask value."""
    masks = kernels.lower_ideals(P.order, P.lower_covers, cap)
    masks.sort(key=lambda m: (m.bit_count(), m))
    return [Ideal(m) for m in masks]


def ideal_lattice(P: FinitePoset, cap: int = DEFAULT_MAX_IDEALS) -> tuple[FinitePoset, list[Ideal]]:
    """``J(P)`` under inclusion as a poset; element ``t`` is ``ideals(P)[t]``."""
    js = ideals(P, cap)
    if len(js) > MAX_POSET_SIZE:
        raise CapExceededError(
            f"J(P) has {len(js)} elements, more than {MAX_POSET_SIZE}", reached=len(js)
        )
    index = {I.mask: t for t, I in enumerate(js)}
    covers = []
    for t, I in enumerate(js):
        for e in range(P.size):
            if not I.mask >> e & 1:
                up = I.mask | (1 << e)
                if up in index:
                    covers.append((t, index[up]))
    return FinitePoset(len(js), covers), js


def _subset_mask(P: FinitePoset, A) -> int:
    if isinstance(A, int):
        mask = A
    else:
        mask = _mask_of(A)
    if mask >> P.size:
        raise QGaussError(f"subset names an element outside 0..{P.size - 1}")
    if mask < 0:
        raise QGaussError("negative element index")
    return mask


def is_cover_free(P: FinitePoset, A, strict: bool = False) -> bool:
    """True iff no cover of ``P`` joins two members of ``A``.

    With ``strict=True`` require ``A`` to be an antichain instead.
    """
    a = _subset_mask(P, A)
    rel = P.below if strict else P.lower_covers
    return all(rel[e] & a == 0 for e in _bits(a))


def maximal_in(P: FinitePoset, mask: int) -> int:
    """Mask of the maximal elements of the subset ``mask``."""
    return _mask_of(e for e in _bits(mask) if P.above[e] & mask == 0)


def _prepare(P: FinitePoset, A, I) -> tuple[int, int]:
    a = _subset_mask(P, A)
    if not is_cover_free(P, a):
        raise QGaussError("subset A contains a cover pair")
    i = I.mask if isinstance(I, Ideal) else _mask_of(I)
    if i >> P.size or not is_ideal(P, i):
        raise QGaussError(f"{Ideal(i)} is not an order ideal")
    return a, i


def phi_ideal(P: FinitePoset, A, I) -> Ideal:
    """Remove from ``I`` the members of ``A`` that are maximal in ``I``."""
    a, i = _prepare(P, A, I)
    return Ideal(i & ~(maximal_in(P, i) & a))


def _addable(P: FinitePoset, a: int, i: int) -> int:
    return _mask_of(e for e in _bits(a & ~i) if P.below[e] & ~i == 0)


def psi_ideal(P: FinitePoset, A, I) -> Ideal:
    """Add to ``I`` every member of ``A`` that can be added on its own."""
    a, i = _prepare(P, A, I)
    return Ideal(i | _addable(P, a, i))


@dataclass(frozen=True)
class BirkhoffBlock:
    """The interval ``[bottom, psi(bottom)]`` of ``J(P)``."""

    bottom: Ideal
    interval: tuple[Ideal, ...]

    @property
    def top(self) -> Ideal:
        return self.interval[-1]

    @property
    def free(self) -> frozenset[int]:
        """Elements that may be added independently to the bottom."""
        return frozenset(_bits(self.top.mask & ~self.bottom.mask))

    @property
    def rank_poly(self) -> Polynomial:
        """Sum of ``q^|J|`` over the interval."""
        return Polynomial([1, 1]) ** len(self.free) * monomial(len(self.bottom))


def decompose_birkhoff(P: FinitePoset, A, cap: int = DEFAULT_MAX_IDEALS) -> list[BirkhoffBlock]:
    """Blocks ``[I, psi(I)]`` for the ideals ``I`` with no maximal element in ``A``.

    Blocks come in the canonical ideal order of their bottoms; each interval
    lists ``I | S`` for every subset ``S`` of ``psi(I) - I``.
    """
    a = _subset_mask(P, A)
    if not is_cover_free(P, a):
        raise QGaussError("subset A contains a cover pair")
    blocks = []
    for I in ideals(P, cap):
        if maximal_in(P, I.mask) & a:
            continue
        free = list(_bits(_addable(P, a, I.mask)))
        members = []
        for r in range(len(free) + 1):
            for combo in combinations(free, r):
                members.append(Ideal(I.mask | _mask_of(combo)))
        members.sort(key=Ideal.sort_key)
        blocks.append(BirkhoffBlock(I, tuple(members)))
    return blocks


def ideal_to_partition(P: FinitePoset, I: Ideal) -> WeakPartition:
    """Column heights of an ideal of ``C_a x C_b``, read from the last column
    to the first so they increase weakly."""
    if P.grid_shape is None:
        raise QGaussError("ideal_to_partition needs a poset built by chain_product")
    a, b = P.grid_shape
    col = (1 << b) - 1
    heights = [((I.mask >> (i * b)) & col).bit_count() for i in range(a)]
    return WeakPartition(tuple(reversed(heights)), b)


def omega_pair_subset(a: int, b: int) -> frozenset[int]:
    """Cells of ``C_a x C_b`` whose addition swaps an odd-position ``01`` pair.

    Under ``ideal_to_partition`` the cell in column ``i``, level ``j`` is
    box ``(a - i, j + 1)`` of the partition; those boxes with even
    coordinate sum are exactly the ones toggled by the pair-sorting maps
    on words. The set is cover-free but not an antichain.
    """
    return frozenset(
        i * b + j for i in range(a) for j in range(b) if ((a - i) + (j + 1)) % 2 == 0
    )


def _invariants(P: FinitePoset) -> list[tuple[int, int, int, int]]:
    return [
        (
            P.below[e].bit_count(),
            P.above[e].bit_count(),
            P.lower_covers[e].bit_count(),
            P.upper_covers[e].bit_count(),
        )
        for e in range(P.size)
    ]


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    """Order isomorphism by backtracking over invariant-compatible candidates."""
    if P.size != Q.size or len(P.covers) != len(Q.covers):
        return False
    if P.size > MAX_ISO_SIZE:
        raise CapExceededError(f"isomorphism test limited to {MAX_ISO_SIZE} elements")
    inv_p, inv_q = _invariants(P), _invariants(Q)
    if sorted(inv_p) != sorted(inv_q):
        return False
    by_inv: dict = {}
    for e, key in enumerate(inv_q):
        by_inv.setdefault(key, []).append(e)

    order = P.order
    image = [-1] * P.size
    used = [False] * Q.size

    def consistent(p: int, q: int) -> bool:
        for p2 in _bits(P.below[p]):
            if not Q.below[q] >> image[p2] & 1:
                return False
        # p is placed after everything below it; check placed non-relations
        for p2 in placed:
            if not P.below[p] >> p2 & 1 and Q.below[q] >> image[p2] & 1:
                return False
            if Q.above[q] >> image[p2] & 1:
                return False
        return True

    placed: list[int] = []

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        p = order[idx]
        for q in by_inv[inv_p[p]]:
            if used[q] or not consistent(p, q):
                continue
            image[p] = q
            used[q] = True
            placed.append(p)
            if rec(idx + 1):
                return True
            placed.pop()
            used[q] = False
            image[p] = -1
        return False

    return rec(0)


def random_poset(rng: random.Random, size: int, edge_prob: float) -> FinitePoset:
    """Random order: relate earlier to later elements of a shuffled labelling."""
    perm = rng.sample(range(size), size)
    pairs = [
        (perm[i], perm[j])
        for i in range(size)
        for j in range(i + 1, size)
        if rng.random() < edge_prob
    ]
    return FinitePoset.from_relations(size, pairs)


def labeled_posets(size: int) -> Iterator[FinitePoset]:
    """Every poset on the labelled element set ``0..size-1`` (one per Hasse diagram)."""
    pairs = [(u, v) for u in range(size) for v in range(size) if u != v]
    for choice in range(1 << len(pairs)):
        covers = [pairs[t] for t in _bits(choice)]
        try:
            yield FinitePoset(size, covers)
        except PosetError:
            continue


def maximal_cover_free_subsets(P: FinitePoset) -> list[frozenset[int]]:
    """All inclusion-maximal cover-free subsets (exhaustive, so keep ``P`` small)."""
    if P.size > 20:
        raise CapExceededError("maximal cover-free subsets are enumerated for at most 20 elements")
    free = [m for m in range(1 << P.size) if is_cover_free(P, m)]
    free_set = set(free)
    out = []
    for m in free:
        if all((m | (1 << e)) not in free_set for e in range(P.size) if not m >> e & 1):
            out.append(frozenset(_bits(m)))
    return out


def poset_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Cartesian product; element ``(x, y)`` is ``x * Q.size + y``."""
    covers = []
    for x in range(P.size):
        for y in range(Q.size):
            e = x * Q.size + y
            for x2 in _bits(P.upper_covers[x]):
                covers.append((e, x2 * Q.size + y))
            for y2 in _bits(Q.upper_covers[y]):
                covers.append((e, x * Q.size + y2))
    return FinitePoset(P.size * Q.size, covers)


def boolean_lattice(m: int) -> FinitePoset:
    """The subsets of an ``m``-set under inclusion; element ``s`` is the mask ``s``."""
    covers = [(s, s | (1 << e)) for s in range(1 << m) for e in range(m) if not s >> e & 1]
    return FinitePoset(1 << m, covers)
