"""The er and frst triangles, weak partitions in a box, and Table 1 data.

``er(n, k)`` counts 0-1 words sorted within each consecutive pair of
positions; ``frst(n, k)`` counts the index set of the earlier
q-(1+q)-analogue through its weak-partition description.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Literal

from .errors import CapExceededError
from .qpoly import Polynomial

__all__ = [
    "WeakPartition",
    "Triangle",
    "er",
    "frst",
    "frst_short",
    "er_genpoly",
    "box_partitions",
    "enumerate_frst_partitions",
    "build_triangle",
    "TABLE1_ER",
    "TABLE1_FRST",
    "DEFAULT_ENUM_CAP",
]

DEFAULT_ENUM_CAP = comb(24, 12)

# Table 1, rows n = 0..10, copied verbatim.
TABLE1_FRST = (
    (1,),
    (1, 1),
    (1, 1, 1),
    (1, 2, 2, 1),
    (1, 2, 4, 2, 1),
    (1, 3, 6, 5, 3, 1),
    (1, 3, 9, 8, 8, 3, 1),
    (1, 4, 12, 14, 16, 9, 4, 1),
    (1, 4, 16, 20, 30, 19, 13, 4, 1),
    (1, 5, 20, 30, 50, 39, 32, 14, 5, 1),
    (1, 5, 25, 40, 80, 69, 71, 36, 19, 5, 1),
)
TABLE1_ER = (
    (1,),
    (1, 1),
    (1, 1, 1),
    (1, 2, 2, 1),
    (1, 2, 3, 2, 1),
    (1, 3, 5, 5, 3, 1),
    (1, 3, 6, 7, 6, 3, 1),
    (1, 4, 9, 13, 13, 9, 4, 1),
    (1, 4, 10, 16, 19, 16, 10, 4, 1),
    (1, 5, 14, 26, 35, 35, 26, 14, 5, 1),
    (1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1),
)


@dataclass(frozen=True, order=True)
class WeakPartition:
    """Weakly increasing parts inside a ``num_parts x max_part`` box."""

    parts: tuple[int, ...]
    max_part: int

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 or p > self.max_part for p in parts):
            raise ValueError(f"parts {parts} outside [0, {self.max_part}]")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly increasing")

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def complement(self) -> "WeakPartition":
        """Complement inside the box, re-sorted to be weakly increasing."""
        return WeakPartition(tuple(self.max_part - p for p in reversed(self.parts)), self.max_part)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Triangle:
    """Rows ``n = 0..n_max`` of a number triangle, row ``n`` has ``n + 1`` entries."""

    name: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk):
        n, k = nk
        if 0 <= n < len(self.rows) and 0 <= k <= n:
            return self.rows[n][k]
        return 0

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)

    def to_json(self) -> dict:
        return {"stat": self.name, "n_max": self.n_max, "rows": [list(r) for r in self.rows]}


# lru_cache is thread-safe for lookups; a racing miss only recomputes
@lru_cache(maxsize=None)
def _er(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n <= 1:
        return 1
    return _er(n - 2, k - 2) + _er(n - 2, k - 1) + _er(n - 2, k)


@lru_cache(maxsize=None)
def _frst(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n <= 1:
        return 1
    if k % 2 == 0:
        return _frst(n - 1, k - 1) + _frst(n - 1, k)
    return _frst(n - 2, k - 2) + _frst(n - 2, k - 1) + _frst(n - 2, k)


_warm_lock = threading.Lock()


def _warm(fn, n: int) -> None:
    # fill memo rows bottom-up so deep calls never hit the recursion limit
    with _warm_lock:
        for m in range(0, n + 1, 64):
            for j in range(m + 1):
                fn(m, j)


def er(n: int, k: int) -> int:
    """Count of pair-sorted words; zero outside ``0 <= k <= n``."""
    if n > 128:
        _warm(_er, n)
    return _er(n, k)


def frst(n: int, k: int) -> int:
    """The frst triangle via its two-term (even k) / three-term (odd k) recursion."""
    if n > 128:
        _warm(_frst, n)
    return _frst(n, k)


def frst_short(n: int, k: int) -> int:
    """The shorter odd-``k`` recursion ``frst(n-1, k-1) + frst(n-2, k)``.

    Evaluates one step of the short form on top of :func:`frst`; for even
    ``k`` it defers to :func:`frst`.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    if n <= 1 or k % 2 == 0:
        return frst(n, k)
    return frst(n - 1, k - 1) + frst(n - 2, k)


def er_genpoly(n: int) -> Polynomial:
    """``(1 + x + x^2)^(n // 2) * (1 + x)^(n % 2)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = Polynomial([1, 1, 1]) ** (n // 2)
    return p * Polynomial([1, 1]) if n % 2 else p


def box_partitions(num_parts: int, max_part: int) -> Iterator[WeakPartition]:
    """All weak partitions in the box, lexicographic on the part sequence."""
    if num_parts < 0 or max_part < 0:
        return

    def rec(prefix: list[int], low: int):
        if len(prefix) == num_parts:
            yield WeakPartition(tuple(prefix), max_part)
            return
        for v in range(low, max_part + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], 0)


def _even_multiplicity(parts: tuple[int, ...], parity: int) -> bool:
    # every part of the given parity occurs an even number of times
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    return all(c % 2 == 0 for v, c in counts.items() if v % 2 == parity)


def enumerate_frst_partitions(
    n: int,
    k: int,
    variant: Literal["lemma", "original"] = "lemma",
    cap: int = DEFAULT_ENUM_CAP,
) -> list[WeakPartition]:
    """Weak partitions with ``n - k`` parts, each at most ``k``, that satisfy

    * ``lemma``: every odd part has even multiplicity;
    * ``original``: for even ``k`` every odd part, for odd ``k`` every even
      part (0 included) has even multiplicity.

    Both lists have ``frst(n, k)`` members.
    """
    if variant not in ("lemma", "original"):
        raise ValueError(f"unknown variant {variant!r}")
    if k < 0 or k > n:
        return []
    if comb(n, k) > cap:
        raise CapExceededError(f"binomial({n},{k}) = {comb(n, k)} exceeds cap {cap}")
    parity = 1 if variant == "lemma" or k % 2 == 0 else 0
    return [lam for lam in box_partitions(n - k, k) if _even_multiplicity(lam.parts, parity)]


def build_triangle(stat: Literal["er", "frst"], n_max: int) -> Triangle:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    fn = {"er": er, "frst": frst}.get(stat)
    if fn is None:
        raise ValueError(f"unknown statistic {stat!r}")
    rows = tuple(tuple(fn(n, k) for k in range(n + 1)) for n in range(n_max + 1))
    return Triangle(stat, rows)
