"""Exact univariate integer polynomials and the q-binomial oracle.

Coefficients are Python ints, so arithmetic never overflows or wraps.
"""

from __future__ import annotations

import threading
from itertools import zip_longest
from typing import Iterable, Sequence

__all__ = [
    "Polynomial",
    "ZERO",
    "ONE",
    "Q",
    "add",
    "mul",
    "pow_",
    "mul_monomial",
    "eval_at",
    "is_palindromic",
    "gaussian_oracle",
    "monomial",
]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coeffs[:end])


class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of degree ``i``.

    Instances are immutable and hashable. The zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        self._coeffs = _trim(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self._coeffs):
            return self._coeffs[d]
        return 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("Polynomial", self._coeffs))

    def __repr__(self):
        return f"Polynomial({list(self._coeffs)})"

    def __str__(self):
        return self.to_text()

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial([other])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(a + b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, d: int) -> "Polynomial":
        """Multiply by the monomial of degree ``d``."""
        if d < 0:
            raise ValueError("monomial degree must be non-negative")
        if not self._coeffs:
            return ZERO
        return Polynomial((0,) * d + self._coeffs)

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def to_text(self, var: str = "q") -> str:
        """Ascending-degree text form, e.g. ``1 + q + 2*q^2``."""
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "Polynomial":
        """Inverse of :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return ZERO
        tokens = text.replace("- ", "+ -").split("+ ")
        out: dict[int, int] = {}
        for tok in tokens:
            tok = tok.strip()
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            if var in tok:
                coef, _, power = tok.partition(var)
                coef = int(coef.rstrip("*")) if coef else 1
                d = int(power[1:]) if power.startswith("^") else 1
            else:
                coef, d = int(tok), 0
            out[d] = out.get(d, 0) + sign * coef
        size = max(out) + 1 if out else 0
        return cls(out.get(i, 0) for i in range(size))


ZERO = Polynomial()
ONE = Polynomial([1])
Q = Polynomial([0, 1])


def monomial(d: int, c: int = 1) -> Polynomial:
    return Polynomial([c]).shift(d)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow_(p: Polynomial, e: int) -> Polynomial:
    return p**e


def mul_monomial(p: Polynomial, d: int) -> Polynomial:
    return p.shift(d)


def eval_at(p: Polynomial, x0: int) -> int:
    """Horner evaluation at an integer point."""
    return p(x0)


def is_palindromic(p: Polynomial) -> bool:
    c = p.coeffs
    return c == c[::-1]


# rows of the q-Pascal triangle, grown on demand under a lock
_ROWS: list[tuple[Polynomial, ...]] = [(ONE,)]
_ROWS_LOCK = threading.Lock()


def _gauss_row(n: int) -> tuple[Polynomial, ...]:
    if n < len(_ROWS):
        return _ROWS[n]
    with _ROWS_LOCK:
        while len(_ROWS) <= n:
            m = len(_ROWS)
            prev = _ROWS[m - 1]
            row = [ONE]
            for j in range(1, m):
                row.append(prev[j - 1] + prev[j].shift(j))
            row.append(ONE)
            _ROWS.append(tuple(row))
    return _ROWS[n]


def gaussian_oracle(n: int, k: int) -> Polynomial:
    """The q-binomial coefficient via q-Pascal:
    ``G(n, k) = G(n-1, k-1) + q^k G(n-1, k)``.

    Zero outside ``0 <= k <= n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return ZERO
    return _gauss_row(n)[k]
