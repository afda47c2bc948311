"""Pure-Python kernels. Same contract as the compiled ``_speedups`` module.

Words are ints: position 1 of a length-``n`` word is bit ``n - 1``, so
ascending integer order is lexicographic order with 0 < 1.
"""

from math import comb

from .errors import CapExceededError


def combinations_masks(n, k):
    """All ``n``-bit masks with ``k`` set bits, ascending."""
    if k < 0 or k > n:
        return []
    if k == 0:
        return [0]
    total = comb(n, k)
    x = (1 << k) - 1
    out = [x]
    for _ in range(total - 1):
        # Gosper's hack: next larger integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
        out.append(x)
    return out


def inversions(mask, n):
    inv = 0
    ones = 0
    for shift in range(n - 1, -1, -1):
        if (mask >> shift) & 1:
            ones += 1
        else:
            inv += ones
    return inv


def odd_ascents(mask, n):
    count = 0
    shift = n - 1
    while shift >= 1:
        if not (mask >> shift) & 1 and (mask >> (shift - 1)) & 1:
            count += 1
        shift -= 2
    return count


def word_stats(masks, n):
    """Inversion counts and odd-position ascent counts for each mask."""
    invs = [inversions(m, n) for m in masks]
    ascs = [odd_ascents(m, n) for m in masks]
    return invs, ascs


def inversion_counts(n, k):
    """Histogram ``h[d] = #{w with n letters, k ones, inv(w) = d}``."""
    if k < 0 or k > n:
        return []
    counts = [0] * (k * (n - k) + 1)
    for m in combinations_masks(n, k):
        counts[inversions(m, n)] += 1
    return counts


def lower_ideals(order, lower_covers, cap):
    """Masks of all downward-closed subsets.

    ``order`` is a linear extension of the elements and ``lower_covers[e]``
    the mask of elements covered by ``e``. Raises CapExceededError once
    more than ``cap`` ideals have been produced.
    """
    m = len(order)
    out = []
    stack = [(0, 0)]
    while stack:
        idx, cur = stack.pop()
        if idx == m:
            out.append(cur)
            if len(out) > cap:
                raise CapExceededError(
                    f"more than {cap} order ideals", reached=len(out)
                )
            continue
        e = order[idx]
        stack.append((idx + 1, cur))
        if lower_covers[e] & ~cur == 0:
            stack.append((idx + 1, cur | (1 << e)))
    return out
