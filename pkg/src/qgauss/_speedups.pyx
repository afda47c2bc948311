# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels mirroring ``qgauss._pure``; masks are at most 64 bits."""

from math import comb

from qgauss.errors import CapExceededError

ctypedef unsigned long long u64


cdef inline int _inv(u64 x, int n) nogil:
    cdef int inv = 0, ones = 0, s
    for s in range(n - 1, -1, -1):
        if (x >> s) & 1:
            ones += 1
        else:
            inv += ones
    return inv


cdef inline int _asc(u64 x, int n) nogil:
    cdef int count = 0, s = n - 1
    while s >= 1:
        if not ((x >> s) & 1) and ((x >> (s - 1)) & 1):
            count += 1
        s -= 2
    return count


cdef inline u64 _next(u64 x) nogil:
    cdef u64 c = x & (~x + 1)
    cdef u64 r = x + c
    return (((r ^ x) >> 2) // c) | r


def combinations_masks(int n, int k):
    if k < 0 or k > n:
        return []
    if k == 0:
        return [0]
    cdef Py_ssize_t total = comb(n, k), i
    cdef u64 x = ((<u64>1) << k) - 1 if k < 64 else ~(<u64>0)
    out = [x]
    for i in range(total - 1):
        x = _next(x)
        out.append(x)
    return out


def inversions(u64 mask, int n):
    return _inv(mask, n)


def odd_ascents(u64 mask, int n):
    return _asc(mask, n)


def word_stats(masks, int n):
    cdef u64 m
    invs = []
    ascs = []
    for m in masks:
        invs.append(_inv(m, n))
        ascs.append(_asc(m, n))
    return invs, ascs


def inversion_counts(int n, int k):
    if k < 0 or k > n:
        return []
    if k == 0 or k == n:
        return [1]
    cdef Py_ssize_t total = comb(n, k), i
    cdef Py_ssize_t size = k * (n - k) + 1
    cdef u64 x = ((<u64>1) << k) - 1
    cdef list counts = [0] * size
    cdef u64[:] acc
    import array
    buf = array.array("Q", [0]) * size
    acc = buf
    with nogil:
        for i in range(total):
            acc[_inv(x, n)] += 1
            if i + 1 < total:
                x = _next(x)
    for i in range(size):
        counts[i] = acc[i]
    return counts


cdef Py_ssize_t _walk(int idx, u64 cur, int m, int* order, u64* lower,
                      list out, Py_ssize_t cap) except -1:
    if idx == m:
        out.append(cur)
        if len(out) > cap:
            raise CapExceededError(f"more than {cap} order ideals", reached=len(out))
        return 0
    cdef int e = order[idx]
    _walk(idx + 1, cur, m, order, lower, out, cap)
    if lower[e] & ~cur == 0:
        _walk(idx + 1, cur | ((<u64>1) << e), m, order, lower, out, cap)
    return 0


def lower_ideals(order, lower_covers, Py_ssize_t cap):
    cdef int m = len(order), i
    cdef int c_order[64]
    cdef u64 c_lower[64]
    if m > 64:
        raise ValueError("at most 64 poset elements")
    for i in range(m):
        c_order[i] = order[i]
        c_lower[i] = lower_covers[i]
    out = []
    _walk(0, 0, m, c_order, c_lower, out, cap)
    return out
