"""Independent reference computations used only by the tests.

Nothing here calls into the package's enumeration or kernel code.
"""

from itertools import combinations


def all_words(n, k):
    """Strings of n letters with k ones, lexicographic."""
    out = []
    for ones in combinations(range(n), k):
        out.append("".join("1" if i in ones else "0" for i in range(n)))
    return sorted(out)


def inversions(word):
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word))
               if word[i] > word[j])


def inversion_poly(n, k):
    """Coefficient list of sum q^inv over all words, by brute force."""
    words = all_words(n, k)
    if not words:
        return []
    top = max(inversions(w) for w in words)
    coeffs = [0] * (top + 1)
    for w in words:
        coeffs[inversions(w)] += 1
    return coeffs


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for d in range(len(quot) - 1, -1, -1):
        c, rem = divmod(num[d + len(den) - 1], den[-1])
        assert rem == 0
        quot[d] = c
        for j, y in enumerate(den):
            num[d + j] -= c * y
    assert not any(num), "division left a remainder"
    return quot


def product_formula(n, k):
    """prod_{i<k} (1 - q^(n-i)) / (1 - q^(i+1)) by exact polynomial division."""
    if k < 0 or k > n:
        return []
    num, den = [1], [1]
    for i in range(k):
        num = _poly_mul(num, [1] + [0] * (n - i - 1) + [-1])
        den = _poly_mul(den, [1] + [0] * i + [-1])
    q = _poly_divexact(num, den)
    while q and q[-1] == 0:
        q.pop()
    return q


def downsets(size, below):
    """All down-closed subsets by brute force over every subset."""
    out = []
    for m in range(1 << size):
        if all(below[e] <= {x for x in range(size) if m >> x & 1}
               for e in range(size) if m >> e & 1):
            out.append(frozenset(x for x in range(size) if m >> x & 1))
    return out
