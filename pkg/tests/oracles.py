"""Independent brute-force oracles used to freeze expected test values.

Everything here deliberately avoids the package's fast paths: orders come
from repeated composition, primality from a one-line loop, characteristic
polynomials from cofactor expansion over polynomial entries.
"""

from fractions import Fraction


def naive_order(g, x):
    """Order by repeated composition until the identity reappears."""
    e = g.identity()
    acc = x
    m = 1
    while acc != e:
        acc = g.compose(acc, x)
        m += 1
    return m


def naive_is_prime(m):
    return m >= 2 and all(m % d for d in range(2, m))


def naive_adjacent(g, x, y):
    return x != y and naive_is_prime(naive_order(g, g.compose(x, y)))


def naive_adjacency_matrix(g):
    elems = g.enumerate_elements()
    return [
        [1 if naive_adjacent(g, x, y) else 0 for y in elems]
        for x in elems
    ]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    ]


def cofactor_charpoly(matrix):
    """det(A - x*I) by cofactor expansion over polynomial entries (small n)."""
    n = len(matrix)
    # entry polynomials: a_ij - x on the diagonal, a_ij off it
    entries = [
        [
            [matrix[i][j], -1] if i == j else [matrix[i][j]]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        total = [0]
        r = rows[0]
        sign = 1
        for k, c in enumerate(cols):
            term = _poly_mul(entries[r][c], det(rows[1:], cols[:k] + cols[k + 1 :]))
            if sign < 0:
                term = [-t for t in term]
            total = _poly_add(total, term)
            sign = -sign
        return total

    poly = det(list(range(n)), list(range(n)))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def rational_charpoly_division(num, den):
    """Exact polynomial division over the rationals; remainder returned too."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    while len(rem) >= len(den) and any(rem):
        shift = len(rem) - len(den)
        coeff = rem[-1] / den[-1]
        q[shift] = coeff
        for i, c in enumerate(den):
            rem[shift + i] -= coeff * c
        while rem and rem[-1] == 0:
            rem.pop()
    return q, rem
