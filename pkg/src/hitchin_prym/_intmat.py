"""Small exact linear-algebra helpers on integer matrices.

Matrices are tuples of row tuples, vectors are plain tuples.  Everything
stays in exact arithmetic (int or Fraction); no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(tuple(col) for col in zip(*m))


def mat_mult(a, b):
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def vec_mat(v, m):
    """Row vector times matrix."""
    return tuple(
        sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))
    )


def trace(m) -> int:
    return sum(m[i][i] for i in range(len(m)))


def content(v: Vec) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def det(m) -> Fraction:
    n = len(m)
    rows = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = rows[c][c]
        rows[c] = [x / inv for x in rows[c]]
        for r in range(c + 1, n):
            f = rows[r][c]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return result


def invert(m) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse over the rationals; raises on singular input."""
    n = len(m)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def smith_invariant_factors(m) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    factors: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        pivot = min(
            (
                (abs(rows[i][j]), i, j)
                for i in range(t, nrows)
                for j in range(t, ncols)
                if rows[i][j]
            ),
            default=None,
        )
        if pivot is None:
            break
        _, pi, pj = pivot
        rows[t], rows[pi] = rows[pi], rows[t]
        for row in rows:
            row[t], row[pj] = row[pj], row[t]
        again = True
        while again:
            again = False
            p = rows[t][t]
            for i in range(t + 1, nrows):
                if rows[i][t] == 0:
                    continue
                q = rows[i][t] // p
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[t])]
                if rows[i][t]:
                    # remainder smaller than the pivot becomes the new pivot
                    rows[t], rows[i] = rows[i], rows[t]
                    again = True
                    p = rows[t][t]
            p = rows[t][t]
            for j in range(t + 1, ncols):
                if rows[t][j] == 0:
                    continue
                q = rows[t][j] // p
                for row in rows:
                    row[j] -= q * row[t]
                if rows[t][j]:
                    for row in rows:
                        row[t], row[j] = row[j], row[t]
                    again = True
                    p = rows[t][t]
        factors.append(abs(rows[t][t]))
        t += 1
    # normalize into a divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
    return tuple(f for f in factors if f)
