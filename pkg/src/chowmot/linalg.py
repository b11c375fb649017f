"""Exact linear algebra over Q on lists of Fraction rows."""
from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form; returns ``(rows, pivot_columns)`` with zero
    rows dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [
        [sum((a[i][t] * b[t][j] for t in range(inner)), Fraction(0)) for j in range(ncols)]
        for i in range(len(a))
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(a):
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def rank_factorization(p):
    """For an idempotent ``p`` (b x b) return ``(a, s)`` with ``a`` b x r,
    ``s`` r x b, ``a s = p`` and ``s a = 1_r``."""
    cols = transpose(p)
    _, pivots = rref(p)
    a = transpose([cols[j] for j in pivots])
    if not pivots:
        return [[] for _ in p], []
    at = transpose(a)
    s = matmul(inverse(matmul(at, a)), matmul(at, p))
    return a, s
