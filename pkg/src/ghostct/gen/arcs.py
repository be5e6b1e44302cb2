"""Diagonals of the (n+3)-gon, an independent model for type A cluster categories.

Indecomposables of the cluster category of A_n correspond to diagonals, and
the dimension of Ext^1 between two of them is the number of crossings.
"""

from __future__ import annotations

from itertools import combinations


def _normalize(n: int, d) -> tuple:
    size = n + 3
    i, j = sorted(d)
    if not (0 <= i < j < size) or j - i in (1, size - 1):
        raise ValueError(f"{tuple(d)} is not a diagonal of the {size}-gon")
    return i, j


def diagonals(n: int) -> list:
    size = n + 3
    return [(i, j) for i, j in combinations(range(size), 2) if j - i not in (1, size - 1)]


def arc_oracle(n: int, gamma, delta) -> int:
    """Number of interior crossings of two diagonals (0 or 1)."""
    i, j = _normalize(n, gamma)
    k, l = _normalize(n, delta)
    return int(i < k < j < l or k < i < l < j)


def triangulations(n: int) -> list:
    """Maximal sets of pairwise non-crossing diagonals, by brute force over subsets."""
    diags = diagonals(n)
    out = []
    for r in range(len(diags) + 1):
        for sub in combinations(diags, r):
            if any(arc_oracle(n, a, b) for a, b in combinations(sub, 2)):
                continue
            if all(d in sub or any(arc_oracle(n, d, e) for e in sub) for d in diags):
                out.append(sub)
    return out
