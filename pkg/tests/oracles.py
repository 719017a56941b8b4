"""Brute-force reference implementations, independent of the package code.

Everything here works straight from the definitions: pad the word with
sentinels, filter itertools.permutations, test every subsequence.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

INF = float("inf")


def descent_set(w) -> set:
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def _double_descents(w, left, right) -> set:
    p = [left, *w, right]
    return {i for i in range(1, len(w) + 1) if p[i - 1] > p[i] > p[i + 1]}


def all_stats(w) -> dict:
    n = len(w)
    D = descent_set(w)
    DD = _double_descents(w, INF, INF)
    return {
        "des": len(D),
        "maj": sum(D),
        "dd": len(DD),
        "dd0": len(_double_descents(w, 0, INF)),
        "ddinf": len(_double_descents(w, INF, 0)),
        "desp": len(D - {n - 1}),
        "ddp": len(DD - {n - 1}),
    }


def std(seq) -> tuple:
    order = sorted(seq)
    return tuple(order.index(v) + 1 for v in seq)


def contains(w, pattern) -> bool:
    pattern = tuple(pattern)
    return any(std(sub) == pattern for sub in itertools.combinations(w, len(pattern)))


def perms(n: int):
    return itertools.permutations(range(1, n + 1))


def avoiders(n: int, patterns) -> list:
    return [w for w in perms(n) if not any(contains(w, p) for p in patterns)]


def involutions_by_filter(n: int) -> list:
    return [w for w in perms(n) if all(w[w[i] - 1] == i + 1 for i in range(n))]


def involutions(n: int, fixed_points: bool = True) -> list:
    """Largest letter n is either fixed or swapped with some j < n."""
    if n == 0:
        return [()]
    if n == 1:
        return [(1,)] if fixed_points else []
    out = []
    if fixed_points:
        out += [w + (n,) for w in involutions(n - 1, fixed_points)]
    for j in range(1, n):
        for w in involutions(n - 2, fixed_points):
            # relabel w on [n-1] minus j, then put n at position j
            rest = [v for v in range(1, n) if v != j]
            full = {rest[i]: rest[v - 1] for i, v in enumerate(w)}
            full[j], full[n] = n, j
            out.append(tuple(full[i] for i in range(1, n + 1)))
    return out


def fpf_involutions(n: int) -> list:
    return involutions(n, fixed_points=False)


def distribution(words, *names) -> Counter:
    c: Counter = Counter()
    for w in words:
        s = all_stats(w)
        c[tuple(s[nm] for nm in names) if len(names) > 1 else s[names[0]]] += 1
    return c


def gamma_by_solving(coeffs: dict, center2: int) -> dict:
    """Forward substitution in the binomial matrix [C(m - 2k, d - k)]."""
    m = center2
    top = m // 2
    mat = [[math.comb(m - 2 * k, d - k) if d >= k else 0 for k in range(top + 1)] for d in range(top + 1)]
    gam: dict = {}
    for d in range(top + 1):
        gam[d] = coeffs.get(d, 0) - sum(mat[d][k] * gam[k] for k in range(d))
    # the upper half is then a real check, not an assumption
    for d in range(m + 1):
        got = sum(math.comb(m - 2 * k, d - k) * g for k, g in gam.items() if 0 <= d - k <= m - 2 * k)
        assert got == coeffs.get(d, 0), (d, got)
    return {k: v for k, v in gam.items() if v}


def involution_count(n: int) -> int:
    return sum(math.comb(n, 2 * j) * double_factorial(2 * j - 1) for j in range(n // 2 + 1))


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def des_poly(words) -> dict:
    c: Counter = Counter()
    for w in words:
        c[sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])] += 1
    return dict(c)
