"""Pure-Python permutation kernels.

Reference implementation of every routine in ``_ckernels.pyx``; the two
modules must agree exactly, including output order.
"""

from __future__ import annotations

from typing import Sequence

# Index layout of the tuple returned by stat_scan.
DES_MASK, DES, MAJ, DD, DD0, DDINF, DESP, DDP = range(8)


def stat_scan(word: Sequence[int]) -> tuple[int, int, int, int, int, int, int, int]:
    """Return (des_mask, des, maj, dd, dd0, ddinf, desp, ddp) for ``word``.

    Bit ``i`` of des_mask is set when position ``i`` (1-indexed) is a descent.
    """
    n = len(word)
    mask = des = maj = 0
    for i in range(1, n):
        if word[i - 1] > word[i]:
            mask |= 1 << i
            des += 1
            maj += i
    desp = des - 1 if n > 1 and (mask >> (n - 1)) & 1 else des
    dd = dd0 = ddinf = ddp = 0
    last = n - 1
    for p in range(n):
        cur = word[p]
        # left neighbour vs. the infinity and zero sentinels
        above_inf = p == 0 or word[p - 1] > cur
        above_zero = p > 0 and word[p - 1] > cur
        if p < last:
            falls = cur > word[p + 1]
            if falls and above_inf:
                dd += 1
                ddinf += 1
                if p + 1 != n - 1:
                    ddp += 1
            if falls and above_zero:
                dd0 += 1
        elif above_inf:
            # right sentinel 0 only matters for ddinf
            ddinf += 1
    return mask, des, maj, dd, dd0, ddinf, desp, ddp


def _occurs_ending_at(word: Sequence[int], end: int, pattern: Sequence[int]) -> bool:
    m = len(pattern)
    if m == 0:
        return True
    if end + 1 < m:
        return False
    pos = [0] * m
    pos[m - 1] = end

    def place(j: int, hi: int) -> bool:
        # choose a text index for pattern slot j strictly below hi
        if j < 0:
            return True
        pj = pattern[j]
        for i in range(hi - 1, j - 1, -1):
            wi = word[i]
            for q in range(j + 1, m):
                if (pj < pattern[q]) != (wi < word[pos[q]]):
                    break
            else:
                pos[j] = i
                if place(j - 1, i):
                    return True
        return False

    return place(m - 2, end)


def occurs_at_end(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff ``pattern`` occurs in ``word`` using the last letter of ``word``."""
    return _occurs_ending_at(word, len(word) - 1, pattern)


def contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff ``word`` contains a subsequence order-isomorphic to ``pattern``."""
    m = len(pattern)
    for end in range(m - 1, len(word)):
        if _occurs_ending_at(word, end, pattern):
            return True
    return False


def avoiders(n: int, patterns: Sequence[Sequence[int]], first: int = 0) -> list[tuple[int, ...]]:
    """All permutations of [n] avoiding every pattern, in lexicographic order.

    ``first`` restricts the leading letter when nonzero.
    """
    pats = [tuple(p) for p in patterns]
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        if prefix:
            candidates = range(1, n + 1)
        else:
            candidates = [first] if first else range(1, n + 1)
        for v in candidates:
            if used[v]:
                continue
            prefix.append(v)
            if not any(occurs_at_end(prefix, p) for p in pats):
                used[v] = True
                extend()
                used[v] = False
            prefix.pop()

    if n >= 1 and (first == 0 or 1 <= first <= n):
        extend()
    return out
