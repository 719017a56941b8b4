"""Valley-hopping (modified Foata-Strehl) action on permutations.

Letter roles use infinity on both ends, the same convention as dd. A
double descent hops right to sit just before the nearest larger letter (or
at the end) and becomes a double ascent; a double ascent hops left to sit
just after the nearest larger letter (or at the front). Peaks and valleys
never move.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .perm import ClassSpec, Permutation, enumerate_class, in_class
from .poly import GammaVector, IntPoly, gamma_expand

PEAK, VALLEY, DOUBLE_ASCENT, DOUBLE_DESCENT = "peak", "valley", "double-ascent", "double-descent"
BOUNDARY = "pi(0) = pi(n+1) = infinity"


@dataclass(frozen=True)
class LetterRole:
    value: int
    role: str


def _role(left: float, cur: int, right: float) -> str:
    if left > cur < right:
        return VALLEY
    if left < cur > right:
        return PEAK
    if left < cur < right:
        return DOUBLE_ASCENT
    return DOUBLE_DESCENT


def classify(pi: Sequence[int]) -> list[LetterRole]:
    inf = float("inf")
    n = len(pi)
    out = []
    for i, v in enumerate(pi):
        left = pi[i - 1] if i > 0 else inf
        right = pi[i + 1] if i + 1 < n else inf
        out.append(LetterRole(v, _role(left, v, right)))
    return out


def hop(pi: Sequence[int], x: int) -> Permutation:
    w = list(pi)
    i = w.index(x)
    inf = float("inf")
    left = w[i - 1] if i > 0 else inf
    right = w[i + 1] if i + 1 < len(w) else inf
    role = _role(left, x, right)
    if role in (PEAK, VALLEY):
        return tuple.__new__(Permutation, w)
    del w[i]
    if role == DOUBLE_DESCENT:
        j = i
        while j < len(w) and w[j] < x:
            j += 1
        w.insert(j, x)
    else:
        j = i - 1
        while j >= 0 and w[j] < x:
            j -= 1
        w.insert(j + 1, x)
    return tuple.__new__(Permutation, w)


def orbit(pi: Sequence[int]) -> frozenset:
    """Closure of pi under all hops (breadth-first)."""
    start = Permutation(pi)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for x in p:
                q = hop(p, x)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def dd_free_member(orb) -> list:
    return [p for p in orb if kernels.stat_scan(p)[kernels.DD] == 0]


def orbit_descent_poly(orb) -> IntPoly:
    c = Counter(kernels.stat_scan(p)[kernels.DES] for p in orb)
    return IntPoly(c)


@dataclass
class OrbitReport:
    n: int
    spec: str
    boundary: str = BOUNDARY
    orbits: int = 0
    class_size: int = 0
    invariant: bool = True
    escape_witness: tuple | None = None  # (member, hopped letter, image outside the class)
    one_dd_free_each: bool | None = None
    orbit_polys_ok: bool | None = None
    gamma_matches: bool | None = None
    gamma: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.invariant and bool(self.one_dd_free_each) and bool(self.orbit_polys_ok) and bool(self.gamma_matches)


def orbit_gamma_check(n: int, c: ClassSpec, **kw) -> OrbitReport:
    """Orbit structure of a class under hopping.

    (i) the class is a union of orbits; when it is, (ii) each orbit has one
    dd-free member, (iii) each orbit's descent polynomial is
    t^k (1+t)^(n-1-2k), and (iv) the orbit sum gives the class gamma vector.
    """
    members = set(enumerate_class(n, c, **kw))
    rep = OrbitReport(n, str(c), class_size=len(members))
    for p in sorted(members):
        for x in p:
            q = hop(p, x)
            if q not in members:
                rep.invariant = False
                rep.escape_witness = (str(p), x, str(q))
                break
        if not rep.invariant:
            break
    if not rep.invariant:
        return rep
    done: set = set()
    gamma: Counter = Counter()
    rep.one_dd_free_each = True
    rep.orbit_polys_ok = True
    for p in sorted(members):
        if p in done:
            continue
        orb = orbit(p)
        done |= orb
        rep.orbits += 1
        reps = dd_free_member(orb)
        if len(reps) != 1:
            rep.one_dd_free_each = False
            rep.problems.append(("dd-free count", sorted(map(str, orb))[0], len(reps)))
            continue
        k = kernels.stat_scan(reps[0])[kernels.DES]
        expected = IntPoly.binomial_power(n - 1 - 2 * k).shift(k)
        if orbit_descent_poly(orb) != expected or len(orb) != 2 ** (n - 1 - 2 * k):
            rep.orbit_polys_ok = False
            rep.problems.append(("orbit polynomial", str(reps[0])))
        gamma[k] += 1
    rep.gamma = dict(sorted(gamma.items()))
    total = IntPoly(Counter(kernels.stat_scan(p)[kernels.DES] for p in members))
    if total.is_zero():
        rep.gamma_matches = not gamma
    else:
        rep.gamma_matches = gamma_expand(total, center2=n - 1) == GammaVector(n - 1, gamma)
    return rep


def every_letter_peak_or_valley(sigma: Sequence[int]) -> bool:
    """All letters of the word are peaks or valleys, infinity on both ends."""
    return all(r.role in (PEAK, VALLEY) for r in classify(sigma))


def partition_is_orbits(n: int) -> bool:
    """Orbits of all of S_n are pairwise disjoint and cover S_n."""
    seen: set = set()
    for p in enumerate_class(n, ClassSpec.all()):
        if p in seen:
            continue
        orb = orbit(p)
        if seen & orb:
            return False
        seen |= orb
    return len(seen) == sum(1 for _ in enumerate_class(n, ClassSpec.all()))


def class_is_union_of_orbits(n: int, c: ClassSpec) -> bool:
    return all(all(in_class(q, c) for q in orbit(p)) for p in enumerate_class(n, c))
