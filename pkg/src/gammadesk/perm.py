"""Permutations, descent statistics, pattern classes and the star composition.

Positions are 1-indexed throughout. Boundary sentinels for the double-descent
variants are virtual comparisons; the word itself is never padded.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import kernels
from .poly import BiPoly, IntPoly

STAT_NAMES = ("des", "maj", "dd", "dd0", "ddinf", "desp", "ddp")
_STAT_INDEX = {
    "des": kernels.DES,
    "maj": kernels.MAJ,
    "dd": kernels.DD,
    "dd0": kernels.DD0,
    "ddinf": kernels.DDINF,
    "desp": kernels.DESP,
    "ddp": kernels.DDP,
}

DEFAULT_LIMITS = {"all": 10, "avoiding": 10, "involutions": 16, "fpf-involutions": 16}


class EnumerationLimitError(ValueError):
    """Requested size exceeds the configured enumeration limit."""

    def __init__(self, n: int, kind: str, limit: int):
        super().__init__(f"n={n} exceeds the enumeration limit {limit} for class kind {kind!r}")
        self.n = n
        self.kind = kind
        self.limit = limit


class Permutation(tuple):
    """One-line word of a bijection on [n], n >= 1."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int]):
        w = tuple(int(v) for v in word)
        if not w or sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation: {w!r}")
        return super().__new__(cls, w)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"2413"``, ``"2 4 1 3"`` or ``"2,4,1,3"``."""
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return cls(int(p) for p in parts)
        return cls(int(c) for c in text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True)
class StatVector:
    des_set: frozenset
    des: int
    maj: int
    dd: int
    dd0: int
    ddinf: int
    desp: int
    ddp: int

    def as_dict(self) -> dict:
        d = {name: getattr(self, name) for name in STAT_NAMES}
        d["des_set"] = sorted(self.des_set)
        return d


def _mask_to_set(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def stats(pi: Sequence[int]) -> StatVector:
    mask, des, maj, dd, dd0, ddinf, desp, ddp = kernels.stat_scan(pi)
    return StatVector(_mask_to_set(mask), des, maj, dd, dd0, ddinf, desp, ddp)


def stat(pi: Sequence[int], name: str) -> int:
    """A single statistic by name."""
    if name == "DES":
        return kernels.stat_scan(pi)[kernels.DES_MASK]
    return kernels.stat_scan(pi)[_STAT_INDEX[name]]


def contains_pattern(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    if len(sigma) < 1:
        raise ValueError("pattern must be nonempty")
    return kernels.contains(tuple(pi), tuple(sigma))


def reverse(sigma: Sequence[int]) -> Permutation:
    return Permutation(tuple(sigma)[::-1])


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[v - 1] for v in q)


def is_involution(pi: Sequence[int]) -> bool:
    return all(pi[v - 1] == i for i, v in enumerate(pi, 1))


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    patterns: tuple = field(default=())

    KINDS = ("all", "involutions", "fpf-involutions", "avoiding")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if (self.kind == "avoiding") != bool(self.patterns):
            raise ValueError("patterns must be given exactly when kind is 'avoiding'")
        object.__setattr__(self, "patterns", tuple(Permutation(p) for p in self.patterns))

    @classmethod
    def all(cls) -> "ClassSpec":
        return cls("all")

    @classmethod
    def involutions(cls) -> "ClassSpec":
        return cls("involutions")

    @classmethod
    def fpf_involutions(cls) -> "ClassSpec":
        return cls("fpf-involutions")

    @classmethod
    def avoiding(cls, *patterns) -> "ClassSpec":
        pats = tuple(Permutation.parse(p) if isinstance(p, str) else Permutation(p) for p in patterns)
        return cls("avoiding", pats)

    def __str__(self) -> str:
        if self.kind == "avoiding":
            return "S_n(" + ",".join(str(p) for p in self.patterns) + ")"
        return self.kind


SEPARABLE = ClassSpec.avoiding("2413", "3142")
S2_CLASS = ClassSpec.avoiding("3412", "3421")


def in_class(pi: Sequence[int], c: ClassSpec) -> bool:
    if c.kind == "all":
        return True
    if c.kind == "involutions":
        return is_involution(pi)
    if c.kind == "fpf-involutions":
        return is_involution(pi) and all(v != i for i, v in enumerate(pi, 1))
    return not any(kernels.contains(tuple(pi), p) for p in c.patterns)


def _involutions(n: int, fixed_points: bool, first: int) -> Iterator[tuple]:
    word = [0] * (n + 1)

    def rec(free: list) -> Iterator[tuple]:
        if not free:
            yield tuple(word[1:])
            return
        i, rest = free[0], free[1:]
        if fixed_points:
            word[i] = i
            yield from rec(rest)
        for idx, j in enumerate(rest):
            word[i], word[j] = j, i
            yield from rec(rest[:idx] + rest[idx + 1:])
        word[i] = 0

    free = list(range(1, n + 1))
    if first:
        # pi(1) = first fixes the cycle through 1
        if first == 1:
            if not fixed_points:
                return
            word[1] = 1
            yield from rec(free[1:])
        elif 1 < first <= n:
            word[1], word[first] = first, 1
            yield from rec([v for v in free if v not in (1, first)])
        return
    yield from rec(free)


def enumerate_class(n: int, c: ClassSpec, *, first: int = 0, limit: int | None = None) -> Iterator[Permutation]:
    """Every member of the class in S_n exactly once, in a fixed order.

    ``first`` restricts to members with that leading letter, which partitions
    the class for parallel consumers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cap = DEFAULT_LIMITS[c.kind] if limit is None else limit
    if n > cap:
        raise EnumerationLimitError(n, c.kind, cap)
    if c.kind == "all":
        if first:
            rest = [v for v in range(1, n + 1) if v != first]
            words = ((first,) + p for p in itertools.permutations(rest)) if 1 <= first <= n else iter(())
        else:
            words = itertools.permutations(range(1, n + 1))
    elif c.kind == "involutions":
        words = _involutions(n, True, first)
    elif c.kind == "fpf-involutions":
        words = _involutions(n, False, first) if n % 2 == 0 else iter(())
    else:
        words = iter(kernels.avoiders(n, c.patterns, first))
    for w in words:
        yield tuple.__new__(Permutation, w)


def class_size(n: int, c: ClassSpec, **kw) -> int:
    return sum(1 for _ in enumerate_class(n, c, **kw))


def joint_distribution(n: int, c: ClassSpec, stat_names: Sequence[str], *, vars: tuple = ("x", "y"),
                       **kw) -> IntPoly | BiPoly:
    """Generating polynomial of the statistic values over the class.

    One statistic gives an IntPoly in t; two give a BiPoly in (x, y).
    """
    if not 1 <= len(stat_names) <= 2:
        raise ValueError("one or two statistics")
    idx = [_STAT_INDEX[s] for s in stat_names]
    scan = kernels.stat_scan
    tally: Counter = Counter()
    if len(idx) == 1:
        (a,) = idx
        for w in enumerate_class(n, c, **kw):
            tally[scan(w)[a]] += 1
        return IntPoly(tally)
    a, b = idx
    for w in enumerate_class(n, c, **kw):
        s = scan(w)
        tally[s[a], s[b]] += 1
    return BiPoly(tally, vars)


def descent_set_distribution(n: int, c: ClassSpec, **kw) -> Counter:
    """Multiset of descent sets over the class, keyed by frozenset."""
    tally: Counter = Counter()
    for w in enumerate_class(n, c, **kw):
        tally[kernels.stat_scan(w)[kernels.DES_MASK]] += 1
    return Counter({_mask_to_set(m): v for m, v in tally.items()})


def dd_free_census(n: int, c: ClassSpec, **kw) -> dict:
    """k -> #{pi in class : dd(pi) = 0, des(pi) = k}."""
    tally: Counter = Counter()
    for w in enumerate_class(n, c, **kw):
        s = kernels.stat_scan(w)
        if s[kernels.DD] == 0:
            tally[s[kernels.DES]] += 1
    return dict(sorted(tally.items()))


# -- star composition -----------------------------------------------------


def star_compose(pi1: Sequence[int], pi2: Sequence[int]) -> Permutation:
    """The word A n B built from pi1 (length k) and pi2.

    A is pi1 without its last letter; B is pi2 shifted up by k-1 with its
    letter 1 replaced by pi1(k).
    """
    k = len(pi1)
    n = k + len(pi2)
    shift = k - 1
    a = tuple(pi1[:-1])
    b = tuple(pi1[-1] if v == 1 else v + shift for v in pi2)
    return Permutation(a + (n,) + b)


def star_decompose(pi: Sequence[int]):
    """Invert the two building cases.

    Returns ``("trailing", pi1)`` when pi = pi1 n, ``("star", pi1, pi2)`` when
    pi = pi1 * pi2, and ``None`` when neither shape applies.
    """
    n = len(pi)
    j = list(pi).index(n)
    if j == n - 1:
        if n == 1:
            return None
        return ("trailing", Permutation(pi[:-1]))
    a = tuple(pi[:j])
    b = tuple(pi[j + 1:])
    k = j + 1
    small = [v for v in b if v <= k]
    if len(small) != 1 or sorted(a + (small[0],)) != list(range(1, k + 1)):
        return None
    last = small[0]
    pi1 = Permutation(a + (last,))
    pi2 = Permutation(1 if v == last else v - (k - 1) for v in b)
    return ("star", pi1, pi2)


@dataclass
class StarIdentityReport:
    n: int
    pairs: int = 0
    branch_counts: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    exception_behaviour: dict = field(default_factory=dict)
    reading: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations


# identity name -> (statistic of the composite, generic right-hand side)
_STAR_IDENTITIES = {
    "des": lambda s1, s2: s1.desp + s2.des + 1,
    "dd": lambda s1, s2: s1.ddp + s2.dd,
    "desp": lambda s1, s2: s1.desp + s2.desp + 1,
    "ddp": lambda s1, s2: s1.ddp + s2.ddp,
}

# exception name -> (identity, shape predicate on (k, len2), right-hand side)
_STAR_EXCEPTIONS = {
    "dd(1*p2)=dd(p2)+1": ("dd", lambda k, m: k == 1, lambda s1, s2: s2.dd + 1),
    "desp(p1*1)=desp(p1)": ("desp", lambda k, m: m == 1, lambda s1, s2: s1.desp),
    "ddp(1*p2)=ddp(p2)+1": ("ddp", lambda k, m: k == 1, lambda s1, s2: s2.ddp + 1),
    "desp(1*p2)=desp(p2)": ("desp", lambda k, m: k == 1, lambda s1, s2: s2.desp),
}


def _pair_behaviour(pi1, pi2) -> dict:
    """For one pair: which of the generic identity / each exception formula holds."""
    comp = stats(star_compose(pi1, pi2))
    s1, s2 = stats(pi1), stats(pi2)
    out = {}
    for name, rhs in _STAR_IDENTITIES.items():
        out[("generic", name)] = getattr(comp, name) == rhs(s1, s2)
    k, m = len(pi1), len(pi2)
    for ex, (ident, shape, rhs) in _STAR_EXCEPTIONS.items():
        if shape(k, m):
            out[("exception", ex)] = getattr(comp, ident) == rhs(s1, s2)
    return out


def verify_star_identities(n: int, pool: str = "all") -> StarIdentityReport:
    """Exhaustively test the four star identities for every pair of total length n.

    A pair is acceptable for an identity when the generic formula holds, or
    when one of the listed exception shapes applies and its formula holds.
    ``pool="class"`` restricts both factors to S(3412, 3421).
    """
    rep = StarIdentityReport(n)
    spec = ClassSpec.all() if pool == "all" else S2_CLASS
    per_ex: dict = {ex: {"applies": 0, "exception_holds": 0, "generic_holds": 0} for ex in _STAR_EXCEPTIONS}
    for k in range(1, n):
        for pi1 in enumerate_class(k, spec):
            for pi2 in enumerate_class(n - k, spec):
                rep.pairs += 1
                beh = _pair_behaviour(pi1, pi2)
                for ident in _STAR_IDENTITIES:
                    if beh[("generic", ident)]:
                        rep.branch_counts[f"{ident}:generic"] += 1
                        continue
                    fired = [
                        ex for ex, (idn, _, _) in _STAR_EXCEPTIONS.items()
                        if idn == ident and beh.get(("exception", ex))
                    ]
                    if fired:
                        for ex in fired:
                            rep.branch_counts[f"{ident}:{ex}"] += 1
                    else:
                        rep.violations.append((str(pi1), str(pi2), ident))
                for ex, (ident, _, _) in _STAR_EXCEPTIONS.items():
                    if ("exception", ex) in beh:
                        per_ex[ex]["applies"] += 1
                        per_ex[ex]["exception_holds"] += beh[("exception", ex)]
                        per_ex[ex]["generic_holds"] += beh[("generic", ident)]
    rep.exception_behaviour = per_ex
    rep.reading = _classify_reading(per_ex)
    return rep


def _classify_reading(per_ex: dict) -> str:
    tags = []
    for ex, c in per_ex.items():
        if not c["applies"]:
            continue
        if c["exception_holds"] == c["applies"] and c["generic_holds"] == 0:
            tags.append(f"{ex}: exception holds, generic fails")
        elif c["generic_holds"] == c["applies"] and c["exception_holds"] == 0:
            tags.append(f"{ex}: generic holds, exception fails")
        else:
            tags.append(f"{ex}: mixed ({c['exception_holds']}/{c['applies']} exception)")
    return "; ".join(tags)


def star_reading_summary(n_max: int = 6) -> dict:
    """Per-n behaviour of each exception, used to decide the scope of 'if n <= 2'."""
    table = {}
    for n in range(2, n_max + 1):
        rep = verify_star_identities(n)
        table[n] = {
            ex: ("exception" if c["exception_holds"] == c["applies"] else
                 "generic" if c["generic_holds"] == c["applies"] else "mixed")
            for ex, c in rep.exception_behaviour.items() if c["applies"]
        }
    last = "desp(1*p2)=desp(p2)"
    others = [ex for ex in _STAR_EXCEPTIONS if ex != last]
    scoped_all = all(
        all(v == "exception" for v in row.values()) if n <= 2 else all(v == "generic" for v in row.values())
        for n, row in table.items()
    )
    scoped_last = all(
        (row[last] == "exception") == (n <= 2) and all(row[ex] == "exception" for ex in others)
        for n, row in table.items()
    )
    return {"per_n": table, "reading_all_scoped": scoped_all, "reading_last_only": scoped_last}
