"""Exact integer polynomials, palindromicity and gamma-expansions.

Coefficients are Python ints; nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping


class IntPoly:
    """Univariate polynomial in t with arbitrary-precision integer coefficients."""

    __slots__ = ("_c",)
    var = "t"

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | None = None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, Mapping):
            c = {int(d): int(v) for d, v in coeffs.items() if v}
        else:
            c = {d: int(v) for d, v in enumerate(coeffs) if v}
        if any(d < 0 for d in c):
            raise ValueError("negative exponent")
        self._c = c

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "IntPoly":
        return cls({d: c})

    @classmethod
    def binomial_power(cls, m: int) -> "IntPoly":
        """(1 + t)^m."""
        return cls({i: comb(m, i) for i in range(m + 1)})

    def coeff(self, d: int) -> int:
        return self._c.get(d, 0)

    def items(self):
        return sorted(self._c.items())

    def to_list(self) -> list[int]:
        if not self._c:
            return []
        return [self._c.get(d, 0) for d in range(self.degree + 1)]

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    @property
    def low_degree(self) -> int:
        return min(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly({0: other})
        return isinstance(other, IntPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly({0: other})
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return IntPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly({d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly({d: v * other for d, v in self._c.items()})
        c: dict = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return IntPoly(c)

    __rmul__ = __mul__

    def shift(self, d: int) -> "IntPoly":
        """Multiply by t^d."""
        return IntPoly({e + d: v for e, v in self._c.items()})

    def __call__(self, t):
        return sum(v * t**d for d, v in self._c.items())

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def __str__(self):
        if not self._c:
            return "0"
        return "+".join(f"{v}*{self.var}^{d}" for d, v in self.items())

    def __repr__(self):
        return f"IntPoly({self.to_list()!r})"

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Inverse of ``str``: sparse ``c*t^d`` terms joined by ``+``."""
        text = text.strip()
        if text == "0":
            return cls()
        c: dict = {}
        for term in text.split("+"):
            coef, _, power = term.partition("*")
            d = int(power.split("^")[1])
            c[d] = c.get(d, 0) + int(coef)
        return cls(c)


class BiPoly:
    """Bivariate polynomial with integer coefficients, keyed by exponent pairs."""

    __slots__ = ("_c", "vars")

    def __init__(self, coeffs: Mapping | None = None, vars: tuple[str, str] = ("x", "y")):
        self._c = {(int(i), int(j)): int(v) for (i, j), v in (coeffs or {}).items() if v}
        self.vars = vars

    def coeff(self, i: int, j: int) -> int:
        return self._c.get((i, j), 0)

    def items(self):
        return sorted(self._c.items())

    def as_dict(self) -> dict:
        return dict(self._c)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c, self.vars)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self._c.items()}, self.vars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self._c.items()}, self.vars)
        c: dict = {}
        for (a, b), v in self._c.items():
            for (e, f), w in other._c.items():
                key = (a + e, b + f)
                c[key] = c.get(key, 0) + v * w
        return BiPoly(c, self.vars)

    __rmul__ = __mul__

    def first_coeff(self, i: int) -> IntPoly:
        """Coefficient of (first variable)^i as a polynomial in the second."""
        return IntPoly({j: v for (a, j), v in self._c.items() if a == i})

    def specialize_second(self, value: int) -> IntPoly:
        c: dict = {}
        for (i, j), v in self._c.items():
            c[i] = c.get(i, 0) + v * value**j
        return IntPoly(c)

    def specialize_first(self, value: int) -> IntPoly:
        c: dict = {}
        for (i, j), v in self._c.items():
            c[j] = c.get(j, 0) + v * value**i
        return IntPoly(c)

    def eval(self, a, b):
        return sum(v * a**i * b**j for (i, j), v in self._c.items())

    def first_degree(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    def __str__(self):
        if not self._c:
            return "0"
        u, w = self.vars
        return "+".join(f"{v}*{u}^{i}*{w}^{j}" for (i, j), v in self.items())

    def __repr__(self):
        return f"BiPoly({self.as_dict()!r}, vars={self.vars!r})"


QTPoly = BiPoly


# -- palindromicity and gamma vectors -------------------------------------


class NotPalindromicError(ValueError):
    def __init__(self, mismatch):
        self.mismatch = mismatch
        super().__init__(f"not palindromic: coefficients of t^{mismatch[0]} and t^{mismatch[1]} differ")


@dataclass(frozen=True)
class Palindromicity:
    ok: bool
    center2: int
    mismatch: tuple | None = None

    def __bool__(self):
        return self.ok


def is_palindromic(p: IntPoly) -> Palindromicity:
    """Mirror test a_{r+i} = a_{s-i}; center2 = r + s."""
    if p.is_zero():
        raise ValueError("zero polynomial has no center")
    r, s = p.low_degree, p.degree
    for i in range((s - r) // 2 + 1):
        if p.coeff(r + i) != p.coeff(s - i):
            return Palindromicity(False, r + s, (r + i, s - i))
    return Palindromicity(True, r + s)


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of sum_k gamma_k t^k (1+t)^(center2 - 2k)."""

    center2: int
    gammas: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "gammas", {int(k): int(v) for k, v in self.gammas.items() if v})

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.gammas.values())

    def negatives(self) -> dict:
        return {k: v for k, v in self.gammas.items() if v < 0}

    def as_list(self, start: int = 0) -> list[int]:
        top = self.center2 // 2
        return [self.gammas.get(k, 0) for k in range(start, top + 1)]

    def __str__(self):
        return ",".join(str(v) for _, v in sorted(self.gammas.items())) or "0"


def _basis(k: int, center2: int) -> IntPoly:
    return IntPoly.binomial_power(center2 - 2 * k).shift(k)


def gamma_expand(p: IntPoly, center2: int | None = None) -> GammaVector:
    """Peel off gamma_k t^k (1+t)^(n-2k) from the lowest degree upward.

    Negative gamma_k are kept; positivity is a separate question.
    """
    pal = is_palindromic(p)
    if not pal:
        raise NotPalindromicError(pal.mismatch)
    n = pal.center2 if center2 is None else center2
    rem = dict(p.items())
    gammas = {}
    for k in range(p.low_degree, n // 2 + 1):
        g = rem.get(k, 0)
        if g:
            gammas[k] = g
            m = n - 2 * k
            for i in range(m + 1):
                d = k + i
                rem[d] = rem.get(d, 0) - g * comb(m, i)
    if any(rem.values()):
        raise ArithmeticError("nonzero remainder after gamma peel")
    return GammaVector(n, gammas)


def gamma_contract(g: GammaVector) -> IntPoly:
    c: dict = {}
    for k, v in g.gammas.items():
        m = g.center2 - 2 * k
        for i in range(m + 1):
            c[k + i] = c.get(k + i, 0) + v * comb(m, i)
    return IntPoly(c)


def is_unimodal(p: IntPoly) -> bool:
    """Coefficients over [low_degree, degree] rise weakly and then fall weakly."""
    if p.is_zero():
        return True
    seq = [p.coeff(d) for d in range(p.low_degree, p.degree + 1)]
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


# -- q-analogue basis -------------------------------------------------------


class DilksExpansionError(ValueError):
    def __init__(self, k: int, reason: str):
        self.k = k
        super().__init__(f"not expandable in the (t,q) basis at k={k}: {reason}")


@dataclass
class DilksExpansion:
    n: int
    gammas: list  # list of IntPoly in q, index k
    nonnegative: bool


def dilks_basis(k: int, n: int) -> BiPoly:
    """t^k q^(k(k+1)/2) prod_{i=k+1}^{n-1-k} (1 + t q^i) as a (t, q) polynomial."""
    cur = {(k, k * (k + 1) // 2): 1}
    for i in range(k + 1, n - k):
        nxt: dict = {}
        for (a, b), v in cur.items():
            nxt[(a, b)] = nxt.get((a, b), 0) + v
            nxt[(a + 1, b + i)] = nxt.get((a + 1, b + i), 0) + v
        cur = nxt
    return BiPoly(cur, ("t", "q"))


def dilks_expand(P: BiPoly, n: int) -> DilksExpansion:
    """Triangular peel of P(t, q) in the basis above, lowest t-degree first."""
    rem = P.as_dict()
    gammas = []
    for k in range((n - 1) // 2 + 1):
        shift = k * (k + 1) // 2
        row = {b: v for (a, b), v in rem.items() if a == k and v}
        if any(b < shift for b in row):
            raise DilksExpansionError(k, "q-power below q^binom(k+1,2)")
        g = IntPoly({b - shift: v for b, v in row.items()})
        gammas.append(g)
        if g:
            basis = dilks_basis(k, n)
            for (a, b), v in basis.items():
                for e, w in g.items():
                    key = (a, b + e)
                    rem[key] = rem.get(key, 0) - v * w
    if any(rem.values()):
        bad = min(a for (a, _), v in rem.items() if v)
        raise DilksExpansionError(bad, "nonzero remainder")
    nonneg = all(v >= 0 for g in gammas for _, v in g.items())
    return DilksExpansion(n, gammas, nonneg)
