"""Truncated power series in z with exact (x, y) polynomial coefficients.

A series of order N keeps the coefficients of z^0 .. z^N. Each coefficient is
a plain dict {(i, j): int} standing for sum c x^i y^j. The functional
equations are solved by z-adic fixed-point iteration from the zero series.

The T2 series is read with the weight z^n attached to every permutation of
length n; the initial condition T2 = z + 2z^2 + ... requires that reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .poly import BiPoly


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + sign * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i, j), v in a.items():
        for (e, f), w in b.items():
            key = (i + e, j + f)
            out[key] = out.get(key, 0) + v * w
    return {k: v for k, v in out.items() if v}


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[dict] | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        cs = [dict(c) for c in (coeffs or [])][: order + 1]
        cs += [{} for _ in range(order + 1 - len(cs))]
        self.coeffs = [{k: v for k, v in c.items() if v} for c in cs]

    # constructors
    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def monomial(cls, order: int, zdeg: int, xdeg: int = 0, ydeg: int = 0, c: int = 1) -> "TruncSeries":
        s = cls(order)
        if zdeg <= order:
            s.coeffs[zdeg] = {(xdeg, ydeg): c}
        return s

    @classmethod
    def constant(cls, order: int, poly: dict) -> "TruncSeries":
        return cls(order, [poly])

    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def _lift(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        if isinstance(other, int):
            return TruncSeries.constant(self.order, {(0, 0): other})
        if isinstance(other, dict):
            return TruncSeries.constant(self.order, other)
        if isinstance(other, BiPoly):
            return TruncSeries.constant(self.order, other.as_dict())
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return TruncSeries(self.order, [_add(a, b) for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [{k: -v for k, v in c.items()} for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        return TruncSeries(self.order, [_add(a, b, -1) for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        N = self.order
        out = [{} for _ in range(N + 1)]
        nz = [(i, c) for i, c in enumerate(o.coeffs) if c]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in nz:
                if i + j > N:
                    break
                acc = out[i + j]
                for (p, q), v in a.items():
                    for (e, f), w in b.items():
                        key = (p + e, q + f)
                        acc[key] = acc.get(key, 0) + v * w
        return TruncSeries(N, out)

    __rmul__ = __mul__

    def divide_unit(self, divisor: "TruncSeries") -> "TruncSeries":
        """self / divisor, where divisor's z^0 coefficient is +1 or -1."""
        d = self._lift(divisor)
        d0 = d.coeffs[0]
        if d0 == {(0, 0): 1}:
            unit = 1
        elif d0 == {(0, 0): -1}:
            unit = -1
        else:
            raise ZeroDivisionError("divisor's constant term in z is not a unit")
        q: list = []
        for n in range(self.order + 1):
            acc = dict(self.coeffs[n])
            for k in range(1, n + 1):
                if d.coeffs[k] and q[n - k]:
                    acc = _add(acc, _mul(d.coeffs[k], q[n - k]), -1)
            q.append({key: v * unit for key, v in acc.items() if v})
        return TruncSeries(self.order, q)

    def __truediv__(self, other):
        return self.divide_unit(other)

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.order == other.order and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coeff(self, n: int) -> BiPoly:
        return BiPoly(self.coeffs[n])

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(order, self.coeffs[: order + 1])

    def agrees_to(self, other: "TruncSeries") -> int:
        """Largest m with coefficients equal for z^0..z^m (-1 if z^0 differs)."""
        m = -1
        for a, b in zip(self.coeffs, other.coeffs):
            if a != b:
                break
            m += 1
        return m

    def dump(self) -> list[tuple[int, int, int, int]]:
        """(z-order, x-degree, y-degree, value) rows in increasing order."""
        return [(n, i, j, v) for n, c in enumerate(self.coeffs) for (i, j), v in sorted(c.items())]

    def __repr__(self):
        terms = [f"z^{n}:[{BiPoly(c)}]" for n, c in enumerate(self.coeffs) if c]
        return f"TruncSeries(order={self.order}, {' '.join(terms) or '0'})"


def ts_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def ts_divide_unit(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a.divide_unit(b)


@dataclass
class SeriesDiff:
    equal: bool
    z_order: int | None = None
    monomial: tuple | None = None
    left: int = 0
    right: int = 0

    def __bool__(self):
        return self.equal


def series_equal(A: TruncSeries, B: TruncSeries) -> SeriesDiff:
    A._check(B)
    for n, (a, b) in enumerate(zip(A.coeffs, B.coeffs)):
        if a != b:
            mono = min(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
            return SeriesDiff(False, n, mono, a.get(mono, 0), b.get(mono, 0))
    return SeriesDiff(True)


# -- the two systems -----------------------------------------------------------


class _Vars:
    def __init__(self, N: int):
        self.N = N
        self.z = TruncSeries.monomial(N, 1)
        self.x = TruncSeries.monomial(N, 0, 1, 0)
        self.y = TruncSeries.monomial(N, 0, 0, 1)
        self.one = TruncSeries.monomial(N, 0)


class SolverError(ArithmeticError):
    pass


@dataclass
class Solution:
    order: int
    series: dict
    residuals: dict
    iterations: int
    stabilization: list = field(default_factory=list)

    @property
    def residuals_zero(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())


def s1_rhs(v: _Vars, S, F, R):
    x, y, z = v.x, v.y, v.z
    D = v.one - x * R * F
    tail = 2 * x + x * (F + x * R)
    S_new = z + (z + x * y * z) * S + (z * S * S * tail).divide_unit(D)
    F_new = z + (x * z * S + z * F) + (z * F * S * tail).divide_unit(D)
    R_new = y * z + z * S + x * y * z * R + (z * R * S * tail).divide_unit(D)
    return S_new, F_new, R_new


def s2_rhs(v: _Vars, S, T):
    x, y, z = v.x, v.y, v.z
    S_new = z + z * S + (x * y - x) * z * S + x * T * S
    T_new = (
        z + (x - x * y) * z * z + z * S
        + (x * y * z - 2 * x * z + z) * T + x * T * T
    )
    return S_new, T_new


def cubic_rhs(v: _Vars, S):
    x, y, z = v.x, v.y, v.z
    return x * S * S * S + x * z * S * S + (z + x * y * z) * S + z


def _iterate(N: int, names: tuple, rhs: Callable, v: _Vars) -> Solution:
    cur = [TruncSeries.zero(N) for _ in names]
    history = []
    for _ in range(N + 1):
        cur = list(rhs(v, *cur))
        history.append(cur)
    final = cur
    # iterate i (1-based) must already agree with the fixed point through z^i
    stab = []
    for i, it in enumerate(history, 1):
        agree = min(a.agrees_to(b) for a, b in zip(it, final))
        stab.append(agree)
        if agree < min(i, N):
            raise SolverError(f"iterate {i} agrees only through z^{agree}")
    again = rhs(v, *final)
    residuals = {name: a - b for name, a, b in zip(names, final, again)}
    sol = Solution(N, dict(zip(names, final)), residuals, N + 1, stab)
    if not sol.residuals_zero:
        bad = [k for k, r in residuals.items() if not r.is_zero()]
        raise SolverError(f"nonzero residual in {bad}")
    return sol


def solve_s1_system(N: int) -> Solution:
    """Joint fixed point of the S1/F1/R1 system to order N."""
    if N < 1:
        raise ValueError("order must be >= 1")
    return _iterate(N, ("S1", "F1", "R1"), s1_rhs, _Vars(N))


def solve_s1_cubic(N: int) -> Solution:
    if N < 1:
        raise ValueError("order must be >= 1")
    return _iterate(N, ("S1",), lambda v, S: (cubic_rhs(v, S),), _Vars(N))


def solve_s2_system(N: int) -> Solution:
    if N < 1:
        raise ValueError("order must be >= 1")
    sol = _iterate(N, ("S2", "T2"), s2_rhs, _Vars(N))
    S2, T2 = sol.series["S2"], sol.series["T2"]
    if S2.coeffs[1] != {(0, 0): 1} or T2.coeffs[1] != {(0, 0): 1}:
        raise SolverError("initial condition [z^1] = 1 violated")
    if N >= 2 and T2.coeffs[2] != {(0, 0): 2}:
        raise SolverError("initial condition [z^2]T2 = 2 violated")
    return sol


def check_rational_relations(S1: TruncSeries, F1: TruncSeries, R1: TruncSeries) -> dict:
    """Multiplied-out residuals of F1 = (S1 + x S1^2)/(1 + x y S1) and R1 = (y S1 + S1^2)/(1 + S1)."""
    v = _Vars(S1.order)
    x, y = v.x, v.y
    return {
        "F1": F1 * (v.one + x * y * S1) - (S1 + x * S1 * S1),
        "R1": R1 * (v.one + S1) - (y * S1 + S1 * S1),
    }
