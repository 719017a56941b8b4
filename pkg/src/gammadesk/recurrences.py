"""Guo-Zeng gamma-coefficient tables for I_n(t) and J_2n(t).

Family ``a``: I_n(t) = sum_k a[n][k] t^k (1+t)^(n-1-2k), rows n >= 1.
Family ``b``: J_2n(t) = sum_k b[n][k] t^k (1+t)^(2n-2k), rows indexed by the
half-length n >= 1 (so row n holds b_{2n,k}).

Rows are produced by generators so that sweeps to n ~ 2000 keep only a small
window in memory. Every division in a recurrence must be exact; a remainder
raises ``IntegrityError`` naming the entry.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .poly import GammaVector, IntPoly, gamma_contract

FAMILIES = ("a", "b")

# First paper-index at which the inductive step (m > 2000) applies.
A_HYPOTHESIS_FROM = 1000
B_HYPOTHESIS_FROM = 1001


class IntegrityError(ArithmeticError):
    def __init__(self, family: str, n: int, k: int, remainder: int):
        self.family, self.n, self.k, self.remainder = family, n, k, remainder
        super().__init__(f"inexact division in family {family} at (n={n}, k={k}), remainder {remainder}")


def a_support(n: int) -> range:
    return range(0, (n - 1) // 2 + 1)


def b_support(n: int) -> range:
    return range(1, n + 1)


def _a_next(n: int, r1: dict, r2: dict) -> dict:
    row = {}
    for k in a_support(n):
        g1 = r1.get
        g2 = r2.get
        total = (
            (k + 1) * g1(k, 0)
            + (2 * n - 4 * k) * g1(k - 1, 0)
            + (k * (k + 2) + n - 1) * g2(k, 0)
            + ((k - 1) * (4 * n - 8 * k - 14) + 2 * n - 8) * g2(k - 1, 0)
            + 4 * (n - 2 * k) * (n - 2 * k + 1) * g2(k - 2, 0)
        )
        q, r = divmod(total, n)
        if r:
            raise IntegrityError("a", n, k, r)
        row[k] = q
    return row


def _b_next(n: int, r1: dict) -> dict:
    row = {}
    g = r1.get
    for k in b_support(n):
        total = (
            (k * (k + 1) + 2 * n - 2) * g(k, 0)
            + (2 + 2 * (k - 1) * (4 * n - 4 * k - 3)) * g(k - 1, 0)
            + 8 * (n - k + 1) * (2 * n - 2 * k + 1) * g(k - 2, 0)
        )
        q, r = divmod(total, 2 * n)
        if r:
            raise IntegrityError("b", n, k, r)
        row[k] = q
    return row


BASE_ROWS = {"a": {1: {0: 1}, 2: {0: 1}}, "b": {1: {1: 1}}}


def iter_rows(family: str, max_n: int, start: dict | None = None) -> Iterator[tuple[int, dict]]:
    """Yield (n, row) for n = 1..max_n.

    ``start`` maps n -> row for a contiguous prefix already known (resume);
    those rows are yielded as-is and computation continues after them.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    known = dict(BASE_ROWS[family])
    if start:
        known.update(start)
    prev2: dict = {}
    prev1: dict = {}
    for n in range(1, max_n + 1):
        if n in known:
            row = dict(known[n])
        elif family == "a":
            row = _a_next(n, prev1, prev2)
        else:
            row = _b_next(n, prev1)
        yield n, row
        prev2, prev1 = prev1, row


@dataclass
class RecurrenceTable:
    family: str
    rows: dict = field(default_factory=dict)
    max_n: int = 0

    def get(self, n: int, k: int) -> int:
        if n < 1 or k not in (a_support(n) if self.family == "a" else b_support(n)):
            return 0
        row = self.rows.get(n)
        if row is None:
            raise KeyError(f"row {n} not in table")
        return row.get(k, 0)

    def row(self, n: int) -> dict:
        return self.rows[n]

    def add(self, n: int, row: dict, window: int | None = None) -> None:
        self.rows[n] = row
        self.max_n = max(self.max_n, n)
        if window is not None:
            for old in [m for m in self.rows if m <= n - window]:
                del self.rows[old]

    def gamma_vector(self, n: int) -> GammaVector:
        center2 = n - 1 if self.family == "a" else 2 * n
        return GammaVector(center2, self.rows[n])

    def __eq__(self, other):
        return (
            isinstance(other, RecurrenceTable)
            and self.family == other.family
            and {n: {k: v for k, v in r.items() if v} for n, r in self.rows.items()}
            == {n: {k: v for k, v in r.items() if v} for n, r in other.rows.items()}
        )


def build_table(family: str, max_n: int) -> RecurrenceTable:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    t = RecurrenceTable(family)
    for n, row in iter_rows(family, max_n):
        t.add(n, row)
    return t


def a_table(max_n: int) -> RecurrenceTable:
    return build_table("a", max_n)


def b_table(max_n: int) -> RecurrenceTable:
    return build_table("b", max_n)


def reconstruct_poly(t: RecurrenceTable, n: int) -> IntPoly:
    """I_n(t) for family a, J_2n(t) for family b."""
    return gamma_contract(t.gamma_vector(n))


# -- verification ----------------------------------------------------------


@dataclass
class NonnegReport:
    family: str
    n_range: tuple
    negatives: dict = field(default_factory=dict)  # (first index, k) -> value

    @property
    def ok(self) -> bool:
        return not self.negatives

    def failing_n(self) -> list[int]:
        return sorted({n for n, _ in self.negatives})


def _first_index(family: str, n: int) -> int:
    return n if family == "a" else 2 * n


def _observe_nonneg(rep: NonnegReport, n: int, row: dict) -> None:
    for k, v in row.items():
        if v < 0:
            rep.negatives[(_first_index(rep.family, n), k)] = v


def verify_gamma_nonneg(t: RecurrenceTable, n_range: Iterable[int]) -> NonnegReport:
    ns = list(n_range)
    rep = NonnegReport(t.family, (min(ns), max(ns)) if ns else ())
    for n in ns:
        _observe_nonneg(rep, n, t.row(n))
    return rep


@dataclass
class AuxReport:
    family: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _aux_at(family: str, get: Callable[[int, int], int], n: int):
    """One auxiliary induction hypothesis at row n, or None if not applicable.

    Family a, row n = 2k+1 with k >= 4: n a_{n,k} >= 2 a_{n-1,k-1}.
    Family b, half-length n >= 11: b_{2n,n} >= b_{2n-2,n-1}.
    Returns (label, lhs, rhs).
    """
    if family == "a":
        if n % 2 == 0 or (n - 1) // 2 < 4:
            return None
        k = (n - 1) // 2
        return (f"a[{n},{k}]", n * get(n, k), 2 * get(n - 1, k - 1))
    if n < 11:
        return None
    return (f"b[{2 * n},{n}]", get(n, n), get(n - 1, n - 1))


def verify_aux_inequalities(t: RecurrenceTable) -> AuxReport:
    rep = AuxReport(t.family)
    for n in sorted(t.rows):
        if n - 1 not in t.rows:
            continue
        res = _aux_at(t.family, t.get, n)
        if res is None:
            continue
        rep.checked += 1
        label, lhs, rhs = res
        if lhs < rhs:
            rep.violations.append((label, lhs - rhs))
    return rep


# -- proof-chain inequalities ---------------------------------------------
#
# Each chain is evaluated at the proof's own index n. For family a the
# relevant rows are 2n+2 down to 2n-7; for family b the half-length rows
# n down to n-3. An entry is (name, kind, value) where kind "ge" asks
# value >= 0 and kind "eq" asks value == 0.


def a_chain_rows(n: int) -> tuple[int, int]:
    return 2 * n - 7, 2 * n + 2


def b_chain_rows(n: int) -> tuple[int, int]:
    return n - 3, n


def a_chains_at(a: Callable[[int, int], int], n: int) -> list[tuple[str, str, int]]:
    dagger = (
        4 * a(2 * n + 1, n - 1) + 24 * a(2 * n, n - 2)
        - n * a(2 * n - 1, n - 1) - 4 * a(2 * n - 1, n - 2) - 24 * a(2 * n - 2, n - 3)
    )
    star = 8 * a(2 * n - 1, n - 2) - 6 * a(2 * n - 2, n - 2) - 24 * a(2 * n - 3, n - 3)
    star_lhs = 8 * a(2 * n - 1, n - 2) - (6 * n - 3) * a(2 * n - 1, n - 1)
    starstar = (
        48 * a(2 * n - 2, n - 3) + (8 * n * n - 16) * a(2 * n - 3, n - 2) + 384 * a(2 * n - 3, n - 4)
        - (4 * n + 2) * a(2 * n - 2, n - 2) - (32 * n + 8) * a(2 * n - 3, n - 3)
    )
    starstarstar = (
        (8 * n * n - 5 * n - 11) * a(2 * n - 3, n - 2) + 384 * a(2 * n - 3, n - 4)
        + (10 * n - 30) * a(2 * n - 4, n - 3) - (32 * n + 28) * a(2 * n - 3, n - 3)
    )
    return [
        # Case 1, (m, k) = (2n+2, n)
        ("dagger_lower_bound", "ge", (2 * n + 2) * a(2 * n + 2, n) - dagger),
        ("dagger", "ge", dagger),
        ("dagger_aux", "ge",
         n * a(2 * n - 1, n - 1) + 4 * a(2 * n - 1, n - 2) + 24 * a(2 * n - 2, n - 3) - 2 * n * a(2 * n, n - 1)),
        ("dagger_term_4a", "ge", 4 * a(2 * n + 1, n - 1) - n * a(2 * n - 1, n - 1)),
        ("dagger_term_12a_first", "ge", 12 * a(2 * n, n - 2) - 4 * a(2 * n - 1, n - 2)),
        # context-corrected index a_{2n-2,n-3}; the literal a_{n-2,n-3} is tracked separately
        ("dagger_term_12a_second", "ge", 12 * a(2 * n, n - 2) - 24 * a(2 * n - 2, n - 3)),
        ("dagger_term_12a_second_literal", "ge", 12 * a(2 * n, n - 2) - 24 * a(n - 2, n - 3)),
        # Case 2, (m, k) = (2n+1, n)
        ("case2_identity", "eq",
         (2 * n + 1) * a(2 * n + 1, n) - (2 * a(2 * n, n - 1) + 8 * a(2 * n - 1, n - 2) - (6 * n - 4) * a(2 * n - 1, n - 1))),
        ("star_lower_bound", "ge", star_lhs - star),
        ("star", "ge", star),
        ("starstar_identity", "eq", (2 * n - 1) * star - starstar),
        ("starstarstar_lower_bound", "ge", starstar - starstarstar),
        ("starstarstar", "ge", starstarstar),
        ("nine_a_bound", "ge", 9 * a(2 * n - 5, n - 4) - n * a(2 * n - 5, n - 3)),
    ]


def b_chains_at(b: Callable[[int, int], int], n: int) -> list[tuple[str, str, int]]:
    """b(h, k) is b_{2h,k}: the first argument is the half-length."""
    target = 8 * b(n - 1, n - 2) - (8 * n - 8) * b(n - 1, n - 1)
    ddagger = (
        (7 * n * n - 21 * n + 12) * b(n - 2, n - 2) + 48 * b(n - 2, n - 4) - (6 * n - 4) * b(n - 2, n - 3)
    )
    return [
        ("top_identity", "eq", 2 * n * b(n, n) - (8 * b(n - 1, n - 2) - (6 * n - 8) * b(n - 1, n - 1))),
        ("target", "ge", target),
        ("target_rewrite", "eq",
         target - (8 * b(n - 1, n - 2) - 32 * b(n - 2, n - 3) + 4 * (6 * n - 14) * b(n - 2, n - 2))),
        ("ddagger_identity", "eq", (2 * n - 2) * target - 8 * ddagger),
        ("ddagger", "ge", ddagger),
        # context-corrected: (2n-4) b_{2n-4,n-4} on the left
        ("ddagger_term_48b", "ge",
         (2 * n - 4) * b(n - 2, n - 4) - (n * n - 5 * n + 6) * b(n - 3, n - 4) - (10 * n - 48) * b(n - 3, n - 5)),
    ]


# Expressions whose in-hypothesis failure counts as a real failure.
A_GATED = {"dagger", "dagger_lower_bound", "star", "starstarstar", "case2_identity", "starstar_identity"}
B_GATED = {"ddagger", "target", "top_identity", "ddagger_identity", "target_rewrite"}

CHAIN_READINGS = {
    "a": "Case 1 bound '24a_{n-2,n-3}' read as 24a_{2n-2,n-3} (dagger_term_12a_second); "
         "literal reading evaluated as dagger_term_12a_second_literal",
    "b": "'(2n-4)_{2n-4,n-4}' read as (2n-4)b_{2n-4,n-4} (ddagger_term_48b); the literal form has no value",
}


@dataclass
class ChainReport:
    family: str
    hypothesis_from: int
    rows: list = field(default_factory=list)
    min_slack: dict = field(default_factory=dict)  # name -> (slack, n)
    failures: list = field(default_factory=list)  # in-hypothesis, gated
    advisories: list = field(default_factory=list)  # out-of-hypothesis negatives
    identity_failures: list = field(default_factory=list)
    readings: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures and not self.identity_failures

    @property
    def in_hypothesis_rows(self) -> list[int]:
        return [n for n in self.rows if n >= self.hypothesis_from]

    def observe(self, n: int, entries) -> None:
        gated = A_GATED if self.family == "a" else B_GATED
        self.rows.append(n)
        for name, kind, value in entries:
            if kind == "eq":
                if value != 0:
                    self.identity_failures.append((name, n, value))
                continue
            best = self.min_slack.get(name)
            if best is None or value < best[0]:
                self.min_slack[name] = (value, n)
            if value < 0:
                if n >= self.hypothesis_from and name in gated:
                    self.failures.append((name, n, value))
                else:
                    self.advisories.append((name, n, value))

    def first_nonneg_from(self, name: str) -> int | None:
        """Smallest n such that every evaluated row >= n has nonnegative slack for ``name``."""
        bad = [n for nm, n, _ in self.advisories + self.failures if nm == name]
        if not self.rows:
            return None
        return (max(bad) + 1) if bad else min(self.rows)


def chain_range(family: str, max_row: int) -> range:
    """Proof indices whose rows all lie in 1..max_row."""
    if family == "a":
        return range(4, (max_row - 2) // 2 + 1)
    return range(5, max_row + 1)


def verify_proof_chains(t: RecurrenceTable, n_range: Iterable[int] | None = None,
                        hypothesis_from: int | None = None) -> ChainReport:
    fam = t.family
    if hypothesis_from is None:
        hypothesis_from = A_HYPOTHESIS_FROM if fam == "a" else B_HYPOTHESIS_FROM
    rep = ChainReport(fam, hypothesis_from, readings=CHAIN_READINGS[fam])
    ns = chain_range(fam, t.max_n) if n_range is None else n_range
    at = a_chains_at if fam == "a" else b_chains_at
    for n in ns:
        rep.observe(n, at(t.get, n))
    return rep


# -- streaming sweep ---------------------------------------------------------


@dataclass
class SweepReport:
    family: str
    max_n: int
    nonneg: NonnegReport
    aux: AuxReport
    chains: ChainReport
    expected_negative_rows: tuple = ()

    @property
    def unexpected_negatives(self) -> dict:
        if self.family == "a":
            return dict(self.nonneg.negatives)
        # theorem covers J_2n for n >= 9 only
        return {(m, k): v for (m, k), v in self.nonneg.negatives.items() if m // 2 >= 9}

    @property
    def ok(self) -> bool:
        return not self.unexpected_negatives and self.aux.ok and self.chains.ok


def sweep(family: str, max_n: int, rows: Iterable[tuple[int, dict]] | None = None,
          hypothesis_from: int | None = None, on_row: Callable[[int, dict], None] | None = None) -> SweepReport:
    """Compute (or consume) rows 1..max_n and run every check on a sliding window."""
    if hypothesis_from is None:
        hypothesis_from = A_HYPOTHESIS_FROM if family == "a" else B_HYPOTHESIS_FROM
    window = 12 if family == "a" else 6
    table = RecurrenceTable(family)
    nonneg = NonnegReport(family, (1, max_n))
    aux = AuxReport(family)
    chains = ChainReport(family, hypothesis_from, readings=CHAIN_READINGS[family])
    at = a_chains_at if family == "a" else b_chains_at
    pending = deque(chain_range(family, max_n))
    source = iter_rows(family, max_n) if rows is None else rows
    for n, row in source:
        table.add(n, row, window=window)
        if on_row is not None:
            on_row(n, row)
        _observe_nonneg(nonneg, n, row)
        if n >= 2:
            res = _aux_at(family, table.get, n)
            if res is not None:
                aux.checked += 1
                label, lhs, rhs = res
                if lhs < rhs:
                    aux.violations.append((label, lhs - rhs))
        top = (lambda m: a_chain_rows(m)[1]) if family == "a" else (lambda m: b_chain_rows(m)[1])
        while pending and top(pending[0]) <= n:
            chains.observe(pending[0], at(table.get, pending[0]))
            pending.popleft()
    table.max_n = max_n
    return SweepReport(family, max_n, nonneg, aux, chains)
