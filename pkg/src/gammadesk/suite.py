"""Named, runnable checks; each returns a CheckReport.

Verdicts: ``pass`` (claim reproduced), ``fail`` (claim contradicted, with
witnesses) and ``advisory`` (could not run at the requested size, or only
informational).
"""

from __future__ import annotations

import functools
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import __version__, kernels
from .config import RunConfig
from .mfs import BOUNDARY, every_letter_peak_or_valley, orbit_gamma_check
from .perm import (
    S2_CLASS,
    SEPARABLE,
    ClassSpec,
    EnumerationLimitError,
    Permutation,
    dd_free_census,
    descent_set_distribution,
    enumerate_class,
    joint_distribution,
    reverse,
    star_compose,
    star_decompose,
    star_reading_summary,
    verify_star_identities,
)
from .poly import (
    GammaVector,
    IntPoly,
    dilks_expand,
    gamma_contract,
    gamma_expand,
    is_palindromic,
    is_unimodal,
)
from .recurrences import (
    CHAIN_READINGS,
    build_table,
    reconstruct_poly,
    sweep,
)
from .series import (
    check_rational_relations,
    series_equal,
    solve_s1_cubic,
    solve_s1_system,
    solve_s2_system,
)

VERDICTS = ("pass", "fail", "advisory")


@dataclass
class CheckReport:
    check_id: str
    params: dict
    verdict: str
    witnesses: list = field(default_factory=list)
    runtime: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and not self.witnesses:
            raise ValueError(f"{self.check_id}: a failing report needs witnesses")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": _jsonable(self.params),
            "verdict": self.verdict,
            "witnesses": _jsonable(self.witnesses),
            "runtime": round(self.runtime, 4),
            "details": _jsonable(self.details),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(d["check_id"], d["params"], d["verdict"], d["witnesses"], d["runtime"], d.get("details", {}))

    def line(self) -> str:
        params = ", ".join(f"{k}={_compact(v)}" for k, v in self.params.items())
        return f"[{self.verdict.upper():8}] {self.check_id} ({params}) {self.runtime:.2f}s"


def _compact(v):
    if isinstance(v, list) and len(v) > 3 and all(isinstance(x, int) for x in v) and v == list(range(v[0], v[-1] + 1)):
        return f"{v[0]}..{v[-1]}"
    return v


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (IntPoly, GammaVector)):
        return str(obj)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _ns(n) -> list[int]:
    if isinstance(n, int):
        return [n]
    return list(n)


def timed(check_id: str):
    """Attach runtime and turn a limit refusal into an advisory report."""

    def deco(fn: Callable[..., CheckReport]):
        @functools.wraps(fn)
        def wrapper(*args, **kw):
            t0 = time.perf_counter()
            try:
                rep = fn(*args, **kw)
            except EnumerationLimitError as e:
                rep = CheckReport(check_id, {"args": list(map(str, args)), **kw}, "advisory",
                                  details={"reason": str(e)})
            rep.runtime = time.perf_counter() - t0
            return rep

        return wrapper

    return deco


def _gamma_vs_census(n: int, c: ClassSpec) -> tuple[bool, IntPoly, GammaVector, dict]:
    poly = joint_distribution(n, c, ["des"])
    census = dd_free_census(n, c)
    g = GammaVector(n - 1, census)
    return poly == gamma_contract(g), poly, g, census


# -- theorem checks -------------------------------------------------------------


@timed("foata_schutz")
def check_foata_schutz(n=range(1, 9)) -> CheckReport:
    ns = _ns(n)
    witnesses, gammas = [], {}
    for m in ns:
        ok, poly, g, census = _gamma_vs_census(m, ClassSpec.all())
        expanded = gamma_expand(poly, center2=m - 1)
        gammas[m] = g.as_list()
        if not ok or expanded != g:
            witnesses.append({"n": m, "gamma_expand": str(expanded), "census": census})
    return CheckReport("foata_schutz", {"n": ns}, "fail" if witnesses else "pass", witnesses,
                       details={"gamma": gammas})


@timed("fu_lin_zeng")
def check_fu_lin_zeng(n=range(1, 10)) -> CheckReport:
    ns = _ns(n)
    witnesses, gammas, sizes = [], {}, {}
    for m in ns:
        ok, poly, g, census = _gamma_vs_census(m, SEPARABLE)
        sizes[m] = poly.eval_at_one()
        gammas[m] = g.as_list()
        if not ok or gamma_expand(poly, center2=m - 1) != g:
            witnesses.append({"n": m, "poly": str(poly), "census": census})
    return CheckReport("fu_lin_zeng", {"n": ns}, "fail" if witnesses else "pass", witnesses,
                       details={"gamma": gammas, "class_sizes": sizes})


@timed("dddes")
def check_dddes(n=range(1, 10), series_order: int | None = 14) -> CheckReport:
    ns = _ns(n)
    witnesses = []
    dists = {}
    for m in ns:
        p2 = joint_distribution(m, S2_CLASS, ["des", "dd"])
        p1 = joint_distribution(m, SEPARABLE, ["des", "dd"])
        dists[m] = str(p1)
        if p1 != p2:
            witnesses.append({"n": m, "S(3412,3421)": str(p2), "S(2413,3142)": str(p1)})
    details: dict = {"distributions": dists}
    if series_order:
        S1 = solve_s1_system(series_order).series["S1"]
        S2 = solve_s2_system(series_order).series["S2"]
        diff = series_equal(S1, S2)
        details["series_equal_to_order"] = series_order if diff else None
        if not diff:
            witnesses.append({"series_differ_at": diff.z_order, "monomial": diff.monomial})
        for m in ns:
            if m <= series_order and S1.coeff(m).as_dict() != joint_distribution(m, SEPARABLE, ["des", "dd"]).as_dict():
                witnesses.append({"n": m, "series_vs_enumeration": "S1 coefficient differs"})
            if m <= series_order and S2.coeff(m).as_dict() != joint_distribution(m, S2_CLASS, ["des", "dd"]).as_dict():
                witnesses.append({"n": m, "series_vs_enumeration": "S2 coefficient differs"})
    return CheckReport("dddes", {"n": ns, "series_order": series_order}, "fail" if witnesses else "pass",
                       witnesses, details=details)


def _set_str(s: frozenset) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


@timed("wilf")
def check_wilf(n, P1: Iterable, P2: Iterable, mode: str = "des") -> CheckReport:
    """Pass iff the two classes are des- (or DES-) Wilf equivalent at every n."""
    c1, c2 = ClassSpec.avoiding(*P1), ClassSpec.avoiding(*P2)
    ns = _ns(n)
    witnesses = []
    for m in ns:
        if mode == "des":
            d1, d2 = joint_distribution(m, c1, ["des"]), joint_distribution(m, c2, ["des"])
            if d1 != d2:
                witnesses.append({"n": m, "left": str(d1), "right": str(d2)})
        elif mode == "DES":
            d1, d2 = descent_set_distribution(m, c1), descent_set_distribution(m, c2)
            if d1 != d2:
                diff = sorted((s for s in set(d1) | set(d2) if d1[s] != d2[s]), key=lambda s: (len(s), sorted(s)))
                s = diff[0]
                witnesses.append({"n": m, "descent_set": _set_str(s), "left": d1[s], "right": d2[s],
                                  "differing_sets": len(diff)})
        else:
            raise ValueError("mode must be 'des' or 'DES'")
    params = {"n": ns, "P1": [str(p) for p in c1.patterns], "P2": [str(p) for p in c2.patterns], "mode": mode}
    return CheckReport(f"wilf_{mode}", params, "fail" if witnesses else "pass", witnesses)


def minimal_des_split(P1, P2, n_max: int) -> dict | None:
    """Smallest n <= n_max where the descent-set distributions differ."""
    for m in range(1, n_max + 1):
        rep = check_wilf(m, P1, P2, "DES")
        if rep.verdict == "fail":
            return rep.witnesses[0]
    return None


@timed("des_wilf_not_DES_wilf")
def check_des_not_DES(n=range(1, 10), P1=("3412", "3421"), P2=("2413", "3142")) -> CheckReport:
    ns = _ns(n)
    des = check_wilf(ns, P1, P2, "des")
    split = minimal_des_split(P1, P2, max(ns))
    witnesses = list(des.witnesses)
    if split is None:
        witnesses.append({"DES": f"no descent-set difference for n <= {max(ns)}"})
    verdict = "pass" if des.passed and split is not None else "fail"
    return CheckReport("des_wilf_not_DES_wilf", {"n": ns, "P1": list(P1), "P2": list(P2)}, verdict, witnesses,
                       details={"des_equal": des.passed, "minimal_DES_split": split})


@timed("dilks")
def check_dilks(n=range(1, 11)) -> CheckReport:
    from .poly import DilksExpansionError

    ns = _ns(n)
    witnesses, out = [], {}
    for m in ns:
        P = joint_distribution(m, ClassSpec.involutions(), ["des", "maj"], vars=("t", "q"))
        try:
            exp = dilks_expand(P, m)
        except DilksExpansionError as e:
            witnesses.append({"n": m, "k": e.k, "error": str(e)})
            continue
        out[m] = [str(g) for g in exp.gammas]
        if not exp.nonnegative:
            witnesses.append({"n": m, "gammas": out[m]})
        # q = 1 specialization must give the ordinary gamma vector of I_n
        if [g.eval_at_one() for g in exp.gammas] != gamma_expand(P.specialize_second(1), center2=m - 1).as_list():
            witnesses.append({"n": m, "error": "q=1 specialization mismatch"})
    return CheckReport("dilks", {"n": ns}, "fail" if witnesses else "pass", witnesses, details={"gammas_q": out})


def check_gamma_self(patterns: Iterable, n: int) -> tuple[bool, GammaVector]:
    """Does the avoidance class satisfy the dd-free gamma property at n?"""
    ok, _, g, _ = _gamma_vs_census(n, ClassSpec.avoiding(*patterns))
    return ok, g


def _pair_passes(sigma: Permutation, ns) -> bool:
    pats = (sigma, reverse(sigma))
    return all(check_gamma_self(pats, m)[0] for m in ns)


def search_patterns(length: int, n_range) -> list[str]:
    """All sigma of the given length with the gamma property for {sigma, sigma^r} at every n."""
    ns = _ns(n_range)
    cache: dict = {}
    hits = []
    for w in itertools.permutations(range(1, length + 1)):
        sigma = Permutation(w)
        key = min(sigma, reverse(sigma))
        if key not in cache:
            cache[key] = _pair_passes(sigma, ns)
        if cache[key]:
            hits.append(str(sigma))
    return hits


def search_length5(n_range=(5, 6, 7)) -> list[str]:
    return search_patterns(5, n_range)


LENGTH5_LIST = ("13254", "15243", "15342", "23154", "25143")
LENGTH4_LIST = ("2413", "3142", "1342", "2431")


def _with_reverses(words) -> set:
    return {w for s in words for w in (s, s[::-1])}


@timed("length5")
def check_length5(n_range=(5, 6, 7)) -> CheckReport:
    ns = _ns(n_range)
    found = set(search_length5(ns))
    expected = _with_reverses(LENGTH5_LIST)
    roles = {s: every_letter_peak_or_valley(Permutation.parse(s)) for s in sorted(expected)}
    witnesses = []
    if found != expected:
        witnesses.append({"extra": sorted(found - expected), "missing": sorted(expected - found)})
    if not all(roles.values()):
        witnesses.append({"not_peak_or_valley": [s for s, ok in roles.items() if not ok]})
    return CheckReport("length5", {"n": ns}, "fail" if witnesses else "pass", witnesses,
                       details={"found": sorted(found), "boundary": BOUNDARY, "peak_valley_roles": roles})


@timed("length4")
def check_length4_list(n_range=range(4, 8)) -> CheckReport:
    ns = _ns(n_range)
    found = set(search_patterns(4, ns))
    expected = _with_reverses(LENGTH4_LIST)
    witnesses = []
    if found != expected:
        witnesses.append({"extra": sorted(found - expected), "missing": sorted(expected - found)})
    return CheckReport("length4", {"n": ns}, "fail" if witnesses else "pass", witnesses,
                       details={"found": sorted(found)})


@timed("palindromic_unimodal")
def check_palindromic_unimodal(family: str, n_range) -> CheckReport:
    """family 'I' uses rows n of table a; 'J' uses half-lengths n of table b."""
    ns = _ns(n_range)
    table = build_table("a" if family == "I" else "b", max(ns))
    witnesses, centers = [], {}
    for m in ns:
        p = reconstruct_poly(table, m)
        pal = is_palindromic(p)
        centers[m] = pal.center2
        if not pal or not is_unimodal(p):
            witnesses.append({"n": m, "palindromic": bool(pal), "mismatch": pal.mismatch, "unimodal": is_unimodal(p)})
    return CheckReport(f"palindromic_unimodal_{family}", {"family": family, "n": ns},
                       "fail" if witnesses else "pass", witnesses, details={"center2": centers})


# -- recurrence checks ------------------------------------------------------------


@timed("recurrence")
def check_recurrence(family: str, max_n: int) -> CheckReport:
    rep = sweep(family, max_n)
    witnesses = []
    for (m, k), v in rep.unexpected_negatives.items():
        witnesses.append({"negative": [m, k], "value": v})
    witnesses += [{"aux_violation": lbl, "deficit": d} for lbl, d in rep.aux.violations]
    witnesses += [{"chain": nm, "n": n, "value": v} for nm, n, v in rep.chains.failures]
    witnesses += [{"identity": nm, "n": n, "residual": v} for nm, n, v in rep.chains.identity_failures]
    ch = rep.chains
    details = {
        "negatives": {f"{m},{k}": v for (m, k), v in sorted(rep.nonneg.negatives.items())},
        "aux_checked": rep.aux.checked,
        "chain_rows": [min(ch.rows), max(ch.rows)] if ch.rows else [],
        "in_hypothesis_rows": ch.in_hypothesis_rows,
        "chain_min_slack": {nm: {"n": n, "slack_digits": len(str(abs(s))), "nonneg": s >= 0}
                            for nm, (s, n) in ch.min_slack.items()},
        "chain_nonneg_from": {nm: ch.first_nonneg_from(nm) for nm in ch.min_slack},
        "advisory_rows": len(ch.advisories),
        "readings": CHAIN_READINGS[family],
    }
    if not ch.in_hypothesis_rows:
        details["note"] = f"no in-hypothesis proof rows below max_n={max_n}; chains are advisory only"
    return CheckReport(f"recurrence_{family}", {"family": family, "max_n": max_n},
                       "fail" if witnesses else "pass", witnesses, details=details)


@timed("oracle")
def check_oracle(family: str, n_range) -> CheckReport:
    ns = _ns(n_range)
    table = build_table(family, max(ns))
    witnesses, counts = [], {}
    for m in ns:
        if family == "a":
            brute = joint_distribution(m, ClassSpec.involutions(), ["des"])
        else:
            brute = joint_distribution(2 * m, ClassSpec.fpf_involutions(), ["des"])
        rec = reconstruct_poly(table, m)
        counts[m] = rec.eval_at_one()
        if rec != brute:
            witnesses.append({"n": m, "recurrence": str(rec), "enumeration": str(brute)})
    return CheckReport(f"oracle_{family}", {"family": family, "n": ns}, "fail" if witnesses else "pass",
                       witnesses, details={"row_sums": counts})


@timed("b_small_negatives")
def check_b_small_negatives(n_max: int = 8, brute_max: int = 7) -> CheckReport:
    """Negative b entries for n <= n_max, the small ones confirmed by brute-force gamma."""
    table = build_table("b", n_max)
    negs = {(2 * m, k): v for m in range(1, n_max + 1) for k, v in table.row(m).items() if v < 0}
    witnesses = []
    for m in range(1, brute_max + 1):
        brute = gamma_expand(joint_distribution(2 * m, ClassSpec.fpf_involutions(), ["des"]), center2=2 * m)
        if brute != table.gamma_vector(m):
            witnesses.append({"n": m, "brute": str(brute), "table": str(table.gamma_vector(m))})
    if negs.get((4, 2)) != -1:
        witnesses.append({"expected": "b_{4,2} = -1", "got": negs.get((4, 2))})
    return CheckReport("b_small_negatives", {"n_max": n_max, "brute_max": brute_max},
                       "fail" if witnesses else "pass", witnesses,
                       details={"negatives": {f"{m},{k}": v for (m, k), v in sorted(negs.items())},
                                "failing_half_lengths": sorted({m // 2 for m, _ in negs})})


# -- series checks -------------------------------------------------------------------


@timed("series")
def check_series(order: int, enum_max: int = 8) -> CheckReport:
    s1 = solve_s1_system(order)
    cub = solve_s1_cubic(order)
    s2 = solve_s2_system(order)
    S1, F1, R1 = s1.series["S1"], s1.series["F1"], s1.series["R1"]
    S2, T2 = s2.series["S2"], s2.series["T2"]
    witnesses = []
    residuals = {**{f"s1:{k}": r.is_zero() for k, r in s1.residuals.items()},
                 **{f"s2:{k}": r.is_zero() for k, r in s2.residuals.items()}}
    rational = {k: r.is_zero() for k, r in check_rational_relations(S1, F1, R1).items()}
    for name, ok in {**residuals, **{f"rational:{k}": v for k, v in rational.items()}}.items():
        if not ok:
            witnesses.append({"nonzero_residual": name})
    for name, other in (("cubic", cub.series["S1"]), ("S2", S2)):
        d = series_equal(S1, other)
        if not d:
            witnesses.append({"S1_vs": name, "z_order": d.z_order, "monomial": d.monomial})
    brute = {"S1": (SEPARABLE, ["des", "dd"], S1), "F1": (SEPARABLE, ["des", "dd0"], F1),
             "R1": (SEPARABLE, ["des", "ddinf"], R1), "S2": (S2_CLASS, ["des", "dd"], S2),
             "T2": (S2_CLASS, ["desp", "ddp"], T2)}
    for name, (cls, st, ser) in brute.items():
        for m in range(1, min(order, enum_max) + 1):
            if ser.coeff(m).as_dict() != joint_distribution(m, cls, st).as_dict():
                witnesses.append({"series": name, "z_order": m, "mismatch": "enumeration differs"})
    schroeder = [sum(S1.coeffs[m].values()) for m in range(1, order + 1)]
    return CheckReport("series", {"order": order, "enum_max": min(order, enum_max)},
                       "fail" if witnesses else "pass", witnesses,
                       details={"residuals_zero": residuals, "rational_relations_zero": rational,
                                "coefficient_sums": schroeder,
                                "T2_reading": "z^n weight per permutation of length n",
                                "T2_initial": [str(T2.coeff(1)), str(T2.coeff(2))] if order >= 2 else []})


# -- MFS checks -----------------------------------------------------------------------


@timed("mfs")
def check_mfs(n=range(1, 9)) -> CheckReport:
    ns = _ns(n)
    witnesses = []
    details: dict = {"boundary": BOUNDARY, "orbits": {}, "separable_escape": {}}
    for m in ns:
        full = orbit_gamma_check(m, ClassSpec.all())
        details["orbits"][m] = full.orbits
        if not full.ok:
            witnesses.append({"n": m, "class": "all", "problems": full.problems})
        inv = orbit_gamma_check(m, S2_CLASS)
        if not inv.ok:
            witnesses.append({"n": m, "class": str(S2_CLASS), "problems": inv.problems,
                              "escape": inv.escape_witness})
        sep = orbit_gamma_check(m, SEPARABLE)
        details["separable_escape"][m] = sep.escape_witness
    # separables are not a union of orbits from n = 4 on
    if max(ns) >= 4 and not any(details["separable_escape"].values()):
        witnesses.append({"separable": "no escaping orbit found"})
    return CheckReport("mfs", {"n": ns}, "fail" if witnesses else "pass", witnesses, details=details)


@timed("star_identities")
def check_star_identities(n=range(2, 8)) -> CheckReport:
    ns = _ns(n)
    witnesses, branches = [], {}
    for m in ns:
        rep = verify_star_identities(m)
        branches[m] = dict(rep.branch_counts)
        witnesses += [{"n": m, "pi1": a, "pi2": b, "identity": i} for a, b, i in rep.violations[:5]]
        for cls_pi in enumerate_class(m, S2_CLASS):
            dec = star_decompose(cls_pi)
            if dec is None:
                witnesses.append({"n": m, "undecomposable": str(cls_pi)})
            elif dec[0] == "star":
                if star_compose(dec[1], dec[2]) != cls_pi:
                    witnesses.append({"n": m, "round_trip": str(cls_pi)})
    summary = star_reading_summary(max(ns))
    return CheckReport("star_identities", {"n": ns}, "fail" if witnesses else "pass", witnesses,
                       details={"branch_counts": branches, "exception_scope": summary})


# -- suite runner -------------------------------------------------------------------------


def plan(cfg: RunConfig) -> list[tuple[str, str, dict]]:
    """(check id, function name, kwargs) for every check at the profile's scale."""
    e = cfg.max_n_enum
    t = cfg.max_n_table
    return [
        ("foata_schutz", "check_foata_schutz", {"n": list(range(1, min(e, 8) + 1))}),
        ("fu_lin_zeng", "check_fu_lin_zeng", {"n": list(range(1, e + 1))}),
        ("dddes", "check_dddes", {"n": list(range(1, e + 1)), "series_order": cfg.series_order}),
        ("wilf", "check_des_not_DES", {"n": list(range(1, e + 1))}),
        ("dilks", "check_dilks", {"n": list(range(1, e + 2))}),
        ("length4", "check_length4_list", {"n_range": list(range(4, min(e, 7) + 1))}),
        ("length5", "check_length5", {"n_range": [5, 6, 7]}),
        ("palindromic_unimodal_I", "check_palindromic_unimodal", {"family": "I", "n_range": list(range(1, min(t, 100) + 1))}),
        ("palindromic_unimodal_J", "check_palindromic_unimodal", {"family": "J", "n_range": list(range(1, min(t, 50) + 1))}),
        ("recurrence_a", "check_recurrence", {"family": "a", "max_n": t}),
        ("recurrence_b", "check_recurrence", {"family": "b", "max_n": t}),
        ("b_small_negatives", "check_b_small_negatives", {"n_max": 8, "brute_max": min(7, e)}),
        ("oracle_a", "check_oracle", {"family": "a", "n_range": list(range(1, e + 2))}),
        ("oracle_b", "check_oracle", {"family": "b", "n_range": list(range(1, min(7, e) + 1))}),
        ("series", "check_series", {"order": cfg.series_order, "enum_max": min(e, 8)}),
        ("mfs", "check_mfs", {"n": list(range(1, min(e, 8) + 1))}),
        ("star_identities", "check_star_identities", {"n": list(range(2, min(e, 7) + 1))}),
    ]


def _run_one(task: tuple[str, str, dict]) -> CheckReport:
    _, fname, kw = task
    return globals()[fname](**kw)


def run_suite(cfg: RunConfig, only: Iterable[str] | None = None, workers: int = 1) -> list[CheckReport]:
    tasks = plan(cfg)
    if only:
        wanted = set(only)
        tasks = [t for t in tasks if t[0] in wanted or any(t[0].startswith(w) for w in wanted)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def suite_document(cfg: RunConfig, reports: list[CheckReport]) -> dict:
    return {
        "tool": "gammadesk",
        "version": __version__,
        "kernel_backend": kernels.BACKEND,
        "config": cfg.as_dict(),
        "reports": [r.to_dict() for r in reports],
        "summary": {v: sum(r.verdict == v for r in reports) for v in VERDICTS},
    }


def render_text(cfg: RunConfig, reports: list[CheckReport]) -> str:
    lines = [f"gammadesk {__version__} (kernels: {kernels.BACKEND})", f"config: {cfg.as_dict()}", ""]
    for r in reports:
        lines.append(r.line())
        for w in r.witnesses[:5]:
            lines.append(f"    witness: {w}")
    s = {v: sum(r.verdict == v for r in reports) for v in VERDICTS}
    lines += ["", f"pass={s['pass']} fail={s['fail']} advisory={s['advisory']}"]
    return "\n".join(lines) + "\n"
