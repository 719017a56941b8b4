import functools

import pytest

import oracles
from gammadesk.poly import IntPoly, gamma_expand
from gammadesk.recurrences import (
    IntegrityError,
    RecurrenceTable,
    a_chains_at,
    b_chains_at,
    build_table,
    chain_range,
    iter_rows,
    reconstruct_poly,
    sweep,
    verify_aux_inequalities,
    verify_gamma_nonneg,
    verify_proof_chains,
)


@functools.lru_cache(maxsize=None)
def fpf_des(m):
    return IntPoly(oracles.distribution(oracles.fpf_involutions(m), "des"))


@pytest.fixture(scope="module")
def a200():
    return build_table("a", 200)


@pytest.fixture(scope="module")
def b200():
    return build_table("b", 200)


def test_a_small_rows(a200):
    assert a200.row(1) == {0: 1}
    assert a200.row(2) == {0: 1}
    assert a200.row(3) == {0: 1, 1: 0}
    assert a200.row(4) == {0: 1, 1: 1}
    assert reconstruct_poly(a200, 3) == IntPoly([1, 2, 1])
    assert reconstruct_poly(a200, 1) == IntPoly([1])


def test_b_small_rows(b200):
    assert b200.row(1) == {1: 1}
    assert b200.row(2) == {1: 1, 2: -1}
    assert reconstruct_poly(b200, 2) == IntPoly({1: 1, 2: 1, 3: 1})


def test_support_and_zero_outside(a200, b200):
    for n in range(1, 50):
        assert set(a200.row(n)) == set(range((n - 1) // 2 + 1))
        assert set(b200.row(n)) == set(range(1, n + 1))
        assert a200.get(n, -1) == 0 and a200.get(n, n) == 0
        assert b200.get(n, 0) == 0 and b200.get(n, n + 1) == 0
    assert a200.get(0, 0) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_a_matches_involution_enumeration(a200, n):
    brute = oracles.distribution(oracles.involutions(n), "des")
    assert reconstruct_poly(a200, n) == IntPoly(brute)


@pytest.mark.parametrize("n", range(1, 8))
def test_b_matches_fpf_enumeration(b200, n):
    assert reconstruct_poly(b200, n) == fpf_des(2 * n)


def test_involution_oracle_agrees_with_filter():
    for n in range(1, 8):
        assert set(oracles.involutions(n)) == set(oracles.involutions_by_filter(n))


def test_row_sums(a200, b200):
    assert [reconstruct_poly(a200, n).eval_at_one() for n in range(1, 11)] == [
        1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]
    for n in range(1, 60):
        assert reconstruct_poly(a200, n).eval_at_one() == oracles.involution_count(n)
        assert reconstruct_poly(b200, n).eval_at_one() == oracles.double_factorial(2 * n - 1)


def test_rows_are_gamma_of_polys(a200, b200):
    for n in range(1, 30):
        assert gamma_expand(reconstruct_poly(a200, n), center2=n - 1) == a200.gamma_vector(n)
        assert gamma_expand(reconstruct_poly(b200, n), center2=2 * n) == b200.gamma_vector(n)


def test_determinism(a200):
    assert build_table("a", 200) == a200
    assert [r for _, r in iter_rows("a", 200)] == [a200.row(n) for n in range(1, 201)]


def test_resume_equals_cold(a200):
    prefix = {n: a200.row(n) for n in range(1, 101)}
    resumed = dict(iter_rows("a", 200, start=prefix))
    assert resumed == {n: a200.row(n) for n in range(1, 201)}


@pytest.mark.parametrize("family,start,where", [
    ("a", {3: {0: 1, 1: 1}}, (4, 1)),
    ("a", {3: {0: 1, 1: 2}}, (5, 1)),
    ("b", {2: {1: 1, 2: 3}}, (3, 2)),
])
def test_inexact_division_is_fatal(family, start, where):
    with pytest.raises(IntegrityError) as e:
        list(iter_rows(family, 10, start=start))
    assert (e.value.n, e.value.k) == where


def test_bad_arguments():
    with pytest.raises(ValueError):
        build_table("c", 5)
    with pytest.raises(ValueError):
        build_table("a", 0)
    with pytest.raises(KeyError):
        RecurrenceTable("a").get(3, 0)


def test_big_integers_exact():
    t = build_table("a", 400)
    assert max(len(str(v)) for v in t.row(400).values()) > 300
    assert reconstruct_poly(t, 400).eval_at_one() == oracles.involution_count(400)


# -- verification reports ----------------------------------------------------------------


def test_a_nonnegative(a200):
    assert verify_gamma_nonneg(a200, range(1, 201)).ok


def test_b_negatives(b200):
    rep = verify_gamma_nonneg(b200, range(2, 3))
    assert rep.negatives == {(4, 2): -1}
    small = verify_gamma_nonneg(b200, range(1, 9))
    assert small.negatives == {(4, 2): -1, (6, 2): -1, (8, 4): -7, (10, 4): -10, (12, 6): -65, (16, 8): -583}
    assert small.failing_n() == [4, 6, 8, 10, 12, 16]
    assert verify_gamma_nonneg(b200, range(9, 201)).ok


@pytest.mark.parametrize("n", range(1, 8))
def test_b_negatives_match_brute_gamma(b200, n):
    brute = gamma_expand(fpf_des(2 * n), center2=2 * n)
    assert brute.negatives() == b200.gamma_vector(n).negatives()


def test_aux(a200, b200):
    ra = verify_aux_inequalities(a200)
    rb = verify_aux_inequalities(b200)
    assert ra.ok and rb.ok
    # a: odd n = 9, 11, ..., 199; b: n = 11..200
    assert ra.checked == len(range(9, 201, 2))
    assert rb.checked == 190
    assert 9 * a200.get(9, 4) >= 2 * a200.get(8, 3)
    assert b200.get(11, 11) >= b200.get(10, 10)


def test_chain_identities_hold_everywhere(a200, b200):
    for n in chain_range("a", 200):
        for name, kind, v in a_chains_at(a200.get, n):
            if kind == "eq":
                assert v == 0, (name, n)
    for n in chain_range("b", 200):
        for name, kind, v in b_chains_at(b200.get, n):
            if kind == "eq":
                assert v == 0, (name, n)


def test_chains_out_of_hypothesis_are_advisory(b200):
    rep = verify_proof_chains(b200)
    assert rep.ok
    assert rep.advisories  # negative slack at small n
    assert all(n < 11 for _, n, _ in rep.advisories)
    assert rep.first_nonneg_from("ddagger") == 11


def test_chain_threshold_is_configurable(b200):
    rep = verify_proof_chains(b200, hypothesis_from=5)
    assert not rep.ok
    assert {name for name, _, _ in rep.failures} <= {"ddagger", "target"}


def test_a_chains_nonnegative(a200):
    rep = verify_proof_chains(a200, hypothesis_from=6)
    assert rep.ok, rep.failures[:3]
    assert rep.first_nonneg_from("dagger") == 4


def test_sweep_matches_full_table(a200, b200):
    seen = []
    rep = sweep("a", 200, on_row=lambda n, r: seen.append(n))
    assert seen == list(range(1, 201))
    assert rep.ok
    assert rep.aux.checked == verify_aux_inequalities(a200).checked
    assert rep.chains.rows == list(chain_range("a", 200))
    full = verify_proof_chains(a200)
    assert rep.chains.min_slack == full.min_slack
    rb = sweep("b", 200)
    assert rb.ok and rb.nonneg.negatives == verify_gamma_nonneg(b200, range(1, 201)).negatives
    assert rb.unexpected_negatives == {}
