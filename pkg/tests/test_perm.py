import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gammadesk.perm import (
    S2_CLASS,
    SEPARABLE,
    ClassSpec,
    EnumerationLimitError,
    Permutation,
    class_size,
    contains_pattern,
    dd_free_census,
    descent_set_distribution,
    enumerate_class,
    in_class,
    joint_distribution,
    reverse,
    star_compose,
    star_decompose,
    star_reading_summary,
    stats,
    verify_star_identities,
)


def perms_upto(n_max):
    return st.integers(1, n_max).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


# -- Permutation ---------------------------------------------------------------


def test_parse_forms():
    assert Permutation.parse("2413") == (2, 4, 1, 3)
    assert Permutation.parse("2 4 1 3") == (2, 4, 1, 3)
    assert Permutation.parse("2,4,1,3") == (2, 4, 1, 3)
    assert str(Permutation.parse("10 1 2 3 4 5 6 7 8 9")) == "10 1 2 3 4 5 6 7 8 9"


@pytest.mark.parametrize("word", [(), (3, 2, 2), (0, 1), (1, 3)])
def test_rejects_non_permutations(word):
    with pytest.raises(ValueError, match="not a permutation"):
        Permutation(word)


# -- statistics ----------------------------------------------------------------


def test_stats_321():
    s = stats(Permutation.parse("321"))
    assert s.des_set == {1, 2}
    assert (s.des, s.maj, s.dd, s.dd0, s.ddinf, s.desp, s.ddp) == (2, 3, 2, 1, 3, 1, 1)


def test_stats_2143():
    s = stats(Permutation.parse("2143"))
    assert s.des_set == {1, 3}
    assert (s.des, s.maj, s.dd) == (2, 4, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_identity_is_all_zero(n):
    s = stats(Permutation.identity(n))
    assert s.des_set == frozenset()
    assert (s.des, s.maj, s.dd, s.dd0, s.desp, s.ddp) == (0,) * 6
    # with infinity on the left and 0 on the right, only the word "1" has one
    assert s.ddinf == (1 if n == 1 else 0)


@given(perms_upto(9))
def test_stats_match_definitions(pi):
    got = stats(pi).as_dict()
    want = oracles.all_stats(pi)
    assert set(got["des_set"]) == oracles.descent_set(pi)
    for k, v in want.items():
        assert got[k] == v, k


@given(perms_upto(12))
def test_stat_invariants(pi):
    s = stats(pi)
    n = len(pi)
    assert s.des == len(s.des_set)
    assert s.maj == sum(s.des_set)
    assert s.desp == len(s.des_set - {n - 1})
    assert s.dd <= s.des
    assert s.ddp <= s.dd
    assert s.desp in (s.des, s.des - 1)
    assert s.des + stats(reverse(pi)).des == n - 1


# -- containment -----------------------------------------------------------------


def test_contains_examples():
    assert contains_pattern(Permutation.parse("2413"), Permutation.parse("231"))
    assert not contains_pattern(Permutation.parse("2413"), Permutation.parse("3142"))
    assert not contains_pattern(Permutation.identity(7), Permutation.parse("21"))


@given(perms_upto(8), perms_upto(4))
def test_contains_matches_subsequence_oracle(pi, sigma):
    assert contains_pattern(pi, sigma) == oracles.contains(pi, sigma)


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        contains_pattern((1, 2), ())


# -- classes ------------------------------------------------------------------------


def test_classspec_validation():
    with pytest.raises(ValueError):
        ClassSpec("avoiding")
    with pytest.raises(ValueError):
        ClassSpec("all", (Permutation.parse("12"),))
    with pytest.raises(ValueError):
        ClassSpec("nope")


@pytest.mark.parametrize("spec,oracle", [
    (ClassSpec.all(), lambda n: list(oracles.perms(n))),
    (ClassSpec.involutions(), oracles.involutions),
    (ClassSpec.fpf_involutions(), oracles.fpf_involutions),
    (SEPARABLE, lambda n: oracles.avoiders(n, [(2, 4, 1, 3), (3, 1, 4, 2)])),
    (S2_CLASS, lambda n: oracles.avoiders(n, [(3, 4, 1, 2), (3, 4, 2, 1)])),
    (ClassSpec.avoiding("132"), lambda n: oracles.avoiders(n, [(1, 3, 2)])),
])
@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_filter(spec, oracle, n):
    got = list(enumerate_class(n, spec))
    assert len(got) == len(set(got))
    assert set(got) == set(oracle(n))
    assert all(in_class(p, spec) for p in got)


def test_fpf_odd_is_empty():
    for n in (1, 3, 5, 7):
        assert class_size(n, ClassSpec.fpf_involutions()) == 0


@pytest.mark.parametrize("spec", [ClassSpec.all(), ClassSpec.involutions(), ClassSpec.fpf_involutions(), SEPARABLE])
def test_first_letter_partition(spec):
    n = 6
    whole = list(enumerate_class(n, spec))
    parts = [p for f in range(1, n + 1) for p in enumerate_class(n, spec, first=f)]
    assert sorted(parts) == sorted(whole)


def test_schroeder_sizes():
    assert [class_size(n, SEPARABLE) for n in range(1, 10)] == [1, 2, 6, 22, 90, 394, 1806, 8558, 41586]


def test_limit_refusal():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_class(11, ClassSpec.all()))
    with pytest.raises(EnumerationLimitError):
        list(enumerate_class(5, ClassSpec.all(), limit=4))


def test_row_sums():
    for n in range(1, 8):
        assert joint_distribution(n, ClassSpec.all(), ["des"]).eval_at_one() == math.factorial(n)
        assert joint_distribution(n, ClassSpec.involutions(), ["des"]).eval_at_one() == oracles.involution_count(n)
    for m in range(1, 5):
        assert joint_distribution(2 * m, ClassSpec.fpf_involutions(), ["des"]).eval_at_one() == oracles.double_factorial(2 * m - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_joint_distribution_against_oracle(n):
    words = oracles.avoiders(n, [(3, 4, 1, 2), (3, 4, 2, 1)])
    want = oracles.distribution(words, "des", "dd")
    assert joint_distribution(n, S2_CLASS, ["des", "dd"]).as_dict() == dict(want)


def test_descent_set_distribution_against_oracle():
    n = 5
    want = Counter(frozenset(oracles.descent_set(w)) for w in oracles.perms(n))
    assert descent_set_distribution(n, ClassSpec.all()) == want


def test_dd_free_census_small():
    assert dd_free_census(3, ClassSpec.all()) == {0: 1, 1: 2}


# -- star composition ------------------------------------------------------------------


def test_star_compose_shape():
    # A = 1, n = 5, B = 2 3 4 with the letter 1 replaced by pi1(k) = 2
    assert star_compose((1, 2), (1, 2, 3)) == (1, 5, 2, 3, 4)
    assert star_compose((1,), (1,)) == (2, 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_s2_class_decomposes_uniquely(n):
    members = set(enumerate_class(n, S2_CLASS))
    seen = set()
    for pi in members:
        dec = star_decompose(pi)
        assert dec is not None, pi
        if dec[0] == "trailing":
            rebuilt = Permutation(dec[1] + (n,))
            factors = [dec[1]]
        else:
            rebuilt = star_compose(dec[1], dec[2])
            factors = [dec[1], dec[2]]
        assert rebuilt == pi
        assert all(in_class(f, S2_CLASS) for f in factors)
        seen.add(rebuilt)
    # and every pair from the class builds a class member
    for k in range(1, n):
        for p1 in enumerate_class(k, S2_CLASS):
            for p2 in enumerate_class(n - k, S2_CLASS):
                assert star_compose(p1, p2) in members
    assert seen == members


@pytest.mark.parametrize("n", range(2, 7))
def test_star_identities_hold_with_exceptions(n):
    rep = verify_star_identities(n)
    assert rep.ok, rep.violations[:5]
    assert rep.pairs == sum(math.factorial(k) * math.factorial(n - k) for k in range(1, n))


def test_star_exception_scope_findings():
    s = star_reading_summary(6)
    per = s["per_n"]
    # the last exception holds only at total length 2
    assert per[2]["desp(1*p2)=desp(p2)"] == "exception"
    assert all(per[n]["desp(1*p2)=desp(p2)"] == "generic" for n in range(3, 7))
    # the dd' exception fails at length 2, where the generic rule holds
    assert per[2]["ddp(1*p2)=ddp(p2)+1"] == "generic"
    assert all(per[n]["ddp(1*p2)=ddp(p2)+1"] == "exception" for n in range(3, 7))
    assert all(per[n]["dd(1*p2)=dd(p2)+1"] == "exception" for n in range(2, 7))
    assert all(per[n]["desp(p1*1)=desp(p1)"] == "exception" for n in range(2, 7))
    assert not s["reading_all_scoped"] and not s["reading_last_only"]
