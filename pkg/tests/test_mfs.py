import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammadesk.mfs import (
    DOUBLE_ASCENT,
    DOUBLE_DESCENT,
    PEAK,
    VALLEY,
    classify,
    dd_free_member,
    every_letter_peak_or_valley,
    hop,
    orbit,
    orbit_gamma_check,
    partition_is_orbits,
    class_is_union_of_orbits,
)
from gammadesk.perm import S2_CLASS, SEPARABLE, ClassSpec, Permutation, in_class, stats

P = Permutation.parse
perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def roles(word):
    return [r.role for r in classify(P(word) if isinstance(word, str) else word)]


def test_classify_examples():
    assert roles("213") == [DOUBLE_DESCENT, VALLEY, DOUBLE_ASCENT]
    assert roles("132") == [VALLEY, PEAK, VALLEY]
    assert roles("1234") == [VALLEY, DOUBLE_ASCENT, DOUBLE_ASCENT, DOUBLE_ASCENT]


def test_hop_examples():
    assert hop(P("213"), 2) == P("123")
    assert hop(P("123"), 2) == P("213")
    assert hop(P("213"), 3) == P("321")
    assert hop(P("132"), 3) == P("132")


def test_orbit_examples():
    assert orbit(P("213")) == {P("123"), P("213"), P("312"), P("321")}
    assert orbit(P("132")) == {P("132")}
    assert orbit(P("1")) == {P("1")}


@given(perms)
def test_roles_agree_with_dd(pi):
    rs = roles(pi)
    assert len(rs) == len(pi)
    assert rs.count(DOUBLE_DESCENT) == stats(pi).dd


@given(perms, st.data())
def test_hop_is_an_involution(pi, data):
    x = data.draw(st.sampled_from(list(pi)))
    q = hop(pi, x)
    assert hop(q, x) == pi
    d = stats(q).des - stats(pi).des
    role = {r.value: r.role for r in classify(pi)}[x]
    assert d == {DOUBLE_DESCENT: -1, DOUBLE_ASCENT: 1}.get(role, 0)


@given(perms, st.data())
def test_hops_commute(pi, data):
    x = data.draw(st.sampled_from(list(pi)))
    y = data.draw(st.sampled_from(list(pi)))
    assert hop(hop(pi, x), y) == hop(hop(pi, y), x)


@given(perms)
def test_orbit_size(pi):
    orb = orbit(pi)
    reps = dd_free_member(orb)
    assert len(reps) == 1
    rs = roles(reps[0])
    assert len(orb) == 2 ** (rs.count(DOUBLE_ASCENT) + rs.count(DOUBLE_DESCENT))
    assert len(orb) == 2 ** (len(pi) - rs.count(PEAK) - rs.count(VALLEY))


def test_s3_orbits():
    rep = orbit_gamma_check(3, ClassSpec.all())
    assert rep.ok and rep.orbits == 3
    assert rep.gamma == {0: 1, 1: 2}


@pytest.mark.parametrize("n", range(1, 8))
def test_full_symmetric_group(n):
    rep = orbit_gamma_check(n, ClassSpec.all())
    assert rep.ok, rep.problems
    assert partition_is_orbits(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_s2_class_invariant(n):
    rep = orbit_gamma_check(n, S2_CLASS)
    assert rep.ok, (rep.escape_witness, rep.problems)
    assert class_is_union_of_orbits(n, S2_CLASS)


@pytest.mark.parametrize("n", range(4, 8))
def test_separables_not_invariant(n):
    rep = orbit_gamma_check(n, SEPARABLE)
    assert not rep.invariant
    member, x, image = rep.escape_witness
    assert in_class(P(member), SEPARABLE)
    assert hop(P(member), x) == P(image)
    assert not in_class(P(image), SEPARABLE)


def test_separables_invariant_below_4():
    for n in range(1, 4):
        assert orbit_gamma_check(n, SEPARABLE).ok


@pytest.mark.parametrize("w", ["13254", "15243", "15342", "23154", "25143"])
def test_length5_patterns_peak_or_valley(w):
    assert every_letter_peak_or_valley(P(w))
    assert every_letter_peak_or_valley(P(w[::-1]))


def test_peak_or_valley_negative():
    assert not every_letter_peak_or_valley(P("12345"))
