from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foursq.congruence import brute_force_root, solve_root
from foursq.gaussian import GaussianInt as G, GaussianRational
from foursq.hcf import (
    Classification,
    HcfExpansion,
    InvalidWitness,
    hcf_expand,
    hcf_from_root,
    select_index,
    simple_cf_expand,
)

from conftest import PAPER_W, PAPER_X, PAPER_Y

UNITS_AND_ZERO = {G(0, 0), G(1, 0), G(-1, 0), G(0, 1), G(0, -1)}


def check_structure(e):
    """Every structural invariant of an expansion, asserted exactly."""
    m = e.depth
    assert e.P(-1) == 1 and e.Q(-1) == 0 and e.Q(0) == 1 and e.P(0) == e.a(0)
    for k in range(m):
        assert e.P(k + 1) == e.a(k + 1) * e.P(k) + e.P(k - 1)
        assert e.Q(k + 1) == e.a(k + 1) * e.Q(k) + e.Q(k - 1)
    for k in range(m + 1):
        assert e.P(k) * e.Q(k - 1) - e.Q(k) * e.P(k - 1) == (1 if k % 2 else -1)
    for k in range(m):
        assert e.Q(k + 1).norm_sq() > e.Q(k).norm_sq()
    for k in range(1, m + 1):
        assert e.a(k) not in UNITS_AND_ZERO


def check_remainders(e):
    w, g = e.w, G(e.x, e.y)
    m = e.depth
    assert e.S(-1) == -w and e.S(m).is_zero()
    for k in range(-1, m + 1):
        assert e.S(k) == g * e.Q(k) - e.P(k) * w
    for k in range(m + 1):
        s2, q2 = e.S(k).norm_sq(), e.Q(k).norm_sq()
        assert s2 * q2 <= w * w
        assert (s2 + q2) % w == 0
        assert 2 * s2 <= e.S(k - 1).norm_sq()
    for k in range(m):
        assert e.S(k) * e.Q(k + 1) - e.S(k + 1) * e.Q(k) == (-w if k % 2 else w)
    if m > 4:
        assert 2 ** (m - 4) <= w * w


def test_expand_one_plus_i_over_three():
    e = hcf_expand(GaussianRational(G(1, 1), 3))
    assert e.partial_quotients == (G(0, 0), G(2, -1), G(-1, 1))
    assert e.q_seq[1:] == (G(1, 0), G(2, -1), G(0, 3))
    assert e.p_seq[1:] == (G(0, 0), G(1, 0), G(-1, 1))
    check_structure(e)


def test_expand_gaussian_integer_has_depth_zero():
    e = hcf_expand(GaussianRational(G(5, -3)))
    assert e.depth == 0 and e.partial_quotients == (G(5, -3),)


def test_expand_paper_rows():
    e = hcf_expand(GaussianRational(G(PAPER_X, PAPER_Y), PAPER_W))
    assert [e.a(k) for k in (1, 2, 3)] == [G(2, -1), G(-1, 1), G(0, -2)]
    assert e.P(3) == G(3, 2) and e.Q(3) == G(8, -1)
    assert e.P(-1 + 0) == 1 and e.Q(1) == G(2, -1) and e.Q(2) == G(0, 3)


def test_from_root_three():
    e = hcf_from_root(3, 1, 1)
    assert e.s_seq == (G(-3, 0), G(1, 1), G(0, 1), G(0, 0))
    assert e.partial_quotients == (G(0, 0), G(2, -1), G(-1, 1))
    check_structure(e)
    check_remainders(e)


def test_from_root_seven():
    e = hcf_from_root(7, 3, 2)
    assert e.partial_quotients[:3] == (G(0, 0), G(2, -1), G(-2, 1))
    assert e.S(1) == G(1, 1) and e.Q(1) == G(2, -1)
    assert e.Q(2) == G(-2, 4)
    check_remainders(e)


def test_from_root_paper_rows():
    e = hcf_from_root(PAPER_W, PAPER_X, PAPER_Y)
    assert e.a(36) == G(3, 1) and e.a(37) == G(0, -2) and e.a(38) == G(0, 2)
    assert e.P(36) == G(393331037760940, -446167971615681)
    assert e.Q(36) == G(0, -1338503914847043)
    assert e.P(37) == G(-805083291726049, -974048629634780)
    assert e.Q(37) == G(-2808580912939087, -446167971615681)
    assert e.P(38) == G(2341428297030500, -2056334555067779)
    assert e.Q(38) == G(892335943231362, -6955665740725217)
    check_structure(e)
    check_remainders(e)


def test_select_index_examples():
    assert select_index(hcf_from_root(3, 1, 1)).n == 0
    assert select_index(hcf_from_root(7, 3, 2)).n == 1
    sel = select_index(hcf_from_root(PAPER_W, PAPER_X, PAPER_Y))
    assert sel.n == 37 and sel.classification is Classification.STRICT


def test_select_index_flags_norm_hit():
    # no witness seen in practice reaches norm exactly w, so feed a synthetic expansion
    e = HcfExpansion(
        partial_quotients=(G(0, 0), G(2, 1), G(3, 0)),
        p_seq=(G(1, 0), G(0, 0), G(1, 0), G(3, 0)),
        q_seq=(G(0, 0), G(1, 0), G(2, 1), G(7, 3)),
        s_seq=(G(-5, 0), G(4, 1), G(1, 0), G(0, 0)),
        w=5,
        x=4,
        y=1,
    )
    sel = select_index(e)
    assert sel.n == 1
    assert sel.classification is Classification.EQUAL and sel.hit == ("Q", 1)


def test_select_index_strict_has_no_hit():
    sel = select_index(hcf_from_root(7, 3, 2))
    assert sel.classification is Classification.STRICT and sel.hit is None


def test_select_index_needs_witness():
    with pytest.raises(ValueError):
        select_index(hcf_expand(GaussianRational(G(1, 1), 3)))


@pytest.mark.parametrize("w, x, y", [(4, 1, 1), (7, 3, 3), (7, 4, 2), (7, 10, 2), (-3, 1, 1)])
def test_from_root_rejects_bad_witness(w, x, y):
    with pytest.raises(InvalidWitness):
        hcf_from_root(w, x, y)


def test_simple_cf_examples():
    cf = simple_cf_expand(5, 13)
    assert cf.quotients == (0, 2, 1, 1, 2)
    assert cf.q_seq == (1, 2, 3, 5, 13)
    assert simple_cf_expand(0, 7).quotients == (0,)
    assert simple_cf_expand(1, 2).quotients == (0, 2)


@given(st.integers(1, 10**40), st.data())
def test_simple_cf_last_convergent(den, data):
    num = data.draw(st.integers(0, den - 1))
    cf = simple_cf_expand(num, den)
    assert Fraction(cf.p_seq[-1], cf.q_seq[-1]) == Fraction(num, den)
    assert all(a < b for a, b in zip(cf.q_seq[1:], cf.q_seq[2:]))


small_odd = st.integers(1, 2000).map(lambda k: 2 * k + 1)


@given(small_odd)
def test_from_root_matches_rational_expansion(w):
    wit = brute_force_root(w)
    e = hcf_from_root(w, wit.x, wit.y)
    r = hcf_expand(GaussianRational(G(wit.x, wit.y), w))
    assert e.partial_quotients == r.partial_quotients
    assert e.p_seq == r.p_seq and e.q_seq == r.q_seq
    assert GaussianRational(e.P(e.depth)) / GaussianRational(e.Q(e.depth)) == GaussianRational(G(wit.x, wit.y), w)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 2**64).map(lambda n: n | 1), st.integers(0, 3))
def test_invariants_on_random_witnesses(w, seed):
    wit = solve_root(w, seed)
    e = hcf_from_root(w, wit.x, wit.y)
    check_structure(e)
    check_remainders(e)


@given(st.builds(GaussianRational, st.builds(G, st.integers(-10**9, 10**9), st.integers(-10**9, 10**9)), st.integers(1, 10**9)))
def test_rational_expansion_iterates_outside_unit_disks(z):
    # every iterate after the first has squared modulus >= 2
    e = hcf_expand(z)
    check_structure(e)
    assert GaussianRational(e.P(e.depth)) / GaussianRational(e.Q(e.depth)) == z
    it = z
    for k in range(e.depth):
        it = (it - e.a(k)).inverse()
        num, den = it.norm_sq()
        assert num >= 2 * den
