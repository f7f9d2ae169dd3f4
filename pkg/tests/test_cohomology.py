import itertools

import pytest
from hypothesis import given, settings, strategies as st

from flagcoh.cohomology import (
    NONVANISHING,
    UNKNOWN,
    VANISHES,
    PrimeContext,
    Verdict,
    bott,
    decompose_p_adic,
    dpi_lower_bound,
    generic_report,
    h1_nonvanishing,
    h1_witness,
    is_generic,
    p_dot,
    serre_dual,
    trivial_vanishing,
    twisted_weight,
)
from flagcoh.rootdata import build_root_system, in_restricted
from flagcoh.weyl import IDENTITY, dot, longest_element

A1 = build_root_system("A1")


def sl2_nonzero(a, i):
    """Rank one: H^0(a) != 0 iff a >= 0 and H^1(a) != 0 iff a <= -2, in every characteristic."""
    return a >= 0 if i == 0 else a <= -2


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rank_one_is_exact(p):
    for a, i in itertools.product(range(-30, 31), (0, 1)):
        status = dpi_lower_bound(A1, (a,), i, p).status
        assert (status == NONVANISHING) == sl2_nonzero(a, i)
        if trivial_vanishing(A1, (a,), i, p) == VANISHES:
            assert not sl2_nonzero(a, i)


def generated_set(rs, i, p, box, max_n):
    """Direct enumeration of p^n . (w . mu) +- xi over a range of n, clipped to the box."""
    lo, hi = box
    out = set()
    for n in range(max_n + 1):
        q = p**n
        bound = (max(abs(lo), abs(hi)) + 2 * q + 2) // q + 1
        for nu in itertools.product(range(-bound, bound + 1), repeat=rs.rank):
            pairs = rs.pairings(nu)
            if 0 in pairs or sum(1 for v in pairs if v < 0) != i:
                continue
            base = tuple(q * x - 1 for x in nu)
            for xi in itertools.product(range(q), repeat=rs.rank):
                for delta in (1, -1):
                    lam = tuple(b + delta * e for b, e in zip(base, xi))
                    if all(lo <= x <= hi for x in lam):
                        out.add(lam)
    return out


@pytest.mark.parametrize("name, p, max_n", [("A2", 2, 4), ("B2", 2, 4), ("A2", 3, 3), ("G2", 3, 3)])
def test_dpi_matches_enumeration(name, p, max_n):
    rs = build_root_system(name)
    box = (-5, 5)
    for i in range(rs.N + 1):
        expected = generated_set(rs, i, p, box, max_n)
        got = {
            lam
            for lam in itertools.product(range(box[0], box[1] + 1), repeat=rs.rank)
            if dpi_lower_bound(rs, lam, i, p).status == NONVANISHING
        }
        assert got == expected, i


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["A2", "B2"]), st.sampled_from([2, 3, 5]), st.data())
def test_witness_reconstructs_weight(name, p, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(-15, 15), min_size=2, max_size=2)))
    i = data.draw(st.integers(0, rs.N))
    verdict = dpi_lower_bound(rs, lam, i, p)
    if verdict.status == NONVANISHING:
        wit = verdict.witness
        assert wit.w.length == i
        xi = tuple((x - y) * wit.delta for x, y in zip(lam, p_dot(rs, dot(rs, wit.w, wit.mu), p, wit.n)))
        assert in_restricted(xi, p, wit.n)
        assert Verdict.from_json(verdict.to_json()) == verdict
    else:
        assert verdict.status == UNKNOWN


def test_h1_examples():
    assert h1_nonvanishing(A1, (-1,), 5) is False
    assert h1_nonvanishing(A1, (-2,), 3) is True
    assert h1_witness(A1, (-1,), 5) is None


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2"]), st.data())
def test_serre_duality_involution(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(-10, 10), min_size=2, max_size=2)))
    i = data.draw(st.integers(0, rs.N))
    dual, j = serre_dual(rs, lam, i)
    assert serre_dual(rs, dual, j) == (lam, i)
    ans, dual_ans = bott(rs, lam), bott(rs, dual)
    assert ans.singular == dual_ans.singular
    if not ans.singular:
        assert ans.degree + dual_ans.degree == rs.N


def test_serre_range():
    with pytest.raises(ValueError):
        serre_dual(A1, (0,), 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(-500, 500), st.sampled_from([2, 3, 7]), st.integers(0, 3))
def test_p_adic_split(a, p, n):
    low, high = decompose_p_adic(A1, (a,), p, n)
    assert in_restricted(low, p, n)
    assert low[0] + p**n * high[0] == a


@pytest.mark.parametrize("bad", [0, 1, 4, 9, -3])
def test_prime_context_rejects(bad):
    with pytest.raises(ValueError):
        PrimeContext(bad)
    with pytest.raises(ValueError):
        PrimeContext(3, -1)


def test_generic_window():
    flags = {lam: is_generic(A1, (lam,), 17, 1) for lam in (101, 102, 203, 204)}
    assert flags == {101: False, 102: True, 203: True, 204: False}
    with pytest.raises(ValueError):
        is_generic(A1, (-1,), 17, 1)


def test_generic_report_example():
    s = longest_element(A1)
    rep = generic_report(A1, (104,), s, 17, 1)
    assert (rep.degree, rep.socle_weight, rep.head_weight) == (1, (98,), (104,))
    assert twisted_weight(A1, (104,), IDENTITY, 17, 1) == (104,)
    with pytest.raises(ValueError, match="not generic"):
        generic_report(A1, (3,), s, 17, 1)


def test_trivial_vanishing_never_overclaims():
    rs = build_root_system("A2")
    for lam in itertools.product(range(-6, 7), repeat=2):
        for i in range(rs.N + 1):
            if trivial_vanishing(rs, lam, i, 3) == VANISHES:
                assert dpi_lower_bound(rs, lam, i, 3).status != NONVANISHING, (lam, i)
