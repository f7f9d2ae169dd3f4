import itertools

import pytest
from hypothesis import given, settings, strategies as st

from flagcoh.jantzen import sl2_weyl_decomposition
from flagcoh.linkage import LinkageChain, linked, sl_down_set, strongly_linked, x_alpha_set
from flagcoh.rootdata import build_root_system, is_dominant
from flagcoh.weyl import affine_reflect

A1 = build_root_system("A1")


def brute_strong_linkage(rs, mu, lam, p, r_range=range(-12, 13)):
    """Search down from lam with affine reflections s_{beta,r}, keeping mu <= nu' <= nu."""
    seen = {lam}
    stack = [lam]
    while stack:
        nu = stack.pop()
        for k, r in itertools.product(range(rs.N), r_range):
            y = affine_reflect(rs, k, r, p, nu)
            if y not in seen and rs.leq(y, nu) and rs.leq(mu, y):
                seen.add(y)
                stack.append(y)
    return mu in seen


def test_examples():
    chain = strongly_linked(A1, (1,), (3,), 3)
    assert chain.verify(A1) and chain.weights() == [(3,), (1,)]
    assert strongly_linked(A1, (0,), (3,), 3) is None
    assert [mu for mu, _ in sl_down_set(A1, (3,), 3)] == [(1,)]
    assert x_alpha_set(A1, (5,), 0, 2) == [(-3,), (1,)]
    assert strongly_linked(A1, (3,), (3,), 3).steps == ()


@pytest.mark.parametrize("name, p, lo, hi", [("A1", 2, -12, 12), ("A1", 3, -12, 12), ("A2", 2, -3, 4), ("B2", 3, -3, 4)])
def test_against_affine_reflection_search(name, p, lo, hi):
    rs = build_root_system(name)
    pts = list(itertools.product(range(lo, hi + 1), repeat=rs.rank))
    for lam in pts[:: max(1, len(pts) // 8)]:
        for mu in pts[:: max(1, len(pts) // 15)]:
            chain = strongly_linked(rs, mu, lam, p)
            assert (chain is not None) == brute_strong_linkage(rs, mu, lam, p), (mu, lam)
            if chain is not None:
                assert chain.verify(rs)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_composition_factors_are_strongly_linked(p):
    # every composition factor L(mu) of a Weyl module Delta(lam) has mu strongly linked to lam
    for lam in range(0, 60):
        down = {mu for mu, _ in sl_down_set(A1, (lam,), p)} | {(lam,)}
        for mu, _ in sl2_weyl_decomposition(A1, lam, p):
            assert (mu,) in down, (lam, mu)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2"]), st.sampled_from([2, 3]), st.data())
def test_transitive(name, p, data):
    rs = build_root_system(name)
    wt = lambda: tuple(data.draw(st.lists(st.integers(-4, 6), min_size=2, max_size=2)))
    a, b, c = wt(), wt(), wt()
    if strongly_linked(rs, a, b, p) and strongly_linked(rs, b, c, p):
        assert strongly_linked(rs, a, c, p) is not None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2"]), st.sampled_from([2, 3, 5]), st.data())
def test_linked_is_orbit_relation(name, p, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(-8, 8), min_size=2, max_size=2)))
    k = data.draw(st.integers(0, rs.N - 1))
    r = data.draw(st.integers(-3, 3))
    assert linked(rs, affine_reflect(rs, k, r, p, lam), lam, p)


@pytest.mark.parametrize("name, p, lam", [("A2", 2, (3, 2)), ("B2", 3, (4, 1)), ("G2", 2, (1, 1))])
def test_down_set_matches_pointwise(name, p, lam):
    rs = build_root_system(name)
    down = sl_down_set(rs, lam, p)
    assert [mu for mu, _ in down] == sorted(mu for mu, _ in down)
    for mu, chain in down:
        assert chain.verify(rs) and chain.bottom == mu and chain.top == lam
        assert is_dominant(tuple(x + 1 for x in mu))
    expected = {
        mu
        for mu in itertools.product(range(-1, 4 * sum(lam) + 4), repeat=2)
        if mu != lam and strongly_linked(rs, mu, lam, p) is not None
    }
    assert {mu for mu, _ in down} == expected


def test_chain_json_round_trip():
    rs = build_root_system("B2")
    lam = (4, 1)
    for mu, chain in sl_down_set(rs, lam, 3):
        back = LinkageChain.from_json(rs, chain.to_json(rs), mu, lam, 3)
        assert back == chain


def test_bad_inputs():
    with pytest.raises(ValueError):
        strongly_linked(A1, (0,), (1,), 1)
    with pytest.raises(ValueError):
        sl_down_set(A1, (-3,), 3)
    with pytest.raises(IndexError):
        x_alpha_set(A1, (3,), 1, 3)
