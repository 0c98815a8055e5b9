from itertools import product
from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from macdlab.combinatorics import (
    arm, beta, bruhat_covers_up, bruhat_leq, bruhat_less,
    enumerate_nonattacking, filling_weight, hhl_stats, is_nonattacking, leg,
    orbit, partitions, sort_desc, sort_partition, sorting_chain, weak_compositions,
)
from macdlab.qt_field import RatQT, q, t

# the worked filling of (3,2,0,1,0,0), columns bottom to top
SHAPE = (3, 2, 0, 1, 0, 0)
FILLING = ((1, 4, 6), (2, 1), (), (3,), (), ())


def test_sort():
    assert sort_partition((0, 2, 0, 1)) == (2, 1)
    assert sort_partition(()) == ()
    assert sort_partition((3, 3, 1)) == (3, 3, 1)
    assert sort_desc((0, 2, 0, 1)) == (2, 1, 0, 0)


def test_beta():
    assert beta((1,)) == [1]
    assert beta((1, 1, 1))[1] == 2
    assert beta((2, 0))[0] == 2
    assert beta((1, 1, 1)) == [1, 2, 3]


def test_partitions_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(weak_compositions(3, 3)) == 10


def test_bruhat_examples():
    assert bruhat_less((1, 0), (0, 1))
    assert not bruhat_less((0, 1), (1, 0))
    assert not bruhat_less((0, 1), (0, 1))


@pytest.mark.parametrize("v", [(2, 1, 0), (1, 1, 0, 0), (2, 1, 1, 0), (3, 1, 0)])
def test_decreasing_is_orbit_minimum(v):
    for w in orbit(v):
        assert bruhat_leq(v, w)


@pytest.mark.parametrize("v", [(1, 1, 0, 0), (2, 1, 0, 0), (2, 1, 1, 0), (3, 1, 1, 0)])
def test_bruhat_partial_order_on_orbits(v):
    O = orbit(v)
    for a in O:
        assert not bruhat_less(a, a)
        for b in O:
            if bruhat_less(a, b):
                assert not bruhat_less(b, a)
                for c in O:
                    if bruhat_less(b, c):
                        assert bruhat_less(a, c)


@pytest.mark.parametrize("v", [(1, 0, 0), (2, 1, 0), (0, 1, 2), (1, 1, 0, 0)])
def test_covers_are_covers(v):
    O = orbit(v)
    for g in bruhat_covers_up(v):
        assert bruhat_less(v, g)
        assert not any(bruhat_less(v, d) and bruhat_less(d, g) for d in O)


@pytest.mark.parametrize("mu", [(0, 1), (0, 2, 1), (1, 0, 2), (0, 1, 1, 2)])
def test_sorting_chain_walks_up(mu):
    base, steps = sorting_chain(mu)
    assert base == sort_desc(mu)
    cur = list(base)
    for i in steps:
        assert cur[i - 1] > cur[i]
        nxt = cur[:]
        nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
        assert bruhat_less(tuple(cur), tuple(nxt))
        cur = nxt
    assert tuple(cur) == tuple(mu)


def test_worked_filling_statistics():
    assert is_nonattacking(SHAPE, FILLING)
    st_ = hhl_stats(SHAPE, FILLING)
    assert (st_["maj"], st_["Inv"], st_["inv"], st_["coinv"]) == (3, 21, 14, 1)
    assert arm(SHAPE, (1, 2)) == 2 and leg(SHAPE, (1, 2)) == 1
    assert (1, 2) in st_["descents"]


def test_worked_filling_contribution():
    expo, c = filling_weight(SHAPE, FILLING, 6)
    assert expo == (2, 1, 1, 1, 0, 1)
    expected = RatQT.monomial(-3, 1) * (1 - t) ** 4 / (
        (1 - t ** 3 / q) * (1 - t ** 2 / q) * (1 - t ** 3 / q ** 2) * (1 - t ** 2 / q))
    assert c == expected


def test_empty_shape():
    fills = list(enumerate_nonattacking((0, 0, 0)))
    assert fills == [((), (), ())]
    s = hhl_stats((0, 0, 0), fills[0])
    assert (s["maj"], s["inv"], s["coinv"]) == (0, 0, 0)


def _boxes(mu):
    return [(i, j) for i in range(1, len(mu) + 1) for j in range(1, mu[i - 1] + 1)]


def _brute(mu, N):
    boxes = _boxes(mu)
    out = set()
    for labels in product(range(1, N + 1), repeat=len(boxes)):
        cols = [[0] * m for m in mu]
        for (i, j), lab in zip(boxes, labels):
            cols[i - 1][j - 1] = lab
        F = tuple(tuple(c) for c in cols)
        if is_nonattacking(mu, F):
            out.add(F)
    return out


@pytest.mark.parametrize("mu,N", [((2, 1), 2), ((0, 2, 1), 3), ((1, 0, 2), 4), ((2, 0, 1, 1), 4),
                                  ((3, 2, 0, 1, 0, 0), 6)])
def test_enumeration_matches_brute_force(mu, N):
    assert set(enumerate_nonattacking(mu, N)) == _brute(mu, N)


def test_worked_shape_count_regression():
    # cached value of the exhaustive count above
    assert sum(1 for _ in enumerate_nonattacking(SHAPE, 6)) == len(_brute(SHAPE, 6))


@pytest.mark.parametrize("lam", [(1,), (2, 1), (2, 2, 1), (3, 1, 1)])
def test_partition_row_one_forced(lam):
    for F in enumerate_nonattacking(lam):
        assert [col[0] for col in F] == list(range(1, len(lam) + 1))


def test_tail_constraint_counts_labels():
    mu, nu = (1, 0, 2), (2, 1)
    N = len(mu) + len(nu)
    for F in enumerate_nonattacking(mu + (0,) * len(nu), N, tail=nu):
        flat = [x for col in F for x in col]
        assert [flat.count(len(mu) + i + 1) for i in range(len(nu))] == list(nu)


small_mu = st.lists(st.integers(0, 2), min_size=1, max_size=3).map(tuple).filter(
    lambda m: 0 < sum(m) <= 4)


@given(small_mu, st.integers(0, 2), st.integers(0, 3), st.data())
def test_tail_dependence_facts(mu, k, extra, data):
    m = k + extra
    n = len(mu)
    fills = list(enumerate_nonattacking(mu + (0,) * k, n + k))
    assume(fills)
    F = data.draw(st.sampled_from(fills))
    Fm = F + ((),) * (m - k)
    a = hhl_stats(mu + (0,) * k, F)
    b = hhl_stats(mu + (0,) * m, Fm)
    nz = sum(1 for x in mu if x)
    assert b["maj"] == a["maj"]
    assert b["coinv"] == a["coinv"]
    assert b["inv"] == a["inv"] + nz * (m - k)
    assert b["Inv"] == a["Inv"] + (n + k) * (m - k) + comb(m - k, 2)
