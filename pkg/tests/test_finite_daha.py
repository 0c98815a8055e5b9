import pytest
from hypothesis import given, strategies as st

from macdlab.almost_sym import AlmostSym, truncate_pi
from macdlab.combinatorics import bruhat_leq, compositions_upto, weak_compositions
from macdlab.finite_daha import (
    E_eigensolve, E_hhl, E_intertwiner, FinitePoly, T, T_inv, Y, Y_literal,
    alpha_finite, daha_relations, deformed_Y, e_k_poly, epsilon_kn,
    epsilon_kn_defining, epsilon_omega, intertwiner_step, omega, omega_inv,
    parse_finitepoly, serialize,
)
from macdlab.qt_field import ONE, q, qfact, t
from macdlab.symfunc import hl_classical_P, v_lambda


def mono(*a):
    return FinitePoly.monomial(tuple(a))


@st.composite
def finite_polys(draw, n=3, max_deg=3):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_deg)] * n).filter(lambda a: sum(a) <= max_deg),
        st.sampled_from([ONE, -ONE, q, t, 1 - t, q / (1 - t)]), min_size=1, max_size=4))
    return FinitePoly(n, terms)


def test_T_examples():
    assert T(1, FinitePoly.one(3)) == FinitePoly.one(3)
    assert T(1, mono(1, 0)) == mono(0, 1) + mono(1, 0) * (1 - t)


@given(finite_polys(), st.integers(1, 2))
def test_T_inverse(f, i):
    assert T(i, T_inv(i, f)) == f
    assert T_inv(i, T(i, f)) == f


def test_omega():
    assert omega(mono(1, 0, 0)) == mono(0, 0, 1) * q ** -1
    assert omega(FinitePoly.one(3)) == FinitePoly.one(3)
    # f(x2, ..., xn, q x1)
    assert omega_inv(mono(1, 0, 0)) == mono(0, 1, 0)
    assert omega_inv(mono(2, 0, 1)) == mono(1, 2, 0) * q


@given(finite_polys())
def test_omega_inverse(f):
    assert omega(omega_inv(f)) == f


def test_Y_on_one_fixes_constant():
    for n in (1, 2, 3, 4):
        one = FinitePoly.one(n)
        w = alpha_finite((0,) * n)
        for i in range(1, n + 1):
            assert Y(i, one) == one * w[i - 1]
            assert w[i - 1] == t ** (1 - i)


@given(finite_polys(), st.integers(1, 3))
def test_Y_matches_literal_word(f, i):
    assert Y(i, f) == Y_literal(i, f)


@given(finite_polys(max_deg=2), st.integers(1, 3), st.integers(1, 3))
def test_Y_commute(f, i, j):
    assert Y(i, Y(j, f)) == Y(j, Y(i, f))


SMALL = [mu for L in (1, 2, 3) for mu in compositions_upto(3, L)]


@pytest.mark.parametrize("mu", SMALL, ids=str)
def test_three_routes_and_eigenvalues(mu):
    E = E_hhl(mu)
    assert E == E_eigensolve(mu) == E_intertwiner(mu)
    assert E_eigensolve(mu, probe=True) == E
    for i, w in enumerate(alpha_finite(mu), 1):
        assert Y(i, E) == E * w
    assert E.terms[tuple(mu)] == ONE
    assert all(bruhat_leq(a, mu) for a in E.terms)


def test_small_E_values():
    for n in (1, 2, 3):
        assert E_hhl((0,) * n) == FinitePoly.one(n)
    assert E_hhl((1, 0)) == mono(1, 0)
    c = (1 - t) / (1 - t / q)
    assert E_hhl((0, 1)) == mono(0, 1) + mono(1, 0) * c
    assert set(E_hhl((0, 1)).terms) == {(0, 1), (1, 0)}


def test_intertwiner_one_step():
    assert intertwiner_step(1, E_hhl((1, 0)), (1, 0)) == E_hhl((0, 1))
    assert E_intertwiner((2, 1, 0)) == E_eigensolve((2, 1, 0))


def test_daha_relations_degree_four():
    for n in (2, 3):
        assert all(r["status"] == "pass" for r in daha_relations(n, 4))


def test_symmetric_functions_commute_with_T():
    n = 3
    for a in [x for d in range(3) for x in weak_compositions(d, n)]:
        f = mono(*a)
        for i in (1, 2):
            for k in (1, 2, 3):
                ek = e_k_poly(k, n)
                assert T(i, ek * f) == ek * T(i, f)
            p1Y = lambda g: Y(1, g) + Y(2, g) + Y(3, g)
            assert T(i, p1Y(f)) == p1Y(T(i, f))


def _P_in_n(lam, n):
    return truncate_pi(AlmostSym.sym(hl_classical_P(lam), 0), n)


@pytest.mark.parametrize("lam,n", [((1,), 2), ((1,), 3), ((2,), 2), ((1, 1), 3), ((2, 1), 3), ((2,), 3), ((2, 1), 4)])
def test_symmetrizer_on_dominant_monomial(lam, n):
    k = len(lam)
    got = epsilon_kn(0, n, mono(*(lam + (0,) * (n - k))))
    assert got == _P_in_n(lam, n) * (qfact(n - k) / qfact(n) * v_lambda(lam))


@pytest.mark.parametrize("k,n", [(0, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4)])
def test_symmetrizer_routes(k, n):
    for a in [(1, 0, 0, 0)[:n], (0, 2, 1, 0)[:n], (0, 1, 0, 1)[:n]]:
        f = mono(*a)
        e1 = epsilon_kn(k, n, f)
        assert e1 == epsilon_kn_defining(k, n, f)
        assert epsilon_kn(k, n, e1) == e1
        for i in range(k + 1, n):
            assert T(i, e1) == e1
        if k == 0 and n <= 3:
            assert e1 == epsilon_omega(f)


def test_deformed_Y_on_x1_multiples():
    n = 3
    for a in [(1, 0, 0), (1, 1, 0), (2, 0, 1)]:
        f = mono(*a)
        assert deformed_Y(1, f) == Y(1, f) * t ** n


@pytest.mark.parametrize("mu,m", [((1,), 1), ((1,), 2), ((2, 1), 1), ((1, 1), 2), ((1, 2), 1)])
def test_deformed_Y_weight_all_nonzero(mu, m):
    full = mu + (0,) * m
    E = E_hhl(full)
    w = alpha_finite(full)
    N = len(full)
    for i in range(1, len(mu) + 1):
        assert deformed_Y(i, E) == E * (w[i - 1] * t ** N)


def test_deformed_Y_do_not_commute():
    f = mono(2, 0)
    assert deformed_Y(1, deformed_Y(2, f)) != deformed_Y(2, deformed_Y(1, f))
    # degree one is too small to see it
    for a in weak_compositions(1, 3):
        g = FinitePoly.monomial(a)
        assert deformed_Y(1, deformed_Y(2, g)) == deformed_Y(2, deformed_Y(1, g))


@given(finite_polys())
def test_serialize_round_trip(f):
    assert parse_finitepoly(serialize(f, "lines"), f.n) == f


def test_text_rendering():
    assert serialize(E_hhl((1, 1, 1)), "text") == "x1*x2*x3"
    assert serialize(E_hhl((0, 1)), "text") == "((q - q*t)/(q - t))*x1 + x2"
