import pytest
from hypothesis import given, strategies as st

from macdlab.combinatorics import partitions, partitions_upto
from macdlab.linalg import rank_symbolic
from macdlab.qt_field import ONE, q, t
from macdlab.symfunc import (
    Alphabet, SymFunc, dual_Q, e, exp_series, h, hall_littlewood_P, hl_classical_P,
    hl_symmetrizer, jing, jing_kernel, m, macdonald_P, p, parse_symfunc, perp,
    plethysm, qt_pairing, schur, serialize, v_lambda,
)


def P_hl(*lam):
    return hall_littlewood_P(lam)


def test_basis_changes():
    assert h(1) == m(1)
    for n in range(1, 6):
        assert h(n) == sum((m(*lam) for lam in partitions(n)), SymFunc.zero())
    assert p(2) == m(2)
    assert (e(2) - m(1, 1)).is_zero()


@pytest.mark.parametrize("basis", ["m", "e", "h", "s", "p"])
def test_basis_round_trip(basis):
    for lam in partitions_upto(4):
        F = SymFunc.basis_element(basis, lam)
        assert F.to("m").to(basis).to("p") == F
        assert F.to("m").to(basis).terms == {lam: ONE} or not lam


def test_scalar_plethysm():
    out = plethysm(p(3), Alphabet.scalar(1 + 5 * t + q * t ** 2))
    assert list(out) == [()]
    assert out[()] == SymFunc.one() * (1 + 5 * t ** 3 + q ** 3 * t ** 6)
    assert p(3).evaluate(1 + 5 * t + q * t ** 2) == 1 + 5 * t ** 3 + q ** 3 * t ** 6


def test_identity_alphabet():
    F = schur((2, 1)) + h(3) * q
    out = plethysm(F, Alphabet.X())
    assert list(out) == [()] and out[()] == F


def test_schur_two_at_one_minus_t():
    lhs = schur((2,)).scale_alphabet(1 - t)
    rhs = (p(2) * (1 - t ** 2) + p(1, 1) * (1 - t) ** 2) * (ONE / 2)
    assert lhs == rhs


def test_perp_examples():
    assert perp(p(1), "e", 1) == SymFunc.one()
    assert perp(h(2) * h(1), "e", 4).is_zero()
    assert perp(h(2), "h", 1) == h(1)


def test_jing_on_one():
    for n in range(5):
        assert jing(n, SymFunc.one()) == h(n).scale_alphabet(1 - t)
        assert P_hl(n) == h(n).scale_alphabet(1 - t) if n else P_hl() == SymFunc.one()


def test_jing_creates_hall_littlewood():
    for lam in partitions_upto(4):
        for n in range(lam[0] if lam else 0, 4):
            assert jing(n, hall_littlewood_P(lam)) == hall_littlewood_P((n,) + lam)


def test_b0_single_columns():
    # B_0 P_lam = t^{l(lam)} P_lam holds on columns only
    for k in range(1, 5):
        lam = (1,) * k
        assert jing(0, hall_littlewood_P(lam)) == hall_littlewood_P(lam) * t ** k


def test_b0_counterexample_two():
    P2 = hall_littlewood_P((2,))
    got = jing(0, P2)
    assert got != P2 * t
    assert got == P2 * (1 - t + t ** 2) - p(1, 1) * (1 - t) ** 3


def test_b0_fails_off_columns():
    for d in range(2, 6):
        for lam in partitions(d):
            if lam[0] > 1:
                assert jing(0, hall_littlewood_P(lam)) != hall_littlewood_P(lam) * t ** len(lam)


def test_lowering_resolution_of_identity():
    # sum_i B_i h_i^perp = id
    for lam in partitions_upto(4):
        F = SymFunc.basis_element("m", lam)
        acc = SymFunc.zero()
        for i in range(sum(lam) + 1):
            acc = acc + jing(i, perp(F, "h", i))
        assert acc == F


def test_hall_littlewood_small():
    assert P_hl() == SymFunc.one()
    assert hl_classical_P((1, 1)) == e(2)
    assert hl_classical_P((2,)).coeff((2,), "m") == ONE


def test_symmetrizer_oracle_small():
    for lam in partitions_upto(4):
        if lam:
            assert hl_symmetrizer(lam) == hl_classical_P(lam)
            assert dual_Q(lam) == hall_littlewood_P(lam)


def test_hl_basis_independent():
    for d in range(1, 7):
        lams = partitions(d)
        cols = [hall_littlewood_P(lam).to("m").terms for lam in lams]
        rows = [{j: c[mu] for j, c in enumerate(cols) if mu in c} for mu in lams]
        assert rank_symbolic(rows, list(range(len(lams)))) == len(lams)


def test_macdonald_small():
    assert macdonald_P((1,)) == m(1)
    for lam in partitions_upto(4):
        if lam:
            P = macdonald_P(lam)
            assert P.coeff(lam, "m") == ONE
            assert P.map_coeffs(lambda c: c.subs(qv=t)) == schur(lam)


def test_macdonald_orthogonal():
    for d in (2, 3):
        Ps = [macdonald_P(lam) for lam in partitions(d)]
        for i in range(len(Ps)):
            for j in range(i):
                assert qt_pairing(Ps[i], Ps[j]).is_zero()


def test_exp_additivity():
    A = lambda k: {(k,): 1 - t ** k}
    B = lambda k: {(k,): q ** k}
    AB = lambda k: {(k,): 1 - t ** k + q ** k}
    cap = 4
    ea, eb, eab = exp_series(A, cap), exp_series(B, cap), exp_series(AB, cap)
    for n in range(cap + 1):
        conv = SymFunc.zero()
        for j in range(n + 1):
            conv = conv + SymFunc._fast(dict(ea[j])) * SymFunc._fast(dict(eb[n - j]))
        assert conv == SymFunc._fast(dict(eab[n]))


lams = st.sampled_from(partitions_upto(4))


@given(st.integers(0, 5), lams, st.sampled_from(["m", "s", "e", "p"]))
def test_jing_two_routes(n, lam, basis):
    F = SymFunc.basis_element(basis, lam)
    G = jing(n, F)
    assert G == jing_kernel(n, F)
    assert all(sum(k) == n + sum(lam) for k in G._p())


@given(lams, lams)
def test_serialize_round_trip(a, b):
    F = hall_littlewood_P(a) + macdonald_P(b) * q if b else hall_littlewood_P(a)
    for basis in ("m", "p", "s"):
        assert parse_symfunc(serialize(F, basis)) == F


def test_v_lambda():
    assert v_lambda((2, 1, 1)) == 1 + t
    assert v_lambda((1, 1, 1)) == (1 + t) * (1 + t + t ** 2)
