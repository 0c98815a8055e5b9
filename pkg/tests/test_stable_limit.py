import pytest

from macdlab.almost_sym import (
    AlmostSym, act_T, lower, partial_symmetrize, serialize,
)
from macdlab.combinatorics import partitions, partitions_upto, sort_partition, weak_compositions
from macdlab.finite_daha import E_hhl, FinitePoly, epsilon_kn
from macdlab.qt_field import ONE, q, t
from macdlab.stable_limit import (
    A_lambda, A_lambda_oracle, E_tail_finite, E_tilde, E_tilde_pair, E_tilde_pair_finite,
    E_tilde_pair_jing, composition_weight, expand_in_stable_basis, gamma, is_reduced,
    kappa, limit_cherednik, nonreduced_ratio, psi_F_diagonal, psi_p1, psi_p1_diagonal,
    recurrences, reconstruct, stable_basis, stable_weight, verify_claimed_limit,
)
from macdlab.symfunc import SymFunc, hall_littlewood_P, p, schur

x = AlmostSym.x
OMT = 1 - t
c2 = (1 / q) / (1 - t / q)


def P(lam, k):
    return AlmostSym.tail(hall_littlewood_P(lam), k)


def test_worked_examples():
    assert E_tilde((1, 1, 1)) == x((1, 1, 1))
    assert E_tilde((2,)) == x((2,)) + x((1,)) * P((1,), 1) * c2
    assert E_tilde_pair((), (2,)) == P((2,), 0) + P((1, 1), 0) * c2
    assert E_tilde_pair((1, 1), (1,)) == x((1, 1)) * P((1,), 2)
    assert E_tilde_pair((1,), (1, 1)) == x((1,)) * P((1, 1), 1)
    for n in (1, 2, 3):
        assert E_tilde((0,) * n) == AlmostSym.one(n)


def test_worked_weights():
    assert stable_weight((1, 1, 1)) == (q * t ** 3, q * t ** 2, q * t)
    assert stable_weight((2,)) == (q ** 2 * t,)
    assert stable_weight((), (2,)) == ()
    assert stable_weight((1, 1), (1,)) == (q * t ** 3, q * t ** 2)
    assert stable_weight((1,), (1, 1)) == (q * t ** 3,)


def test_display_in_hall_littlewood_basis():
    assert serialize(E_tilde((2,)), "text", basis="HL") == "x1^2 + (1/(q - t))*x1*P[1](x2+...)"
    assert serialize(E_tilde_pair((), (2,)), "text", basis="HL") == \
        "P[2](x1+...) + (1/(q - t))*P[1,1](x1+...)"


def test_A_small():
    assert A_lambda(()) == SymFunc.one()
    assert A_lambda((2,)) == hall_littlewood_P((2,)) + hall_littlewood_P((1, 1)) * c2
    for lam in partitions_upto(3):
        assert A_lambda(lam) == A_lambda_oracle(lam)


SMALL_MU = [mu for L in range(1, 4) for s in range(4) for mu in weak_compositions(s, L)]


@pytest.mark.parametrize("mu", SMALL_MU, ids=str)
def test_gamma(mu):
    g = gamma(mu)
    assert not g.is_zero()
    lhs = partial_symmetrize(0, E_tilde(mu))
    assert lhs == AlmostSym.sym(A_lambda(sort_partition(mu)), 0) * g
    if list(mu) == sorted(mu, reverse=True):
        assert g == ONE


def test_kappa():
    assert str(kappa(())) == "t/(1 - t)"
    for lam in partitions_upto(5):
        want = t ** (len(lam) + 1) / OMT
        for i, part in enumerate(lam, 1):
            want = want + q ** part * t ** i
        assert kappa(lam) == want
    values = [kappa(lam) for lam in partitions_upto(5)]
    assert len(set(values)) == len(values)
    assert kappa((0, 2, 0, 1)) == kappa((2, 1))


def test_expansion_examples():
    E = E_tilde_pair((1,), (1,))
    assert expand_in_stable_basis(E) == {((1,), (1,)): ONE}
    co = expand_in_stable_basis(x((1,)))
    assert set(co) <= {((1,), ()), ((), (1,))}
    assert reconstruct(co, 1) == x((1,))


@pytest.mark.parametrize("d,k", [(d, k) for d in range(4) for k in range(3)])
def test_dimension_count(d, k):
    expected = sum(len(partitions(d - s)) * sum(1 for mu in weak_compositions(s, L) if is_reduced(mu))
                   for L in range(k + 1) for s in range(d + 1))
    assert len(stable_basis(d, k)) == expected
    # one column per x^a m_lam with |a| + |lam| = d at window k
    assert expected == sum(len(weak_compositions(s, k)) * len(partitions(d - s)) for s in range(d + 1))


def test_limit_cherednik():
    F = AlmostSym.sym(schur((2, 1)), 0)
    assert limit_cherednik(1, F).is_zero()
    E2 = E_tilde((2,))
    assert limit_cherednik(1, E2) == E2 * (q ** 2 * t)
    for f in [x((1, 0)), x((0, 1)), x((1, 1)), x((2, 0)) + x((0, 1)) * P((1,), 2)]:
        assert limit_cherednik(1, limit_cherednik(2, f)) == limit_cherednik(2, limit_cherednik(1, f))


def test_claimed_limit_exact_for_partitions():
    for lam in [(1,), (2,), (2, 1)]:
        C = len(lam) + sum(lam)
        gen = lambda mm, lam=lam: E_hhl(lam + (0,) * (mm - len(lam)))
        rep = verify_claimed_limit(gen, E_tilde(lam), range(C, C + 3), C=C)
        assert rep["status"] == "pass" and rep["valuations"] == [None] * 3


def test_claimed_limit_grows_for_idempotents():
    lam = (2, 1)
    Q = AlmostSym.sym(hall_littlewood_P(lam), 0)
    gen = lambda mm: epsilon_kn(0, mm, FinitePoly.monomial(lam + (0,) * (mm - 2)))
    rep = verify_claimed_limit(gen, Q, range(3, 8))
    assert rep["status"] == "pass" and rep["monotone"]
    vals = rep["valuations"]
    assert vals[-1] > vals[0]


def test_claimed_limit_rejects_wrong_limit():
    lam = (2, 1)
    wrong = AlmostSym.sym(hall_littlewood_P(lam), 0) * (1 + q)
    gen = lambda mm: epsilon_kn(0, mm, FinitePoly.monomial(lam + (0,) * (mm - 2)))
    rep = verify_claimed_limit(gen, wrong, range(3, 7))
    assert rep["status"] == "fail" and "witness" in rep


def test_psi_small():
    one = AlmostSym.one(0)
    assert psi_p1(one) == one * (t / OMT)
    for f in [x((1,)), E_tilde_pair((1,), (1,)), x((0, 1))]:
        assert psi_F_diagonal(SymFunc.one(), f) == f
        assert psi_F_diagonal(p(1), f) == psi_p1(f) == psi_p1_diagonal(f)
        a = limit_cherednik(1, psi_p1(f))
        b = psi_p1(limit_cherednik(1, f))
        assert a == b


def test_psi_separates_equal_weights():
    # (1|1) and (1,0|...) style collisions: same Y-weight, different kappa
    a, b = ((1,), (1,)), ((1,), ())
    assert stable_weight(*a)[0] != stable_weight(*b)[0] or kappa(a[0] + a[1]) != kappa(b[0] + b[1])
    assert stable_weight((), (2,)) == stable_weight((), (1, 1)) == ()
    assert kappa((2,)) != kappa((1, 1))


def test_recurrence_examples():
    assert lower(2, E_tilde_pair((2, 1), ())) == E_tilde_pair((2,), (1,))
    reps = recurrences(3, 3)
    assert reps and all(r["status"] == "pass" for r in reps)
    kinds = {r["instance"]["identity"] for r in reps}
    assert kinds == {"lowering", "raising", "T_r", "knop-sahi"}
    # raising is skipped when s_i mu is not reduced, e.g. mu = (1, 0)... never reduced input
    assert not any(r["instance"]["identity"] == "raising" and r["instance"]["mu"] == [1, 0] for r in reps)


@pytest.mark.parametrize("mu", [mu for mu in SMALL_MU if len(mu) >= 2], ids=str)
def test_stable_intertwiner(mu):
    w = composition_weight(mu)
    for i in range(1, len(mu)):
        if mu[i - 1] > mu[i]:
            smu = mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]
            E = E_tilde(mu)
            lhs = act_T(i, E) + E * (OMT * w[i] / (w[i - 1] - w[i]))
            assert lhs == E_tilde(smu)


PAIRS = [(mu, lam) for d in range(5) for mu, lam in stable_basis(d, 3) if len(lam) <= 3]


@pytest.mark.parametrize("mu,lam", PAIRS, ids=str)
def test_pair_two_routes(mu, lam):
    assert E_tilde_pair(mu, lam) == E_tilde_pair_jing(mu, lam)


@pytest.mark.parametrize("mu,lam", [((1,), (1,)), ((), (2,)), ((0, 1), ()), ((2,), (1,))])
def test_pair_finite_route(mu, lam):
    g = E_tilde_pair(mu, lam)
    C = len(mu) + sum(mu) + sum(lam)
    rep = verify_claimed_limit(lambda mm: E_tilde_pair_finite(mu, lam, mm), g, range(C, C + 4), C=C)
    assert rep["status"] == "pass"


def test_tail_expansion_arm_convention():
    assert E_tail_finite((0, 2), 1) == E_hhl((0, 2, 0))
    assert E_tail_finite((0, 2), 1, literal=True) != E_hhl((0, 2, 0))
    for mu in [(1,), (2, 1), (0, 1)]:
        for mm in range(3):
            assert E_tail_finite(mu, mm) == E_hhl(mu + (0,) * mm)


@pytest.mark.parametrize("mu,lam", [((1,), ()), ((1,), (1,)), ((2, 1), ()), ((1,), (2,)), ((), (1,))])
def test_nonreduced_ratio(mu, lam):
    assert nonreduced_ratio(mu, lam) == ONE
