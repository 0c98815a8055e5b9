# %% [markdown]
# Certifying limits by t-adic valuation growth.
#
# Nothing here computes a limit.  A sequence g_m of finite polynomials is
# compared against a claimed limit g.  Every coefficient of g_m - g must have
# t-adic valuation at least m - C.

# %%
from macdlab.almost_sym import AlmostSym
from macdlab.finite_daha import E_hhl, FinitePoly, epsilon_kn
from macdlab.stable_limit import E_tilde, E_tilde_pair, E_tilde_pair_finite, psi_finite, psi_p1, verify_claimed_limit
from macdlab.symfunc import hall_littlewood_P


def show(label, rep):
    vals = ["inf" if v is None else str(v) for v in rep["valuations"]]
    print("%-28s C=%d  m=%s  val=%s  %s" % (label, rep["C"], rep["m"], vals, rep["status"]))


# %% [markdown]
# ## Exact agreement
# Padding a partition with zeros changes nothing once m is large.

# %%
for lam in [(1,), (2, 1), (3, 1)]:
    C = len(lam) + sum(lam)
    gen = lambda m, lam=lam: E_hhl(lam + (0,) * (m - len(lam)))
    show("E_{%s*0^m} -> E~" % (lam,), verify_claimed_limit(gen, E_tilde(lam), range(C, C + 4), C=C))

# %% [markdown]
# ## Idempotents
# Symmetrizing x^lam over m variables converges to the modified Hall-Littlewood
# function, with the error shrinking t-adically.

# %%
for lam in [(1,), (2,), (1, 1), (2, 1)]:
    claimed = AlmostSym.sym(hall_littlewood_P(lam), 0)
    gen = lambda m, lam=lam: epsilon_kn(0, m, FinitePoly.monomial(lam + (0,) * (m - len(lam))))
    C = len(lam) + sum(lam)
    show("eps(x^%s)" % (lam,), verify_claimed_limit(gen, claimed, range(C, C + 5), C=C))

# %% [markdown]
# ## Partial symmetrization and the p1 operator

# %%
for mu, lam in [((1,), (1,)), ((2,), ()), ((0, 1), ())]:
    C = len(mu) + sum(mu) + sum(lam)
    g = E_tilde_pair(mu, lam)
    gen = lambda m, mu=mu, lam=lam: E_tilde_pair_finite(mu, lam, m)
    show("E_(%s|%s) finite" % (mu, lam), verify_claimed_limit(gen, g, range(C, C + 4), C=C))
    gen = lambda m, g=g: psi_finite(g, m)
    show("Psi_p1 E_(%s|%s)" % (mu, lam), verify_claimed_limit(gen, psi_p1(g), range(C, C + 4), C=C))

# %% [markdown]
# A wrong claim is rejected with a witness coefficient.

# %%
wrong = AlmostSym.sym(hall_littlewood_P((2, 1)), 0) * 2
gen = lambda m: epsilon_kn(0, m, FinitePoly.monomial((2, 1) + (0,) * (m - 2)))
rep = verify_claimed_limit(gen, wrong, range(3, 6))
print(rep["status"], rep["witness"])
