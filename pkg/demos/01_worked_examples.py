# %% [markdown]
# Finite and stable nonsymmetric Macdonald polynomials, small cases.
#
# Run with `python3 demos/01_worked_examples.py`.

# %%
from macdlab.almost_sym import serialize
from macdlab.combinatorics import filling_weight, hhl_stats
from macdlab.finite_daha import E_eigensolve, E_hhl, E_intertwiner, Y, alpha_finite
from macdlab.finite_daha import serialize as fp_text
from macdlab.stable_limit import E_tilde_pair, kappa, stable_weight

# %% [markdown]
# ## A filling and its statistics
# Columns are listed bottom to top.

# %%
shape = (3, 2, 0, 1, 0, 0)
filling = ((1, 4, 6), (2, 1), (), (3,), (), ())
st = hhl_stats(shape, filling)
print("maj=%(maj)d  |Inv|=%(Inv)d  inv=%(inv)d  coinv=%(coinv)d" % st)
expo, coeff = filling_weight(shape, filling, 6)
print("x^%s with coefficient %s" % (expo, coeff))

# %% [markdown]
# ## Three constructions of E_mu
# The combinatorial formula, the Y-eigenvector solve and the intertwiner chain
# land on the same polynomial.

# %%
for mu in [(0, 1), (1, 0, 2), (0, 2, 1)]:
    a, b, c = E_hhl(mu), E_eigensolve(mu), E_intertwiner(mu)
    print(mu, "agree" if a == b == c else "DISAGREE")
    print("   ", fp_text(a, "text"))
    for i, w in enumerate(alpha_finite(mu), 1):
        assert Y(i, a) == a * w
    print("    Y-weights:", ", ".join(map(str, alpha_finite(mu))))

# %% [markdown]
# ## Stable limits
# Written in the Hall-Littlewood basis of the tail variables.

# %%
for mu, lam in [((), (2,)), ((2,), ()), ((1, 1, 1), ()), ((1, 1), (1,)), ((1,), (1, 1))]:
    E = E_tilde_pair(mu, lam)
    w = ", ".join([str(a) for a in stable_weight(mu, lam)] or ["0"])
    print("(%s|%s)" % (mu, lam))
    print("    E~     =", serialize(E, "text", basis="HL"))
    print("    weight =", w, "  kappa =", kappa(mu + lam))
