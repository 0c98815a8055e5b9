# %% [markdown]
# The stable basis and the spectrum of the p1 operator.
#
# For each degree d and window k the stable E's form a basis of the block, and
# the joint labels (weights, kappa) tell them apart.

# %%
from macdlab.almost_sym import AlmostSym, serialize
from macdlab.stable_limit import A_lambda, E_tilde_pair, kappa, psi_p1, stable_basis, stable_weight
from macdlab.suites import run_suite

# %%
for rep in run_suite("basis-rank", {"degree": 3, "n": 2}):
    inst = rep["instance"]
    print("d=%d k=%d  size=%d  rank=%d  labels distinct: %s"
          % (inst["degree"], inst["window"], rep["size"], rep["rank"], rep["labels_distinct"]))

# %% [markdown]
# ## Eigenvalues
# kappa of a composition is sum over parts q^{mu_i} t^i, plus the geometric
# series from the infinitely many zero parts.

# %%
for mu, lam in stable_basis(2, 2):
    E = E_tilde_pair(mu, lam)
    ev = kappa(mu + lam)
    assert psi_p1(E) == E * ev
    print("(%s|%s)  weights=%s  kappa=%s" % (mu, lam, [str(w) for w in stable_weight(mu, lam)], ev))

# %% [markdown]
# ## Symmetric eigenfunctions

# %%
for lam in [(1,), (2,), (1, 1)]:
    A = AlmostSym.sym(A_lambda(lam), 0)
    assert psi_p1(A) == A * kappa(lam)
    print("A_%s = %s" % (lam, serialize(A, "text", basis="HL")))
