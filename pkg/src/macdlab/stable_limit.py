"""Stable-limit non-symmetric Macdonald functions and their spectral data.

``E_tilde(mu)`` is assembled from tail-constrained non-attacking fillings
with the stable coefficient (row-1 factors collapse to ``1 - t``).
``E_tilde_pair`` lowers it, or alternatively applies Jing operators to the
tail monomials filling by filling.  The limit Cherednik operators and
``Psi_{p1}`` act diagonally through ``expand_in_stable_basis``; the finite
rank counterparts are exposed so every limit can be certified by
``verify_claimed_limit`` instead of being extrapolated.
"""

import math
import random
from fractions import Fraction
from functools import lru_cache

from .almost_sym import (
    AlmostSym, act_T, lift, lower, omega_star, omega_tilde, act_X,
    partial_symmetrize, to_full, truncate_pi, widen,
)
from .combinatorics import (
    beta, enumerate_nonattacking, filling_weight, partitions,
    partitions_upto, sorting_chain, weak_compositions,
)
from .finite_daha import (
    E_hhl, FinitePoly, Y, deformed_Y, epsilon_kn,
)
from .linalg import solve
from .qt_field import ONE, ZERO, RatQT, SpecializationError, specialize, t
from .symfunc import SymFunc, jing_m, macdonald_P, v_lambda

__all__ = [
    "composition_weight", "stable_weight", "kappa", "gamma", "E_tilde",
    "E_tail_finite", "E_tilde_pair", "E_tilde_pair_jing", "E_tilde_pair_finite",
    "A_lambda", "A_lambda_oracle", "stable_basis", "expand_in_stable_basis",
    "reconstruct", "limit_cherednik", "deformed_Y_finite", "verify_claimed_limit",
    "psi_p1", "psi_p1_diagonal", "psi_F_diagonal", "psi_finite", "recurrences",
    "nonreduced_ratio", "is_reduced",
]

OMT = 1 - t


def is_reduced(mu):
    return not mu or mu[-1] != 0


def composition_weight(mu):
    """alpha~_mu(i) for i <= len(mu): q^{mu_i} t^{n+1-beta_mu(i)}, or 0 when mu_i = 0."""
    mu = tuple(mu)
    n = len(mu)
    return tuple(RatQT.monomial(m, n + 1 - b) if m else ZERO for m, b in zip(mu, beta(mu)))


def stable_weight(mu, lam=()):
    """Weight of E~_(mu|lam); entries past len(mu) are 0."""
    mu, lam = tuple(mu), tuple(lam)
    return composition_weight(mu + lam)[:len(mu)]


def kappa(mu):
    """Psi_{p1} eigenvalue attached to a composition (invariant under permutation and 0-padding)."""
    mu = tuple(mu)
    n = len(mu)
    nz = sum(1 for m in mu if m)
    acc = t ** (1 + nz) / OMT
    for m, b in zip(mu, beta(mu)):
        if m:
            acc = acc + RatQT.monomial(m, n + 1 - b)
    return acc


@lru_cache(maxsize=None)
def _gamma(mu):
    base, steps = sorting_chain(mu)
    g = ONE
    cur = list(base)
    for i in steps:
        w = composition_weight(cur)
        g = g * (w[i - 1] - t * w[i]) / (w[i - 1] - w[i])
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return g


def gamma(mu):
    """Scalar with sigma~(E~_mu) = gamma_mu * A_{sort(mu)}; 1 on partitions."""
    return _gamma(tuple(mu))


# -- E~ from fillings ------------------------------------------------------------

def _tail_sum(mu, row1, m=0, literal=False):
    mu = tuple(mu)
    n = len(mu)
    terms = {}
    for nu in partitions_upto(sum(mu)):
        padded = mu + (0,) * len(nu)
        N = n + len(nu)
        # row-1 arms in the padded diagram already count len(nu) of the m zeros
        shift = m if literal else m - len(nu)
        for F in enumerate_nonattacking(padded, N, tail=nu):
            expo, c = filling_weight(padded, F, N, row1=row1, shift=shift)
            key = (expo[:n], nu)
            s = terms[key] + c if key in terms else c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
    return AlmostSym._fast(n, terms)


@lru_cache(maxsize=None)
def _E_tilde(mu):
    return _tail_sum(mu, "stable")


def E_tilde(mu):
    """E~_mu at window len(mu)."""
    return _E_tilde(tuple(mu))


def E_tail_finite(mu, m, literal=False):
    """E_{mu*0^m} from the tail expansion with the finite row-1 factors.

    Row-1 arms are taken in the unpadded diagram plus m.  ``literal=True``
    instead adds m to the arm measured in mu*0^len(nu), which double counts
    the padding and disagrees with direct HHL (first at mu=(0,2), m=1).
    """
    mu = tuple(mu)
    return truncate_pi(_tail_sum(mu, "shift", m, literal), len(mu) + m)


@lru_cache(maxsize=None)
def _E_pair(mu, lam):
    return partial_symmetrize(len(mu), E_tilde(mu + lam))


def E_tilde_pair(mu, lam=()):
    """E~_(mu|lam) by lowering E~_{mu*lam} down to window len(mu)."""
    return _E_pair(tuple(mu), tuple(lam))


@lru_cache(maxsize=None)
def _jing_chain(bs, nu):
    """B_{b_1} ... B_{b_r}(m_nu) as an m-basis dict (B_{b_r} applied first)."""
    cur = {nu: ONE}
    for b in reversed(bs):
        nxt = {}
        for lam, c in cur.items():
            for mu, v in jing_m(b, lam).items():
                x = c * v
                nxt[mu] = nxt[mu] + x if mu in nxt else x
        cur = {k: v for k, v in nxt.items() if not v.is_zero()}
    return cur


@lru_cache(maxsize=None)
def _E_pair_jing(mu, lam):
    k, r = len(mu), len(lam)
    ml = mu + lam
    terms = {}
    for nu in partitions_upto(sum(ml)):
        padded = ml + (0,) * len(nu)
        N = k + r + len(nu)
        for F in enumerate_nonattacking(padded, N, tail=nu):
            expo, c = filling_weight(padded, F, N, row1="stable")
            a = expo[:k]
            for tail, v in _jing_chain(expo[k:k + r], nu).items():
                key = (a, tail)
                x = terms.get(key, ZERO) + c * v
                if x.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = x
    return AlmostSym._fast(k, terms)


def E_tilde_pair_jing(mu, lam=()):
    """E~_(mu|lam) from the filling formula with Jing operators on m_nu."""
    return _E_pair_jing(tuple(mu), tuple(lam))


def E_tilde_pair_finite(mu, lam, m):
    """epsilon_{len(mu)}^(m)(E_{mu*lam*0^...}) in m variables."""
    mu, lam = tuple(mu), tuple(lam)
    base = mu + lam
    if m < len(base) or m <= len(mu):
        raise ValueError("m too small")
    return epsilon_kn(len(mu), m, E_hhl(base + (0,) * (m - len(base))))


def A_lambda(lam):
    """A_lam = E~_(empty|lam) as a symmetric function."""
    f = E_tilde_pair((), lam)
    return SymFunc({l: c for (_, l), c in f.terms.items()}, "m")


def A_lambda_oracle(lam):
    """(1-t)^l v_lam(t) P_lam[X; 1/q, t] from Gram-Schmidt."""
    lam = tuple(lam)
    P = macdonald_P(lam).map_coeffs(lambda c: c.invert_q())
    return P * (OMT ** len(lam) * v_lambda(lam))


# -- the stable basis ----------------------------------------------------------------

def stable_basis(d, k):
    """All (mu, lam) with mu reduced, len(mu) <= k, |mu| + |lam| = d."""
    out = []
    for L in range(k + 1):
        for s in range(d + 1):
            for mu in weak_compositions(s, L):
                if is_reduced(mu):
                    for lam in partitions(d - s):
                        out.append((mu, lam))
    return out


def _columns(d, k):
    cols = {}
    for idx in stable_basis(d, k):
        cols[idx] = widen(E_tilde_pair(*idx), k).terms
    return cols


def _rows(cols):
    rows = {}
    for idx, terms in cols.items():
        for key, c in terms.items():
            rows.setdefault(key, {})[idx] = c
    return rows


def _spec_solve(rows, rhs, order, rng, tries=6):
    for _ in range(tries):
        q0 = Fraction(rng.randint(2, 89), rng.randint(1, 11))
        t0 = Fraction(rng.randint(2, 89), rng.randint(1, 11))
        try:
            srows = [{c: specialize(v, q0, t0) for c, v in r.items()} for r in rows]
            srhs = [specialize(v, q0, t0) for v in rhs]
            return solve(srows, srhs, order)
        except (SpecializationError, ValueError):
            continue
    raise ArithmeticError("no regular specialization found")


def expand_in_stable_basis(f, seed=0):
    """Coefficients of a homogeneous f in the E~_(mu|lam) basis of its window."""
    if f.is_zero():
        return {}
    degs = {sum(a) + sum(l) for a, l in f.terms}
    if len(degs) != 1:
        raise ValueError("expand_in_stable_basis needs a homogeneous input")
    d, k = degs.pop(), f.k
    cols = _cached_columns(d, k)
    rowmap = _rows(cols)
    keys = list(rowmap.keys() | f.terms.keys())
    rows = [rowmap.get(key, {}) for key in keys]
    rhs = [f.terms.get(key, ZERO) for key in keys]
    order = list(cols)
    rng = random.Random(seed)
    support = set()
    for _ in range(2):
        sol = _spec_solve(rows, rhs, order, rng)
        support |= {c for c, v in sol.items() if v != 0}
    sub = [c for c in order if c in support]
    srows = [{c: v for c, v in r.items() if c in support} for r in rows]
    coeffs = solve(srows, rhs, sub)
    if reconstruct(coeffs, k) != f:
        raise ArithmeticError("stable-basis expansion failed to reconstruct the input")
    return coeffs


_COLS = {}


def _cached_columns(d, k):
    if (d, k) not in _COLS:
        _COLS[(d, k)] = _columns(d, k)
    return _COLS[(d, k)]


def reconstruct(coeffs, k):
    out = AlmostSym.zero(k)
    for idx, c in coeffs.items():
        out = out + E_tilde_pair(*idx) * c
    return widen(out, max(out.k, k))


def _homogeneous_parts(f):
    parts = {}
    for (a, l), c in f.terms.items():
        parts.setdefault(sum(a) + sum(l), {})[(a, l)] = c
    return [AlmostSym._fast(f.k, d) for _, d in sorted(parts.items())]


def _diagonal(f, eig):
    out = AlmostSym.zero(f.k)
    for part in _homogeneous_parts(f):
        for idx, c in expand_in_stable_basis(part).items():
            e = eig(idx)
            if not e.is_zero():
                out = out + E_tilde_pair(*idx) * (c * e)
    return widen(out, max(out.k, f.k))


def limit_cherednik(i, f):
    """The limit operator Y_i, acting diagonally with eigenvalues alpha~_(mu|lam)(i)."""
    def eig(idx):
        w = stable_weight(*idx)
        return w[i - 1] if i <= len(w) else ZERO
    return _diagonal(f, eig)


def deformed_Y_finite(i, f, m):
    """Y~_i^(m)(pi_m f)."""
    return deformed_Y(i, truncate_pi(f, m))


def psi_F_diagonal(F, f):
    """Psi_F: eigenvalue F[kappa_{mu*lam}] on E~_(mu|lam)."""
    return _diagonal(f, lambda idx: F.evaluate(kappa(idx[0] + idx[1])))


def psi_p1_diagonal(f):
    return _diagonal(f, lambda idx: kappa(idx[0] + idx[1]))


def psi_finite(f, m):
    """t^m (Y_1 + ... + Y_m) applied to pi_m f."""
    g = truncate_pi(f, m)
    acc = FinitePoly.zero(m)
    for i in range(1, m + 1):
        acc = acc + Y(i, g)
    return acc * t ** m


# -- Psi_{p1} from the convergence proof ----------------------------------------------

def _psi_sorted(lam, F, k):
    """Psi(x^lam F[X]) for a partition lam of length k (window k)."""
    g = AlmostSym.x(lam) * AlmostSym.sym(F, k)
    acc = AlmostSym.zero(k)
    for i in range(1, k + 1):
        acc = acc + limit_cherednik(i, g)
    h = omega_star(g)
    for j in range(1, k + 1):
        h = act_T(j, h)
    return acc + partial_symmetrize(k, h) * (t / OMT)


def psi_p1(f):
    """Psi_{p1} on x^a F[X] terms: sum of limit Y's plus the symmetrized omega* tail;
    unsorted exponents are reduced through T_i, which commutes with Psi."""
    out = AlmostSym.zero(f.k)
    for a, F in to_full(f).items():
        memo = {}
        out = out + _psi_vec(a, F, memo)
    return widen(out, max(out.k, f.k))


def _psi_vec(a, F, memo):
    if a in memo:
        return memo[a]
    i = next((j for j in range(len(a) - 1) if a[j] < a[j + 1]), None)
    if i is None:
        lam = tuple(x for x in a if x)
        res = _psi_sorted(lam, F, len(lam))
    else:
        lo, hi = a[i], a[i + 1]
        b = a[:i] + (hi, lo) + a[i + 2:]
        res = act_T(i + 1, _psi_vec(b, F, memo))
        for g in range(lo + 1, hi + 1):
            bg = a[:i] + (g, hi + lo - g) + a[i + 2:]
            res = res - _psi_vec(bg, F, memo) * OMT
    memo[a] = res
    return res


# -- claimed limits --------------------------------------------------------------------

def verify_claimed_limit(gen, claimed, m_range, C=None, label=""):
    """Check lift(gen(m)) - claimed has t-adic valuation >= m - C for every m.

    ``gen(m)`` returns a FinitePoly in m variables, symmetric past the claimed
    window.  The report records the slack, each valuation, the smallest
    margin and whether the valuations are non-decreasing in m.
    """
    k = claimed.k
    deg = claimed.degree()
    if C is None:
        C = k + deg
    vals, margins = [], []
    witness = None
    for m in m_range:
        diff = lift(gen(m), k) - claimed
        v = min((c.t_adic_val() for c in diff.terms.values()), default=math.inf)
        vals.append(v)
        margins.append(v - (m - C))
        if v < m - C and witness is None:
            key, c = min(diff.terms.items(), key=lambda kv: kv[1].t_adic_val())
            witness = {"m": m, "x": list(key[0]), "tail": list(key[1]), "coeff": str(c)}
    monotone = all(b >= a for a, b in zip(vals, vals[1:]))
    ok = witness is None and monotone
    rep = {
        "instance": label, "C": C, "m": list(m_range),
        "valuations": [None if v == math.inf else v for v in vals],
        "min_valuation_margin": None if min(margins) == math.inf else min(margins),
        "monotone": monotone, "status": "pass" if ok else "fail",
    }
    if witness:
        rep["witness"] = witness
    return rep


# -- recurrences ----------------------------------------------------------------------------

def _reduced_upto(size, maxlen):
    return [mu for L in range(maxlen + 1) for s in range(size + 1)
            for mu in weak_compositions(s, L) if is_reduced(mu)]


def recurrences(max_size=3, max_len=3):
    """Instances of the lowering, raising, T_r and Knop-Sahi identities."""
    reps = []
    pairs = [(mu, lam) for mu in _reduced_upto(max_size, max_len)
             for lam in partitions_upto(max_size - sum(mu))]
    for mu, lam in pairs:
        r = len(mu)
        # (a) lowering the last non-symmetric variable
        if r >= 1 and (not lam or mu[-1] >= lam[0]) and (r == 1 or mu[-2] != 0):
            lhs = lower(r, E_tilde_pair(mu, lam))
            rhs = E_tilde_pair(mu[:-1], (mu[-1],) + lam)
            reps.append(_rep("lowering", mu, lam, lhs == rhs))
        # (b) raising by an intertwiner
        w = composition_weight(mu + lam)
        for i in range(1, r):
            if mu[i - 1] > mu[i]:
                smu = mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]
                if not is_reduced(smu):
                    continue
                f = E_tilde_pair(mu, lam)
                lhs = act_T(i, f) + f * (OMT * w[i] / (w[i - 1] - w[i]))
                reps.append(_rep("raising", mu, lam, lhs == E_tilde_pair(smu, lam), i=i))
        # (c) T_r inserts a zero before the last part
        if r >= 1:
            ins = mu[:-1] + (0, mu[-1])
            c = gamma(mu + lam) / gamma(ins + lam)
            ok = act_T(r, E_tilde_pair(mu, lam)) == E_tilde_pair(ins, lam) * c
            reps.append(_rep("T_r", mu, lam, ok))
    # (d) stable Knop-Sahi for all compositions with |1*mu| <= max_size
    for L in range(max_len + 1):
        for s in range(max_size):
            for mu in weak_compositions(s, L):
                E = E_tilde(mu)
                nz = sum(1 for x in mu if x)
                a = omega_tilde(E) * t ** nz
                b = act_X(1, omega_star(E))
                c = widen(E_tilde((1,) + mu), b.k)
                reps.append(_rep("knop-sahi", mu, (), a == b and b == c))
    return reps


def _rep(kind, mu, lam, ok, **extra):
    inst = {"identity": kind, "mu": list(mu), "lambda": list(lam)}
    inst.update(extra)
    return {"suite": "recurrences", "instance": inst, "status": "pass" if ok else "fail"}


def nonreduced_ratio(mu, lam):
    """E~_(mu*0|lam) / E~_(mu|lam) when proportional, else None."""
    mu, lam = tuple(mu), tuple(lam)
    big = partial_symmetrize(len(mu) + 1, E_tilde(mu + (0,) + lam))
    small = widen(E_tilde_pair(mu, lam), len(mu) + 1)
    if small.is_zero():
        return None
    key = next(iter(small.terms))
    ratio = big.coeff(*key) / small.terms[key]
    return ratio if big == small * ratio else None
