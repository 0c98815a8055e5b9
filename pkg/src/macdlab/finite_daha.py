"""The polynomial representation of the rank-n double affine Hecke algebra.

Conventions, fixed by the eigenvalue identity ``Y_i E_mu = q^{mu_i}
t^{1-beta_mu(i)} E_mu``:

* ``T_i f = s_i f + (1-t) x_i (f - s_i f)/(x_i - x_{i+1})`` and
  ``T_i^{-1} = t^{-1}(T_i + t - 1)``;
* ``omega f = f(x_n/q, x_1, ..., x_{n-1})`` and its inverse
  ``f(x_2, ..., x_n, q x_1)``;
* operator words act right to left: ``Y_1 = omega^{-1} T_{n-1}^{-1} ... T_1^{-1}``
  applies ``T_1^{-1}`` first.
"""

import random
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .combinatorics import (
    beta, bruhat_leq, enumerate_nonattacking, filling_weight, sort_desc,
    sorting_chain, weak_compositions,
)
from .linalg import nullspace, rref
from .qt_field import RatQT, ONE, ZERO, q, t, qint, specialize

__all__ = [
    "FinitePoly", "s_i", "T", "T_inv", "X", "omega", "omega_inv", "Y",
    "Y_literal", "rho", "deformed_Y", "alpha_finite", "E_hhl", "E_eigensolve",
    "E_intertwiner", "epsilon_kn", "epsilon_kn_defining", "epsilon_omega",
    "e_k_poly", "parse_finitepoly", "relation_checks", "daha_relations",
]


class FinitePoly:
    """Polynomial in x_1..x_n with RatQT coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for a, c in (terms or {}).items():
            a = tuple(a)
            if len(a) != n or min(a, default=0) < 0:
                raise ValueError("bad exponent %r for n=%d" % (a, n))
            c = c if isinstance(c, RatQT) else RatQT(c)
            if not c.is_zero():
                self.terms[a] = self.terms[a] + c if a in self.terms else c
        self.terms = {a: c for a, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def _fast(cls, n, terms):
        f = cls.__new__(cls)
        f.n = n
        f.terms = terms
        return f

    @classmethod
    def monomial(cls, a, c=ONE):
        return cls(len(a), {tuple(a): c})

    @classmethod
    def one(cls, n):
        return cls._fast(n, {(0,) * n: ONE})

    @classmethod
    def zero(cls, n):
        return cls._fast(n, {})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            if a in out:
                s = out[a] + c
                if s.is_zero():
                    del out[a]
                else:
                    out[a] = s
            else:
                out[a] = c
        return FinitePoly._fast(self.n, out)

    def __neg__(self):
        return FinitePoly._fast(self.n, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FinitePoly):
            out = {}
            for a, c in self.terms.items():
                for b, d in other.terms.items():
                    k = tuple(x + y for x, y in zip(a, b))
                    v = c * d
                    out[k] = out[k] + v if k in out else v
            return FinitePoly._fast(self.n, {k: v for k, v in out.items() if not v.is_zero()})
        c = other if isinstance(other, RatQT) else RatQT(other)
        if c.is_zero():
            return FinitePoly.zero(self.n)
        return FinitePoly._fast(self.n, {a: v * c for a, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FinitePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def coeff(self, a):
        return self.terms.get(tuple(a), ZERO)

    def degree(self):
        return max((sum(a) for a in self.terms), default=0)

    def support(self):
        return set(self.terms)

    def __str__(self):
        return serialize(self, "text")

    def __repr__(self):
        return "FinitePoly(%d, %s)" % (self.n, serialize(self, "text"))


def _glex_desc(a):
    return (-sum(a), tuple(-x for x in a))


def _mono_text(a):
    parts = []
    for i, e in enumerate(a, 1):
        if e == 1:
            parts.append("x%d" % i)
        elif e > 1:
            parts.append("x%d^%d" % (i, e))
    return "*".join(parts) or "1"


def _coeff_text(c):
    s = str(c)
    if c.is_one():
        return ""
    if c == -1:
        return "-"
    if c.is_polynomial() and len(c.num_terms()) == 1:
        return s + "*"
    return "(" + s + ")*"


def serialize(f, fmt="lines"):
    """``lines``: one "a1,a2,...: coeff" per monomial; ``text``: a sum."""
    keys = sorted(f.terms, key=_glex_desc)
    if fmt == "lines":
        return "\n".join("%s: %s" % (",".join(map(str, a)), f.terms[a]) for a in keys)
    if not keys:
        return "0"
    out = []
    for a in keys:
        c = f.terms[a]
        m = _mono_text(a)
        ct = _coeff_text(c)
        if m == "1":
            out.append(str(c))
        elif ct == "-":
            out.append("-" + m)
        else:
            out.append(ct + m)
    return " + ".join(out).replace("+ -", "- ")


def parse_finitepoly(text, n):
    terms = {}
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        a_s, c_s = line.split(":", 1)
        terms[tuple(int(x) for x in a_s.split(","))] = RatQT(c_s.strip())
    return FinitePoly(n, terms)


# -- generators --------------------------------------------------------------

def _check_i(i, n, top):
    if not 1 <= i <= top:
        raise IndexError("index %d out of range for n=%d" % (i, n))


def s_i(i, f):
    _check_i(i, f.n, f.n - 1)
    out = {}
    for a, c in f.terms.items():
        b = list(a)
        b[i - 1], b[i] = b[i], b[i - 1]
        out[tuple(b)] = c
    return FinitePoly._fast(f.n, out)


_OMT = 1 - t


@lru_cache(maxsize=None)
def _t_rule(x, y):
    """T_i on x_i^x x_{i+1}^y: list of ((x', y'), coeff)."""
    if x == y:
        return (((x, y), ONE),)
    if x > y:
        out = [((y, x), ONE)]
        for g in range(y + 1, x + 1):
            out.append(((g, x + y - g), _OMT))
    else:
        out = [((y, x), t)]
        for g in range(x + 1, y):
            out.append(((g, x + y - g), -_OMT))
    merged = {}
    for k, c in out:
        merged[k] = merged[k] + c if k in merged else c
    return tuple((k, c) for k, c in merged.items() if not c.is_zero())


@lru_cache(maxsize=None)
def _tinv_rule(x, y):
    tinv = t ** -1
    merged = {}
    for k, c in _t_rule(x, y):
        merged[k] = c * tinv
    shift = (t - 1) * tinv
    merged[(x, y)] = merged[(x, y)] + shift if (x, y) in merged else shift
    return tuple((k, c) for k, c in merged.items() if not c.is_zero())


def _apply_rule(rule, i, f):
    out = {}
    for a, c in f.terms.items():
        for (x, y), r in rule(a[i - 1], a[i]):
            b = a[:i - 1] + (x, y) + a[i + 1:]
            v = c if r.is_one() else c * r
            if b in out:
                out[b] = out[b] + v
            else:
                out[b] = v
    return FinitePoly._fast(f.n, {k: v for k, v in out.items() if not v.is_zero()})


def T(i, f):
    """Demazure-Lusztig operator T_i."""
    _check_i(i, f.n, f.n - 1)
    return _apply_rule(_t_rule, i, f)


def T_inv(i, f):
    _check_i(i, f.n, f.n - 1)
    return _apply_rule(_tinv_rule, i, f)


def X(i, f):
    """Multiplication by x_i."""
    _check_i(i, f.n, f.n)
    out = {}
    for a, c in f.terms.items():
        b = list(a)
        b[i - 1] += 1
        out[tuple(b)] = c
    return FinitePoly._fast(f.n, out)


def omega(f):
    """f(x_n/q, x_1, ..., x_{n-1})."""
    out = {}
    for a, c in f.terms.items():
        out[a[1:] + a[:1]] = c * q ** (-a[0]) if a[0] else c
    return FinitePoly._fast(f.n, out)


def omega_inv(f):
    """f(x_2, ..., x_n, q x_1)."""
    out = {}
    for a, c in f.terms.items():
        out[a[-1:] + a[:-1]] = c * q ** a[-1] if a[-1] else c
    return FinitePoly._fast(f.n, out)


def Y(i, f):
    """Cherednik operator Y_i = t^{1-i} T_{i-1}..T_1 omega^{-1} T_{n-1}^{-1}..T_i^{-1}."""
    n = f.n
    _check_i(i, n, n)
    g = f
    for j in range(i, n):
        g = T_inv(j, g)
    g = omega_inv(g)
    for j in range(1, i):
        g = T(j, g)
    return g * t ** (1 - i) if i > 1 else g


def Y_literal(i, f):
    """Y_i as t^{-(i-1)} T_{i-1}..T_1 Y_1 T_1..T_{i-1}, with Y_1 spelled out."""
    n = f.n
    g = f
    for j in range(i - 1, 0, -1):
        g = T(j, g)
    for j in range(1, n):
        g = T_inv(j, g)
    g = omega_inv(g)
    for j in range(1, i):
        g = T(j, g)
    return g * t ** (1 - i)


def rho(f):
    """Keep only monomials divisible by x_1."""
    return FinitePoly._fast(f.n, {a: c for a, c in f.terms.items() if a[0] > 0})


def deformed_Y(i, f):
    """Y~_1 = rho . t^n Y_1 and Y~_i = t^{-1} T_{i-1} Y~_{i-1} T_{i-1}."""
    n = f.n
    _check_i(i, n, n)
    if i == 1:
        return rho(Y(1, f)) * t ** n
    g = T(i - 1, f)
    g = deformed_Y(i - 1, g)
    return T(i - 1, g) * t ** -1


def alpha_finite(mu):
    """Weights q^{mu_i} t^{1 - beta_mu(i)}."""
    b = beta(mu)
    return [RatQT.monomial(m, 1 - bi) for m, bi in zip(mu, b)]


def e_k_poly(k, n):
    """Elementary symmetric polynomial e_k(x_1..x_n)."""
    terms = {}
    for a in weak_compositions(k, n):
        if max(a, default=0) <= 1:
            terms[a] = ONE
    return FinitePoly(n, terms)


# -- non-symmetric Macdonald polynomials ------------------------------------

@lru_cache(maxsize=None)
def _E_hhl(mu):
    n = len(mu)
    out = {}
    for F in enumerate_nonattacking(mu, n):
        a, c = filling_weight(mu, F, n)
        out[a] = out[a] + c if a in out else c
    return FinitePoly(n, out)


def E_hhl(mu):
    """E_mu from the Haglund-Haiman-Loehr filling formula."""
    return _E_hhl(tuple(mu))


def _bruhat_support(mu):
    mu = tuple(mu)
    cands = [a for a in weak_compositions(sum(mu), len(mu)) if bruhat_leq(a, mu)]
    # a linear extension of Bruhat order (largest first) keeps elimination sparse
    cands.sort(key=lambda a: (sort_desc(a), sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] < a[j])),
               reverse=True)
    return cands


@lru_cache(maxsize=None)
def _E_eigen(mu, probe):
    n = len(mu)
    supp = _bruhat_support(mu)
    if probe:
        supp = _probe_support(mu, supp)
    sset = set(supp)
    weights = alpha_finite(mu)
    rows = []
    for i in range(1, n + 1):
        images = {}
        for a in supp:
            g = Y(i, FinitePoly.monomial(a))
            extra = set(g.terms) - sset
            if extra and not probe:
                raise AssertionError("Y_%d leaves the Bruhat-lower span of %r" % (i, mu))
            images[a] = g
        # row for each target monomial b: sum_a (Y_i)_{b,a} v_a - alpha_i v_b
        by_row = {}
        for a, g in images.items():
            for b, c in g.terms.items():
                by_row.setdefault(b, {})[a] = c
        for a in supp:
            r = by_row.setdefault(a, {})
            r[a] = r.get(a, ZERO) - weights[i - 1]
        for r in by_row.values():
            r = {k: v for k, v in r.items() if not v.is_zero()}
            if r:
                rows.append(r)
    ker = nullspace(rows, supp)
    if len(ker) != 1:
        raise ArithmeticError("joint eigenspace of %r has dimension %d" % (mu, len(ker)))
    v = ker[0]
    lead = v.get(tuple(mu))
    if lead is None or lead.is_zero():
        raise ArithmeticError("eigenvector of %r vanishes at x^mu" % (mu,))
    inv = lead.inverse()
    return FinitePoly(n, {a: c * inv for a, c in v.items()})


def _probe_support(mu, supp, trials=2, seed=0):
    rng = random.Random(seed)
    keep = set()
    for _ in range(trials):
        q0 = Fraction(rng.randint(2, 97), rng.randint(1, 13))
        t0 = Fraction(rng.randint(2, 97), rng.randint(1, 13))
        weights = [specialize(w, q0, t0) for w in alpha_finite(mu)]
        rows = []
        for i in range(1, len(mu) + 1):
            by_row = {}
            for a in supp:
                g = Y(i, FinitePoly.monomial(a))
                for b, c in g.terms.items():
                    by_row.setdefault(b, {})[a] = specialize(c, q0, t0)
            for a in supp:
                r = by_row.setdefault(a, {})
                r[a] = r.get(a, 0) - weights[i - 1]
            rows.extend(by_row.values())
        prow, piv = rref(rows, supp)
        free = [c for c in supp if c not in set(piv)]
        for fcol in free:
            keep.add(fcol)
            for pc, r in zip(piv, prow):
                if r.get(fcol, 0) != 0:
                    keep.add(pc)
    return [a for a in supp if a in keep]


def E_eigensolve(mu, probe=False):
    """E_mu as the monic joint eigenvector of Y_1..Y_n with the beta-formula weights.

    With ``probe`` the monomial support is first located at random rational
    specializations and the symbolic solve is restricted to it.
    """
    return _E_eigen(tuple(mu), bool(probe))


def intertwiner_step(i, f, current):
    """Apply T_i + (1-t) a(i+1)/(a(i) - a(i+1)) where a are the weights of ``current``."""
    a = alpha_finite(current)
    den = a[i - 1] - a[i]
    if den.is_zero():
        raise ArithmeticError("degenerate intertwiner at %r, i=%d" % (current, i))
    return T(i, f) + f * ((1 - t) * a[i] / den)


@lru_cache(maxsize=None)
def _E_inter(mu):
    base, steps = sorting_chain(mu)
    f = E_eigensolve(base)
    cur = list(base)
    for i in steps:
        if not cur[i - 1] > cur[i]:
            raise AssertionError("chain step %d is not Bruhat-increasing at %r" % (i, cur))
        f = intertwiner_step(i, f, tuple(cur))
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return f


def E_intertwiner(mu):
    """E_mu from the decreasing rearrangement by intertwiners."""
    return _E_inter(tuple(mu))


# -- symmetrizers -------------------------------------------------------------

def epsilon_kn(k, n, f):
    """Partial t-symmetrizer over the last n-k variables (coset recursion)."""
    if not 0 <= k < n or f.n != n:
        raise ValueError("need 0 <= k < n = f.n")
    g = f
    for kk in range(n - 2, k - 1, -1):
        size = n - kk
        acc = g * t ** (size - 1)
        cur = g
        for j in range(1, size):
            cur = T(kk + j, cur)
            acc = acc + (cur * t ** (size - 1 - j) if size - 1 - j else cur)
        g = acc * qint(size).inverse()
    return g


def _reduced_word(perm):
    """A reduced word (list of adjacent transpositions, applied left to right
    on positions) sorting ``perm``; its length is the inversion count."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                changed = True
    return word


def epsilon_kn_defining(k, n, f):
    """The defining sum over all permutations of the last n-k positions."""
    size = n - k
    total = FinitePoly.zero(n)
    top = size * (size - 1) // 2
    for perm in permutations(range(size)):
        word = _reduced_word(perm)
        g = f
        for w in word:
            g = T(k + w + 1, g)
        total = total + g * t ** (top - len(word))
    fact = ONE
    for j in range(1, size + 1):
        fact = fact * qint(j)
    return total * fact.inverse()


def _divide_by_diff(f, i, j):
    """Exact quotient of f by (x_i - x_j), 1-based."""
    rem = dict(f.terms)
    quo = {}
    while rem:
        a = max(rem, key=lambda b: (b[i - 1], b))
        c = rem.pop(a)
        if a[i - 1] == 0:
            raise ArithmeticError("not divisible by x%d - x%d" % (i, j))
        b = list(a)
        b[i - 1] -= 1
        b = tuple(b)
        quo[b] = quo[b] + c if b in quo else c
        d = list(b)
        d[j - 1] += 1
        d = tuple(d)
        v = rem.get(d, ZERO) + c
        if v.is_zero():
            rem.pop(d, None)
        else:
            rem[d] = v
    return FinitePoly(f.n, quo)


def epsilon_omega(f):
    """(1/[n]_t!) sum_sigma sigma(f Omega_n), Omega_n = prod (x_i - t x_j)/(x_i - x_j)."""
    n = f.n
    g = f
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a = [0] * n
            a[i - 1] = 1
            b = [0] * n
            b[j - 1] = 1
            g = g * FinitePoly(n, {tuple(a): ONE, tuple(b): -t})
    anti = FinitePoly.zero(n)
    for perm in permutations(range(n)):
        sign = (-1) ** sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
        out = {}
        for a, c in g.terms.items():
            out[tuple(a[perm[r]] for r in range(n))] = c
        anti = anti + FinitePoly._fast(n, out) * sign
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            anti = _divide_by_diff(anti, i, j)
    fact = ONE
    for j in range(1, n + 1):
        fact = fact * qint(j)
    return anti * fact.inverse()


# -- relation suite -------------------------------------------------------------

def _compose(*ops):
    """Operator word, rightmost applied first."""
    def run(f):
        for op in reversed(ops):
            f = op(f)
        return f
    return run


def relation_checks(n):
    """(name, lhs, rhs) triples for the defining relations at rank n."""
    Ti = lambda i: (lambda f: T(i, f))
    Tv = lambda i: (lambda f: T_inv(i, f))
    Xi = lambda i: (lambda f: X(i, f))
    Yi = lambda i: (lambda f: Y(i, f))
    scal = lambda c: (lambda f: f * c)
    ident = lambda f: f
    out = []
    for i in range(1, n):
        out.append(("quadratic T%d" % i,
                    lambda f, i=i: T(i, T(i, f)) + T(i, f) * (t - 1) - f * t,
                    lambda f: FinitePoly.zero(f.n)))
        out.append(("inverse T%d" % i, _compose(Ti(i), Tv(i)), ident))
        out.append(("T-X T%d" % i, _compose(Tv(i), Xi(i), Tv(i)), _compose(scal(t ** -1), Xi(i + 1))))
        out.append(("T-Y T%d" % i, _compose(Ti(i), Yi(i), Ti(i)), _compose(scal(t), Yi(i + 1))))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                out.append(("T%d X%d" % (i, j), _compose(Ti(i), Xi(j)), _compose(Xi(j), Ti(i))))
                out.append(("T%d Y%d" % (i, j), _compose(Ti(i), Yi(j)), _compose(Yi(j), Ti(i))))
        if i + 1 < n:
            out.append(("braid T%d" % i, _compose(Ti(i), Ti(i + 1), Ti(i)),
                        _compose(Ti(i + 1), Ti(i), Ti(i + 1))))
        for j in range(i + 2, n):
            out.append(("T%d T%d" % (i, j), _compose(Ti(i), Ti(j)), _compose(Ti(j), Ti(i))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(("X%d X%d" % (i, j), _compose(Xi(i), Xi(j)), _compose(Xi(j), Xi(i))))
            out.append(("Y%d Y%d" % (i, j), _compose(Yi(i), Yi(j)), _compose(Yi(j), Yi(i))))
    if n >= 2:
        out.append(("cross", _compose(Yi(1), Ti(1), Xi(1)), _compose(Xi(2), Yi(1), Ti(1))))
    xs = [Xi(i) for i in range(1, n + 1)]
    out.append(("cyclic", _compose(Yi(1), *xs), _compose(scal(q), *xs, Yi(1))))
    return out


def daha_relations(n, degree):
    """One report per relation: identity on every monomial of degree <= degree."""
    monos = [a for d in range(degree + 1) for a in weak_compositions(d, n)]
    reports = []
    for name, lhs, rhs in relation_checks(n):
        witness = None
        for a in monos:
            f = FinitePoly.monomial(a)
            if not (lhs(f) - rhs(f)).is_zero():
                witness = list(a)
                break
        rep = {"suite": "daha-relations", "instance": {"n": n, "degree": degree, "relation": name},
               "monomials": len(monos), "status": "pass" if witness is None else "fail"}
        if witness is not None:
            rep["witness"] = witness
        reports.append(rep)
    return reports
