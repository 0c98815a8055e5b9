"""Almost-symmetric functions in window/tail form.

An element at window k is a finite sum of ``c * x^a * m_lam[X_k]`` where
``a`` has length k and ``X_k = x_{k+1} + x_{k+2} + ...`` is the tail
alphabet.  ``lower`` is the lowering operator built from Jing operators,
``partial_symmetrize`` composes lowerings, and ``omega_tilde`` /
``omega_star`` are the stable limits of the cyclic operators.
"""

import json
from functools import lru_cache
from itertools import permutations

from .finite_daha import FinitePoly, _t_rule, _tinv_rule
from .qt_field import RatQT, ONE, ZERO, q
from .symfunc import (
    Alphabet, SymFunc, _exp_one_minus_t, jing_m, perp, plethysm,
)

__all__ = [
    "AlmostSym", "widen", "truncate_pi", "lift", "act_T", "act_T_inv", "act_X",
    "lower", "lower_ct_check", "partial_symmetrize", "omega_tilde",
    "omega_star", "to_full", "from_full", "serialize", "parse_almostsym",
]


def _add_into(d, key, c):
    if key in d:
        s = d[key] + c
        if s.is_zero():
            del d[key]
        else:
            d[key] = s
    elif not c.is_zero():
        d[key] = c


class AlmostSym:
    """Element of the almost-symmetric ring at a fixed window."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {}
        for (a, lam), c in (terms or {}).items():
            a = tuple(a)
            if len(a) != k:
                raise ValueError("x-exponent %r does not match window %d" % (a, k))
            lam = tuple(sorted((x for x in lam if x), reverse=True))
            c = c if isinstance(c, RatQT) else RatQT(c)
            _add_into(self.terms, (a, lam), c)

    @classmethod
    def _fast(cls, k, terms):
        f = cls.__new__(cls)
        f.k = k
        f.terms = terms
        return f

    @classmethod
    def zero(cls, k=0):
        return cls._fast(k, {})

    @classmethod
    def one(cls, k=0):
        return cls._fast(k, {((0,) * k, ()): ONE})

    @classmethod
    def x(cls, a, c=ONE):
        """The monomial c * x^a at window len(a)."""
        a = tuple(a)
        return cls(len(a), {(a, ()): c})

    @classmethod
    def sym(cls, F, k=0):
        """F[X] for a symmetric function F, placed at window k."""
        Fm = F.to("m")
        f = cls._fast(0, {((), lam): c for lam, c in Fm.terms.items()})
        return widen(f, k)

    @classmethod
    def tail(cls, F, k):
        """F[X_k] at window k."""
        Fm = F.to("m")
        return cls._fast(k, {((0,) * k, lam): c for lam, c in Fm.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(a) + sum(l) for a, l in self.terms), default=0)

    def __add__(self, other):
        k = max(self.k, other.k)
        a, b = widen(self, k), widen(other, k)
        out = dict(a.terms)
        for key, c in b.terms.items():
            _add_into(out, key, c)
        return AlmostSym._fast(k, out)

    def __neg__(self):
        return AlmostSym._fast(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlmostSym):
            k = max(self.k, other.k)
            a, b = widen(self, k), widen(other, k)
            out = {}
            for (xa, la), ca in a.terms.items():
                for (xb, lb), cb in b.terms.items():
                    xs = tuple(i + j for i, j in zip(xa, xb))
                    c = ca * cb
                    for lam, v in _m_product(la, lb).items():
                        _add_into(out, (xs, lam), c * v)
            return AlmostSym._fast(k, out)
        c = other if isinstance(other, RatQT) else RatQT(other)
        if c.is_zero():
            return AlmostSym.zero(self.k)
        return AlmostSym._fast(self.k, {key: v * c for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlmostSym):
            return NotImplemented
        return (self - other).is_zero()

    def coeff(self, a, lam):
        return self.terms.get((tuple(a), tuple(lam)), ZERO)

    def map_coeffs(self, fn):
        out = {}
        for key, c in self.terms.items():
            _add_into(out, key, fn(c))
        return AlmostSym._fast(self.k, out)

    def __str__(self):
        return serialize(self, "text")

    def __repr__(self):
        return "AlmostSym(%d, %s)" % (self.k, serialize(self, "text"))


@lru_cache(maxsize=None)
def _m_product(la, lb):
    F = SymFunc.basis_element("m", la) * SymFunc.basis_element("m", lb)
    return dict(F.to("m").terms)


def _remove_one(lam, r):
    lst = list(lam)
    lst.remove(r)
    return tuple(lst)


def widen(f, k2):
    """Re-express f at window k2 >= f.k using m_lam[X_k] = sum_r x_{k+1}^r m_{lam - r}[X_{k+1}]."""
    if k2 < f.k:
        raise ValueError("cannot narrow window %d to %d" % (f.k, k2))
    terms = f.terms
    for _ in range(f.k, k2):
        out = {}
        for (a, lam), c in terms.items():
            _add_into(out, (a + (0,), lam), c)
            for r in set(lam):
                _add_into(out, (a + (r,), _remove_one(lam, r)), c)
        terms = out
    return AlmostSym._fast(k2, terms)


def _distinct_perms(v):
    return set(permutations(v))


def truncate_pi(f, m):
    """Set x_j = 0 for j > m."""
    if m < f.k:
        raise ValueError("m=%d below window %d" % (m, f.k))
    span = m - f.k
    out = {}
    for (a, lam), c in f.terms.items():
        if len(lam) > span:
            continue
        for b in _distinct_perms(lam + (0,) * (span - len(lam))):
            key = a + b
            out[key] = out[key] + c if key in out else c
    return FinitePoly(m, out)


def lift(f, k):
    """The unique window-k almost-symmetric g with truncate_pi(g, f.n) = f."""
    m = f.n
    if m - k < f.degree():
        raise ValueError("lift needs m - k >= degree (m=%d, k=%d, deg=%d)" % (m, k, f.degree()))
    terms = {}
    for e, c in f.terms.items():
        tail = e[k:]
        if list(tail) == sorted(tail, reverse=True):
            terms[(e[:k], tuple(x for x in tail if x))] = c
    g = AlmostSym._fast(k, terms)
    if truncate_pi(g, m) != f:
        raise ValueError("input is not symmetric in x_%d..x_%d" % (k + 1, m))
    return g


def _act_pair(rule, i, f):
    f = widen(f, max(f.k, i + 1))
    out = {}
    for (a, lam), c in f.terms.items():
        for (x, y), r in rule(a[i - 1], a[i]):
            b = a[:i - 1] + (x, y) + a[i + 1:]
            _add_into(out, (b, lam), c if r.is_one() else c * r)
    return AlmostSym._fast(f.k, out)


def act_T(i, f):
    return _act_pair(_t_rule, i, f)


def act_T_inv(i, f):
    return _act_pair(_tinv_rule, i, f)


def act_X(i, f):
    f = widen(f, max(f.k, i))
    out = {}
    for (a, lam), c in f.terms.items():
        b = list(a)
        b[i - 1] += 1
        out[(tuple(b), lam)] = c
    return AlmostSym._fast(f.k, out)


def lower(k, f):
    """The lowering operator: x_k^n F[X_k] -> B_n(F)[X_{k-1}], linear over x_1..x_{k-1}."""
    if k < 1:
        raise ValueError("lower needs k >= 1")
    if f.k > k:
        raise ValueError("window %d exceeds k=%d" % (f.k, k))
    f = widen(f, k)
    out = {}
    for (a, lam), c in f.terms.items():
        rest = a[:-1]
        for mu, v in jing_m(a[-1], lam).items():
            _add_into(out, (rest, mu), c * v)
    return AlmostSym._fast(k - 1, out)


def lower_ct_check(k, f):
    """Same map as ``lower`` via the constant term in x_k of
    f * F[X_k - x_k] * Exp[(1-t) X_k / x_k]."""
    if f.k > k:
        raise ValueError("window %d exceeds k=%d" % (f.k, k))
    f = widen(f, k)
    out = AlmostSym.zero(k - 1)
    letter = "x%d" % k
    for (a, lam), c in f.terms.items():
        n = a[-1]
        F = SymFunc.basis_element("m", lam)
        shifted = plethysm(F, Alphabet.X() - Alphabet.letter(letter))
        expo = _exp_one_minus_t(n + sum(lam))
        G = SymFunc.zero()
        for key, piece in shifted.items():
            e = dict(key).get(letter, 0)
            j = n + e
            if 0 <= j < len(expo):
                G = G + piece * SymFunc._fast(dict(expo[j]))
        term = AlmostSym.tail(G, k - 1)
        out = out + AlmostSym._fast(k - 1, {(a[:-1], lam2): v * c for (_, lam2), v in term.terms.items()})
    return out


def partial_symmetrize(k, f):
    """Compose lowerings from the window of f down to k."""
    for j in range(f.k, k, -1):
        f = lower(j, f)
    return f


# -- full-alphabet presentation ----------------------------------------------

def to_full(f):
    """{a: F} with f = sum x^a F[X] (F in the p-basis, X the full alphabet)."""
    k = f.k
    out = {}
    for (a, lam), c in f.terms.items():
        # m_lam[X - x_1 - ... - x_k] = sum prod (-x_j)^{i_j} e_{i_1}^perp...e_{i_k}^perp m_lam
        layer = {(): SymFunc.basis_element("m", lam) * c}
        for _ in range(k):
            nxt = {}
            for ivec, G in layer.items():
                deg = max((sum(l) for l in G._p()), default=0)
                for i in range(deg + 1):
                    H = perp(G, "e", i)
                    if H.is_zero():
                        continue
                    if i % 2:
                        H = -H
                    nxt[ivec + (i,)] = H
            layer = nxt
        for ivec, G in layer.items():
            key = tuple(x + y for x, y in zip(a, ivec))
            out[key] = out[key] + G if key in out else G
    return {a: G for a, G in out.items() if not G.is_zero()}


def from_full(full, k):
    out = AlmostSym.zero(k)
    for a, F in full.items():
        out = out + AlmostSym.x(a) * AlmostSym.sym(F, k)
    return out


def _shift_qx1(F):
    """F[X + (q-1) x_1] = sum_i q^i x_1^i (h_i^perp F)[X_1], at window 1."""
    deg = max((sum(l) for l in F._p()), default=0)
    out = AlmostSym.zero(1)
    for i in range(deg + 1):
        H = perp(F, "h", i)
        if H.is_zero():
            continue
        g = AlmostSym.tail(H, 1)
        out = out + AlmostSym._fast(1, {((i,), lam): c * q ** i for (_, lam), c in g.terms.items()})
    return out


def omega_star(f):
    """x^a F[X] -> x_2^{a_1}...x_{k+1}^{a_k} F[X + (q-1) x_1]."""
    k = f.k
    out = AlmostSym.zero(k + 1)
    for a, F in to_full(f).items():
        out = out + AlmostSym.x((0,) + a) * widen(_shift_qx1(F), k + 1)
    return out


def omega_tilde(f):
    """x_1 T_1^{-1} ... T_k^{-1} f."""
    k = f.k
    g = widen(f, k + 1)
    for j in range(k, 0, -1):
        g = act_T_inv(j, g)
    return act_X(1, g)


# -- serialization ---------------------------------------------------------------

def _sort_key(item):
    (a, lam), _ = item
    return (sum(a) + sum(lam), a, lam)


def _text_key(a, lam):
    # highest degree first, then reverse-lex on the window and the tail
    return (-(sum(a) + sum(lam)), tuple(-x for x in a), tuple(-x for x in lam))


def serialize(f, fmt="json", basis="m"):
    items = sorted(f.terms.items(), key=_sort_key)
    if fmt == "json":
        return json.dumps({
            "window": f.k,
            "terms": [{"x": list(a), "tail": list(lam), "coeff": str(c)} for (a, lam), c in items],
        })
    if basis != "m":
        return _text_in_basis(f, basis)
    if not items:
        return "0"
    items.sort(key=lambda it: _text_key(*it[0]))
    return _join_text([(a, "m", lam, c) for (a, lam), c in items], f.k)


def _text_in_basis(f, basis):
    tag = {"HL": "P", "P": "P", "s": "s", "p": "p", "h": "h", "e": "e"}[basis]
    bname = "HL" if tag == "P" else basis
    groups = {}
    for (a, lam), c in f.terms.items():
        groups.setdefault(a, {})[lam] = c
    pieces = []
    for a in sorted(groups, key=lambda a: (sum(a), a)):
        G = SymFunc(groups[a], "m").to(bname)
        for lam, c in G.terms.items():
            pieces.append((a, tag, lam, c))
    pieces.sort(key=lambda p: _text_key(p[0], p[2]))
    return _join_text(pieces, f.k) if pieces else "0"


def _join_text(pieces, k):
    out = []
    for a, tag, lam, c in pieces:
        factors = []
        for i, e in enumerate(a, 1):
            if e == 1:
                factors.append("x%d" % i)
            elif e > 1:
                factors.append("x%d^%d" % (i, e))
        if lam:
            factors.append("%s[%s](x%d+...)" % (tag, ",".join(map(str, lam)), k + 1))
        mono = "*".join(factors)
        if not mono:
            out.append(str(c))
        elif c.is_one():
            out.append(mono)
        elif c == -1:
            out.append("-" + mono)
        else:
            s = str(c)
            if not (c.is_polynomial() and len(c.num_terms()) == 1):
                s = "(" + s + ")"
            out.append(s + "*" + mono)
    return " + ".join(out).replace("+ -", "- ")


def parse_almostsym(text):
    d = json.loads(text)
    k = d["window"]
    return AlmostSym(k, {(tuple(t_["x"]), tuple(t_["tail"])): RatQT(t_["coeff"]) for t_ in d["terms"]})
