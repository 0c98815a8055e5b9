"""Symmetric functions over Q(q, t).

Elements are stored in a named basis; arithmetic happens in the power-sum
basis where products concatenate partitions, ``p_k^perp = k d/dp_k`` and
plethysm by a scalar alphabet rescales ``p_k``.  The monomial basis is the
canonical form for display and serialization.

The Jing operator ``jing(n, F)`` uses the e-perp formula

    B_n(F) = sum_i (-1)^i h_{n+i}[(1-t)X] e_i^perp F

and ``jing_kernel`` extracts ``<z^n> F[X - 1/z] Exp[(1-t) z X]`` from
z-series instead, as an independent path.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .combinatorics import partitions, multiplicities
from .qt_field import RatQT, q, t, qfact, ONE, ZERO

__all__ = [
    "SymFunc", "BASES", "z_lambda", "v_lambda", "plethysm", "Alphabet",
    "perp", "jing", "jing_kernel", "hall_littlewood_P", "dual_Q",
    "macdonald_P", "schur", "hall_pairing", "qt_pairing", "exp_series",
    "jing_m", "hl_classical_P", "hl_symmetrizer", "m", "p", "h", "e", "serialize", "parse_symfunc",
]

BASES = ("m", "e", "h", "p", "s", "HL", "MacP")


def _part(lam):
    return tuple(sorted((x for x in lam if x), reverse=True))


def z_lambda(lam):
    out = 1
    for k, mk in multiplicities(lam).items():
        out *= k ** mk * factorial(mk)
    return out


def v_lambda(lam):
    """prod_i [m_i(lam)]_t!"""
    out = ONE
    for mk in multiplicities(lam).values():
        out = out * qfact(mk)
    return out


def _sign(rho):
    return -1 if (sum(rho) - len(rho)) % 2 else 1


# -- p <-> m change of basis --------------------------------------------------

def _count_p_in_m(lam, mu):
    """Coefficient of m_mu in p_lam: ways to pour the parts of lam into the
    slots of mu so every slot is filled exactly."""
    slots = list(mu)
    parts = list(lam)

    def rec(k):
        if k == len(parts):
            return 1 if all(s == 0 for s in slots) else 0
        total = 0
        for i, s in enumerate(slots):
            if s >= parts[k]:
                slots[i] -= parts[k]
                total += rec(k + 1)
                slots[i] += parts[k]
        return total

    return rec(0)


@lru_cache(maxsize=None)
def _p_to_m(d):
    ps = partitions(d)
    return {lam: {mu: c for mu in ps if (c := _count_p_in_m(lam, mu))} for lam in ps}


def _invert(mat, keys):
    """Invert a square matrix given as nested dicts (Fraction or RatQT entries)."""
    n = len(keys)
    idx = {k: i for i, k in enumerate(keys)}
    rows = []
    for i, k in enumerate(keys):
        row = [ZERO] * (2 * n)
        for c, v in mat[k].items():
            row[idx[c]] = RatQT(v) if not isinstance(v, RatQT) else v
        row[n + i] = ONE
        rows.append(row)
    for col in range(n):
        piv = next(r for r in range(col, n) if not rows[r][col].is_zero())
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return {k: {keys[j]: rows[i][n + j] for j in range(n) if not rows[i][n + j].is_zero()}
            for i, k in enumerate(keys)}


@lru_cache(maxsize=None)
def _to_p(basis, d):
    """Rows: basis element of degree d expressed in the p-basis (RatQT)."""
    ps = partitions(d)
    if basis == "p":
        return {lam: {lam: ONE} for lam in ps}
    if basis == "m":
        fwd = {lam: {mu: RatQT(c) for mu, c in row.items()} for lam, row in _p_to_m(d).items()}
        return _invert(fwd, ps)
    if basis in ("h", "e"):
        out = {}
        for lam in ps:
            acc = SymFunc.one()
            for part in lam:
                acc = acc * _complete_or_elem(basis, part)
            out[lam] = acc._p()
        return out
    if basis == "s":
        return {lam: _jacobi_trudi(lam)._p() for lam in ps}
    if basis == "HL":
        return {lam: hall_littlewood_P(lam)._p() for lam in ps}
    if basis == "MacP":
        return {lam: macdonald_P(lam)._p() for lam in ps}
    raise ValueError("unknown basis %r" % basis)


@lru_cache(maxsize=None)
def _from_p(basis, d):
    if basis == "p":
        return _to_p("p", d)
    if basis == "m":
        return {lam: {mu: RatQT(c) for mu, c in row.items()} for lam, row in _p_to_m(d).items()}
    return _invert(_to_p(basis, d), partitions(d))


def _complete_or_elem(kind, n):
    terms = {}
    for rho in partitions(n):
        c = Fraction(1, z_lambda(rho))
        if kind == "e":
            c *= _sign(rho)
        terms[rho] = RatQT(c)
    return SymFunc(terms, "p")


def _jacobi_trudi(lam):
    r = len(lam)
    if r == 0:
        return SymFunc.one()
    total = SymFunc.zero()
    for perm in permutations(range(r)):
        inv = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        term = SymFunc.one()
        for i in range(r):
            k = lam[i] - i + perm[i]
            if k < 0:
                term = None
                break
            if k:
                term = term * _complete_or_elem("h", k)
        if term is not None:
            total = total + (term if inv % 2 == 0 else -term)
    return total


# -- the element type -----------------------------------------------------------

class SymFunc:
    """Finite sum of basis elements with RatQT coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms=None, basis="p"):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.terms = {}
        for lam, c in (terms or {}).items():
            c = c if isinstance(c, RatQT) else RatQT(c)
            if not c.is_zero():
                lam = _part(lam)
                self.terms[lam] = self.terms[lam] + c if lam in self.terms else c
        self.terms = {k: v for k, v in self.terms.items() if not v.is_zero()}

    @classmethod
    def _fast(cls, terms, basis="p"):
        f = cls.__new__(cls)
        f.basis = basis
        f.terms = terms
        return f

    @classmethod
    def zero(cls):
        return cls._fast({})

    @classmethod
    def one(cls):
        return cls._fast({(): ONE})

    @classmethod
    def basis_element(cls, basis, lam):
        return cls({_part(lam): ONE}, basis)

    # -- basis changes --------------------------------------------------------
    def _p(self):
        if self.basis == "p":
            return self.terms
        out = {}
        for lam, c in self.terms.items():
            for rho, v in _to_p(self.basis, sum(lam))[lam].items():
                x = c * v
                out[rho] = out[rho] + x if rho in out else x
        return {k: v for k, v in out.items() if not v.is_zero()}

    def to(self, basis):
        if basis == self.basis:
            return self
        pt = self._p()
        if basis == "p":
            return SymFunc._fast(pt)
        out = {}
        for rho, c in pt.items():
            for lam, v in _from_p(basis, sum(rho))[rho].items():
                x = c * v
                out[lam] = out[lam] + x if lam in out else x
        return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()}, basis)

    # -- ring structure -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatQT)):
            other = SymFunc.one() * other
        a = self._p()
        out = dict(a)
        for k, v in other._p().items():
            out[k] = out[k] + v if k in out else v
        return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()})

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._fast({k: -v for k, v in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatQT)):
            c = RatQT(other) if not isinstance(other, RatQT) else other
            if c.is_zero():
                return SymFunc.zero()
            return SymFunc._fast({k: v * c for k, v in self.terms.items()}, self.basis)
        if not isinstance(other, SymFunc):
            return NotImplemented
        out = {}
        bt = other._p()
        for la, ca in self._p().items():
            for lb, cb in bt.items():
                k = tuple(sorted(la + lb, reverse=True))
                x = ca * cb
                out[k] = out[k] + x if k in out else x
        return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatQT)):
            other = SymFunc.one() * other
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self - other).is_zero()

    def is_zero(self):
        return not self._p()

    def degrees(self):
        return sorted({sum(k) for k in self.terms})

    def homogeneous_part(self, d):
        return SymFunc._fast({k: v for k, v in self.terms.items() if sum(k) == d}, self.basis)

    def coeff(self, lam, basis=None):
        f = self.to(basis or self.basis)
        return f.terms.get(_part(lam), ZERO)

    def map_coeffs(self, fn):
        return SymFunc({k: fn(v) for k, v in self.terms.items()}, self.basis)

    def scale_alphabet(self, a):
        """F[a X] for a scalar a in Q(q,t): p_k -> a(q^k, t^k) p_k."""
        a = RatQT(a) if not isinstance(a, RatQT) else a
        cache = {}
        out = {}
        for lam, c in self._p().items():
            x = c
            for k in lam:
                if k not in cache:
                    cache[k] = a.subs_power(k)
                x = x * cache[k]
            out[lam] = x
        return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()})

    def evaluate(self, a):
        """F[a] for a scalar alphabet a in Q(q,t)."""
        a = RatQT(a) if not isinstance(a, RatQT) else a
        cache = {}
        acc = ZERO
        for lam, c in self._p().items():
            x = c
            for k in lam:
                if k not in cache:
                    cache[k] = a.subs_power(k)
                x = x * cache[k]
            acc = acc + x
        return acc

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return "SymFunc(%s)" % serialize(self)


def serialize(F, basis=None):
    F = F.to(basis or F.basis)
    body = ", ".join("[%s]: %s" % (",".join(map(str, lam)), F.terms[lam]) for lam in sorted(F.terms))
    return "%s{%s}" % (F.basis, body)


def parse_symfunc(s):
    s = s.strip()
    brace = s.index("{")
    basis = s[:brace]
    body = s[brace + 1:s.rindex("}")].strip()
    terms = {}
    if body:
        depth = 0
        chunks, cur = [], ""
        for ch in body:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            if ch == "," and depth == 0:
                chunks.append(cur)
                cur = ""
            else:
                cur += ch
        chunks.append(cur)
        for ch in chunks:
            lam_s, c_s = ch.split(":", 1)
            lam_s = lam_s.strip().strip("[]")
            lam = tuple(int(x) for x in lam_s.split(",") if x.strip())
            terms[lam] = RatQT(c_s.strip())
    return SymFunc(terms, basis)


def m(*lam):
    return SymFunc.basis_element("m", lam)


def p(*lam):
    return SymFunc.basis_element("p", lam)


def h(n):
    return SymFunc.basis_element("h", (n,)) if n > 0 else (SymFunc.one() if n == 0 else SymFunc.zero())


def e(n):
    return SymFunc.basis_element("e", (n,)) if n > 0 else (SymFunc.one() if n == 0 else SymFunc.zero())


def schur(lam):
    return SymFunc.basis_element("s", lam)


# -- pairings -------------------------------------------------------------

def hall_pairing(F, G):
    a, b = F._p(), G._p()
    acc = ZERO
    for lam, c in a.items():
        if lam in b:
            acc = acc + c * b[lam] * z_lambda(lam)
    return acc


@lru_cache(maxsize=None)
def _qt_weight(lam):
    w = RatQT(z_lambda(lam))
    for k in lam:
        w = w * (1 - q ** k) / (1 - t ** k)
    return w


def qt_pairing(F, G):
    a, b = F._p(), G._p()
    acc = ZERO
    for lam, c in a.items():
        if lam in b:
            acc = acc + c * b[lam] * _qt_weight(lam)
    return acc


# -- skewing operators --------------------------------------------------------

def _submultisets(lam, size):
    items = sorted(multiplicities(lam).items(), reverse=True)

    def rec(k, left):
        if k == len(items):
            if left == 0:
                yield ()
            return
        part, mult = items[k]
        for r in range(min(mult, left // part), -1, -1):
            for rest in rec(k + 1, left - r * part):
                yield (part,) * r + rest

    return list(rec(0, size))


@lru_cache(maxsize=None)
def _perp_p(kind, i, lam):
    """kind^perp_i applied to p_lam, as {partition: Fraction}."""
    out = {}
    ml = multiplicities(lam)
    for rho in _submultisets(lam, i):
        c = Fraction(1, z_lambda(rho))
        if kind == "e":
            c *= _sign(rho)
        for k, r in multiplicities(rho).items():
            c *= k ** r * factorial(ml[k]) // factorial(ml[k] - r)
        rest = list(lam)
        for x in rho:
            rest.remove(x)
        key = tuple(rest)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def perp(F, kind, i):
    """Adjoint of multiplication by e_i (kind 'e') or h_i (kind 'h')."""
    if i < 0:
        return SymFunc.zero()
    out = {}
    for lam, c in F._p().items():
        if sum(lam) < i:
            continue
        for mu, v in _perp_p(kind, i, lam).items():
            x = c * v
            out[mu] = out[mu] + x if mu in out else x
    return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()})


# -- Jing operators and Hall-Littlewood ---------------------------------------

@lru_cache(maxsize=None)
def _h_one_minus_t(n):
    """h_n[(1-t)X] in the p-basis."""
    if n < 0:
        return {}
    out = {}
    for rho in partitions(n):
        c = RatQT(Fraction(1, z_lambda(rho)))
        for k in rho:
            c = c * (1 - t ** k)
        out[rho] = c
    return out


@lru_cache(maxsize=None)
def _jing_p(n, lam):
    out = {}
    for i in range(0, sum(lam) + 1):
        if n + i < 0:
            continue
        hpart = _h_one_minus_t(n + i)
        for mu, v in _perp_p("e", i, lam).items():
            c = v if i % 2 == 0 else -v
            for rho, hv in hpart.items():
                key = tuple(sorted(mu + rho, reverse=True))
                x = hv * c
                out[key] = out[key] + x if key in out else x
    return {k: v for k, v in out.items() if not v.is_zero()}


def jing(n, F):
    """B_n(F) via the e-perp formula."""
    out = {}
    for lam, c in F._p().items():
        for mu, v in _jing_p(n, lam).items():
            x = c * v
            out[mu] = out[mu] + x if mu in out else x
    return SymFunc._fast({k: v for k, v in out.items() if not v.is_zero()})


@lru_cache(maxsize=None)
def jing_m(n, lam):
    """B_n(m_lam) in the m-basis, as a dict."""
    return dict(jing(n, SymFunc.basis_element("m", lam)).to("m").terms)


@lru_cache(maxsize=None)
def _hl(lam):
    f = SymFunc.one()
    for part in reversed(lam):
        f = jing(part, f)
    return f


def hall_littlewood_P(lam):
    """The scaled Hall-Littlewood function B_{lam_1} ... B_{lam_r}(1)."""
    return _hl(_part(lam))


def hl_classical_P(lam):
    """P_lam[X; t] = hall_littlewood_P(lam) / (v_lam(t) (1-t)^l)."""
    lam = _part(lam)
    return hall_littlewood_P(lam) * (v_lambda(lam) * (1 - t) ** len(lam)).inverse()


def hl_symmetrizer(lam):
    """P_lam[X; t] from the finite symmetrizer in n = |lam| variables.

    sum_w w(x^lam prod_{i<j} (x_i - t x_j)/(x_i - x_j)) is read as a sum of
    bialternants a_{nu+delta}/a_delta = s_nu, then divided by the stabilizer
    factor prod_{i>=0} [m_i]_t!.  Shares no code with the Jing operators.
    """
    lam = _part(lam)
    n = sum(lam)
    if n == 0:
        return SymFunc.one()
    poly = {tuple(lam) + (0,) * (n - len(lam)): ONE}
    for i in range(n):
        for j in range(i + 1, n):
            nxt = {}
            for a, c in poly.items():
                for idx, w in ((i, ONE), (j, -t)):
                    b = list(a)
                    b[idx] += 1
                    b = tuple(b)
                    v = nxt.get(b, ZERO) + c * w
                    nxt[b] = v
            poly = {a: c for a, c in nxt.items() if not c.is_zero()}
    schurs = {}
    for a, c in poly.items():
        if len(set(a)) < n:
            continue
        order = sorted(range(n), key=lambda r: -a[r])
        sign = (-1) ** sum(1 for x in range(n) for y in range(x + 1, n) if order[x] > order[y])
        nu = tuple(a[r] - (n - 1 - k) for k, r in enumerate(order))
        nu = tuple(x for x in nu if x)
        schurs[nu] = schurs.get(nu, ZERO) + c * sign
    out = SymFunc.zero()
    for nu, c in sorted(schurs.items()):
        if not c.is_zero():
            out = out + schur(nu) * c
    return out * (v_lambda(lam) * qfact(n - len(lam))).inverse()


# -- alphabets, plethysm and z-series -----------------------------------------

class Alphabet:
    """RatQT-linear combination of alphabet atoms.

    Atoms are ``"X"`` (the symbolic alphabet whose power sums stay as
    ``p_k``) and letter monomials given as tuples of ``(name, exponent)``
    pairs, e.g. ``(("z", -1),)`` or ``(("x1", 1),)``.  The empty tuple is the
    scalar atom 1.
    """

    def __init__(self, parts=None):
        self.parts = []
        for coeff, atom in (parts or []):
            coeff = coeff if isinstance(coeff, RatQT) else RatQT(coeff)
            if atom != "X":
                atom = tuple(sorted(atom))
            self.parts.append((coeff, atom))

    def __add__(self, other):
        return Alphabet(self.parts + other.parts)

    def __neg__(self):
        return Alphabet([(-c, a) for c, a in self.parts])

    def __sub__(self, other):
        return self + (-other)

    @classmethod
    def X(cls, coeff=1):
        return cls([(coeff, "X")])

    @classmethod
    def letter(cls, name, exponent=1, coeff=1):
        return cls([(coeff, ((name, exponent),))])

    @classmethod
    def scalar(cls, coeff):
        return cls([(coeff, ())])


def _mono_mul(a, b):
    d = dict(a)
    for k, e_ in b:
        d[k] = d.get(k, 0) + e_
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _pk_alphabet(alpha, k):
    """p_k[alpha] as {letter-monomial: SymFunc-in-p dict}."""
    out = {}
    for c, atom in alpha.parts:
        ck = c.subs_power(k)
        if atom == "X":
            key, val = (), {(k,): ck}
        else:
            key, val = tuple((n, e_ * k) for n, e_ in atom), {(): ck}
        slot = out.setdefault(key, {})
        for lam, v in val.items():
            slot[lam] = slot[lam] + v if lam in slot else v
    return out


def _series_mul(A, B):
    out = {}
    for ka, fa in A.items():
        for kb, fb in B.items():
            key = _mono_mul(ka, kb)
            slot = out.setdefault(key, {})
            for la, ca in fa.items():
                for lb, cb in fb.items():
                    lam = tuple(sorted(la + lb, reverse=True))
                    x = ca * cb
                    slot[lam] = slot[lam] + x if lam in slot else x
    return {k: {l: c for l, c in v.items() if not c.is_zero()} for k, v in out.items()}


def plethysm(F, alpha, z_window=None):
    """F[alpha] as {letter-monomial: SymFunc} (SymFunc in the symbolic X).

    ``z_window=(lo, hi)`` bounds the admissible powers of the letter ``z``;
    a term outside it raises ValueError.
    """
    cache = {}
    total = {}
    for lam, c in F._p().items():
        acc = {(): {(): c}}
        for k in lam:
            if k not in cache:
                cache[k] = _pk_alphabet(alpha, k)
            acc = _series_mul(acc, cache[k])
        for key, val in acc.items():
            slot = total.setdefault(key, {})
            for l, v in val.items():
                slot[l] = slot[l] + v if l in slot else v
    out = {}
    for key, val in total.items():
        f = SymFunc._fast({l: v for l, v in val.items() if not v.is_zero()})
        if f.terms:
            if z_window is not None:
                ze = dict(key).get("z", 0)
                if not z_window[0] <= ze <= z_window[1]:
                    raise ValueError("z-power %d outside window %r" % (ze, z_window))
            out[key] = f
    return out


def exp_series(coeffs, cap):
    """Coefficients of exp(sum_{k>=1} a_k u^k / k) in u up to u^cap.

    ``coeffs[k]`` is the p-basis dict of ``p_k[A]`` (so the plethystic
    exponential Exp[A u] results).  Uses n E_n = sum_j p_j[A] E_{n-j}.
    """
    E = [{(): ONE}]
    for n in range(1, cap + 1):
        acc = {}
        for j in range(1, n + 1):
            pj = coeffs(j)
            for la, ca in pj.items():
                for lb, cb in E[n - j].items():
                    lam = tuple(sorted(la + lb, reverse=True))
                    x = ca * cb
                    acc[lam] = acc[lam] + x if lam in acc else x
        inv = RatQT(Fraction(1, n))
        E.append({k: v * inv for k, v in acc.items() if not v.is_zero()})
    return E


def _exp_one_minus_t(cap):
    return exp_series(lambda k: {(k,): 1 - t ** k}, cap)


def jing_kernel(n, F):
    """B_n(F) = <z^n> F[X - 1/z] Exp[(1-t) z X], from z-series."""
    degF = max((sum(k) for k in F._p()), default=0)
    shifted = plethysm(F, Alphabet.X() - Alphabet.letter("z", -1), z_window=(-degF, 0))
    expo = _exp_one_minus_t(n + degF)
    out = SymFunc.zero()
    for key, G in shifted.items():
        zpow = dict(key).get("z", 0)
        need = n - zpow
        if 0 <= need < len(expo):
            out = out + G * SymFunc._fast(dict(expo[need]))
    return out


def dual_Q(lam):
    """Q_lam[X;t] = <z^lam> Exp[(1-t) sum z_i X] prod_{i<j} (1 - z_j/z_i)/(1 - t z_j/z_i)."""
    lam = _part(lam)
    r = len(lam)
    if r == 0:
        return SymFunc.one()
    expo = _exp_one_minus_t(sum(lam))
    acc = {}

    def pair_coeff(k):
        return ONE if k == 0 else (t - 1) * t ** (k - 1)

    # choose k_{ij} for i<j, column by column from the last variable
    def rec(j, avail_extra, kmat_weight, a):
        # avail_extra[j] = sum_{l>j} k_{j l} already chosen
        if j < 0:
            key = tuple(a)
            acc[key] = acc[key] + kmat_weight if key in acc else kmat_weight
            return
        budget = lam[j] + avail_extra[j]
        for ks, tot in _bounded_vectors(j, budget):
            w = kmat_weight
            for kk in ks:
                if kk:
                    w = w * pair_coeff(kk)
            extra = list(avail_extra)
            for i, kk in enumerate(ks):
                extra[i] += kk
            rec(j - 1, extra, w, [budget - tot] + a)

    rec(r - 1, [0] * r, ONE, [])
    out = SymFunc.zero()
    for avec, w in acc.items():
        if w.is_zero():
            continue
        term = SymFunc._fast({(): w})
        for ai in avec:
            if ai:
                term = term * SymFunc._fast(dict(expo[ai]))
        out = out + term
    return out


def _bounded_vectors(length, budget):
    """Vectors of `length` nonneg ints with sum <= budget, with their sums."""
    if length == 0:
        yield (), 0
        return
    for first in range(budget + 1):
        for rest, s in _bounded_vectors(length - 1, budget - first):
            yield (first,) + rest, first + s


# -- Macdonald P ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _macdonald_block(d):
    order = sorted(partitions(d))  # lexicographic increasing extends dominance
    done = {}
    norms = {}
    for lam in order:
        v = dict(SymFunc.basis_element("m", lam)._p())
        for mu in order:
            if mu == lam:
                break
            Pm = done[mu]
            c = qt_pairing(SymFunc._fast(v), SymFunc._fast(Pm)) / norms[mu]
            if c.is_zero():
                continue
            for k, x in Pm.items():
                y = x * c
                v[k] = v[k] - y if k in v else -y
            v = {k: x for k, x in v.items() if not x.is_zero()}
        done[lam] = v
        norms[lam] = qt_pairing(SymFunc._fast(v), SymFunc._fast(v))
    return done


def macdonald_P(lam):
    """P_lam[X; q, t] by Gram-Schmidt on the monomial basis."""
    lam = _part(lam)
    return SymFunc._fast(dict(_macdonald_block(sum(lam))[lam]))
