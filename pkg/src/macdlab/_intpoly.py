"""Pure-Python bivariate integer polynomials in q and t.

Reference backend for :mod:`macdlab.qt_field`.  It implements the small
surface that the rational-function layer needs (ring operations, exact
division, gcd, low-term coefficient) and mirrors the call conventions of
``flint.fmpz_mpoly`` so the two can be swapped.

Terms are stored as ``{(i, j): c}`` meaning ``c * q**i * t**j``.
"""

from math import gcd as igcd


# -- dense univariate helpers over Z (lists, low degree first) --------------

def _utrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _uadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return _utrim(r)


def _usub(a, b):
    r = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        r[i] -= c
    return _utrim(r)


def _umul(a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _utrim(r)


def _ucontent(a):
    g = 0
    for c in a:
        g = igcd(g, c)
    return g


def _udivexact(a, b):
    """Exact division in Z[q]; raises ValueError if inexact."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        if a:
            raise ValueError("inexact division")
        return []
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if c % lb:
            raise ValueError("inexact division")
        m = c // lb
        out[k - db] = m
        for i, y in enumerate(b):
            a[k - db + i] -= m * y
    if any(a):
        raise ValueError("inexact division")
    return _utrim(out)


def _uprem(a, b):
    """Pseudo-remainder of a by b in Z[q]."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _utrim(a)
    return a


def _uprimitive(a):
    if not a:
        return a, 0
    c = _ucontent(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a], c


def _upositive(a):
    return [-x for x in a] if a and a[-1] < 0 else list(a)


def _ugcd(a, b):
    # gcd(0, b) = b up to sign; keep its integer content
    if not a:
        return _upositive(b)
    if not b:
        return _upositive(a)
    c = igcd(_ucontent(a), _ucontent(b))
    a, b = _uprimitive(a)[0], _uprimitive(b)[0]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _uprem(a, b)
        a, b = b, (_uprimitive(r)[0] if r else [])
    a = _uprimitive(a)[0]
    return [c * x for x in a]


# -- Z[q][t] helpers: lists (indexed by t-degree) of Z[q] lists ---------------

def _bcontent(A):
    g = []
    for c in A:
        if c:
            g = _ugcd(g, c)
            if len(g) == 1 and abs(g[0]) == 1:
                return [1]
    return g


def _bdiv_scalar(A, c):
    return [_udivexact(x, c) if x else [] for x in A]


def _btrim(A):
    while A and not A[-1]:
        A.pop()
    return A


def _bprem(A, B):
    A = [list(x) for x in A]
    db, lb = len(B) - 1, B[-1]
    while A and len(A) - 1 >= db:
        c = A[-1]
        shift = len(A) - 1 - db
        A = [_umul(lb, x) for x in A]
        for i, y in enumerate(B):
            A[shift + i] = _usub(A[shift + i], _umul(c, y))
        _btrim(A)
    return A


def _bprimitive(A):
    c = _bcontent(A)
    if c == [1]:
        return A, c
    return _bdiv_scalar(A, c), c


def _bgcd(A, B):
    if not A:
        return B
    if not B:
        return A
    ca, cb = _bcontent(A), _bcontent(B)
    cont = _ugcd(ca, cb)
    A = _bdiv_scalar(A, ca)
    B = _bdiv_scalar(B, cb)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _bprem(A, B)
        A, B = B, (_bprimitive(R)[0] if R else [])
    A = _bprimitive(A)[0]
    return [_umul(cont, x) for x in A]


class IntPoly2:
    """Polynomial in Z[q, t] with a dict of exponent pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def gen(cls, name):
        return cls({(1, 0): 1} if name == "q" else {(0, 1): 1})

    def _coerce(self, other):
        if isinstance(other, IntPoly2):
            return other
        if isinstance(other, int):
            return IntPoly2(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = dict(self.terms)
        for k, v in other.terms.items():
            r[k] = r.get(k, 0) + v
        return IntPoly2(r)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                r[k] = r.get(k, 0) + u * v
        return IntPoly2(r)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = IntPoly2(1)
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def to_qt_dict(self):
        return dict(self.terms)

    def __repr__(self):
        return "IntPoly2(%r)" % (self.terms,)

    # dense Z[q][t] conversions
    def _dense(self):
        if not self.terms:
            return []
        dt = max(j for _, j in self.terms)
        A = [[] for _ in range(dt + 1)]
        for (i, j), c in self.terms.items():
            row = A[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [_utrim(r) for r in A]

    @classmethod
    def _from_dense(cls, A):
        d = {}
        for j, row in enumerate(A):
            for i, c in enumerate(row):
                if c:
                    d[i, j] = c
        return cls(d)

    def gcd(self, other):
        return IntPoly2._from_dense(_bgcd(self._dense(), other._dense()))

    def __truediv__(self, other):
        """Exact division; raises ValueError when the quotient is not a polynomial."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        key = lambda m: (m[1], m[0])  # lex with t > q
        lm = max(other.terms, key=key)
        lc = other.terms[lm]
        rem = dict(self.terms)
        quo = {}
        while rem:
            m = max(rem, key=key)
            c = rem[m]
            e = (m[0] - lm[0], m[1] - lm[1])
            if e[0] < 0 or e[1] < 0 or c % lc:
                raise ValueError("inexact division")
            k = c // lc
            quo[e] = k
            for (a, b), v in other.terms.items():
                mm = (a + e[0], b + e[1])
                r = rem.get(mm, 0) - k * v
                if r:
                    rem[mm] = r
                else:
                    rem.pop(mm, None)
        return IntPoly2(quo)
