"""Exact arithmetic in the field Q(q, t).

``RatQT`` stores a reduced fraction ``num/den`` of integer polynomials in
``q`` and ``t``.  The canonical form has ``gcd(num, den) = 1`` and the
graded-lex smallest term of ``den`` (with ``q < t``) carrying a positive
coefficient, so ``1 - t`` and ``q - t**3`` are kept as written and equality
is structural.  Zero is ``0/1``.

Polynomial arithmetic is delegated to a backend.  ``python-flint`` is used
when importable; :mod:`macdlab._intpoly` is the pure-Python fallback and
can be forced with ``MACDLAB_BACKEND=python``.
"""

import os
import re
from fractions import Fraction

from ._intpoly import IntPoly2

__all__ = [
    "RatQT", "q", "t", "ZERO", "ONE", "parse_ratqt", "t_adic_val",
    "specialize", "SpecializationError", "backend_name", "qint", "qfact",
]


class SpecializationError(ZeroDivisionError):
    """Raised when a denominator vanishes at a specialization point."""


class _PythonBackend:
    name = "python"

    def __init__(self):
        self.zero = IntPoly2(0)
        self.one = IntPoly2(1)
        self.q = IntPoly2.gen("q")
        self.t = IntPoly2.gen("t")

    def const(self, n):
        return IntPoly2(int(n))

    def terms(self, p):
        return p.terms

    def from_terms(self, d):
        return IntPoly2(d)

    def low_coeff(self, p):
        return p.terms[min(p.terms, key=lambda m: (m[0] + m[1], m[1], m[0]))]


class _FlintBackend:
    name = "flint"

    def __init__(self, flint):
        # ordering (t, q) under deglex puts t above q, so the last term of
        # the descending term list is the graded-lex minimum with q < t
        self.ctx = flint.fmpz_mpoly_ctx.get(("t", "q"), "deglex")
        self.t, self.q = self.ctx.gens()
        self.zero = self.ctx.from_dict({})
        self.one = self.ctx.from_dict({(0, 0): 1})

    def const(self, n):
        return self.ctx.from_dict({(0, 0): int(n)}) if n else self.zero

    def terms(self, p):
        return {(int(i), int(j)): int(c) for (j, i), c in p.to_dict().items()}

    def from_terms(self, d):
        return self.ctx.from_dict({(j, i): c for (i, j), c in d.items() if c})

    def low_coeff(self, p):
        return int(p.coeffs()[-1])


def _pick_backend():
    want = os.environ.get("MACDLAB_BACKEND", "").lower()
    if want != "python":
        try:
            import flint
            return _FlintBackend(flint)
        except ImportError:
            if want == "flint":
                raise
    return _PythonBackend()


_B = _pick_backend()


def backend_name():
    return _B.name


def _poly_of(x):
    if isinstance(x, int):
        return _B.const(x)
    return x


class RatQT:
    """Element of Q(q, t) in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatQT):
            if den == 1:
                self.num, self.den = num.num, num.den
                return
            r = num / RatQT(den)
            self.num, self.den = r.num, r.den
            return
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * den
        elif isinstance(num, str):
            r = parse_ratqt(num)
            self.num, self.den = r.num, r.den
            return
        self.num, self.den = _normalize(_poly_of(num), _poly_of(den))

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_terms(cls, num_terms, den_terms=None):
        """Build from ``{(i, j): c}`` dicts meaning ``c*q^i*t^j``; negative
        exponents are allowed and cleared."""
        den_terms = den_terms or {(0, 0): 1}
        mq = min([0] + [i for i, _ in num_terms] + [i for i, _ in den_terms])
        mt = min([0] + [j for _, j in num_terms] + [j for _, j in den_terms])
        n = _B.from_terms({(i - mq, j - mt): c for (i, j), c in num_terms.items()})
        d = _B.from_terms({(i - mq, j - mt): c for (i, j), c in den_terms.items()})
        return cls(n, d)

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls.from_terms({(i, j): c})

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(x):
        if isinstance(x, RatQT):
            return x
        if isinstance(x, (int, Fraction)):
            return RatQT(x)
        return NotImplemented

    def __add__(self, other):
        other = RatQT._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            n = a + c
            if n.is_zero():
                return RatQT._raw(_B.zero, _B.one)
            if b.is_one():
                return RatQT._raw(n, b)
            g = n.gcd(b)
            if g.is_one():
                return RatQT._raw(n, b)
            return RatQT._raw(n / g, b / g)._fix_sign()
        if b.is_one():
            return RatQT._raw(a * d + c, d)
        if d.is_one():
            return RatQT._raw(a + c * b, b)
        return RatQT(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return RatQT._raw(-self.num, self.den)

    def __sub__(self, other):
        other = RatQT._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatQT._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatQT._raw(_B.zero, _B.one)
        if b.is_one() and d.is_one():
            return RatQT._raw(a * c, b)
        if not d.is_one():
            g = a.gcd(d)
            if not g.is_one():
                a, d = a / g, d / g
        if not b.is_one():
            g = c.gcd(b)
            if not g.is_one():
                c, b = c / g, b / g
        return RatQT._raw(a * c, b * d)._fix_sign()

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return RatQT._raw(self.den, self.num)._fix_sign()

    def __truediv__(self, other):
        other = RatQT._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatQT._lift(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatQT._raw(self.num ** e, self.den ** e)

    def _fix_sign(self):
        if _B.low_coeff(self.den) < 0:
            self.num, self.den = -self.num, -self.den
        return self

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        other = RatQT._lift(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(_B.terms(self.num).items()),
                     frozenset(_B.terms(self.den).items())))

    # -- structure ----------------------------------------------------------
    def num_terms(self):
        return dict(_B.terms(self.num))

    def den_terms(self):
        return dict(_B.terms(self.den))

    def t_adic_val(self):
        return t_adic_val(self)

    def specialize(self, q0, t0):
        return specialize(self, q0, t0)

    def subs_power(self, kq, kt=None):
        """Substitute ``q -> q**kq`` and ``t -> t**kt`` (``kt`` defaults to ``kq``)."""
        if kt is None:
            kt = kq
        if kq == 1 and kt == 1:
            return self
        n = {(i * kq, j * kt): c for (i, j), c in _B.terms(self.num).items()}
        d = {(i * kq, j * kt): c for (i, j), c in _B.terms(self.den).items()}
        return RatQT.from_terms(n, d)

    def invert_q(self):
        """Substitute ``q -> 1/q``."""
        return self.subs_power(-1, 1)

    def subs(self, qv=None, tv=None):
        """Substitute ``RatQT`` values for q and/or t."""
        qv = q if qv is None else RatQT(qv)
        tv = t if tv is None else RatQT(tv)
        return _eval_poly(self.num, qv, tv) / _eval_poly(self.den, qv, tv)

    def __str__(self):
        n = _poly_str(_B.terms(self.num))
        if self.den.is_one():
            return n
        d = _poly_str(_B.terms(self.den))
        if len(_B.terms(self.num)) > 1:
            n = "(" + n + ")"
        if len(_B.terms(self.den)) > 1 or "*" in d:
            d = "(" + d + ")"
        return n + "/" + d

    def __repr__(self):
        return "RatQT(%r)" % str(self)


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return _B.zero, _B.one
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num, den = num / g, den / g
        if _B.low_coeff(den) < 0:
            num, den = -num, -den
    return num, den


def _eval_poly(p, qv, tv):
    acc = RatQT(0)
    for (i, j), c in _B.terms(p).items():
        acc = acc + RatQT(c) * qv ** i * tv ** j
    return acc


def _mono_str(i, j):
    parts = []
    if i:
        parts.append("q" if i == 1 else "q^%d" % i)
    if j:
        parts.append("t" if j == 1 else "t^%d" % j)
    return "*".join(parts)


def _poly_str(terms):
    if not terms:
        return "0"
    out = []
    for (i, j) in sorted(terms, key=lambda m: (m[0] + m[1], m[1], m[0])):
        c = terms[i, j]
        m = _mono_str(i, j)
        a = abs(c)
        body = str(a) if not m else (m if a == 1 else "%d*%s" % (a, m))
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


q = RatQT(_B.q)
t = RatQT(_B.t)
ZERO = RatQT(0)
ONE = RatQT(1)


def qint(n, var=None):
    """The quantum integer ``[n]_t = (1 - t^n)/(1 - t)``."""
    v = t if var is None else var
    acc = RatQT(0)
    for i in range(n):
        acc = acc + v ** i
    return acc


def qfact(n, var=None):
    acc = RatQT(1)
    for i in range(1, n + 1):
        acc = acc * qint(i, var)
    return acc


def t_adic_val(x):
    """Valuation in Q(q)((t)); ``inf`` for zero."""
    if isinstance(x, (int, Fraction)):
        return float("inf") if x == 0 else 0
    if x.is_zero():
        return float("inf")
    vn = min(j for _, j in _B.terms(x.num))
    vd = min(j for _, j in _B.terms(x.den))
    return vn - vd


def _peval(terms, q0, t0):
    return sum((c * q0 ** i * t0 ** j for (i, j), c in terms.items()), Fraction(0))


def specialize(x, q0, t0):
    """Evaluate at rational ``(q0, t0)``; raises SpecializationError on a pole."""
    q0, t0 = Fraction(q0), Fraction(t0)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    d = _peval(_B.terms(x.den), q0, t0)
    if d == 0:
        raise SpecializationError("denominator %s vanishes at q=%s, t=%s"
                                  % (_poly_str(_B.terms(x.den)), q0, t0))
    return _peval(_B.terms(x.num), q0, t0) / d


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qt])|(\*\*|[-+*/^()]))")


def parse_ratqt(s):
    """Parse expressions in q, t with + - * / ^ (or **) and parentheses."""
    toks = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse %r at %d" % (s, pos))
        pos = m.end()
        if m.group(1):
            toks.append(("n", int(m.group(1))))
        elif m.group(2):
            toks.append(("v", m.group(2)))
        else:
            op = m.group(3)
            toks.append(("o", "^" if op == "**" else op))
    toks.append(("end", None))
    p = _Parser(toks)
    r = p.expr()
    if p.peek() != ("end", None):
        raise ValueError("trailing input in %r" % s)
    return r


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in (("o", "+"), ("o", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in (("o", "*"), ("o", "/")):
            op = self.take()[1]
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self):
        if self.peek() == ("o", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("o", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("o", "^"):
            self.take()
            sign = 1
            if self.peek() == ("o", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "n":
                raise ValueError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "n":
            return RatQT(val)
        if kind == "v":
            return q if val == "q" else t
        if (kind, val) == ("o", "("):
            r = self.expr()
            if self.take() != ("o", ")"):
                raise ValueError("unbalanced parentheses")
            return r
        raise ValueError("unexpected token %r" % (val,))
