"""Sparse exact linear algebra over Q(q, t) and over Q.

Rows are dicts ``{column: value}``.  Elimination is fraction-field
Gauss-Jordan; columns are pivoted in the order given, so passing a
triangular-friendly column order keeps fill-in small.
"""

from fractions import Fraction

from .qt_field import RatQT, specialize

__all__ = ["rref", "nullspace", "solve", "rank_at", "rank_symbolic", "specialize_rows"]


def _is_zero(x):
    return x.is_zero() if isinstance(x, RatQT) else x == 0


def _inv(x):
    return x.inverse() if isinstance(x, RatQT) else 1 / x


def rref(rows, columns):
    """Reduced row echelon form. Returns (pivot_rows, pivot_cols)."""
    rows = [dict(r) for r in rows if r]
    pivots = []
    prow = []
    for col in columns:
        k = next((i for i, r in enumerate(rows) if col in r and not _is_zero(r[col])), None)
        if k is None:
            continue
        r = rows.pop(k)
        inv = _inv(r[col])
        r = {c: v * inv for c, v in r.items()}
        r[col] = RatQT(1) if isinstance(r[col], RatQT) else Fraction(1)
        # eliminate col from remaining and from earlier pivots
        new_rows = []
        for other in rows:
            f = other.get(col)
            if f is None or _is_zero(f):
                new_rows.append(other)
                continue
            o = dict(other)
            for c, v in r.items():
                x = o.get(c)
                y = v * f
                o[c] = (x - y) if x is not None else -y
            o = {c: v for c, v in o.items() if not _is_zero(v)}
            if o:
                new_rows.append(o)
        rows = new_rows
        for j, pr in enumerate(prow):
            f = pr.get(col)
            if f is None or _is_zero(f):
                continue
            o = dict(pr)
            for c, v in r.items():
                x = o.get(c)
                y = v * f
                o[c] = (x - y) if x is not None else -y
            prow[j] = {c: v for c, v in o.items() if not _is_zero(v)}
        pivots.append(col)
        prow.append(r)
    return prow, pivots


def nullspace(rows, columns):
    """Basis of {v : rows . v = 0}, each vector a dict over columns."""
    prow, pivots = rref(rows, columns)
    free = [c for c in columns if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = {fcol: RatQT(1)}
        for pc, r in zip(pivots, prow):
            x = r.get(fcol)
            if x is not None and not _is_zero(x):
                v[pc] = -x
        basis.append(v)
    return basis


def solve(rows, rhs, columns):
    """Solve rows . v = rhs (rhs a list aligned with rows); raises if inconsistent."""
    marker = object()
    aug = []
    for r, b in zip(rows, rhs):
        a = dict(r)
        if not _is_zero(b):
            a[marker] = b
        aug.append(a)
    prow, pivots = rref(aug, list(columns) + [marker])
    if marker in pivots:
        raise ValueError("inconsistent linear system")
    sol = {}
    for pc, r in zip(pivots, prow):
        x = r.get(marker)
        if x is not None:
            sol[pc] = x
    return sol


def specialize_rows(rows, q0, t0):
    return [{c: specialize(v, q0, t0) for c, v in r.items()} for r in rows]


def rank_at(rows, columns, q0, t0):
    """Rank after substituting rational (q0, t0); raises SpecializationError at poles."""
    return len(rref(specialize_rows(rows, q0, t0), columns)[1])


def rank_symbolic(rows, columns):
    return len(rref(rows, columns)[1])
