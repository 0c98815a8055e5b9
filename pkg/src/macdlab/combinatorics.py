"""Compositions, partitions, Bruhat order and HHL fillings.

Compositions are tuples of non-negative ints.  Boxes of a diagram are
``(column, row)`` pairs, 1-based, with row 0 the augmented basement whose
box in column ``i`` carries label ``i``.
"""

from functools import lru_cache
from itertools import permutations

from .qt_field import RatQT, q, t

__all__ = [
    "partitions", "partitions_upto", "weak_compositions", "compositions_upto",
    "reduced", "is_partition", "concat", "sort_desc", "sort_partition", "multiplicities",
    "beta", "dominates", "bruhat_leq", "bruhat_less", "bruhat_covers_up",
    "orbit", "leg", "arm", "attacking", "reading_key", "descents", "hhl_stats",
    "enumerate_nonattacking", "filling_weight", "is_nonattacking",
    "sorting_chain",
]


# -- partitions and compositions ------------------------------------------

@lru_cache(maxsize=None)
def _parts(n, cap):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _parts(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n):
    """Partitions of n, reverse lexicographic (largest first)."""
    return list(_parts(n, n))


def partitions_upto(n):
    return [lam for k in range(n + 1) for lam in partitions(k)]


@lru_cache(maxsize=None)
def _weak(n, k):
    if k == 0:
        return ((),) if n == 0 else ()
    return tuple((a,) + rest for a in range(n, -1, -1) for rest in _weak(n - a, k - 1))


def weak_compositions(n, k):
    """All length-k vectors of non-negative ints summing to n."""
    return list(_weak(n, k))


def compositions_upto(size, length):
    """Weak compositions of every size <= ``size`` with exactly ``length`` parts."""
    return [c for s in range(size + 1) for c in weak_compositions(s, length)]


def reduced(mu):
    """Strip trailing zeros."""
    mu = tuple(mu)
    k = len(mu)
    while k and mu[k - 1] == 0:
        k -= 1
    return mu[:k]


def is_partition(lam):
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(x > 0 for x in lam)


def concat(*parts):
    out = ()
    for p in parts:
        out += tuple(p)
    return out


def sort_desc(mu):
    """Decreasing rearrangement, same length."""
    return tuple(sorted(mu, reverse=True))


def sort_partition(mu):
    """The partition sort(mu): decreasing rearrangement without zeros."""
    return reduced(sort_desc(mu))


def multiplicities(lam):
    m = {}
    for x in lam:
        m[x] = m.get(x, 0) + 1
    return m


def beta(mu):
    """beta_mu(i) = #{j <= i: mu_j <= mu_i} + #{j > i: mu_i > mu_j}, 1-based output list."""
    n = len(mu)
    return [sum(1 for j in range(i + 1) if mu[j] <= mu[i])
            + sum(1 for j in range(i + 1, n) if mu[i] > mu[j]) for i in range(n)]


# -- Bruhat order -----------------------------------------------------------

def dominates(lam, mu):
    """lam >= mu in dominance (both weakly decreasing, equal size)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _sorting_perm(alpha):
    # stable rank of each position in the decreasing sort: the minimal
    # permutation carrying alpha to its sorted rearrangement
    order = sorted(range(len(alpha)), key=lambda i: (-alpha[i], i))
    w = [0] * len(alpha)
    for r, i in enumerate(order):
        w[i] = r
    return w


def _perm_leq(u, v):
    """Bruhat order on permutations (one-line) via rank counts."""
    n = len(u)
    for i in range(n):
        pu = sorted(u[:i + 1], reverse=True)
        pv = sorted(v[:i + 1], reverse=True)
        if any(a > b for a, b in zip(pu, pv)):
            return False
    return True


def bruhat_leq(alpha, beta_):
    alpha, beta_ = tuple(alpha), tuple(beta_)
    if len(alpha) != len(beta_) or sum(alpha) != sum(beta_):
        return False
    if alpha == beta_:
        return True
    sa, sb = sort_desc(alpha), sort_desc(beta_)
    if sa != sb:
        return dominates(sb, sa)
    return _perm_leq(_sorting_perm(alpha), _sorting_perm(beta_))


def bruhat_less(alpha, beta_):
    return tuple(alpha) != tuple(beta_) and bruhat_leq(alpha, beta_)


def orbit(alpha):
    return sorted(set(permutations(alpha)))


def bruhat_covers_up(alpha):
    """Elements covering alpha inside its permutation orbit."""
    alpha = tuple(alpha)
    up = [g for g in orbit(alpha) if bruhat_less(alpha, g)]
    return [g for g in up if not any(bruhat_less(d, g) for d in up if d != g)]


def sorting_chain(mu):
    """Chain of adjacent swaps building mu from its decreasing rearrangement.

    Returns ``(base, steps)``; applying ``s_i`` for ``i`` in ``steps`` (1-based)
    to ``base`` in order walks up the Bruhat order to ``mu``.  Each step acts
    on a vector whose entries at ``i, i+1`` are strictly decreasing.
    """
    cur = list(mu)
    down = []
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if cur[i] < cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                down.append(i + 1)
                changed = True
    return tuple(cur), down[::-1]


# -- diagram statistics -----------------------------------------------------

def leg(mu, box):
    i, j = box
    return mu[i - 1] - j


def arm(mu, box):
    i, j = box
    mi = mu[i - 1]
    n = len(mu)
    left = sum(1 for k in range(1, i) if mu[k - 1] <= mi and mu[k - 1] >= j)
    right = sum(1 for k in range(i + 1, n + 1) if mu[k - 1] < mi and mu[k - 1] >= j - 1)
    return left + right


def attacking(u, v):
    (i, j), (k, l) = u, v
    if u == v:
        return False
    if j == l:
        return True
    if j == l + 1:
        return k > i
    if l == j + 1:
        return i > k
    return False


def reading_key(box):
    i, j = box
    return (-j, -i)


def _boxes(mu):
    return [(i, j) for i in range(1, len(mu) + 1) for j in range(1, mu[i - 1] + 1)]


def _label(filling, box):
    i, j = box
    return i if j == 0 else filling[i - 1][j - 1]


def descents(mu, filling):
    return [b for b in _boxes(mu) if _label(filling, b) > _label(filling, (b[0], b[1] - 1))]


def is_nonattacking(mu, filling):
    full = _boxes(mu) + [(i, 0) for i in range(1, len(mu) + 1)]
    for a in range(len(full)):
        for b in range(a + 1, len(full)):
            u, v = full[a], full[b]
            if attacking(u, v) and _label(filling, u) == _label(filling, v):
                return False
    return True


def hhl_stats(mu, filling):
    """maj, |Inv|, inv and coinv of a filling (columns of labels, rows >= 1)."""
    mu = tuple(mu)
    n = len(mu)
    boxes = _boxes(mu)
    full = sorted(boxes + [(i, 0) for i in range(1, n + 1)], key=reading_key)
    inv_pairs = 0
    for a in range(len(full)):
        u = full[a]
        lu = _label(filling, u)
        for b in range(a + 1, len(full)):
            v = full[b]
            if attacking(u, v) and lu > _label(filling, v):
                inv_pairs += 1
    des = descents(mu, filling)
    maj = sum(leg(mu, u) + 1 for u in des)
    weak_pairs = sum(1 for i in range(n) for j in range(i + 1, n) if mu[i] <= mu[j])
    inv = inv_pairs - weak_pairs - sum(arm(mu, u) for u in des)
    coinv = sum(arm(mu, u) for u in boxes) - inv
    return {"maj": maj, "Inv": inv_pairs, "inv": inv, "coinv": coinv, "descents": des}


def enumerate_nonattacking(mu, n_labels=None, tail=None):
    """Yield non-attacking fillings of the augmented diagram of ``mu``.

    Labels lie in ``1..n_labels`` (default ``len(mu)``).  With ``tail`` a
    partition nu, the last ``len(nu)`` labels ``n_labels - len(nu) + i`` must
    each occur exactly ``nu_i`` times.  Boxes are filled in reading order so
    every attacking pair is checked once, against its earlier partner.
    """
    mu = tuple(mu)
    n = len(mu)
    N = n if n_labels is None else n_labels
    tail = tuple(tail or ())
    t0 = N - len(tail)
    boxes = sorted(_boxes(mu), key=reading_key)
    pos = {b: k for k, b in enumerate(boxes)}
    earlier = []
    for k, (i, j) in enumerate(boxes):
        prev = [pos[b] for b in boxes[:k] if attacking(b, (i, j))]
        fixed = set(range(i + 1, n + 1)) if j == 1 else set()
        earlier.append((prev, fixed))
    labels = [0] * len(boxes)
    counts = [0] * len(tail)
    need = sum(tail)

    def rec(k, remaining_tail):
        if k == len(boxes):
            if remaining_tail == 0:
                cols = [[0] * mu[i] for i in range(n)]
                for (i, j), lab in zip(boxes, labels):
                    cols[i - 1][j - 1] = lab
                yield tuple(tuple(c) for c in cols)
            return
        if remaining_tail > len(boxes) - k:
            return
        prev, fixed = earlier[k]
        banned = fixed | {labels[p] for p in prev}
        for lab in range(1, N + 1):
            if lab in banned:
                continue
            if lab > t0:
                ti = lab - t0 - 1
                if counts[ti] >= tail[ti]:
                    continue
                counts[ti] += 1
                labels[k] = lab
                yield from rec(k + 1, remaining_tail - 1)
                counts[ti] -= 1
            else:
                labels[k] = lab
                yield from rec(k + 1, remaining_tail)

    yield from rec(0, need)


def filling_weight(mu, filling, n_labels=None, row1="finite", shift=0):
    """Monomial exponent and coefficient of one HHL term.

    ``row1`` selects the factor for differing boxes in row 1: ``"finite"``
    gives (1-t)/(1-q^-(leg+1) t^(a+1)), ``"shift"`` uses t^(a+shift+1),
    ``"stable"`` uses the bare (1-t).
    """
    mu = tuple(mu)
    N = len(mu) if n_labels is None else n_labels
    st = hhl_stats(mu, filling)
    expo = [0] * N
    coeff = RatQT.monomial(-st["maj"], st["coinv"])
    one_minus_t = 1 - t
    for (i, j) in _boxes(mu):
        lab = filling[i - 1][j - 1]
        expo[lab - 1] += 1
        if lab == _label(filling, (i, j - 1)):
            continue
        if j == 1 and row1 == "stable":
            coeff = coeff * one_minus_t
            continue
        a = arm(mu, (i, j)) + (shift if (j == 1 and row1 == "shift") else 0)
        coeff = coeff * one_minus_t / (1 - q ** (-(leg(mu, (i, j)) + 1)) * t ** (a + 1))
    return tuple(expo), coeff
