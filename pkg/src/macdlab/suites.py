"""Verification suites shared by the command line and the test-suite.

Every suite turns a config dict into a list of JSON-ready reports of the
form ``{"suite", "instance", "status", ...}``; a failing report carries a
``witness``.  Instances are independent, so ``run_suite`` can farm them out
to a process pool and sort the reports afterwards.
"""

import json
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .almost_sym import AlmostSym, truncate_pi, widen
from .combinatorics import compositions_upto, partitions
from .finite_daha import (
    E_eigensolve, E_hhl, E_intertwiner, FinitePoly, Y, alpha_finite,
    daha_relations, epsilon_kn, serialize as fp_serialize,
)
from .linalg import rank_at, rank_symbolic
from .qt_field import ZERO, SpecializationError, q, t
from .stable_limit import (
    A_lambda, A_lambda_oracle, E_tail_finite, E_tilde_pair, E_tilde_pair_finite,
    _cached_columns, _rows, deformed_Y_finite, kappa, psi_finite,
    psi_p1, psi_p1_diagonal, recurrences, stable_basis, stable_weight,
    verify_claimed_limit,
)
from .symfunc import dual_Q, hall_littlewood_P, hl_symmetrizer, v_lambda

__all__ = ["SUITES", "DEFAULTS", "run_suite", "summarize"]

DEFAULTS = {
    "daha-relations": {"n": None, "degree": 3},
    "hhl-oracle": {"max_size": 3, "n": 4},
    "tail-expansion": {"max_size": 3, "n": 2, "max_m": 3},
    "stable-weights": {"max": 3, "n": 2, "max_m": None},
    "basis-rank": {"degree": 4, "n": 3, "seed": 0, "oracle_trials": 2},
    "hl-duality": {"max_size": 6},
    "A-macdonald": {"max_size": 5},
    "recurrences": {"max_size": 3, "n": 3},
    "psi": {"max_size": 3, "n": 3, "lambda_size": 4},
    "convergence": {"max_size": 3, "n": 2, "max_m": None},
}


def _report(suite, instance, ok, **extra):
    rep = {"suite": suite, "instance": instance, "status": "pass" if ok else "fail"}
    rep.update(extra)
    return rep


def _mu_list(mu):
    return [int(x) for x in mu]


# -- finite rank -------------------------------------------------------------------

def _daha_instances(cfg):
    ns = [cfg["n"]] if cfg.get("n") else [3, 4]
    return [(n,) for n in ns]


def _daha_check(args, cfg):
    return daha_relations(args[0], cfg["degree"])


def _hhl_instances(cfg):
    out = []
    for L in range(1, cfg["n"] + 1):
        out += [(mu,) for mu in compositions_upto(cfg["max_size"], L)]
    return out


def _hhl_check(args, cfg):
    mu = args[0]
    a, b, c = E_hhl(mu), E_eigensolve(mu), E_intertwiner(mu)
    agree = a == b and b == c
    eig = all(Y(i, a) == a * w for i, w in enumerate(alpha_finite(mu), 1))
    rep = _report("hhl-oracle", {"mu": _mu_list(mu)}, agree and eig,
                  oracles_agree=agree, eigenvalues=eig, terms=len(a.terms))
    if not agree:
        bad = b if a != b else c
        rep["witness"] = {"E_hhl": fp_serialize(a, "text"), "other": fp_serialize(bad, "text")}
    return [rep]


def _tail_instances(cfg):
    out = []
    for L in range(1, cfg["n"] + 1):
        for mu in compositions_upto(cfg["max_size"], L):
            out += [(mu, m) for m in range(cfg["max_m"] + 1)]
    return out


def _tail_check(args, cfg):
    mu, m = args
    raw = E_hhl(mu + (0,) * m)
    ok = E_tail_finite(mu, m) == raw
    literal = E_tail_finite(mu, m, literal=True) == raw
    rep = _report("tail-expansion", {"mu": _mu_list(mu), "m": m}, ok,
                  literal_arm_convention="pass" if literal else "fail")
    if not ok:
        rep["witness"] = fp_serialize(E_tail_finite(mu, m) - raw, "text")
    return [rep]


# -- symmetric functions -------------------------------------------------------------

def _lam_instances(cfg):
    return [(lam,) for d in range(1, cfg["max_size"] + 1) for lam in partitions(d)]


def _hl_check(args, cfg):
    lam = args[0]
    J = hall_littlewood_P(lam)
    sym = hl_symmetrizer(lam) * (v_lambda(lam) * (1 - t) ** len(lam))
    ker = dual_Q(lam)
    a, b = J == sym, J == ker
    return [_report("hl-duality", {"lambda": list(lam)}, a and b,
                    symmetrizer=a, kernel=b)]


def _A_check(args, cfg):
    lam = args[0]
    return [_report("A-macdonald", {"lambda": list(lam)}, A_lambda(lam) == A_lambda_oracle(lam))]


# -- stable limits ---------------------------------------------------------------------

def _window_weight(idx, k):
    w = list(stable_weight(*idx))
    return tuple(w + [ZERO] * (k - len(w)))


def _basis_instances(cfg):
    return [(d, k) for d in range(cfg["degree"] + 1) for k in range(cfg["n"] + 1)]


def _basis_check(args, cfg):
    d, k = args
    cols = _cached_columns(d, k)
    order = list(cols)
    rows = list(_rows(cols).values())
    if d <= 3:
        method, rank = "symbolic", rank_symbolic(rows, order)
    else:
        method, rank = "random-rational", 0
        rng = random.Random(cfg["seed"] * 1000 + 10 * d + k)
        for _ in range(cfg["oracle_trials"]):
            q0 = Fraction(rng.randint(2, 97), rng.randint(1, 13))
            t0 = Fraction(rng.randint(2, 97), rng.randint(1, 13))
            try:
                rank = max(rank, rank_at(rows, order, q0, t0))
            except SpecializationError:
                continue
            if rank == len(order):
                break
    labels = [_window_weight(idx, k) + (kappa(idx[0] + idx[1]),) for idx in order]
    distinct = len(set(labels)) == len(labels)
    square = len(rows) == len(order)
    ok = square and rank == len(order) and distinct
    rep = _report("basis-rank", {"degree": d, "window": k}, ok, size=len(order),
                  rows=len(rows), rank=rank, method=method, labels_distinct=distinct)
    if not ok:
        rep["witness"] = "rank %d of %d, labels distinct: %s" % (rank, len(order), distinct)
    return [rep]


def _m_range(C, cfg):
    top = max(C + 3, cfg.get("max_m") or 0)
    return range(C, top + 1)


def _weights_instances(cfg):
    k = cfg["n"]
    return [(idx, i) for d in range(1, cfg["max"] + 1)
            for idx in stable_basis(d, k) for i in range(1, k + 1)]


def _weights_check(args, cfg):
    idx, i = args
    k = cfg["n"]
    E = widen(E_tilde_pair(*idx), k)
    a = _window_weight(idx, k)[i - 1]
    C = k + E.degree()
    gen = lambda m: deformed_Y_finite(i, E, m) - truncate_pi(E, m) * a
    r = verify_claimed_limit(gen, AlmostSym.zero(k), _m_range(C, cfg), C=C)
    inst = {"mu": _mu_list(idx[0]), "lambda": list(idx[1]), "i": i, "window": k}
    rep = _report("stable-weights", inst, r["status"] == "pass", weight=str(a))
    rep.update({key: r[key] for key in ("C", "m", "valuations", "min_valuation_margin", "monotone")})
    if "witness" in r:
        rep["witness"] = r["witness"]
    return [rep]


def _recurrence_instances(cfg):
    return [()]


def _recurrence_check(args, cfg):
    return recurrences(cfg["max_size"], cfg["n"])


def _psi_instances(cfg):
    out = [("E", idx) for d in range(cfg["max_size"] + 1) for idx in stable_basis(d, cfg["n"])]
    out += [("A", lam) for d in range(1, cfg["lambda_size"] + 1) for lam in partitions(d)]
    return out


def _psi_check(args, cfg):
    kind, idx = args
    if kind == "E":
        E = E_tilde_pair(*idx)
        ev = kappa(idx[0] + idx[1])
        proof = psi_p1(E)
        a, b = proof == psi_p1_diagonal(E), proof == E * ev
        inst = {"mu": _mu_list(idx[0]), "lambda": list(idx[1])}
        return [_report("psi", inst, a and b, paths_agree=a, eigenvalue=str(ev))]
    lam = idx
    A = AlmostSym.sym(A_lambda(lam), 0)
    # sum_{i >= 1} q^{lam_i} t^i, the zero parts summed as a geometric series
    ev = t ** (len(lam) + 1) / (1 - t)
    for i, part in enumerate(lam, 1):
        ev = ev + q ** part * t ** i
    ok = psi_p1(A) == A * ev
    return [_report("psi", {"A": list(lam)}, ok, eigenvalue=str(ev))]


def _convergence_instances(cfg):
    size, k = cfg["max_size"], cfg["n"]
    out = [("a", lam) for d in range(1, size + 1) for lam in partitions(d)]
    out += [("b", idx) for d in range(1, size + 1) for idx in stable_basis(d, k)]
    for d in range(1, size + 1):
        for L in range(1, k + 1):
            for a in compositions_upto(d, L):
                if sum(a) == d and a[-1] != 0:
                    out.append(("c", (a, ())))
        for idx in stable_basis(d, min(k, 1)):
            if idx[1]:
                out.append(("c*", idx))
    return out


def _convergence_check(args, cfg):
    fam, data = args
    if fam == "a":
        lam = data
        claimed = AlmostSym.sym(hall_littlewood_P(lam), 0)
        gen = lambda m: epsilon_kn(0, m, FinitePoly.monomial(lam + (0,) * (m - len(lam))))
        inst = {"family": "a", "lambda": list(lam)}
    elif fam == "b":
        mu, lam = data
        claimed = E_tilde_pair(mu, lam)
        gen = lambda m: E_tilde_pair_finite(mu, lam, m)
        inst = {"family": "b", "mu": _mu_list(mu), "lambda": list(lam)}
    else:
        if fam == "c":
            f = AlmostSym.x(data[0])
            inst = {"family": "c", "x": _mu_list(data[0])}
        else:
            f = E_tilde_pair(*data)
            inst = {"family": "c", "mu": _mu_list(data[0]), "lambda": list(data[1])}
        claimed = psi_p1(f)
        gen = lambda m: psi_finite(f, m)
    C = claimed.k + claimed.degree()
    r = verify_claimed_limit(gen, claimed, _m_range(C, cfg), C=C)
    rep = _report("convergence", inst, r["status"] == "pass")
    rep.update({key: r[key] for key in ("C", "m", "valuations", "min_valuation_margin", "monotone")})
    if "witness" in r:
        rep["witness"] = r["witness"]
    return [rep]


SUITES = {
    "daha-relations": (_daha_instances, _daha_check),
    "hhl-oracle": (_hhl_instances, _hhl_check),
    "tail-expansion": (_tail_instances, _tail_check),
    "stable-weights": (_weights_instances, _weights_check),
    "basis-rank": (_basis_instances, _basis_check),
    "hl-duality": (_lam_instances, _hl_check),
    "A-macdonald": (_lam_instances, _A_check),
    "recurrences": (_recurrence_instances, _recurrence_check),
    "psi": (_psi_instances, _psi_check),
    "convergence": (_convergence_instances, _convergence_check),
}


def _run_one(job):
    name, args, cfg = job
    return SUITES[name][1](args, cfg)


def _sort_key(rep):
    return json.dumps(rep["instance"], sort_keys=True)


def run_suite(name, config=None, jobs=1):
    """Run a suite; reports come back sorted by instance, whatever the pool order."""
    cfg = dict(DEFAULTS[name])
    cfg.update({key: v for key, v in (config or {}).items() if v is not None})
    instances = SUITES[name][0](cfg)
    work = [(name, args, cfg) for args in instances]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, work))
    else:
        chunks = [_run_one(job) for job in work]
    reports = [rep for chunk in chunks for rep in chunk]
    reports.sort(key=_sort_key)
    return reports


def summarize(name, reports):
    failed = sum(1 for r in reports if r["status"] != "pass")
    return {"suite": name, "summary": {"instances": len(reports), "failed": failed},
            "status": "pass" if failed == 0 else "fail"}
