"""``macdlab``: compute objects and run verification suites.

    macdlab compute Etilde --mu 1,1,1
    macdlab compute weight --mu 2 --lambda ""
    macdlab verify hhl-oracle --max-size 4

Verification reports are JSON lines sorted by instance, followed by one
summary line; the exit status is 0 exactly when every instance passes.
Caps come from ``MACDLAB_CAPS`` (a JSON object) layered over the defaults.
"""

import argparse
import json
import os
import sys

from . import almost_sym, finite_daha
from .almost_sym import AlmostSym
from .stable_limit import (
    A_lambda, E_tilde, E_tilde_pair, is_reduced, kappa, gamma, stable_weight,
)
from .suites import DEFAULTS, SUITES, run_suite, summarize
from .symfunc import hall_littlewood_P, macdonald_P

DEFAULT_CAPS = {"max_degree": 8, "max_window": 6, "max_m": 12, "oracle_trials": 2}

OBJECTS = ("E", "Etilde", "EtildePair", "A", "HL", "MacP", "weight", "kappa", "gamma")


class UsageError(Exception):
    pass


def load_caps(env=None):
    env = os.environ if env is None else env
    caps = dict(DEFAULT_CAPS)
    raw = env.get("MACDLAB_CAPS")
    if raw:
        try:
            extra = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise UsageError("MACDLAB_CAPS is not valid JSON: %s" % exc)
        if not isinstance(extra, dict):
            raise UsageError("MACDLAB_CAPS must be a JSON object")
        unknown = set(extra) - set(caps)
        if unknown:
            raise UsageError("unknown caps: %s" % ", ".join(sorted(unknown)))
        caps.update(extra)
    for key, v in caps.items():
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise UsageError("cap %s must be a positive integer" % key)
    return caps


def parse_index(text, what="--mu"):
    """'2,0,1' -> (2, 0, 1); '' -> ()."""
    if text is None:
        return ()
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("malformed index for %s: %r" % (what, text))
    if any(x < 0 for x in parts):
        raise UsageError("negative entry in %s: %r" % (what, text))
    return parts


def _partition(lam, what="--lambda"):
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] == 0):
        raise UsageError("%s must be a partition (weakly decreasing, positive)" % what)
    return lam


def _check_caps(caps, degree=0, window=0, m=0):
    if degree > caps["max_degree"]:
        raise UsageError("degree %d exceeds cap max_degree=%d" % (degree, caps["max_degree"]))
    if window > caps["max_window"]:
        raise UsageError("window %d exceeds cap max_window=%d" % (window, caps["max_window"]))
    if m > caps["max_m"]:
        raise UsageError("m %d exceeds cap max_m=%d" % (m, caps["max_m"]))


# -- compute -----------------------------------------------------------------------

def _weight_text(w):
    return "(" + ", ".join([str(x) for x in w] + ["0", "..."]) + ")"


def _sym_json(F, basis):
    G = F.to(basis)
    return {"basis": basis, "terms": [{"lambda": list(lam), "coeff": str(G.terms[lam])}
                                      for lam in sorted(G.terms, reverse=True)]}


def compute(obj, mu, lam, n=None, fmt="text", basis=None, caps=None):
    """Serialized output for one object."""
    caps = caps or dict(DEFAULT_CAPS)
    _check_caps(caps, degree=sum(mu) + sum(lam), window=max(len(mu), n or 0))
    if obj == "E":
        if lam:
            raise UsageError("E takes --mu only")
        if not mu:
            raise UsageError("E needs a nonempty --mu")
        if n is not None:
            if n < len(mu):
                raise UsageError("--n smaller than the length of --mu")
            mu = mu + (0,) * (n - len(mu))
        f = finite_daha.E_hhl(mu)
        if fmt == "json":
            keys = sorted(f.terms, key=lambda a: (-sum(a), tuple(-x for x in a)))
            return json.dumps({"object": "E", "mu": list(mu), "n": len(mu),
                               "terms": [{"x": list(a), "coeff": str(f.terms[a])} for a in keys]})
        return finite_daha.serialize(f, "text")
    if obj in ("Etilde", "EtildePair"):
        if not is_reduced(mu):
            raise UsageError("--mu must be reduced (no trailing zeros) for %s" % obj)
        if obj == "Etilde":
            if lam:
                raise UsageError("Etilde takes --mu only; use EtildePair")
            f = E_tilde(mu)
        else:
            f = E_tilde_pair(mu, _partition(lam))
        return almost_sym.serialize(f, fmt, basis=basis or "m")
    if obj in ("A", "HL", "MacP"):
        part = _partition(lam if lam else mu)
        F = {"A": A_lambda, "HL": hall_littlewood_P, "MacP": macdonald_P}[obj](part)
        if fmt == "json":
            out = {"object": obj, "lambda": list(part)}
            out.update(_sym_json(F, basis or "m"))
            return json.dumps(out)
        return almost_sym.serialize(AlmostSym.sym(F, 0), "text", basis=basis or "m")
    if obj == "weight":
        if not is_reduced(mu):
            raise UsageError("--mu must be reduced for weight")
        w = stable_weight(mu, _partition(lam))
        if fmt == "json":
            return json.dumps({"object": "weight", "mu": list(mu), "lambda": list(lam),
                               "weight": [str(x) for x in w]})
        return _weight_text(w)
    if obj in ("kappa", "gamma"):
        value = (kappa if obj == "kappa" else gamma)(mu + lam)
        if fmt == "json":
            return json.dumps({"object": obj, "mu": list(mu), "lambda": list(lam), "value": str(value)})
        return str(value)
    raise UsageError("unknown object %r" % obj)


# -- verify -------------------------------------------------------------------------

_FLAG_KEYS = {
    "n": "n", "degree": "degree", "max_size": "max_size", "max": "max",
    "max_m": "max_m", "seed": "seed",
}


def suite_config(suite, args, caps):
    cfg = {}
    known = DEFAULTS[suite]
    for attr, key in _FLAG_KEYS.items():
        v = getattr(args, attr, None)
        if v is None:
            continue
        if key not in known:
            raise UsageError("--%s does not apply to %s" % (attr.replace("_", "-"), suite))
        cfg[key] = v
    if "oracle_trials" in known:
        cfg["oracle_trials"] = caps["oracle_trials"]
    merged = dict(known)
    merged.update(cfg)
    for key in ("degree", "max_size", "max"):
        if merged.get(key) is not None:
            _check_caps(caps, degree=merged[key])
    if merged.get("n"):
        _check_caps(caps, window=merged["n"])
    if merged.get("max_m"):
        _check_caps(caps, m=merged["max_m"])
    return cfg


def verify(suite, cfg, jobs=1):
    reports = run_suite(suite, cfg, jobs=jobs)
    lines = [json.dumps(r, sort_keys=True) for r in reports]
    summary = summarize(suite, reports)
    lines.append(json.dumps(summary, sort_keys=True))
    return lines, summary["status"] == "pass"


# -- entry point ----------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="macdlab", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute and serialize an object")
    c.add_argument("object", choices=OBJECTS)
    c.add_argument("--mu", default="")
    c.add_argument("--lambda", dest="lam", default="")
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--basis", choices=("m", "HL", "P", "s", "e", "h", "p"))
    c.add_argument("--out")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--n", type=int)
    v.add_argument("--degree", type=int)
    v.add_argument("--max-size", type=int)
    v.add_argument("--max", type=int)
    v.add_argument("--max-m", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json",), default="json")
    v.add_argument("--out")
    return ap


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        caps = load_caps()
        if args.command == "compute":
            mu = parse_index(args.mu, "--mu")
            lam = parse_index(args.lam, "--lambda")
            _emit(compute(args.object, mu, lam, args.n, args.format, args.basis, caps), args.out)
            return 0
        for attr in ("n", "degree", "max_size", "max", "max_m", "jobs"):
            v = getattr(args, attr)
            if v is not None and v < (1 if attr in ("jobs", "n") else 0):
                raise UsageError("--%s must be positive" % attr.replace("_", "-"))
        cfg = suite_config(args.suite, args, caps)
        lines, ok = verify(args.suite, cfg, jobs=args.jobs)
        _emit("\n".join(lines), args.out)
        return 0 if ok else 1
    except UsageError as exc:
        print("macdlab: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
