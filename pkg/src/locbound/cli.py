"""Command-line front end.

Every command prints one document (text by default, JSON with
``--format json``) and exits with 0 on success, 2 on syntax errors, 3 on
failed preconditions, 4 on exhausted searches or depth limits and 5 on
violated internal invariants.
"""

import argparse
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import serialize as ser
from .arcs import compose
from .errors import LocboundError, NotLocallyBounded
from .parse import parse_arc, parse_function, parse_point

COMMANDS = ("bounded", "indet", "valueset", "zeroset", "contains", "included",
            "loja", "radical", "weak-nss", "invertible", "regulous",
            "arc-eval", "encode", "gallery")


def _fractions(text):
    return tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--scan-exp", type=_fractions, default=None,
                   help="comma-separated scan exponents, e.g. 1,1/2,2")
    p.add_argument("--scan-coeffs", type=_fractions, default=None,
                   help="comma-separated scan coefficients, e.g. 1,-1,2")
    p.add_argument("--scan", action="store_true",
                   help="add an arc-family scan to bounded/valueset output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true",
                   help="omit timing so output is byte-for-byte reproducible")
    p.add_argument("--arity", type=int, default=None)
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="locbound",
        description="Exact queries on locally bounded rational functions.")
    parser.add_argument("--batch", metavar="FILE",
                        help="run one query per line of FILE")
    parser.add_argument("--workers", type=int, default=1)
    sub = parser.add_subparsers(dest="command")

    def cmd(name, *args, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for a in args:
            p.add_argument(a)
        p.set_defaults(positionals=args)
        return p

    cmd("bounded", "function", help="decide local boundedness everywhere")
    cmd("indet", "function", help="indeterminacy locus")
    cmd("valueset", "function", help="value set at a point").add_argument(
        "--at", required=True)
    cmd("zeroset", "function", help="zero set description")
    cmd("contains", "function", "point", help="zero-set membership")
    cmd("included", "g", "f", help="is Z(g) contained in Z(f)")
    cmd("loja", "f", "g", help="least N with f^N/g bounded")
    cmd("radical", "f", help="is f in the radical of the ideal").add_argument(
        "generators", nargs="+")
    sub.add_parser("weak-nss", parents=[common],
                   help="unit ideal witness or a common zero").add_argument(
        "generators", nargs="+")
    cmd("invertible", "function", help="invertibility")
    cmd("regulous", "function", help="continuity at a point").add_argument(
        "--at", required=True)
    cmd("arc-eval", "function", "arc", help="order and limit along an arc")
    sub.add_parser("encode", parents=[common],
                   help="encode {p_i >= 0} as a zero set").add_argument(
        "generators", nargs="+")
    sub.add_parser("gallery", parents=[common], help="list the fixtures")
    return parser


# -- helpers -------------------------------------------------------------------

def _functions(texts, arity=None):
    fs = [parse_function(t, arity) for t in texts]
    n = max(f.arity for f in fs)
    if any(f.arity != n for f in fs):
        fs = [parse_function(t, n) for t in texts]
    return fs


def _point(text, n):
    pt = parse_point(text)
    if len(pt) != n:
        raise LocboundError(f"point has {len(pt)} coordinates, expected {n}")
    return pt


def _budget(opts):
    from .scan import ScanBudget

    b = ScanBudget()
    if opts.scan_exp:
        b.exponents = opts.scan_exp
    if opts.scan_coeffs:
        b.coefficients = opts.scan_coeffs
    return b


def _scan_doc(f, pt, opts):
    from .scan import arc_family_scan

    r = arc_family_scan(f, pt, _budget(opts))
    doc = {"limits": [ser.scalar(v) for v in r.limits], "unbounded": r.unbounded,
           "total": r.total, "skipped": r.skipped, "kernel": r.kernel}
    if r.unbounded_arc is not None:
        doc["unbounded_arc"] = ser.arc(r.unbounded_arc)
    return doc


def _witness(f, arc):
    doc = ser.arc(arc)
    doc["order"] = ser.order(compose(f, arc).order)
    return doc


# -- commands ----------------------------------------------------------------

def _bounded(o):
    from .resolve import is_locally_bounded

    (f,) = _functions([o.function], o.arity)
    r = is_locally_bounded(f, o.max_depth)
    doc = {"verdict": "bounded" if r.bounded else "unbounded",
           "indet": [ser.point(p) for p in r.indet],
           "certificates": [ser.tree(t) for t in r.certificates],
           "curve": r.curve,
           "witness": None if r.bounded else _witness(f, r.witness)}
    if not r.bounded:
        doc["witness_point"] = ser.point(r.witness_point)
    if o.scan:
        doc["scans"] = [dict(point=ser.point(p), **_scan_doc(f, p, o))
                        for p in r.indet if all(isinstance(c, Fraction) for c in p)]
    return doc


def _indet(o):
    from .ratfunc import indeterminacy_points

    (f,) = _functions([o.function], o.arity)
    r = indeterminacy_points(f)
    return {"verdict": "finite" if r.finite else "infinite",
            "points": [ser.point(p) for p in r.points],
            "curve_point": None if r.finite else ser.point(r.curve_witness)}


def _valueset(o):
    from .resolve import value_set

    (f,) = _functions([o.function], o.arity)
    pt = _point(o.at, f.arity)
    iv = value_set(f, pt, o.max_depth)
    doc = {"verdict": "interval", "point": ser.point(pt),
           "interval": ser.interval(iv), "degenerate": iv.degenerate}
    if o.scan:
        doc["scan"] = _scan_doc(f, pt, o)
    return doc


def _zero_point(zp):
    cert = zp.certificate
    return {"point": ser.point(zp.point), "kind": zp.kind,
            "certificate": ser.interval(cert) if zp.kind == "value_set"
            else ser.scalar(cert)}


def _zeroset(o):
    from .geometry import zero_set

    (f,) = _functions([o.function], o.arity)
    z = zero_set(f, o.max_depth)
    return {"verdict": "empty" if z.empty else "nonempty",
            "everything": z.everything,
            "curve": ser.poly(z.curve_part),
            "points": [_zero_point(zp) for zp in z.points],
            "excluded": [{"point": ser.point(p), "interval": ser.interval(iv)}
                         for p, iv in z.excluded]}


def _contains(o):
    from .geometry import contains

    (f,) = _functions([o.function], o.arity)
    pt = _point(o.point, f.arity)
    m = contains(f, pt, o.max_depth)
    return {"verdict": m.member, "point": ser.point(pt), "kind": m.kind,
            "certificate": ser.interval(m.certificate) if m.kind == "value_set"
            else ser.scalar(m.certificate)}


def _included(o):
    from .geometry import zero_set_included

    g, f = _functions([o.g, o.f], o.arity)
    r = zero_set_included(g, f, o.max_depth)
    return {"verdict": "included" if r.included else "counterexample",
            "arc": ser.arc(r.counterexample), "reason": r.reason}


class _Precondition(Exception):
    def __init__(self, doc):
        self.doc = doc


def _loja(o):
    from .geometry import loja_exponent

    f, g = _functions([o.f, o.g], o.arity)
    r = loja_exponent(f, g, o.n_max, o.max_depth)
    if r.status != "found":
        raise _Precondition({"verdict": "precondition_failed",
                             "arc": ser.arc(r.counterexample)})
    return {"verdict": "found", "N": r.exponent,
            "quotient": r.quotient.to_text(),
            "certificates": [ser.tree(t) for t in r.certificate.certificates],
            "refutation": None if r.refutation is None
            else _witness(f ** (r.exponent - 1) / g, r.refutation)}


def _radical(o):
    from .geometry import radical_member

    fs = _functions([o.f] + o.generators, o.arity)
    r = radical_member(fs[0], fs[1:], o.n_max, o.max_depth)
    if r.member:
        return {"verdict": "member", "N": r.exponent, "h": r.witness.to_text()}
    return {"verdict": "not_member", "arc": ser.arc(r.counterexample)}


def _weak_nss(o):
    from .geometry import weak_nullstellensatz

    gens = _functions(o.generators, o.arity)
    r = weak_nullstellensatz(gens, o.max_depth)
    if r.unit:
        return {"verdict": "unit",
                "coefficients": [a.to_text() for a in r.coefficients]}
    cert = r.certificate
    return {"verdict": "nonempty", "point": ser.point(r.point),
            "certificate": ser.interval(cert) if hasattr(cert, "lo")
            else ser.scalar(cert)}


def _invertible(o):
    from .geometry import is_invertible

    (f,) = _functions([o.function], o.arity)
    r = is_invertible(f, o.max_depth)
    if r.invertible:
        return {"verdict": "invertible", "inverse": r.inverse.to_text()}
    return {"verdict": "not_invertible",
            "points": [ser.point(p) for p in r.zeros]}


def _regulous(o):
    from .geometry import is_regulous_at

    (f,) = _functions([o.function], o.arity)
    pt = _point(o.at, f.arity)
    ok, iv = is_regulous_at(f, pt, o.max_depth)
    return {"verdict": ok, "point": ser.point(pt), "interval": ser.interval(iv)}


def _arc_eval(o):
    arc = parse_arc(o.arc)
    (f,) = _functions([o.function], o.arity or len(arc))
    r = compose(f, arc)
    doc = {"verdict": "evaluated", "arc": ser.arc(arc)}
    doc.update(ser.arc_limit(r))
    return doc


def _encode(o):
    from .constructions import encode_closed_sa_set

    gens = [f.num for f in _functions(o.generators, o.arity)]
    enc = encode_closed_sa_set(gens)
    return {"verdict": "encoded", "arity": enc.arity, "h": enc.h.to_text(),
            "embedding": [ser.poly(p) for p in enc.embedding],
            "projection": [i + 1 for i in enc.projection]}


def _gallery(o):
    from .constructions import gallery

    return {"verdict": "listed",
            "functions": {k: ser.function(f) for k, f in gallery().items()}}


_DISPATCH = {"bounded": _bounded, "indet": _indet, "valueset": _valueset,
             "zeroset": _zeroset, "contains": _contains, "included": _included,
             "loja": _loja, "radical": _radical, "weak-nss": _weak_nss,
             "invertible": _invertible, "regulous": _regulous,
             "arc-eval": _arc_eval, "encode": _encode, "gallery": _gallery}


def _inputs(opts):
    """Raw argument strings in command-line order."""
    out = []
    for name in getattr(opts, "positionals", ()) + ("generators", "at"):
        v = getattr(opts, name, None)
        if v is None:
            continue
        out.extend(v if isinstance(v, list) else [v])
    return out


def run(opts):
    """Execute one parsed query; returns ``(document, exit_code)``."""
    start = time.perf_counter()
    code = 0
    try:
        body = _DISPATCH[opts.command](opts)
    except _Precondition as exc:
        body, code = exc.doc, 3
    except LocboundError as exc:
        code = exc.exit_code
        body = {"verdict": "error", "error": str(exc), "exit_code": code,
                "error_type": type(exc).__name__}
        if isinstance(exc, NotLocallyBounded) and exc.witness is not None:
            body["witness"] = ser.arc(exc.witness)
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        code = 5
        body = {"verdict": "error", "error": f"internal error: {exc}",
                "exit_code": code, "error_type": type(exc).__name__}
    doc = {"command": opts.command, "input": _inputs(opts)}
    doc.update(body)
    if not opts.no_timing:
        doc["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return doc, code


def render_text(doc):
    width = max(len(k) for k in doc)
    lines = []
    for k, v in doc.items():
        if isinstance(v, (dict, list)):
            v = ser.dumps(v)
        elif v is None:
            v = "-"
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines)


def render(doc, fmt):
    return ser.dumps(doc) if fmt == "json" else render_text(doc)


def _run_line(line):
    parser = build_parser()
    try:
        opts = parser.parse_args(shlex.split(line))
    except SystemExit:
        return {"command": "error", "verdict": "error",
                "error": f"cannot parse query: {line}", "exit_code": 2}, 2
    if opts.command is None:
        return {"command": "error", "verdict": "error",
                "error": "missing command", "exit_code": 2}, 2
    return run(opts)


def run_batch(path, workers=1):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh
                 if ln.strip() and not ln.lstrip().startswith("#")]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_line, lines))
    else:
        results = [_run_line(ln) for ln in lines]
    return results


def main(argv=None):
    parser = build_parser()
    opts = parser.parse_args(argv)
    if opts.batch:
        results = run_batch(opts.batch, max(1, opts.workers))
        for doc, _ in results:
            print(ser.dumps(doc))
        return max((c for _, c in results), default=0)
    if opts.command is None:
        parser.print_help()
        return 2
    doc, code = run(opts)
    print(render(doc, opts.format))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
