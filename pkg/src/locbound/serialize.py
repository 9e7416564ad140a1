"""JSON-ready encodings of numbers, points, arcs, intervals and trees.

Rationals become integers or ``"p/q"`` strings.  Algebraic numbers become
``{"minpoly": [...], "interval": [lo, hi], "approx": "..."}`` with integer
minimal-polynomial coefficients (constant term first); the decimal is for
reading only.
"""

import json
from fractions import Fraction
from importlib import resources

from .arcs import INFINITE, INFINITY
from .core.printing import approx, format_poly
from .core.realalg import absolute
from .core.scalar import is_rational


def scalar(c):
    if is_rational(c):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    a = absolute(c)
    if is_rational(a):
        return scalar(a)
    lo, hi = a.canonical_interval()
    return {"minpoly": a.integer_minpoly(), "interval": [scalar(lo), scalar(hi)],
            "approx": approx(a)}


def point(pt):
    return [scalar(c) for c in pt]


def interval(iv):
    return {"lo": scalar(iv.lo), "hi": scalar(iv.hi)}


def arc(a):
    if a is None:
        return None
    return {"text": a.to_text(), "ramification": a.ramification,
            "limit_point": point(a.limit_point())}


def order(o):
    return "inf" if o == INFINITY else scalar(o)


def limit(v):
    return "infinite" if v is INFINITE else scalar(v)


def arc_limit(r):
    return {"order": order(r.order), "limit": limit(r.limit),
            "leading_coefficient": None if r.leading_coefficient is None
            else scalar(r.leading_coefficient)}


def poly(p, names=None):
    return None if p is None else format_poly(p, names)


def function(f):
    return {"text": f.to_text(), "arity": f.arity}


def tree(node):
    doc = {"kind": node.kind, "depth": node.depth,
           "orders": [[a, b] for a, b in node.orders],
           "verdict": node.verdict}
    if node.kind == "root":
        doc["center"] = point(node.center)
    elif node.kind == "A":
        doc["fiber"] = scalar(node.fiber)
    if node.witness is not None and node.kind == "root":
        doc["witness"] = arc(node.witness)
    doc["children"] = [tree(c) for c in node.children]
    return doc


def schema():
    text = resources.files("locbound").joinpath("schema/document.json").read_text()
    return json.loads(text)


def dumps(doc, pretty=False):
    if pretty:
        return json.dumps(doc, indent=2, sort_keys=True)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
