"""Deterministic arc-family scan: limits of ``f`` along
``pt + (c_1 t^e_1, ..., c_n t^e_n)`` for a finite budget of coefficients
and exponents.

The scan only ever refutes boundedness (an infinite limit is a real
witness); it never proves anything.  The hot loop lives in a compiled
kernel when available and in a numpy kernel otherwise; both are exact.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from . import _scan_py
from .arcs import PuiseuxPoly, make_arc

try:
    if os.environ.get("LOCBOUND_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled")
    from . import _scan_ext
    _KERNEL = _scan_ext.lowest_terms
    KERNEL_NAME = "compiled"
except ImportError:
    _scan_ext = None
    _KERNEL = _scan_py.lowest_terms
    KERNEL_NAME = "numpy"

NONE = _scan_py.NONE
_INT64_SAFE = 2 ** 62


def default_exponents():
    out = set()
    for q in (1, 2, 3):
        for p in range(1, 7):
            out.add(Fraction(p, q))
    return sorted(out)


DEFAULT_COEFFICIENTS = tuple(Fraction(c) for c in
                             (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2),
                              3, -3))


@dataclass
class ScanBudget:
    exponents: tuple = field(default_factory=lambda: tuple(default_exponents()))
    coefficients: tuple = DEFAULT_COEFFICIENTS
    batch: int = 1 << 15

    def options(self):
        """Per-coordinate options: ``(coefficient, exponent)``; the first
        is the zero coefficient."""
        opts = [(Fraction(0), Fraction(1))]
        for c in self.coefficients:
            if c != 0:
                for e in self.exponents:
                    opts.append((Fraction(c), Fraction(e)))
        return opts


@dataclass
class ScanResult:
    limits: list  # sorted distinct finite limits
    unbounded: bool
    skipped: int
    total: int
    unbounded_arc: object = None
    kernel: str = KERNEL_NAME

    @property
    def min(self):
        return self.limits[0] if self.limits else None

    @property
    def max(self):
        return self.limits[-1] if self.limits else None


def _scaled(poly, dc, dmax):
    den = lcm(1, *(c.denominator for c in poly.terms.values()))
    exps, coefs = [], []
    for e, c in poly.terms.items():
        exps.append(e)
        coefs.append(int(c * den) * dc ** (dmax - sum(e)))
    return exps, coefs, den


def _run(exps, coefs, opt_w, opt_pow_int, amax, total, batch, kernel=None):
    bound = sum(abs(c) * amax ** sum(e) for e, c in zip(exps, coefs))
    if not exps:
        return (np.full(total, NONE, dtype=np.int64),
                np.zeros(total, dtype=np.int64))
    exact = bound >= _INT64_SAFE
    orders, leads = [], []
    for start in range(0, total, batch):
        stop = min(total, start + batch)
        if exact:
            pw = np.array(opt_pow_int, dtype=object)
            o, l = _scan_py.lowest_terms(exps, coefs, opt_w, pw, start, stop,
                                         dtype=object)
        else:
            o, l = (kernel or _KERNEL)(
                exps, np.array(coefs, dtype=np.int64), opt_w,
                np.array(opt_pow_int, dtype=np.int64), start, stop)
        orders.append(o)
        leads.append(l)
    return np.concatenate(orders), np.concatenate(leads)


def arc_for_index(index, point, options):
    n = len(point)
    n_opt = len(options)
    entries = []
    for i in range(n - 1, -1, -1):
        c, e = options[index % n_opt]
        index //= n_opt
        entries.append(PuiseuxPoly({0: point[i], e: c}))
    return make_arc(entries[::-1])


def arc_family_scan(f, point, budget=None, kernel=None):
    """Scan the arc family through a rational ``point``."""
    budget = budget or ScanBudget()
    point = [Fraction(c) for c in point]
    if len(point) != f.arity:
        raise ValueError("point has wrong length")
    P = f.num.shift(point)
    Q = f.den.shift(point)
    options = budget.options()
    L = lcm(1, *(e.denominator for _, e in options))
    dc = lcm(1, *(c.denominator for c, _ in options))
    dmax = max(P.total_degree(), Q.total_degree(), 0)
    opt_w = np.array([int(e * L) for _, e in options], dtype=np.int64)
    opt_a = [int(c * dc) for c, _ in options]
    opt_pow = [[a ** k for k in range(dmax + 1)] for a in opt_a]
    amax = max(max(abs(a) for a in opt_a), dc)
    total = len(options) ** f.arity
    pe, pc, lam_p = _scaled(P, dc, dmax)
    qe, qc, lam_q = _scaled(Q, dc, dmax)
    ord_p, lead_p = _run(pe, pc, opt_w, opt_pow, amax, total, budget.batch,
                         kernel)
    ord_q, lead_q = _run(qe, qc, opt_w, opt_pow, amax, total, budget.batch,
                         kernel)
    valid = np.ones(total, dtype=bool)
    valid[0] = False  # the constant arc
    skipped_mask = valid & (ord_q == NONE)
    skipped = int(skipped_mask.sum())
    valid &= ~skipped_mask
    zero_num = valid & (ord_p == NONE)
    both = valid & ~zero_num
    diff = np.where(both, ord_p - np.where(both, ord_q, 0), 0)
    neg = both & (diff < 0)
    pos = both & (diff > 0)
    level = both & (diff == 0)
    limits = set()
    if zero_num.any() or pos.any():
        limits.add(Fraction(0))
    idx = np.nonzero(level)[0]
    if len(idx):
        pairs = {(int(a), int(b)) for a, b in zip(lead_p[idx], lead_q[idx])}
        for a, b in pairs:
            limits.add(Fraction(a * lam_q, b * lam_p))
    witness = None
    if neg.any():
        witness = arc_for_index(int(np.nonzero(neg)[0][0]), point, options)
    name = KERNEL_NAME if kernel is None else \
        ("numpy" if kernel is _scan_py.lowest_terms else "custom")
    return ScanResult(sorted(limits), bool(neg.any()), skipped,
                      int(valid.sum() + skipped), witness, name)
