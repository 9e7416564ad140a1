"""Point blowups of the plane and the local boundedness decision.

At a point moved to the origin, write ``a`` and ``b`` for the lowest total
degrees of numerator and denominator.  After one blowup the function is
``e^(a-b) * p~/q~`` with ``e`` the exceptional coordinate:

* chart A: ``x = u, y = u*v`` (exceptional line ``u = 0``),
* chart B: ``x = u*v, y = v`` (exceptional line ``v = 0``).

If ``a < b`` the function is unbounded along a line through the point.
Otherwise it is regular on the exceptional line away from the real zeros
of ``q~``; the procedure recurses at those zeros (all of them in chart A,
only the vertical direction in chart B).  The recursion terminates by
embedded resolution of plane curves; a depth limit guards against bugs.

Several functions can be resolved jointly: the recursion then visits the
union of their bad points.  This is used to compare zero sets on a common
resolution.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import arcs
from .arcs import PuiseuxPoly, compose, make_arc
from .core import upoly
from .core.poly import MPoly
from .core.realalg import compare, real_roots
from .core.scalar import div, is_rational, is_zero
from .errors import (ConstantArc, DepthExceeded, InvariantViolation,
                     NotLocallyBounded, OutsideDomain, UnsupportedDimension)
from .ratfunc import indeterminacy_points, substitute

DEFAULT_DEPTH = 64


@dataclass
class PulledBack:
    a_order: int
    b_order: int
    p_tilde: MPoly
    q_tilde: MPoly


@dataclass
class BlowupChart:
    kind: str  # "A" or "B"
    center: tuple = (Fraction(0), Fraction(0))


def _strict(p, kind):
    """``(order, strict transform)`` of ``p`` in the given chart."""
    a = p.order()
    t = {}
    for (i, j), c in p.terms.items():
        if kind == "A":
            t[(i + j - a, j)] = c
        else:
            t[(i, i + j - a)] = c
    return a, MPoly(2, t, False)


def pull_pair(p, q, kind):
    a, pt = _strict(p, kind)
    b, qt = _strict(q, kind)
    return PulledBack(a, b, pt, qt)


def pullback(f, chart):
    """Pull back ``f`` (already centred at the origin) through one chart."""
    if f.arity != 2:
        raise UnsupportedDimension("blowups are implemented in the plane")
    kind = chart.kind if isinstance(chart, BlowupChart) else chart
    return pull_pair(f.num, f.den, kind)


def chart_map(kind, arity=2):
    u, v = MPoly.var(0, arity), MPoly.var(1, arity)
    return [u, u * v] if kind == "A" else [u * v, v]


def pullback_function(f, charts):
    """Reduced composition of ``f`` with a sequence of centred charts."""
    for ch in charts:
        if isinstance(ch, str):
            ch = BlowupChart(ch)
        if any(not is_zero(c) for c in ch.center):
            f = substitute(f, [MPoly.var(i, 2) + c
                               for i, c in enumerate(ch.center)])
        f = substitute(f, chart_map(ch.kind))
    return f


def _fiber_poly(pb):
    """Restriction of ``q~`` (or ``p~``) to the exceptional line of chart
    A as dense coefficients in ``v``."""
    return pb.univariate_at(1, [Fraction(0), None])


def _integer_walk(skip_zero=False):
    if not skip_zero:
        yield Fraction(0)
    n = 1
    while True:
        yield Fraction(n)
        yield Fraction(-n)
        n += 1


class ResolutionNode:
    """One blown-up point.  ``funcs`` are the local ``(num, den)`` pairs;
    local coordinates put the point at the origin."""

    def __init__(self, funcs, depth, kind="root", fiber=None, parent=None,
                 center=None):
        self.funcs = funcs
        self.depth = depth
        self.kind = kind
        self.fiber = fiber
        self.parent = parent
        self.center = center
        self.orders = [(p.order() if not p.is_zero() else None, q.order())
                       for p, q in funcs]
        self.charts = {}
        self.children = []
        self.verdict = None
        self.witness = None
        self.unbounded_index = None

    # -- coordinates -----------------------------------------------------
    def lift_arc(self, entries):
        """Map an arc given in this node's local coordinates to the
        original plane."""
        node = self
        x, y = entries
        while node is not None:
            if node.kind == "root":
                x = x + node.center[0]
                y = y + node.center[1]
            elif node.kind == "A":
                x, y = x, x * (y + node.fiber)
            else:
                x, y = x * y, y
            node = node.parent
        return make_arc([x, y])

    # -- inspection ------------------------------------------------------
    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def fiber_values(self):
        return [n.fiber for n in self.walk() if n.kind == "A"]

    def tower_height(self):
        h = 0
        for n in self.walk():
            v = n.fiber
            if v is not None and not is_rational(v):
                h = max(h, v.gen.depth)
        return h

    def node_count(self):
        return sum(1 for _ in self.walk())

    @property
    def bounded(self):
        return self.verdict == "bounded"


def _line_arc_entries(v0):
    return (PuiseuxPoly({1: 1}), PuiseuxPoly({1: v0}))


def _unbounded_witness(node, i, f_original):
    """Arc ``(t, v0*t)`` in local coordinates, lifted and validated."""
    p, q = node.funcs[i]
    a, b = node.orders[i]
    P = p.homogeneous(a)
    Q = q.homogeneous(b)
    for k, v0 in enumerate(_integer_walk(skip_zero=True)):
        if k > 64:
            break
        pt = (Fraction(1), v0)
        if is_zero(P.evaluate(pt)) or is_zero(Q.evaluate(pt)):
            continue
        try:
            arc = node.lift_arc(_line_arc_entries(v0))
        except ConstantArc:
            continue
        if f_original is not None and compose(f_original, arc).order >= 0:
            continue
        return arc
    raise InvariantViolation("no valid unboundedness witness arc found")


def _children_points(node):
    """Bad fiber values in chart A and whether the chart-B vertical point
    is bad, for the union of the node's functions."""
    bad_poly = [Fraction(1)]
    vertical = False
    pbs_a, pbs_b = [], []
    for (p, q), (a, b) in zip(node.funcs, node.orders):
        pa = pull_pair(p, q, "A")
        pb = pull_pair(p, q, "B")
        pbs_a.append(pa)
        pbs_b.append(pb)
        bad_poly = upoly.mul(bad_poly, _fiber_poly(pa.q_tilde))
        if is_zero(pb.q_tilde.constant_value()):
            vertical = True
    node.charts = {"A": pbs_a, "B": pbs_b}
    return real_roots(bad_poly), vertical


def _shifted_child_funcs(node, kind, v0=None):
    out = []
    for pb, (a, b) in zip(node.charts[kind], node.orders):
        e = 0 if kind == "A" else 1
        if pb.p_tilde.is_zero():
            p = pb.p_tilde
        else:
            p = pb.p_tilde.mul_var_power(e, pb.a_order - pb.b_order)
        q = pb.q_tilde
        if v0 is not None and not is_zero(v0):
            shift = [Fraction(0), v0]
            p = p.shift(shift)
            q = q.shift(shift)
        out.append((p, q))
    return out


def _grow(node, limit, f_original, joint):
    if node.depth > limit:
        raise DepthExceeded(limit)
    for i, (a, b) in enumerate(node.orders):
        if a is not None and a < b:
            node.verdict = "unbounded"
            node.unbounded_index = i
            if joint:
                raise NotLocallyBounded("function is not locally bounded")
            node.witness = _unbounded_witness(node, i, f_original)
            return node
    if all(b == 0 for _, b in node.orders):
        node.verdict = "bounded"
        return node
    roots, vertical = _children_points(node)
    for v0 in roots:
        child = ResolutionNode(_shifted_child_funcs(node, "A", v0),
                               node.depth + 1, "A", v0, node)
        node.children.append(child)
        _grow(child, limit, f_original, joint)
        if child.verdict == "unbounded":
            node.verdict = "unbounded"
            node.witness = child.witness
            return node
    if vertical:
        child = ResolutionNode(_shifted_child_funcs(node, "B"),
                               node.depth + 1, "B", None, node)
        node.children.append(child)
        _grow(child, limit, f_original, joint)
        if child.verdict == "unbounded":
            node.verdict = "unbounded"
            node.witness = child.witness
            return node
    node.verdict = "bounded"
    return node


def _centered(f, pt):
    if all(is_zero(c) for c in pt):
        return f.num, f.den
    shift = list(pt)
    return f.num.shift(shift), f.den.shift(shift)


def resolve_at(f, pt, max_depth=DEFAULT_DEPTH):
    """Resolution tree of ``f`` at ``pt``; the root verdict decides local
    boundedness, and unbounded trees carry a validated witness arc."""
    if f.arity != 2:
        raise UnsupportedDimension("local boundedness is decided in the plane")
    pt = tuple(pt)
    num, den = _centered(f, pt)
    root = ResolutionNode([(num, den)], 0, "root", None, None, pt)
    _grow(root, max_depth, f, joint=False)
    if root.verdict == "unbounded":
        order = compose(f, root.witness).order
        if not order < 0:  # pragma: no cover - guarded in _unbounded_witness
            raise InvariantViolation("witness arc does not have negative order")
    return root


def resolve_joint(funcs, pt, max_depth=DEFAULT_DEPTH):
    """Common resolution tree of several functions at ``pt``; raises
    NotLocallyBounded if one of them is unbounded there."""
    pt = tuple(pt)
    pairs = [_centered(f, pt) for f in funcs]
    root = ResolutionNode(pairs, 0, "root", None, None, pt)
    _grow(root, max_depth, None, joint=True)
    return root


@dataclass
class LocalVerdict:
    bounded: bool
    point: tuple
    tree: ResolutionNode = None
    witness: object = None


def is_locally_bounded_at(f, pt, max_depth=DEFAULT_DEPTH):
    tree = resolve_at(f, pt, max_depth)
    return LocalVerdict(tree.bounded, tuple(pt), tree, tree.witness)


@dataclass
class BoundednessResult:
    bounded: bool
    indet: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    witness: object = None
    witness_point: tuple = None
    curve: bool = False


def curve_witness_arc(f, data=None):
    """Transversal arc through a point of a one-dimensional real component
    of ``den(f)`` where ``num(f)`` does not vanish."""
    from .ratfunc import PlaneCurveData

    data = data or PlaneCurveData(f.den)
    for k, w in enumerate(data.curve_points()):
        if k > 500:
            break
        if is_zero(f.num.evaluate(list(w))):
            continue
        for d in ((1, 0), (0, 1), (1, 1)):
            arc = arcs.linear_arc(w, d)
            try:
                lim = compose(f, arc)
            except Exception:
                continue
            if lim.order < 0:
                return w, arc
    raise InvariantViolation("no transversal witness found on the curve")


def is_locally_bounded(f, max_depth=DEFAULT_DEPTH):
    if f.arity != 2:
        raise UnsupportedDimension("local boundedness is decided in the plane")
    if f.is_polynomial():
        return BoundednessResult(True)
    report = indeterminacy_points(f)
    if not report.finite:
        w, arc = curve_witness_arc(f)
        return BoundednessResult(False, [], [], arc, w, True)
    certs = []
    for pt in report.points:
        tree = resolve_at(f, pt, max_depth)
        if not tree.bounded:
            return BoundednessResult(False, report.points, certs,
                                     tree.witness, pt)
        certs.append(tree)
    return BoundednessResult(True, report.points, certs)


# -- value sets ---------------------------------------------------------------

@dataclass
class ValueInterval:
    lo: object
    hi: object
    attained: tuple = (True, True)

    @property
    def degenerate(self):
        return compare(self.lo, self.hi) == 0

    def contains(self, c):
        return compare(self.lo, c) <= 0 <= compare(self.hi, c)

    def contains_zero(self):
        return self.contains(Fraction(0))


def _extremes(values):
    lo = hi = None
    for v in values:
        if lo is None or compare(v, lo) < 0:
            lo = v
        if hi is None or compare(v, hi) > 0:
            hi = v
    return lo, hi


def _node_values(node, i):
    a, b = node.orders[i]
    cands = []
    if a is None or a > b:
        cands.append(Fraction(0))
    elif b == 0:
        p, q = node.funcs[i]
        cands.append(div(p.constant_value(), q.constant_value()))
    else:
        pa = node.charts["A"][i]
        P = _fiber_poly(pa.p_tilde)
        Q = _fiber_poly(pa.q_tilde)
        N = upoly.sub(upoly.mul(upoly.deriv(P), Q),
                      upoly.mul(P, upoly.deriv(Q)))
        for r in real_roots(N) if N else []:
            qr = upoly.evaluate(Q, r)
            if not is_zero(qr):
                cands.append(div(upoly.evaluate(P, r), qr))
        for s in _integer_walk():
            qs = upoly.evaluate(Q, s)
            if not is_zero(qs):
                cands.append(div(upoly.evaluate(P, s), qs))
                break
        pb = node.charts["B"][i]
        qv = pb.q_tilde.constant_value()
        if not is_zero(qv):
            cands.append(div(pb.p_tilde.constant_value(), qv))
    for child in node.children:
        cands.extend(_node_values(child, i))
    return list(_extremes(cands))


def tree_value_set(tree, i=0):
    if tree.verdict != "bounded":
        raise NotLocallyBounded("value sets need a bounded function",
                                tree.witness)
    lo, hi = _node_values(tree, i)
    return ValueInterval(_simplify(lo), _simplify(hi))


def _simplify(v):
    if is_rational(v):
        return Fraction(v)
    r = v.rational_value()
    return v if r is None else r


def value_set(f, pt, max_depth=DEFAULT_DEPTH):
    """Closed interval of limit values of ``f`` at ``pt``."""
    pt = tuple(pt)
    try:
        v = f.evaluate(list(pt))
    except OutsideDomain:
        pass
    else:
        v = _simplify(v)
        return ValueInterval(v, v)
    tree = resolve_at(f, pt, max_depth)
    return tree_value_set(tree)


def is_bounded_near_exceptional(f, kind="A", max_depth=DEFAULT_DEPTH):
    """Boundedness of ``f`` pulled back through one chart at the origin,
    near the exceptional line of that chart."""
    g = pullback_function(f, [kind])
    e = 0 if kind == "A" else 1
    if g.den.low_degree(e) > 0:
        return False
    line = g.den.univariate_at(1 - e, [Fraction(0), Fraction(0)])
    roots = real_roots(line)
    if kind == "A":
        pts = [(Fraction(0), r) for r in roots]
    else:
        pts = [(r, Fraction(0)) for r in roots]
    for pt in pts:
        if not resolve_at(g, pt, max_depth).bounded:
            return False
    return True
