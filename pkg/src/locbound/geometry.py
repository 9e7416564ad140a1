"""Zero sets, inclusions, exponents and Nullstellensatz certificates for
locally bounded rational functions of two variables.

Zero sets are described by the product of the numerator's irreducible
factors with a one-dimensional real locus, plus finitely many classified
points.  Inclusions of arc zero sets are decided on a common resolution of
both functions; every negative answer carries an arc that is re-checked by
direct composition.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .arcs import PuiseuxPoly, compose, linear_arc
from .core.factor import factor_mpoly
from .core.poly import MPoly, try_divexact
from .core.realalg import compare, real_roots
from .core.scalar import div, is_zero
from .errors import (ArcInsideIndeterminacy, ConstantArc, Exhausted,
                     InvariantViolation, LocboundError, NotLocallyBounded,
                     UnsupportedDimension)
from .ratfunc import PlaneCurveData, RationalFunction, indeterminacy_points
from .resolve import (DEFAULT_DEPTH, _fiber_poly, _integer_walk,
                      is_locally_bounded, resolve_joint, value_set)
from .core import upoly

DEFAULT_N_MAX = 16


def _require_plane(*fs):
    for f in fs:
        if f.arity != 2:
            raise UnsupportedDimension("this query is implemented for two variables")


def certify(f, max_depth=DEFAULT_DEPTH):
    """Boundedness certificate or NotLocallyBounded with a witness arc."""
    r = is_locally_bounded(f, max_depth)
    if not r.bounded:
        raise NotLocallyBounded(f"{f} is not locally bounded", r.witness)
    return r


# -- zero sets ---------------------------------------------------------------

@dataclass
class ZeroPoint:
    point: tuple
    kind: str  # "regular" or "value_set"
    certificate: object  # value at the point, or the ValueInterval


@dataclass
class ZeroSetDescription:
    curve_part: MPoly = None
    points: list = field(default_factory=list)
    excluded: list = field(default_factory=list)
    everything: bool = False

    @property
    def empty(self):
        return (not self.everything and self.curve_part is None
                and not self.points)

    def sample_points(self, count=3):
        """Some points of the zero set: the classified points, then up to
        ``count`` further points of the curve part."""
        out = [zp.point for zp in self.points]
        if self.curve_part is not None:
            extra = 0
            for k, w in enumerate(PlaneCurveData(self.curve_part).curve_points()):
                if extra >= count or k > 50 * (count + 1):
                    break
                if not any(_same_point(w, p) for p in out):
                    out.append(tuple(w))
                    extra += 1
        return out


def _curve_split(p):
    """Irreducible factors of ``p`` split into those with a one-dimensional
    real locus and the finite real points of the others."""
    curves, points = [], []
    for fac, _m in factor_mpoly(p):
        data = PlaneCurveData(fac)
        if data.finite:
            points.extend(data.finite_points())
        else:
            curves.append((fac, data))
    return curves, points


def zero_set(f, max_depth=DEFAULT_DEPTH):
    _require_plane(f)
    if f.is_zero():
        return ZeroSetDescription(everything=True)
    certify(f, max_depth)
    curves, pts = _curve_split(f.num)
    curve = None
    for fac, _ in curves:
        curve = fac if curve is None else curve * fac
    out = ZeroSetDescription(curve)
    for w in pts:
        d = f.den.evaluate(list(w))
        if not is_zero(d):
            out.points.append(ZeroPoint(tuple(w), "regular", Fraction(0)))
    for c in indeterminacy_points(f).points:
        vs = value_set(f, c, max_depth)
        if vs.contains_zero():
            out.points.append(ZeroPoint(tuple(c), "value_set", vs))
        else:
            out.excluded.append((tuple(c), vs))
    return out


def sum_of_squares(gens):
    """Single function with the same arc zero set as the ideal; a single
    generator is used as it is."""
    gens = list(gens)
    if len(gens) == 1:
        return gens[0]
    g = None
    for h in gens:
        g = h * h if g is None else g + h * h
    return g


def zero_set_ideal(gens, max_depth=DEFAULT_DEPTH):
    gens = list(gens)
    _require_plane(*gens)
    for h in gens:
        certify(h, max_depth)
    return zero_set(sum_of_squares(gens), max_depth)


@dataclass
class Membership:
    member: bool
    kind: str
    certificate: object


def contains(f, pt, max_depth=DEFAULT_DEPTH):
    """Whether ``pt`` lies in the zero set of ``f``."""
    _require_plane(f)
    pt = tuple(pt)
    d = f.den.evaluate(list(pt))
    if not is_zero(d):
        v = div(f.num.evaluate(list(pt)), d)
        return Membership(is_zero(v), "regular", v)
    vs = value_set(f, pt, max_depth)
    return Membership(vs.contains_zero(), "value_set", vs)


# -- inclusion of arc zero sets ----------------------------------------------

@dataclass
class Inclusion:
    included: bool
    counterexample: object = None
    reason: str = ""


def _validated(g, f, arc):
    """``arc`` if ``g`` tends to 0 and ``f`` does not along it."""
    try:
        lg = compose(g, arc)
        lf = compose(f, arc)
    except ArcInsideIndeterminacy:
        return None
    if lg.vanishes and not lf.vanishes:
        return arc
    return None


def _regular_point_arc(g, f, w):
    for d in ((1, 0), (0, 1), (1, 1)):
        arc = _validated(g, f, linear_arc(w, d))
        if arc is not None:
            return arc
    raise InvariantViolation("counterexample arc failed validation")


def _regular_for(fs, w):
    return all(not is_zero(h.den.evaluate(list(w))) for h in fs)


def _same_point(p, q):
    return all(compare(a, b) == 0 for a, b in zip(p, q))


def _fiber_value(pb, a, b, v=None):
    """Value of the regularized function at a regular exceptional point:
    chart-A fiber coordinate ``v``, or the chart-B vertical point."""
    if a is None or a > b:
        return Fraction(0)
    if v is None:
        return div(pb.p_tilde.constant_value(), pb.q_tilde.constant_value())
    P = _fiber_poly(pb.p_tilde)
    Q = _fiber_poly(pb.q_tilde)
    return div(upoly.evaluate(P, v), upoly.evaluate(Q, v))


def _node_value(node, i):
    a, b = node.orders[i]
    p, q = node.funcs[i]
    if a is None or a > b:
        return Fraction(0)
    return div(p.constant_value(), q.constant_value())


def _joint_check(node, g, f):
    """Counterexample arc on the exceptional configuration below ``node``
    (functions: index 0 is g, index 1 is f), or None."""
    if all(b == 0 for _, b in node.orders):
        if is_zero(_node_value(node, 0)) and not is_zero(_node_value(node, 1)):
            return _lift_checked(node, g, f, [(1, 1), (1, 2), (2, 1)])
        return None
    (ag, bg), (af, bf) = node.orders
    pa_g, pa_f = node.charts["A"]
    pb_g, pb_f = node.charts["B"]
    Qg = _fiber_poly(pa_g.q_tilde)
    Qf = _fiber_poly(pa_f.q_tilde)

    def regular(v):
        return (not is_zero(upoly.evaluate(Qg, v))
                and not is_zero(upoly.evaluate(Qf, v)))

    g_flat = ag is None or ag > bg
    f_flat = af is None or af > bf
    if g_flat and not f_flat:
        Pf = _fiber_poly(pa_f.p_tilde)
        for k, v0 in enumerate(_integer_walk()):
            if k > 200:
                break
            if regular(v0) and not is_zero(upoly.evaluate(Pf, v0)):
                return _lift_chart_a(node, g, f, v0)
    elif not g_flat and not f_flat:
        Pg = _fiber_poly(pa_g.p_tilde)
        for r in real_roots(Pg):
            if regular(r) and not is_zero(_fiber_value(pa_f, af, bf, r)):
                return _lift_chart_a(node, g, f, r)
    # vertical direction of chart B
    qg0 = pb_g.q_tilde.constant_value()
    qf0 = pb_f.q_tilde.constant_value()
    if not is_zero(qg0) and not is_zero(qf0):
        gv = _fiber_value(pb_g, ag, bg)
        fv = _fiber_value(pb_f, af, bf)
        if is_zero(gv) and not is_zero(fv):
            return _lift_checked(node, g, f, [(2, 1), (3, 1)])
    for child in node.children:
        arc = _joint_check(child, g, f)
        if arc is not None:
            return arc
    return None


def _lift_checked(node, g, f, exps):
    """Arcs ``(t^i, t^j)`` in local coordinates, lifted and validated."""
    for i, j in exps:
        try:
            arc = node.lift_arc((PuiseuxPoly({i: 1}), PuiseuxPoly({j: 1})))
        except ConstantArc:
            continue
        arc = _validated(g, f, arc)
        if arc is not None:
            return arc
    raise InvariantViolation("counterexample arc failed validation")


def _lift_chart_a(node, g, f, v0):
    """Arc approaching the chart-A point ``v = v0`` of the exceptional line
    transversally: ``(t, v0*t + t^2)`` in local coordinates."""
    for k in (2, 3):
        try:
            arc = node.lift_arc((PuiseuxPoly({1: 1}),
                                 PuiseuxPoly({1: v0, k: 1})))
        except ConstantArc:
            continue
        arc = _validated(g, f, arc)
        if arc is not None:
            return arc
    raise InvariantViolation("counterexample arc failed validation")


def zero_set_included(g, f, max_depth=DEFAULT_DEPTH):
    """Decide whether every arc along which ``g`` tends to 0 (avoiding the
    indeterminacy loci) also makes ``f`` tend to 0."""
    _require_plane(g, f)
    if f.is_zero():
        return Inclusion(True, reason="f vanishes identically")
    certify(g, max_depth)
    certify(f, max_depth)
    both = (g, f)
    if g.is_zero():
        for w in _integer_points():
            if _regular_for(both, w) and not is_zero(f.evaluate(list(w))):
                return Inclusion(False, _regular_point_arc(g, f, w),
                                 "g vanishes identically")
    # curve components of the numerator of g
    curves, pts = _curve_split(g.num)
    for fac, data in curves:
        if not f.num.is_zero() and _divides(fac, f.num):
            continue
        for k, w in enumerate(data.curve_points()):
            if k > 500:
                raise InvariantViolation("no regular curve point found")
            if _regular_for(both, w) and not is_zero(f.num.evaluate(list(w))):
                return Inclusion(False, _regular_point_arc(g, f, w),
                                 "curve component of Z(g) not in Z(f)")
    # isolated regular zeros of g
    for w in pts:
        if _regular_for(both, w) and not is_zero(f.num.evaluate(list(w))):
            return Inclusion(False, _regular_point_arc(g, f, w),
                             "isolated zero of g is not a zero of f")
    # exceptional configurations over the indeterminacy points
    centers = []
    for h in both:
        for c in indeterminacy_points(h).points:
            if not any(_same_point(c, d) for d in centers):
                centers.append(tuple(c))
    for c in centers:
        tree = resolve_joint([g, f], c, max_depth)
        arc = _joint_check(tree, g, f)
        if arc is not None:
            return Inclusion(False, arc, "exceptional zero of g is not a zero of f")
    return Inclusion(True)


def _divides(a, b):
    return try_divexact(b, a) is not None


def _integer_points():
    for n in range(0, 50):
        for x in range(-n, n + 1):
            for y in (n - abs(x), abs(x) - n):
                yield (Fraction(x), Fraction(y))


# -- exponents and certificates --------------------------------------------

@dataclass
class LojaResult:
    status: str  # "found" or "precondition_failed"
    exponent: int = None
    certificate: object = None
    refutation: object = None  # witness arc for exponent - 1
    counterexample: object = None
    quotient: RationalFunction = None


def loja_exponent(f, g, n_max=DEFAULT_N_MAX, max_depth=DEFAULT_DEPTH):
    """Least ``N <= n_max`` with ``f^N / g`` locally bounded."""
    _require_plane(f, g)
    if g.is_zero():
        raise LocboundError("g must be a nonzero function")
    inc = zero_set_included(g, f, max_depth)
    if not inc.included:
        return LojaResult("precondition_failed", counterexample=inc.counterexample)
    previous = None
    for N in range(1, n_max + 1):
        h = f ** N / g
        r = is_locally_bounded(h, max_depth)
        if r.bounded:
            ref = None
            if previous is not None:
                ref = previous.witness
            return LojaResult("found", N, r, ref, quotient=h)
        previous = r
    raise Exhausted(f"no exponent up to {n_max} makes f^N/g locally bounded")


@dataclass
class RadicalResult:
    member: bool
    exponent: int = None
    witness: RationalFunction = None
    counterexample: object = None


def radical_member(f, gens, n_max=DEFAULT_N_MAX, max_depth=DEFAULT_DEPTH):
    gens = list(gens)
    _require_plane(f, *gens)
    certify(f, max_depth)
    for h in gens:
        certify(h, max_depth)
    g = sum_of_squares(gens)
    if g.is_zero():
        if f.is_zero():
            return RadicalResult(True, 1, RationalFunction.const(0, 2))
        inc = zero_set_included(g, f, max_depth)
        return RadicalResult(False, counterexample=inc.counterexample)
    r = loja_exponent(f, g, n_max, max_depth)
    if r.status != "found":
        return RadicalResult(False, counterexample=r.counterexample)
    h = r.quotient
    if not (f ** r.exponent == h * g):
        raise InvariantViolation("radical witness identity failed")
    return RadicalResult(True, r.exponent, h)


@dataclass
class NullstellensatzResult:
    unit: bool
    coefficients: list = None
    certificates: list = None
    point: tuple = None
    certificate: object = None


def weak_nullstellensatz(gens, max_depth=DEFAULT_DEPTH):
    gens = list(gens)
    _require_plane(*gens)
    for h in gens:
        certify(h, max_depth)
    g = sum_of_squares(gens)
    zs = zero_set(g, max_depth)
    if not zs.empty:
        if zs.points:
            zp = zs.points[0]
            return NullstellensatzResult(False, point=zp.point,
                                         certificate=zp.certificate)
        w = zs.sample_points(1)[0] if not zs.everything else (Fraction(0),) * 2
        return NullstellensatzResult(False, point=w, certificate=Fraction(0))
    coeffs = [h / g for h in gens]
    certs = [certify(a, max_depth) for a in coeffs]
    total = RationalFunction.const(0, 2)
    for a, h in zip(coeffs, gens):
        total = total + a * h
    if not total == 1:
        raise InvariantViolation("unit identity failed")
    return NullstellensatzResult(True, coeffs, certs)


@dataclass
class InvertibilityResult:
    invertible: bool
    inverse: RationalFunction = None
    certificate: object = None
    zeros: list = None


def is_invertible(f, max_depth=DEFAULT_DEPTH):
    _require_plane(f)
    zs = zero_set(f, max_depth)
    if not zs.empty:
        return InvertibilityResult(False, zeros=zs.sample_points(1))
    inv = 1 / f
    cert = certify(inv, max_depth)
    if not (f * inv == 1):
        raise InvariantViolation("inverse identity failed")
    return InvertibilityResult(True, inv, cert)


def is_regulous_at(f, pt, max_depth=DEFAULT_DEPTH):
    vs = value_set(f, pt, max_depth)
    return vs.degenerate, vs
