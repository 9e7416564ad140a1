"""Higher-dimensional zero-set constructions and the fixture gallery.

In three or more variables nothing here is a decision procedure: membership
of a point in a zero set is shown by an explicit arc along which the
function tends to 0 (checked by exact composition), and non-membership is
only supported by budgeted arc-family scans.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arcs import PuiseuxPoly, compose, concat_arcs, make_arc
from .core.poly import MPoly
from .core.realalg import real_roots
from .core.scalar import as_fraction, div, is_rational, is_zero, sign
from .errors import InvariantViolation, LocboundError
from .ratfunc import RationalFunction


def _var(i, n):
    return RationalFunction.var(i, n)


def _embed(f, offset, n):
    """``f`` with its variables moved to positions ``offset, ...`` of an
    ``n``-variable space."""
    images = [MPoly.var(offset + i, n) for i in range(f.arity)]
    return RationalFunction(f.num.substitute(images), f.den.substitute(images))


# -- fixtures ----------------------------------------------------------------

def _plane():
    return _var(0, 2), _var(1, 2)


def chain_function(alpha):
    """``(z - alpha*x^2/(x^2+y^2))^2 + x^2 + y^2``; its zero set is the
    segment from the origin to ``(0, 0, alpha)``."""
    x, y, z = (_var(i, 3) for i in range(3))
    r = x ** 2 / (x ** 2 + y ** 2)
    return (z - Fraction(alpha) * r) ** 2 + x ** 2 + y ** 2


def segment_function():
    return chain_function(1)


def semiline_function():
    """``(2z/(1+z^2) - x^2/(x^2+y^2))^2 + x^2 + y^2``, vanishing exactly
    on the closed nonnegative z half-axis."""
    x, y, z = (_var(i, 3) for i in range(3))
    return (2 * z / (1 + z ** 2) - x ** 2 / (x ** 2 + y ** 2)) ** 2 \
        + x ** 2 + y ** 2


def shifted_pole_function(k):
    """``x^2/(x^2+(y-k)^2)``, indeterminate only at ``(0, k)``."""
    x, y = _plane()
    return x ** 2 / (x ** 2 + (y - k) ** 2)


def gallery():
    x, y = _plane()
    r = x ** 2 + y ** 2
    return {
        "F1": x ** 2 / r,
        "F2": y ** 2 / r,
        "F3": x / r,
        "F4": x ** 4 / r,
        "F5": (x ** 2 + y ** 4) / r,
        "F6": (x ** 4 + y ** 2) / r,
        "F7": x * y / r,
        "F8": (y ** 2 - 2 * x ** 2) ** 2
              / ((y ** 2 - 2 * x ** 2) ** 2 + x ** 6),
        "segment": segment_function(),
        "semiline": semiline_function(),
        "chain_3/2": chain_function(Fraction(3, 2)),
        "f_1": shifted_pole_function(1),
        "f_2": shifted_pole_function(2),
        "f_3": shifted_pole_function(3),
    }


# -- product constructions ---------------------------------------------------

def product_zero_function(f, g):
    """``f(first block)^2 + g(second block)^2``; its zero set is the
    product of the two zero sets."""
    n = f.arity + g.arity
    return _embed(f, 0, n) ** 2 + _embed(g, f.arity, n) ** 2


def orthant_zero_function(k):
    """Sum of ``k`` semiline blocks in variables ``(s_i, t_i, y_i)``.

    Variables are ordered ``y_1..y_k`` then ``s_1, t_1, ..., s_k, t_k``;
    the zero set is ``{s = t = 0, y_i >= 0}``.
    """
    if k < 1:
        raise LocboundError("k must be positive")
    n = 3 * k
    f = semiline_function()
    h = None
    for i in range(k):
        images = [MPoly.var(k + 2 * i, n), MPoly.var(k + 2 * i + 1, n),
                  MPoly.var(i, n)]
        block = RationalFunction(f.num.substitute(images),
                                 f.den.substitute(images))
        h = block if h is None else h + block
    return h


@dataclass
class EncodedSet:
    h: RationalFunction
    embedding: list  # MPoly images, arity n
    projection: list  # 0-based indices of the input coordinates
    generators: list

    @property
    def n(self):
        return len(self.projection)

    @property
    def k(self):
        return len(self.generators)

    @property
    def arity(self):
        return self.h.arity

    def embed(self, point):
        return tuple(p.evaluate(list(point)) for p in self.embedding)

    def project(self, point):
        return tuple(point[i] for i in self.projection)

    def in_set(self, point):
        return all(sign(p.evaluate(list(point))) >= 0 for p in self.generators)

    def certificate_arc(self, point):
        """Zero-certificate arc for ``h`` at ``embed(point)``; requires
        every generator to be nonnegative at ``point``."""
        if not self.in_set(point):
            raise LocboundError("point is outside the encoded set")
        ys = [p.evaluate(list(point)) for p in self.generators]
        entries = [PuiseuxPoly.const(c) for c in point]
        entries += [PuiseuxPoly.const(c) for c in ys]
        for yv in ys:
            dx, dy = direction_for_ratio(semiline_ratio(yv))
            entries += [PuiseuxPoly({1: dx}), PuiseuxPoly({1: dy})]
        return make_arc(entries)


def encode_closed_sa_set(generators):
    """Encode ``{x : p_i(x) >= 0}`` as the zero set of ``h`` in ``n + 3k``
    variables, up to projection onto the first ``n`` coordinates."""
    generators = list(generators)
    if not generators:
        raise LocboundError("at least one generator is required")
    n = generators[0].arity
    if any(p.arity != n for p in generators):
        raise LocboundError("generators must share their arity")
    k = len(generators)
    N = n + 3 * k
    images = [MPoly.var(i, N) for i in range(n)]
    h1 = RationalFunction.const(0, N)
    for i, p in enumerate(generators):
        lifted = RationalFunction(p.substitute(images), MPoly.const(1, N))
        h1 = h1 + (lifted - _var(n + i, N)) ** 2
    h2 = _embed(orthant_zero_function(k), n, N)
    h = h1 ** 2 + h2 ** 2
    embedding = [MPoly.var(i, n) for i in range(n)] + list(generators) \
        + [MPoly.const(0, n)] * (2 * k)
    enc = EncodedSet(h, embedding, list(range(n)), generators)
    return enc


# -- certificates ------------------------------------------------------------

def semiline_ratio(z0):
    """``2*z0/(1+z0^2)``, the value ``x^2/(x^2+y^2)`` must approach for the
    semiline function to vanish above ``z0``."""
    return div(2 * z0, 1 + z0 * z0)


def direction_for_ratio(c):
    """Direction ``(dx, dy)`` with ``dx^2/(dx^2+dy^2) = c`` for ``0 <= c <= 1``;
    ``dy`` may be algebraic."""
    if sign(c) < 0 or sign(c - 1) > 0:
        raise LocboundError("ratio must lie in [0, 1]")
    if is_zero(c):
        return Fraction(0), Fraction(1)
    q = div(1, c) - 1
    if is_zero(q):
        return Fraction(1), Fraction(0)
    if is_rational(q):
        roots = real_roots([-as_fraction(q), Fraction(0), Fraction(1)])
    else:
        roots = real_roots([-q, Fraction(0), Fraction(1)])
    return Fraction(1), roots[-1]


@dataclass
class ZeroCertificate:
    point: tuple
    arc: object
    order: object


def certify_zero(f, point, arc):
    """Check that ``arc`` tends to ``point`` and ``f`` tends to 0 along it."""
    lim = arc.limit_point()
    if len(lim) != len(point) or any(not is_zero(a - b)
                                     for a, b in zip(lim, point)):
        raise InvariantViolation("certificate arc does not reach the point")
    r = compose(f, arc)
    if not r.vanishes:
        raise InvariantViolation("function does not tend to 0 along the arc")
    return ZeroCertificate(tuple(point), arc, r.order)


def chain_zero_arc(alpha, c):
    """Arc through ``(0, 0, c)`` for ``0 <= c <= alpha`` on which the chain
    function tends to 0."""
    dx, dy = direction_for_ratio(div(Fraction(c), Fraction(alpha)))
    return make_arc([PuiseuxPoly({1: dx}), PuiseuxPoly({1: dy}),
                     PuiseuxPoly.const(Fraction(c))])


def semiline_zero_arc(z0):
    dx, dy = direction_for_ratio(semiline_ratio(Fraction(z0)))
    return make_arc([PuiseuxPoly({1: dx}), PuiseuxPoly({1: dy}),
                     PuiseuxPoly.const(Fraction(z0))])


def orthant_zero_arc(ys):
    """Arc through ``(y_1..y_k, 0, ..., 0)`` for ``y_i >= 0``."""
    entries = [PuiseuxPoly.const(Fraction(v)) for v in ys]
    for v in ys:
        dx, dy = direction_for_ratio(semiline_ratio(Fraction(v)))
        entries += [PuiseuxPoly({1: dx}), PuiseuxPoly({1: dy})]
    return make_arc(entries)


def product_zero_arc(arc_f, arc_g):
    return concat_arcs(arc_f, arc_g)
