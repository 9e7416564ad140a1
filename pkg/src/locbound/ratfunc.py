"""Reduced rational functions and the real zero sets of their denominators."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from math import floor

from .core.poly import MPoly, divexact, gcd, normalize
from .core.printing import format_poly, var_names
from .core.realalg import real_roots, values_equal
from .core.scalar import inv, is_rational, is_zero, sign
from .errors import (DivisionByZero, IdenticallyZeroDenominator,
                     IncompatibleTowers, OutsideDomain,
                     UnsupportedDimension, ZeroDenominator)


class RationalFunction:
    """``num/den`` in lowest terms; ``den`` is integer primitive with a
    positive graded-lex leading coefficient (monic over an extension)."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den, _reduced=False):
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def arity(self):
        return self.num.arity

    @classmethod
    def poly(cls, p):
        return cls(p, MPoly.const(1, p.arity), True)

    @classmethod
    def const(cls, c, arity):
        return cls.poly(MPoly.const(c, arity))

    @classmethod
    def var(cls, i, arity):
        return cls.poly(MPoly.var(i, arity))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, MPoly):
            return RationalFunction.poly(other)
        return RationalFunction.const(other, self.arity)

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() * inv(self.den.constant_value())

    def is_rational(self):
        return self.num.is_rational() and self.den.is_rational()

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise DivisionByZero("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise DivisionByZero("negative power of the zero function")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n, True)

    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, MPoly, int, Fraction)):
            return NotImplemented
        o = self._lift(other)
        try:
            return self.num * o.den == o.num * self.den
        except IncompatibleTowers:
            return _termwise_equal(self, o)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # -- evaluation ------------------------------------------------------
    def evaluate(self, point):
        return evaluate(self, point)

    def substitute(self, images):
        return substitute(self, images)

    def to_text(self, names=None):
        names = names or var_names(self.arity)
        num = format_poly(self.num, names)
        if self.is_polynomial():
            c = self.den.constant_value()
            if c == 1:
                return num
            return f"({num})/{format_poly(self.den, names)}"
        wrap_num = len(self.num.terms) > 1 or not self.num.is_rational() \
            or (self.num.terms and not _plain(self.num))
        wrap_den = len(self.den.terms) > 1 or not _plain(self.den)
        num = f"({num})" if wrap_num else num
        den = format_poly(self.den, names)
        den = f"({den})" if wrap_den else den
        return f"{num}/{den}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalFunction({self.to_text()})"


def _termwise_equal(f, g):
    """Equality of reduced forms from unrelated towers: scale to a monic
    denominator and compare coefficients as absolute numbers."""
    def scaled(h):
        lc = h.den.leading()[1]
        return ({e: c / lc for e, c in h.num.terms.items()},
                {e: c / lc for e, c in h.den.terms.items()})

    for a, b in zip(scaled(f), scaled(g)):
        if set(a) != set(b):
            return False
        if not all(values_equal(a[e], b[e]) for e in a):
            return False
    return True


def _plain(p):
    """Single term that prints without binary operators at top level."""
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    if not is_rational(c):
        return False
    nonzero = sum(1 for k in e if k)
    if c == 1:
        return nonzero <= 1
    return nonzero == 0 and c.denominator == 1 and c > 0


def _reduce(p, q):
    if q.is_zero():
        raise ZeroDenominator("zero denominator")
    if p.arity != q.arity:
        raise ValueError("arity mismatch")
    if p.is_zero():
        return p, MPoly.const(1, p.arity)
    if not q.is_constant():
        g = gcd(p, q)
        if not g.is_constant():
            p = divexact(p, g)
            q = divexact(q, g)
    nq = normalize(q)
    lead_q = q.leading()[1]
    lead_n = nq.leading()[1]
    scale = lead_n * inv(lead_q)
    return p * scale, nq


def reduce(p, q):
    """Reduced, normalized fraction ``p/q``."""
    return RationalFunction(p, q)


def evaluate(f, point):
    d = f.den.evaluate(point)
    if is_zero(d):
        raise OutsideDomain("denominator vanishes at the point")
    return f.num.evaluate(point) * inv(d)


def substitute(f, images):
    images = [m.num if isinstance(m, RationalFunction) and m.is_polynomial()
              and m.den.constant_value() == 1 else m for m in images]
    if any(isinstance(m, RationalFunction) for m in images):
        return _substitute_rational(f, images)
    num = f.num.substitute(images)
    den = f.den.substitute(images)
    if den.is_zero():
        raise IdenticallyZeroDenominator("denominator vanishes identically")
    return RationalFunction(num, den)


def _substitute_rational(f, images):
    arity = images[0].arity
    images = [m if isinstance(m, RationalFunction)
              else RationalFunction.poly(m) for m in images]

    def ev(p):
        acc = RationalFunction.const(0, arity)
        for e, c in p.terms.items():
            term = RationalFunction.const(c, arity)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            acc = acc + term
        return acc

    den = ev(f.den)
    if den.is_zero():
        raise IdenticallyZeroDenominator("denominator vanishes identically")
    return ev(f.num) / den


# -- real zero sets in the plane --------------------------------------------

@dataclass
class ZeroAnalysis:
    finite: bool
    points: list = field(default_factory=list)
    witness: tuple = None


@dataclass
class IndetReport:
    points: list
    curve_witness: tuple = None

    @property
    def finite(self):
        return self.curve_witness is None


def simplest_between(a, b):
    """Rational with the smallest denominator in the open interval
    ``(a, b)``; ``a < b``."""
    a, b = Fraction(a), Fraction(b)
    if b - a > 1 or floor(a) + 1 < b:
        n = floor(a) + 1
        if n >= b:  # pragma: no cover
            n = (a + b) / 2
        if a < 0 < b:
            return Fraction(0)
        return Fraction(n) if a < n < b else (a + b) / 2
    for d in count(1):
        n = floor(a * d) + 1
        if Fraction(n, d) < b:
            return Fraction(n, d)


def _lower(v):
    return v if is_rational(v) else v.enclose()[0]


def _upper(v):
    return v if is_rational(v) else v.enclose()[1]


def _cell_samples(roots):
    """One rational sample inside each open cell cut out by ``roots``."""
    if not roots:
        return [Fraction(0)]
    out = [floor(_lower(roots[0])) - Fraction(1)]
    for a, b in zip(roots, roots[1:]):
        hi_a, lo_b = _upper(a), _lower(b)
        # distinct roots separate after finitely many refinements
        while hi_a >= lo_b:
            for r in (a, b):
                if not is_rational(r):
                    r.refine()
            hi_a, lo_b = _upper(a), _lower(b)
        out.append(simplest_between(hi_a, lo_b))
    out.append(floor(_upper(roots[-1])) + Fraction(2))
    return out


class PlaneCurveData:
    """Projection data of a nonzero rational polynomial in two variables."""

    def __init__(self, q):
        if q.arity != 2:
            raise UnsupportedDimension("zero sets are computed in the plane only")
        if not q.is_rational():
            raise ValueError("zero-set analysis needs rational coefficients")
        self.q = q
        y_coeffs = list(q.coeffs_in(1).values())
        c = y_coeffs[0]
        for k in y_coeffs[1:]:
            c = gcd(c, k)
        c = normalize(c)
        self.content = c
        self.vertical = real_roots(c.to_upoly(0)) if not c.is_constant() else []
        qp = divexact(q, c)
        if qp.degree(1) <= 0:
            self.s = None
            self.d_roots = []
            self.cells = []
            return
        g = gcd(qp, qp.deriv(1))
        s = normalize(divexact(qp, g))
        self.s = s
        from .core.poly import resultant

        res = resultant(s, s.deriv(1), 1)
        D = res * s.coeff_in(1, s.degree(1))
        self.d_roots = real_roots(D.to_upoly(0))
        self.cells = []
        samples = _cell_samples(self.d_roots)
        for k, x0 in enumerate(samples):
            ys = real_roots(s.univariate_at(1, [x0, None]))
            if ys:
                self.cells.append((k, x0, ys))

    @property
    def finite(self):
        return not self.vertical and not self.cells

    def finite_points(self):
        pts = []
        if self.s is None:
            return pts
        for a in self.d_roots:
            for b in real_roots(self.s.univariate_at(1, [a, None])):
                pts.append((a, b))
        return pts

    def _cell_bounds(self, k):
        lo = None if k == 0 else self.d_roots[k - 1]
        hi = None if k == len(self.d_roots) else self.d_roots[k]
        return lo, hi

    def _cell_sequence(self, k, x0):
        """Distinct rational abscissae inside cell ``k``, starting at
        ``x0``."""
        yield x0
        lo, hi = self._cell_bounds(k)
        if lo is None and hi is None:
            for n in count(1):
                yield x0 + n
                yield x0 - n
        elif lo is None:
            for n in count(1):
                yield x0 - n
        elif hi is None:
            for n in count(1):
                yield x0 + n
        else:
            # points between x0 and the neighbouring roots
            for n in count(2):
                for r, side in ((lo, -1), (hi, 1)):
                    bound = _upper(r) if side < 0 else _lower(r)
                    yield x0 + (bound - x0) * Fraction(n - 1, n)

    def curve_points(self):
        """Endless sequence of real points on the one-dimensional part of
        the zero set, cycling over its components."""
        streams = []
        for a in self.vertical:
            streams.append(((a, y) for y in _integer_walk()))
        for k, x0, _ys in self.cells:
            streams.append(self._cell_points(k, x0))
        while streams:
            for st in list(streams):
                try:
                    yield next(st)
                except StopIteration:  # pragma: no cover
                    streams.remove(st)

    def _cell_points(self, k, x0):
        for x in self._cell_sequence(k, x0):
            for b in real_roots(self.s.univariate_at(1, [x, None])):
                yield (x, b)

def _integer_walk():
    yield Fraction(0)
    for n in count(1):
        yield Fraction(n)
        yield Fraction(-n)


def real_zero_analysis(q):
    """Decide whether the real zero set of ``q`` (arity 2) is finite.

    Returns a :class:`ZeroAnalysis` listing every real zero in the finite
    case, or a real witness point on a one-dimensional component.
    """
    if q.is_zero():
        raise ValueError("zero polynomial")
    if q.is_constant():
        return ZeroAnalysis(True, [])
    data = PlaneCurveData(q)
    if data.vertical:
        return ZeroAnalysis(False, witness=(data.vertical[0], Fraction(0)))
    if data.cells:
        _k, x0, ys = data.cells[0]
        return ZeroAnalysis(False, witness=(x0, ys[0]))
    return ZeroAnalysis(True, data.finite_points())


def indeterminacy_points(f):
    if f.arity != 2:
        raise UnsupportedDimension("indeterminacy is computed for two variables")
    za = real_zero_analysis(f.den)
    if za.finite:
        return IndetReport(za.points)
    return IndetReport([], za.witness)


def points_equal(p, q):
    from .core.realalg import compare

    return all(compare(a, b) == 0 for a, b in zip(p, q))


def sign_at(p, point):
    return sign(p.evaluate(point))
