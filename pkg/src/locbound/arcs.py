"""Bounded Puiseux arcs and limits of rational functions along them.

An arc is a tuple of finite Puiseux polynomials in ``t`` with nonnegative
rational exponents.  Composition substitutes ``t = s^N`` for the common
ramification ``N`` and works with exact polynomials in ``s``, so orders and
limits carry no truncation error.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .core import upoly
from .core.printing import format_scalar
from .core.scalar import div, is_rational, is_zero
from .errors import ArcInsideIndeterminacy, ConstantArc, UnboundedArc

INFINITY = float("inf")


class _Infinite:
    """Marker for a limit of ``+-infinity`` in absolute value."""

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


class PuiseuxPoly:
    """Finite sum of ``c * t^e`` with rational exponents ``e``."""

    __slots__ = ("terms",)
    __hash__ = None

    def __init__(self, terms=()):
        acc = {}
        for e, c in (terms.items() if isinstance(terms, dict) else terms):
            e = Fraction(e)
            acc[e] = acc[e] + c if e in acc else c
        self.terms = tuple(sorted(
            (e, Fraction(c) if isinstance(c, int) else c)
            for e, c in acc.items() if not is_zero(c)))

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @property
    def ramification(self):
        return lcm(1, *(e.denominator for e, _ in self.terms))

    def order(self):
        return self.terms[0][0] if self.terms else INFINITY

    def constant_term(self):
        if self.terms and self.terms[0][0] == 0:
            return self.terms[0][1]
        return Fraction(0)

    def is_constant(self):
        return all(e == 0 for e, _ in self.terms)

    def is_bounded(self):
        return all(e >= 0 for e, _ in self.terms)

    def _lift(self, other):
        if isinstance(other, PuiseuxPoly):
            return other
        return PuiseuxPoly.const(other)

    def __add__(self, other):
        o = self._lift(other)
        return PuiseuxPoly(list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly([(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return PuiseuxPoly([(e, c * other) for e, c in self.terms])
        return PuiseuxPoly([(e1 + e2, c1 * c2) for e1, c1 in self.terms
                            for e2, c2 in other.terms])

    __rmul__ = __mul__

    def __pow__(self, n):
        result = PuiseuxPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, PuiseuxPoly):
            if is_rational(other) or hasattr(other, "gen"):
                other = PuiseuxPoly.const(other)
            else:
                return NotImplemented
        return not (self - other).terms

    def to_upoly(self, N):
        """Dense coefficients in ``s`` after ``t = s^N``."""
        if not self.terms:
            return []
        out = [Fraction(0)] * (int(self.terms[-1][0] * N) + 1)
        for e, c in self.terms:
            k = e * N
            if k.denominator != 1:
                raise ValueError("ramification does not clear exponents")
            out[int(k)] = c
        return out

    def to_text(self, var="t"):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            elif e.denominator == 1:
                mono = f"{var}^{e.numerator}"
            else:
                mono = f"{var}^({e.numerator}/{e.denominator})"
            neg = is_rational(c) and c < 0
            a = -c if neg else c
            s = format_scalar(a)
            if not mono:
                body = s
            elif is_rational(a) and a == 1:
                body = mono
            elif is_rational(a) and "/" not in s:
                body = f"{s}*{mono}"
            else:
                body = f"({s})*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"PuiseuxPoly({self.to_text()})"


class Arc:
    """Validated tuple of bounded, not all constant, Puiseux polynomials."""

    __slots__ = ("entries",)
    __hash__ = None

    def __init__(self, entries):
        self.entries = tuple(entries)

    def __len__(self):
        return len(self.entries)

    @property
    def ramification(self):
        return lcm(*(p.ramification for p in self.entries))

    def limit_point(self):
        return tuple(p.constant_term() for p in self.entries)

    def to_text(self):
        return "(" + ", ".join(p.to_text() for p in self.entries) + ")"

    def __eq__(self, other):
        if not isinstance(other, Arc):
            return NotImplemented
        return len(self) == len(other) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return f"Arc{self.to_text()}"


def make_arc(entries):
    entries = [p if isinstance(p, PuiseuxPoly) else PuiseuxPoly.const(p)
               for p in entries]
    if not entries:
        raise ValueError("an arc needs at least one entry")
    if any(not p.is_bounded() for p in entries):
        raise UnboundedArc("arc entries must have nonnegative exponents")
    if all(p.is_constant() for p in entries):
        raise ConstantArc("constant arcs are excluded")
    return Arc(entries)


def limit_point(arc):
    return arc.limit_point()


def linear_arc(point, direction, exponent=1):
    """``point + t^exponent * direction``."""
    return make_arc([PuiseuxPoly({0: p, exponent: d})
                     for p, d in zip(point, direction)])


@dataclass
class ArcLimit:
    order: object  # Fraction, or INFINITY when the composite vanishes
    limit: object  # field element, or INFINITE
    leading_coefficient: object = None

    @property
    def is_infinite(self):
        return self.limit is INFINITE

    @property
    def vanishes(self):
        return self.order == INFINITY or self.order > 0


def _eval_upoly(p, values):
    """Evaluate an MPoly at dense univariate polynomials."""
    cache = [{1: v} for v in values]

    def pw(i, k):
        c = cache[i]
        if k not in c:
            h = k // 2
            sq = upoly.mul(pw(i, h), pw(i, h))
            c[k] = upoly.mul(sq, values[i]) if k % 2 else sq
        return c[k]

    acc = []
    for e, c in p.terms.items():
        term = [c]
        for i, k in enumerate(e):
            if k:
                term = upoly.mul(term, pw(i, k))
                if not term:
                    break
        acc = upoly.add(acc, term)
    return acc


def _low(p):
    for k, c in enumerate(p):
        if not is_zero(c):
            return k, c
    return None, None


def compose(f, arc):
    """Order and limit of ``f`` along ``arc``."""
    if f.arity != len(arc):
        raise ValueError("arc length does not match the function arity")
    N = arc.ramification
    vals = [p.to_upoly(N) for p in arc.entries]
    den = _eval_upoly(f.den, vals)
    kq, cq = _low(den)
    if kq is None:
        raise ArcInsideIndeterminacy("the arc lies in the denominator's zero set")
    num = _eval_upoly(f.num, vals)
    kp, cp = _low(num)
    if kp is None:
        return ArcLimit(INFINITY, Fraction(0), None)
    order = Fraction(kp - kq, N)
    lead = div(cp, cq)
    if order > 0:
        return ArcLimit(order, Fraction(0), lead)
    if order < 0:
        return ArcLimit(order, INFINITE, lead)
    return ArcLimit(order, lead, lead)


def in_arc_zero_set(f, arc):
    return compose(f, arc).vanishes


def substitute_arc(images, arc):
    """Image of ``arc`` under the polynomial map ``images``."""
    out = []
    for m in images:
        acc = PuiseuxPoly()
        for e, c in m.terms.items():
            term = PuiseuxPoly.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * arc.entries[i] ** k
            acc = acc + term
        out.append(acc)
    return make_arc(out)


def concat_arcs(*arcs):
    """Arc in the product space from arcs in the factors."""
    entries = []
    for a in arcs:
        entries.extend(a.entries)
    return make_arc(entries)
