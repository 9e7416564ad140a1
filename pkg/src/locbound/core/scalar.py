"""Uniform helpers over field elements.

A field element is either a :class:`fractions.Fraction` (ints are accepted
and promoted) or an element of a real algebraic extension tower, which
provides ``is_zero``, ``sign``, ``enclose``, ``refine`` and ``inverse``.
"""

from fractions import Fraction

from ..errors import DivisionByZero

_RAT = (int, Fraction)


def is_rational(c):
    return isinstance(c, _RAT)


def as_fraction(c):
    return Fraction(c) if isinstance(c, int) else c


def is_zero(c):
    if isinstance(c, _RAT):
        return c == 0
    return c.is_zero()


def structurally_zero(c):
    """Cheap test: true for 0 and for empty tower representations."""
    if isinstance(c, _RAT):
        return c == 0
    return not c.c


def sign(c):
    if isinstance(c, _RAT):
        return (c > 0) - (c < 0)
    return c.sign()


def inv(c):
    if isinstance(c, _RAT):
        if c == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(c)
    return c.inverse()


def div(a, b):
    return a * inv(b)


def enclose(c):
    """Current rational enclosure ``(lo, hi)`` of a field element."""
    if isinstance(c, _RAT):
        c = Fraction(c)
        return c, c
    return c.enclose()


def refine(c):
    if not isinstance(c, _RAT):
        c.refine()


def magnitude_bound(c):
    """A rational upper bound for ``|c|``."""
    lo, hi = enclose(c)
    return max(abs(lo), abs(hi))


def top_generator(values):
    """Deepest generator among ``values``; all must share one tower chain."""
    from .tower import common_generator

    g = None
    for v in values:
        if not isinstance(v, _RAT):
            g = common_generator(g, v.gen)
    return g


def to_float(c):
    lo, hi = enclose(c)
    while hi - lo > Fraction(1, 10**12) * max(1, abs(lo)):
        refine(c)
        lo2, hi2 = enclose(c)
        if (lo2, hi2) == (lo, hi):
            break
        lo, hi = lo2, hi2
    return float((lo + hi) / 2)
