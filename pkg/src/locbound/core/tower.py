"""Real algebraic extension towers.

A :class:`Generator` is a real root of a squarefree monic polynomial over the
field generated by its parent generators, pinned by a rational isolating
interval.  Field elements (:class:`AlgElem`) are polynomials in the top
generator with coefficients one level down.

Defining polynomials need not be irreducible.  Whenever an exact zero test
or an inversion meets a nontrivial common factor with the defining
polynomial, the defining polynomial is replaced by the factor that actually
vanishes at the generator (decided by a sign change on the isolating
interval).  This keeps every operation exact without factoring over number
fields; the replacement never changes the value of an existing element.
"""

from fractions import Fraction

from ..errors import DivisionByZero, IncompatibleTowers
from . import upoly
from .scalar import enclose as _enclose
from .scalar import is_rational, sign as _sign


class Generator:
    __slots__ = ("parent", "modulus", "lo", "hi", "irreducible", "depth",
                 "_slo")

    def __init__(self, modulus, lo, hi, parent=None, irreducible=False):
        modulus = upoly.monic(upoly.trim(modulus))
        if len(modulus) < 2:
            raise ValueError("defining polynomial must have positive degree")
        self.parent = parent
        self.modulus = modulus
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.irreducible = irreducible or len(modulus) == 2
        self.depth = 1 if parent is None else parent.depth + 1
        self._slo = None

    def __repr__(self):
        return (f"Generator(deg={len(self.modulus) - 1}, "
                f"interval=[{self.lo}, {self.hi}], depth={self.depth})")

    @property
    def degree(self):
        return len(self.modulus) - 1

    def chain(self):
        out = []
        g = self
        while g is not None:
            out.append(g)
            g = g.parent
        return out[::-1]

    def element(self):
        return AlgElem(self, (Fraction(0), Fraction(1)))

    def _sign_lo(self):
        if self._slo is None:
            self._slo = _sign(upoly.evaluate(self.modulus, self.lo))
        return self._slo

    def bisect(self):
        if self.lo == self.hi:
            return
        mid = (self.lo + self.hi) / 2
        s = _sign(upoly.evaluate(self.modulus, mid))
        if s == 0:
            self.lo = self.hi = mid
            self._slo = 0
        elif s == self._sign_lo():
            self.lo = mid
            self._slo = s
        else:
            self.hi = mid

    def refine(self):
        for g in self.chain():
            g.bisect()

    def split(self, factor):
        """Replace the modulus by ``factor`` or its cofactor, whichever
        vanishes at the generator.  Returns True when ``factor`` was kept."""
        factor = upoly.monic(factor)
        cofactor = upoly.monic(upoly.divexact(self.modulus, factor))
        if self.lo == self.hi:
            keep = upoly.evaluate(factor, self.lo)
            mine = _is_zero(keep)
        else:
            s_lo = _sign(upoly.evaluate(factor, self.lo))
            s_hi = _sign(upoly.evaluate(factor, self.hi))
            mine = s_lo * s_hi < 0
        self.modulus = factor if mine else cofactor
        self.irreducible = self.irreducible or len(self.modulus) == 2
        self._slo = None
        return mine


def _is_zero(c):
    if is_rational(c):
        return c == 0
    return c.is_zero()


def is_below(g, h):
    """True when ``g`` is ``h`` or one of its ancestors."""
    while h is not None:
        if h is g:
            return True
        h = h.parent
    return False


def common_generator(g, h):
    if g is None or g is h:
        return h
    if h is None:
        return g
    if g.depth <= h.depth and is_below(g, h):
        return h
    if h.depth < g.depth and is_below(h, g):
        return g
    raise IncompatibleTowers("elements belong to unrelated extension towers")


def _coeffs_at(x, g):
    if isinstance(x, AlgElem) and x.gen is g:
        return x.c
    return (x,)


class AlgElem:
    """Element of the field generated by ``gen`` and its ancestors."""

    __slots__ = ("gen", "c")
    __hash__ = None

    def __init__(self, gen, coeffs):
        self.gen = gen
        c = list(coeffs)
        m = gen.modulus
        d = len(m) - 1
        if len(c) > d:
            for k in range(len(c) - 1, d - 1, -1):
                q = c[k]
                if _szero(q):
                    continue
                for j in range(d):
                    c[k - d + j] = c[k - d + j] - q * m[j]
            del c[d:]
        while c and _szero(c[-1]):
            c.pop()
        self.c = tuple(c)

    # -- structure -------------------------------------------------------
    def __repr__(self):
        return f"AlgElem(~{float(self):.12g}, depth={self.gen.depth})"

    def rational_value(self):
        """The value as a Fraction when the representation is constant."""
        if not self.c:
            return Fraction(0)
        if len(self.c) == 1:
            x = self.c[0]
            if is_rational(x):
                return Fraction(x)
            return x.rational_value()
        return None

    def simplify(self):
        """Fraction when structurally rational, else ``self``."""
        r = self.rational_value()
        return self if r is None else r

    # -- arithmetic ------------------------------------------------------
    def _common(self, other):
        if is_rational(other):
            return self.gen
        if isinstance(other, AlgElem):
            return common_generator(self.gen, other.gen)
        return None

    def __add__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        a, b = _coeffs_at(self, g), _coeffs_at(other, g)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return AlgElem(g, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.gen, [-x for x in self.c])

    def __sub__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        a, b = _coeffs_at(self, g), _coeffs_at(other, g)
        if not a or not b:
            return AlgElem(g, ())
        if len(b) == 1:
            return AlgElem(g, [x * b[0] for x in a])
        if len(a) == 1:
            return AlgElem(g, [a[0] * y for y in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _szero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return AlgElem(g, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        if is_rational(other):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        g = self._common(other)
        if g is None:
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgElem(self.gen, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        g = self.gen
        while True:
            r = upoly.trim(self.c)
            if not r:
                raise DivisionByZero("inverse of zero")
            d, s = upoly.xgcd(r, g.modulus)
            if len(d) == 1:
                return AlgElem(g, s)
            if g.split(d):
                raise DivisionByZero("inverse of zero")

    # -- exact tests -----------------------------------------------------
    def is_zero(self):
        if not self.c:
            return True
        g = self.gen
        r = self.c
        if len(r) >= len(g.modulus):
            # the modulus may have shrunk after a split
            r = upoly.rem(list(r), g.modulus)
        if g.irreducible:
            return all(_is_zero(x) for x in r)
        r = upoly.trim(r)
        if not r:
            return True
        d = upoly.gcd(r, g.modulus)
        if len(d) == 1:
            return False
        return g.split(d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not (is_rational(other) or isinstance(other, AlgElem)):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # -- ordering --------------------------------------------------------
    def enclose(self):
        g = self.gen
        lo, hi = g.lo, g.hi
        acc_lo = acc_hi = Fraction(0)
        for x in reversed(self.c):
            clo, chi = _enclose(x)
            if lo == hi:
                acc_lo, acc_hi = acc_lo * lo, acc_hi * lo
                if acc_lo > acc_hi:
                    acc_lo, acc_hi = acc_hi, acc_lo
            else:
                ps = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
                acc_lo, acc_hi = min(ps), max(ps)
            acc_lo, acc_hi = acc_lo + clo, acc_hi + chi
        return acc_lo, acc_hi

    def refine(self):
        self.gen.refine()

    def sign(self):
        if self.is_zero():
            return 0
        while True:
            lo, hi = self.enclose()
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.gen.refine()

    def _cmp(self, other):
        if not (is_rational(other) or isinstance(other, AlgElem)):
            return NotImplemented
        return _sign(self - other)

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __float__(self):
        from .scalar import to_float

        return to_float(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self


def _szero(x):
    if is_rational(x):
        return x == 0
    return not x.c


def simplify(x):
    """Collapse structurally rational tower elements to Fractions."""
    if isinstance(x, AlgElem):
        return x.simplify()
    return Fraction(x) if isinstance(x, int) else x
