"""Sparse multivariate polynomials over an exact real field.

Terms are stored as ``{exponent tuple: coefficient}`` with no zero
coefficients.  Coefficients are rationals or tower elements; every
arithmetic path goes through exact zero tests.
"""

from fractions import Fraction
from math import gcd as igcd

from ..errors import DivisionByZero
from . import upoly
from .scalar import inv, is_rational, is_zero, sign


def _clean(terms):
    return {e: c for e, c in terms.items() if not is_zero(c)}


def _grlex_key(e):
    return (sum(e), e)


class MPoly:
    __slots__ = ("arity", "terms")
    __hash__ = None

    def __init__(self, arity, terms=None, _clean_=True):
        self.arity = arity
        if terms is None:
            terms = {}
        elif _clean_:
            terms = _clean(terms)
        self.terms = terms

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, c, arity):
        if is_rational(c):
            c = Fraction(c)
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, i, arity):
        e = [0] * arity
        e[i] = 1
        return cls(arity, {tuple(e): Fraction(1)}, False)

    @classmethod
    def monomial(cls, e, c, arity):
        return cls(arity, {tuple(e): c})

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        return MPoly.const(other, self.arity)

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.arity, Fraction(0))

    def is_rational(self):
        return all(is_rational(c) for c in self.terms.values())

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    def involves(self, i):
        return any(e[i] for e in self.terms)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.arity, {e: -c for e, c in self.terms.items()},
                     False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if is_zero(other):
                return MPoly(self.arity)
            return MPoly(self.arity,
                         {e: c * other for e, c in self.terms.items()})
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return MPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.const(1, self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, MPoly):
            return divexact(self, c)
        return self * inv(c)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.arity != self.arity:
                return False
        elif not (is_rational(other) or hasattr(other, "gen")):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # -- degrees and parts -----------------------------------------------
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def order(self):
        """Lowest total degree of a term (``-1`` for zero)."""
        return min((sum(e) for e in self.terms), default=-1)

    def low_degree(self, i):
        return min((e[i] for e in self.terms), default=-1)

    def homogeneous(self, d):
        return MPoly(self.arity,
                     {e: c for e, c in self.terms.items() if sum(e) == d},
                     False)

    def leading(self):
        """Leading ``(exponent, coefficient)`` under graded lex order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coeffs_in(self, i):
        """``{k: coefficient of x_i^k}`` with coefficients free of ``x_i``."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            f = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[f] = c
        return {k: MPoly(self.arity, t, False) for k, t in out.items()}

    def coeff_in(self, i, k):
        t = {e[:i] + (0,) + e[i + 1:]: c
             for e, c in self.terms.items() if e[i] == k}
        return MPoly(self.arity, t, False)

    def divide_var_power(self, i, k):
        if k == 0:
            return self
        t = {}
        for e, c in self.terms.items():
            if e[i] < k:
                raise ArithmeticError("not divisible by variable power")
            t[e[:i] + (e[i] - k,) + e[i + 1:]] = c
        return MPoly(self.arity, t, False)

    def mul_var_power(self, i, k):
        if k == 0:
            return self
        return MPoly(self.arity,
                     {e[:i] + (e[i] + k,) + e[i + 1:]: c
                      for e, c in self.terms.items()}, False)

    def deriv(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                t[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MPoly(self.arity, t)

    def map_coeffs(self, fn):
        return MPoly(self.arity, {e: fn(c) for e, c in self.terms.items()})

    # -- evaluation and substitution -------------------------------------
    def evaluate(self, point):
        if len(point) != self.arity:
            raise ValueError("point has wrong length")
        acc = Fraction(0)
        powers = [{} for _ in range(self.arity)]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = point[i] ** k
                    term = term * cache[k]
            acc = acc + term
        return acc

    def partial(self, i, value):
        """Substitute ``x_i = value``; the result keeps the same arity."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            term = c * value ** k if k else c
            f = e[:i] + (0,) + e[i + 1:]
            out[f] = out[f] + term if f in out else term
        return MPoly(self.arity, out)

    def substitute(self, images):
        """Compose with polynomial ``images`` (one per variable)."""
        if len(images) != self.arity:
            raise ValueError("substitution needs one image per variable")
        arity = images[0].arity
        cache = [{0: MPoly.const(1, arity)} for _ in images]

        def pw(i, k):
            c = cache[i]
            if k not in c:
                c[k] = pw(i, k - 1) * images[i]
            return c[k]

        acc = {}
        for e, c in self.terms.items():
            term = MPoly.const(c, arity)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for f, d in term.terms.items():
                acc[f] = acc[f] + d if f in acc else d
        return MPoly(arity, acc)

    def shift(self, center):
        """``p(x + center)``."""
        images = [MPoly.var(i, self.arity) + center[i]
                  for i in range(self.arity)]
        return self.substitute(images)

    def to_upoly(self, i):
        """Dense univariate coefficients in ``x_i`` (must be the only
        variable present)."""
        if not self.terms:
            return []
        out = [Fraction(0)] * (self.degree(i) + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial involves other variables")
            out[e[i]] = c
        return upoly.trim(out)

    @classmethod
    def from_upoly(cls, coeffs, i, arity):
        t = {}
        for k, c in enumerate(coeffs):
            e = [0] * arity
            e[i] = k
            t[tuple(e)] = c
        return cls(arity, t)

    def univariate_at(self, i, values):
        """Restrict to a line: all variables except ``x_i`` take ``values``
        (indexed by variable), returning dense coefficients in ``x_i``."""
        out = {}
        for e, c in self.terms.items():
            term = c
            for j, k in enumerate(e):
                if j != i and k:
                    term = term * values[j] ** k
            out[e[i]] = out[e[i]] + term if e[i] in out else term
        if not out:
            return []
        dense = [Fraction(0)] * (max(out) + 1)
        for k, c in out.items():
            dense[k] = c
        return upoly.trim(dense)

    # -- display ---------------------------------------------------------
    def __repr__(self):
        from .printing import format_poly

        return f"MPoly({format_poly(self)})"


def divexact(a, b):
    """Exact quotient ``a / b``; raises ArithmeticError if inexact."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if b.is_constant():
        return a * inv(b.constant_value())
    eb = max(b.terms)
    ib = inv(b.terms[eb])
    r = a
    q = {}
    while r.terms:
        e = max(r.terms)
        d = tuple(x - y for x, y in zip(e, eb))
        if any(k < 0 for k in d):
            raise ArithmeticError("inexact polynomial division")
        c = r.terms[e] * ib
        q[d] = c
        r = r - MPoly(a.arity, {d: c}, False) * b
        if e in r.terms:
            # exact cancellation must remove the leading term
            raise ArithmeticError("inexact polynomial division")
    return MPoly(a.arity, q)


def try_divexact(a, b):
    try:
        return divexact(a, b)
    except ArithmeticError:
        return None


def normalize(p):
    """Canonical associate: integer primitive with positive graded-lex
    leading coefficient over Q, monic over an extension."""
    if p.is_zero():
        return p
    if p.is_rational():
        den = 1
        num = 0
        for c in p.terms.values():
            den = den * c.denominator // igcd(den, c.denominator)
        for c in p.terms.values():
            num = igcd(num, (c * den).numerator)
        scale = Fraction(den, num)
        if p.leading()[1] < 0:
            scale = -scale
        return p * scale if scale != 1 else p
    return p * inv(p.leading()[1])


def lc_sign_normalize(p):
    if p.is_zero():
        return p
    return -p if sign(p.leading()[1]) < 0 else p


def prem(a, b, i):
    """Pseudo-remainder of ``a`` by ``b`` in ``x_i``."""
    db = b.degree(i)
    lb = b.coeff_in(i, db)
    r = a
    while not r.is_zero() and r.degree(i) >= db:
        dr = r.degree(i)
        lr = r.coeff_in(i, dr)
        r = r * lb - (lr * b).mul_var_power(i, dr - db)
    return r


def content(p, i, k):
    """Gcd of the coefficients of ``p`` in ``x_i``; those live in
    variables ``< k``."""
    g = None
    for c in p.coeffs_in(i).values():
        g = c if g is None else _gcd(g, c, k)
        if g.is_constant():
            return MPoly.const(1, p.arity)
    return normalize(g)


def _gcd(a, b, k):
    """Gcd of ``a`` and ``b`` which involve only variables ``< k``."""
    n = a.arity
    if a.is_zero():
        return normalize(b)
    if b.is_zero():
        return normalize(a)
    while k > 0 and not (a.involves(k - 1) or b.involves(k - 1)):
        k -= 1
    if k == 0:
        return MPoly.const(1, n)
    v = k - 1
    ca = content(a, v, v)
    cb = content(b, v, v)
    c = _gcd(ca, cb, v)
    pa = divexact(a, ca)
    pb = divexact(b, cb)
    if pa.degree(v) < pb.degree(v):
        pa, pb = pb, pa
    while not pb.is_zero():
        if pb.degree(v) == 0:
            pa = MPoly.const(1, n)
            break
        r = prem(pa, pb, v)
        pa = pb
        if r.is_zero():
            break
        pb = normalize(divexact(r, content(r, v, v)))
    pa = normalize(pa)
    return normalize(c * pa)


def gcd(a, b):
    """Greatest common divisor, normalized (see :func:`normalize`)."""
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    if a.is_zero() and b.is_zero():
        return MPoly(a.arity)
    if a.arity >= 2 and a.is_rational() and b.is_rational():
        # the recursive PRS below blows up quickly with the degree
        from .factor import from_sympy, to_sympy

        return normalize(from_sympy(to_sympy(a).gcd(to_sympy(b)), a.arity))
    return _gcd(a, b, a.arity)


def squarefree_part(p):
    """Product of the distinct irreducible factors (up to a constant)."""
    out = p
    for i in sorted(p.variables()):
        d = out.deriv(i)
        if not d.is_zero():
            out = divexact(out, gcd(out, d))
    return normalize(out)


def determinant(matrix, arity):
    """Fraction-free (Bareiss) determinant of a square MPoly matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return MPoly.const(1, arity)
    s = 1
    prev = MPoly.const(1, arity)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    s = -s
                    break
            else:
                return MPoly(arity)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if s > 0 else -det


def resultant(a, b, i):
    """Resultant of ``a`` and ``b`` with respect to ``x_i`` (Sylvester
    determinant)."""
    if a.is_zero() or b.is_zero():
        return MPoly(a.arity)
    m, n = a.degree(i), b.degree(i)
    if m == 0 and n == 0:
        return MPoly.const(1, a.arity)
    if m == 0:
        return a ** n
    if n == 0:
        return b ** m
    ca = a.coeffs_in(i)
    cb = b.coeffs_in(i)
    zero = MPoly(a.arity)
    size = m + n
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + m - k] = ca.get(k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + n - k] = cb.get(k, zero)
        rows.append(row)
    return determinant(rows, a.arity)


def discriminant_data(p, i):
    """``(Res_i(p, dp/dx_i), lc_i(p))``."""
    return resultant(p, p.deriv(i), i), p.coeff_in(i, p.degree(i))
