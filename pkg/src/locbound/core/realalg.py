"""Real roots of univariate polynomials and tower-independent algebraic
numbers.

Roots of rational polynomials get irreducible defining polynomials (via
factorization) so that later zero tests are structural.  Roots of
polynomials over a tower become new generators on top of that tower.

:class:`RealAlgebraic` is the absolute form of a real algebraic number:
its minimal polynomial over Q with an isolating interval.  It is used to
compare numbers living in unrelated towers and for serialization.
"""

from fractions import Fraction
from math import gcd

from ..errors import IncompatibleTowers
from . import upoly
from .factor import factor_upoly
from .scalar import div, enclose, is_rational, is_zero, refine, sign, top_generator
from .tower import AlgElem, Generator, _coeffs_at


def _all_rational(coeffs):
    return all(is_rational(c) or c.rational_value() is not None
               for c in coeffs)


def _as_rational(coeffs):
    out = []
    for c in coeffs:
        out.append(Fraction(c) if is_rational(c) else c.rational_value())
    return out


def real_roots(coeffs):
    """Distinct real roots in increasing order.

    Rational roots are returned as Fractions, others as tower elements.
    """
    p = upoly.trim(coeffs)
    if len(p) <= 1:
        return []
    if _all_rational(p):
        return _rational_poly_roots(_as_rational(p))
    return _tower_poly_roots(p)


def _rational_poly_roots(p):
    S, intervals = upoly.isolate(p)
    if not intervals:
        return []
    factors = factor_upoly(S)
    out = []
    for lo, hi in intervals:
        if lo == hi:
            out.append(lo)
            continue
        for f in factors:
            if upoly.sign_at(f, lo) * upoly.sign_at(f, hi) < 0:
                break
        else:  # pragma: no cover - isolation guarantees a sign change
            raise AssertionError("no factor changes sign on interval")
        if len(f) == 2:
            out.append(-f[0] / f[1])
        else:
            out.append(_shared_root(f, lo, hi).element())
    return out


_ROOT_CACHE = {}


def _shared_root(f, lo, hi):
    """One generator per (irreducible polynomial, root index), so equal
    numbers met in different places share a tower."""
    B = upoly.root_bound(f)
    key = (tuple(f), upoly.count_roots(f, -B, lo))
    g = _ROOT_CACHE.get(key)
    if g is None:
        g = _ROOT_CACHE[key] = Generator(f, lo, hi, irreducible=True)
    return g


def _tower_poly_roots(p):
    S, intervals = upoly.isolate(p)
    if not intervals:
        return []
    if len(S) == 2:
        return [-div(S[0], S[1])]
    parent = top_generator(S)
    out = []
    for lo, hi in intervals:
        if lo == hi:
            out.append(lo)
        else:
            out.append(Generator(S, lo, hi, parent=parent).element())
    return out


# -- absolute form --------------------------------------------------------

def _flatten(x, gen):
    if gen is None:
        return [Fraction(x) if is_rational(x) else x.rational_value()]
    e = AlgElem(gen, _coeffs_at(x, gen))
    out = []
    for j in range(gen.degree):
        c = e.c[j] if j < len(e.c) else Fraction(0)
        out.extend(_flatten(c, gen.parent))
    return out


def _first_dependency(vectors):
    """Coefficients ``c_0..c_k`` (``c_k = 1``) of the first linear
    dependency among ``vectors`` in order."""
    basis = []  # (pivot, row, combination)
    for k, v in enumerate(vectors):
        row = list(v)
        comb = {k: Fraction(1)}
        for piv, brow, bcomb in basis:
            f = row[piv]
            if f:
                row = [a - f * b for a, b in zip(row, brow)]
                for j, c in bcomb.items():
                    comb[j] = comb.get(j, 0) - f * c
        piv = next((i for i, a in enumerate(row) if a), None)
        if piv is None:
            return [comb.get(j, Fraction(0)) for j in range(k + 1)]
        s = 1 / row[piv]
        basis.append((piv, [a * s for a in row],
                      {j: c * s for j, c in comb.items()}))
    raise AssertionError("no dependency found")


def minimal_polynomial(a):
    """Monic minimal polynomial over Q of a tower element."""
    if is_rational(a):
        return [-Fraction(a), Fraction(1)]
    r = a.rational_value()
    if r is not None:
        return [-r, Fraction(1)]
    g = a.gen
    if (g.parent is None and g.irreducible and len(a.c) == 2
            and a.c[0] == 0 and a.c[1] == 1):
        return list(g.modulus)
    # settle reducible moduli cheaply before sizing the basis
    size = 1
    for h in g.chain():
        size *= h.degree
    powers = [AlgElem(g, (Fraction(1),))]
    for _ in range(size):
        powers.append(powers[-1] * a)
    vecs = [_flatten(p, g) for p in powers]
    dep = _first_dependency(vecs)
    candidates = factor_upoly(dep)
    for f in candidates:
        if is_zero(upoly.evaluate(f, a)):
            return f
    raise AssertionError("minimal polynomial not found")


class RealAlgebraic:
    """Absolute real algebraic number: monic minimal polynomial over Q and
    an isolating interval ``[lo, hi]`` with ``lo < hi``."""

    __slots__ = ("minpoly", "lo", "hi", "_seq")
    __hash__ = None

    def __init__(self, minpoly, lo, hi):
        self.minpoly = list(minpoly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._seq = None

    def seq(self):
        if self._seq is None:
            self._seq = upoly.sturm_sequence(self.minpoly)
        return self._seq

    def refine(self):
        mid = (self.lo + self.hi) / 2
        s = upoly.sign_at(self.minpoly, mid)
        if s == 0:  # pragma: no cover - irreducible of degree > 1
            raise AssertionError("rational root of irreducible polynomial")
        if s == upoly.sign_at(self.minpoly, self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def enclose(self):
        return self.lo, self.hi

    def integer_minpoly(self):
        den = 1
        for c in self.minpoly:
            den = den * c.denominator // gcd(den, c.denominator)
        return [int(c * den) for c in self.minpoly]

    def to_element(self):
        return Generator(self.minpoly, self.lo, self.hi,
                         irreducible=True).element()

    def canonical_interval(self):
        """Isolating interval that depends only on the number itself: the
        one ``upoly.isolate`` assigns to it, bisected to width <= 1/4."""
        _, ivs = upoly.isolate(self.minpoly)
        while True:
            hits = [iv for iv in ivs if iv[0] < self.hi and self.lo < iv[1]]
            if len(hits) == 1:
                break
            self.refine()
        lo, hi = hits[0]
        s_lo = upoly.sign_at(self.minpoly, lo)
        while hi - lo > Fraction(1, 4):
            mid = (lo + hi) / 2
            if upoly.sign_at(self.minpoly, mid) == s_lo:
                lo = mid
            else:
                hi = mid
        return lo, hi

    def to_text(self, var="r"):
        from .printing import format_scalar

        terms = []
        for k in range(len(self.minpoly) - 1, -1, -1):
            c = self.minpoly[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            a = abs(c)
            s = format_scalar(a)
            if not mono:
                body = s
            elif a == 1:
                body = mono
            else:
                body = f"({s})*{mono}" if "/" in s else f"{s}*{mono}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f" - {body}" if c < 0 else f" + {body}")
        lo, hi = self.canonical_interval()
        return f"root({''.join(terms)}, {format_scalar(lo)}, {format_scalar(hi)})"

    def __float__(self):
        while self.hi - self.lo > Fraction(1, 10**15) * max(1, abs(self.lo)):
            self.refine()
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        return f"RealAlgebraic({self.integer_minpoly()}, ~{float(self):.12g})"


def absolute(a):
    """Fraction for rational values, else a :class:`RealAlgebraic`."""
    if isinstance(a, RealAlgebraic):
        return a
    if is_rational(a):
        return Fraction(a)
    r = a.rational_value()
    if r is not None:
        return r
    f = minimal_polynomial(a)
    if len(f) == 2:
        return -f[0]
    seq = upoly.sturm_sequence(f)
    while True:
        lo, hi = a.enclose()
        if (lo < hi and upoly.sign_at(f, lo) != 0 and upoly.sign_at(f, hi) != 0
                and upoly.sturm_variations(seq, lo)
                - upoly.sturm_variations(seq, hi) == 1):
            return RealAlgebraic(f, lo, hi)
        a.refine()
        lo2, hi2 = a.enclose()
        if lo2 == hi2:  # pragma: no cover - collapsed onto a rational point
            return lo2


def compare(a, b):
    """Sign of ``a - b`` for real algebraic numbers from any towers."""
    if isinstance(a, RealAlgebraic) or isinstance(b, RealAlgebraic):
        return _compare_absolute(absolute(a), absolute(b))
    try:
        top_generator([a, b])
    except IncompatibleTowers:
        return _compare_absolute(absolute(a), absolute(b))
    return sign(a - b)


def _compare_absolute(a, b):
    if is_rational(a) and is_rational(b):
        return (a > b) - (a < b)
    if is_rational(a):
        return -_compare_absolute(b, a)
    if is_rational(b):
        if upoly.sign_at(a.minpoly, b) == 0:  # pragma: no cover
            return 0
        while a.lo <= b <= a.hi:
            a.refine()
        return 1 if a.lo > b else -1
    if a.minpoly == b.minpoly:
        lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
        if max(a.lo, b.lo) <= min(a.hi, b.hi):
            seq = a.seq()
            if (upoly.sign_at(a.minpoly, lo) and upoly.sign_at(a.minpoly, hi)
                    and upoly.sturm_variations(seq, lo)
                    - upoly.sturm_variations(seq, hi) == 1):
                return 0
    while not (a.hi < b.lo or b.hi < a.lo):
        a.refine()
        b.refine()
        if a.minpoly == b.minpoly and max(a.lo, b.lo) <= min(a.hi, b.hi):
            lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
            seq = a.seq()
            if (upoly.sturm_variations(seq, lo)
                    - upoly.sturm_variations(seq, hi) == 1):
                return 0
    return 1 if a.lo > b.hi else -1


def values_equal(a, b):
    return compare(a, b) == 0


def to_element(a):
    """Field element usable in arithmetic (fresh tower for absolutes)."""
    if isinstance(a, RealAlgebraic):
        return a.to_element()
    return a


def enclosure(a):
    return enclose(a) if not isinstance(a, RealAlgebraic) else a.enclose()


def refine_value(a):
    refine(a)
