"""Dense univariate polynomials over an exact real field.

Polynomials are lists of coefficients, lowest degree first.  The empty list
is the zero polynomial.  Coefficients may be rationals or tower elements;
all zero tests are exact.
"""

from fractions import Fraction

from .scalar import (enclose, inv, is_zero, magnitude_bound, sign,
                     structurally_zero)

ZERO = ()


def trim(p):
    p = list(p)
    while p and is_zero(p[-1]):
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def lc(p):
    return p[-1]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    if is_zero(c):
        return []
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if structurally_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, n):
    result = [Fraction(1)]
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def divmod_(a, b):
    """Quotient and remainder; ``b`` must be nonzero (trimmed)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    if len(a) < len(b):
        return [], a
    ilc = inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if structurally_zero(c):
            continue
        q = c * ilc
        quot[k - db] = q
        for j in range(db + 1):
            rem[k - db + j] = rem[k - db + j] - q * b[j]
    return trim(quot), trim(rem[:db])


def rem(a, b):
    return divmod_(a, b)[1]


def divexact(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def monic(p):
    if not p:
        return []
    if isinstance(p[-1], (int, Fraction)) and p[-1] == 1:
        return list(p)
    i = inv(p[-1])
    return [c * i for c in p[:-1]] + [Fraction(1)]


def gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a, b):
    """Return ``(g, s)`` with ``s*a = g (mod b)``, ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r0:
        return [], []
    i = inv(r0[-1])
    return [c * i for c in r0], [c * i for c in s0]


def deriv(p):
    return trim([p[i] * i for i in range(1, len(p))])


def squarefree(p):
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    return monic(divexact(p, gcd(p, deriv(p))))


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p, q):
    """``p(q(v))``."""
    acc = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c])
    return acc


def taylor_shift(p, a):
    """``p(v + a)``."""
    return compose(p, trim([a, Fraction(1)]))


def sturm_sequence(p):
    seq = [trim(p), deriv(p)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        seq.append(neg(r))
    seq.pop()
    return seq


def sign_at(p, x):
    return sign(evaluate(p, x))


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_variations(seq, x):
    return _variations([sign_at(s, x) for s in seq])


def sturm_variations_infinity(seq, positive):
    out = []
    for s in seq:
        sg = sign(s[-1])
        if not positive and (len(s) - 1) % 2:
            sg = -sg
        out.append(sg)
    return _variations(out)


def root_bound(p):
    """Rational ``B`` with every real root strictly inside ``(-B, B)``."""
    p = trim(p)
    lead_lo, lead_hi = enclose(p[-1])
    while lead_lo <= 0 <= lead_hi:
        from .scalar import refine

        refine(p[-1])
        lead_lo, lead_hi = enclose(p[-1])
    lead = min(abs(lead_lo), abs(lead_hi))
    m = max((magnitude_bound(c) for c in p[:-1]), default=Fraction(0))
    bound = 1 + m / lead
    return Fraction(int(bound) + 1)


def count_roots(p, a, b, seq=None):
    """Distinct real roots in ``(a, b]`` (``a`` must not be a root)."""
    seq = seq or sturm_sequence(squarefree(p))
    return sturm_variations(seq, a) - sturm_variations(seq, b)


def count_real_roots(p):
    p = trim(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(squarefree(p))
    return (sturm_variations_infinity(seq, False)
            - sturm_variations_infinity(seq, True))


def isolate(p):
    """Isolating intervals for the distinct real roots of ``p``.

    Returns ``(S, intervals)`` where ``S`` is the monic squarefree part and
    every interval ``(lo, hi)`` either has ``lo == hi`` (an exact rational
    root) or ``lo < hi`` with ``S(lo)``, ``S(hi)`` nonzero of opposite sign
    and exactly one root of ``S`` in between.  Intervals are disjoint and
    sorted.
    """
    S = squarefree(p)
    if len(S) <= 1:
        return S, []
    seq = sturm_sequence(S)
    B = root_bound(S)
    found = []

    def V(x):
        return sturm_variations(seq, x)

    stack = [(-B, B, V(-B), V(B))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        if is_zero(evaluate(S, mid)):
            found.append((mid, mid))
            eps = (b - a) / 4
            while True:
                lo, hi = mid - eps, mid + eps
                if (not is_zero(evaluate(S, lo)) and not is_zero(evaluate(S, hi))
                        and V(lo) - V(hi) == 1):
                    break
                eps /= 2
            stack.append((a, lo, va, V(lo)))
            stack.append((hi, b, V(hi), vb))
        else:
            vm = V(mid)
            stack.append((a, mid, va, vm))
            stack.append((mid, b, vm, vb))
    found.sort()
    return S, found
