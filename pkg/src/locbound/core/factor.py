"""Irreducible factorization over Q, delegated to sympy.

Only rational-coefficient inputs are accepted.  Factors come back as
normalized :class:`MPoly` objects (integer primitive, positive leading
coefficient) or as dense univariate lists.
"""

from fractions import Fraction

import sympy

from .poly import MPoly, normalize


def _gens(arity):
    return sympy.symbols(f"_x0:{arity}")


def to_sympy(p, gens=None):
    gens = gens or _gens(p.arity)
    d = {e: sympy.Rational(c.numerator, c.denominator)
         for e, c in p.terms.items()}
    if not d:
        return sympy.Poly(0, *gens, domain="QQ")
    return sympy.Poly.from_dict(d, *gens, domain="QQ")


def from_sympy(sp, arity):
    t = {}
    for e, c in sp.terms():
        c = sympy.Rational(c)
        t[tuple(e)] = Fraction(int(c.p), int(c.q))
    return MPoly(arity, t)


def factor_mpoly(p):
    """Irreducible factors of a nonzero rational polynomial as a list of
    ``(factor, multiplicity)``; constants are dropped."""
    if p.is_constant():
        return []
    _, facs = to_sympy(p).factor_list()
    return [(normalize(from_sympy(f, p.arity)), m) for f, m in facs]


def factor_upoly(coeffs):
    """Irreducible monic factors of a rational dense polynomial."""
    x = sympy.Symbol("_v")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                     for c in reversed(coeffs)], x, domain="QQ")
    if sp.degree() <= 0:
        return []
    _, facs = sp.factor_list()
    out = []
    for f, _m in facs:
        cs = [sympy.Rational(c) for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        out.append([Fraction(int((c / lead).p), int((c / lead).q))
                    for c in cs])
    return out
