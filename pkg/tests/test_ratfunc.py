from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import PLANE_GALLERY, fr, plane_polys, random_functions, small_fracs
from locbound.core.factor import to_sympy
from locbound.core.poly import MPoly
from locbound.core.scalar import is_zero, sign
from locbound.errors import ZeroDenominator
from locbound.ratfunc import (RationalFunction, evaluate, indeterminacy_points,
                              real_zero_analysis, reduce)

X, Y = sp.symbols("x0 x1")


def sym(f):
    return to_sympy(f.num, [X, Y]) / to_sympy(f.den, [X, Y])


@given(plane_polys(2), plane_polys(2, nonzero=True), plane_polys(2, nonzero=True))
def test_reduce_is_canonical(a, b, c):
    f = RationalFunction(a * c, b * c)
    g = RationalFunction(a, b)
    assert f == g
    r = reduce(a * c, b * c)
    r2 = reduce(r.num, r.den)
    assert r2.num == r.num and r2.den == r.den
    assert sp.cancel(sym(f) - sym(g)) == 0


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        RationalFunction(MPoly.const(1, 2), MPoly(2))


names = sorted(PLANE_GALLERY)


@given(st.sampled_from(names), st.sampled_from(names),
       st.lists(small_fracs, min_size=2, max_size=2))
def test_arithmetic_agrees_with_evaluation(a, b, pt):
    f, g = PLANE_GALLERY[a], PLANE_GALLERY[b]
    if is_zero(f.den.evaluate(pt)) or is_zero(g.den.evaluate(pt)):
        return
    fv, gv = evaluate(f, pt), evaluate(g, pt)
    assert evaluate(f + g, pt) == fv + gv
    assert evaluate(f * g, pt) == fv * gv
    assert evaluate(f - g, pt) == fv - gv
    if gv != 0 and not is_zero((f / g).den.evaluate(pt)):
        assert evaluate(f / g, pt) == fv / gv


@given(random_functions())
def test_isolated_indeterminacy_has_semidefinite_denominator(f):
    if f.is_polynomial():
        return
    rep = indeterminacy_points(f)
    if not rep.finite:
        assert is_zero(f.den.evaluate(list(rep.curve_witness)))
        return
    for pt in rep.points:
        if not all(isinstance(c, Fraction) for c in pt):
            continue
        signs = set()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if dx == dy == 0:
                    continue
                h = Fraction(1, 1000)
                s = sign(f.den.evaluate([pt[0] + dx * h, pt[1] + dy * h]))
                if s:
                    signs.add(s)
        assert len(signs) <= 1


@given(plane_polys(4, nonzero=True))
def test_infinite_zero_witness_is_a_zero(q):
    if q.is_constant():
        return
    za = real_zero_analysis(q)
    if not za.finite:
        assert is_zero(q.evaluate(list(za.witness)))
    else:
        for pt in za.points:
            assert is_zero(q.evaluate(list(pt)))


@given(st.sampled_from(names), plane_polys(1), plane_polys(1),
       st.lists(small_fracs, min_size=2, max_size=2))
def test_substitute_respects_evaluation(name, m0, m1, pt):
    f = PLANE_GALLERY[name]
    images = [RationalFunction.poly(m0), RationalFunction.poly(m1)]
    inner = [m0.evaluate(pt), m1.evaluate(pt)]
    if is_zero(f.den.evaluate(inner)):
        return
    try:
        g = f.substitute(images)
    except ZeroDenominator:
        return
    if is_zero(g.den.evaluate(pt)):
        return
    assert evaluate(g, pt) == evaluate(f, inner)


def test_gallery_indeterminacy():
    assert indeterminacy_points(PLANE_GALLERY["F1"]).points == [fr(0, 0)]
    for k in (1, 2, 3):
        assert indeterminacy_points(PLANE_GALLERY[f"f_{k}"]).points == [fr(0, k)]
    x, y = RationalFunction.var(0, 2), RationalFunction.var(1, 2)
    assert not indeterminacy_points(x ** 2 / (x ** 2 - y ** 2)).finite
