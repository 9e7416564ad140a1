from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import PLANE_GALLERY, bounded_functions, fr
from locbound.arcs import (INFINITE, INFINITY, PuiseuxPoly, compose, concat_arcs,
                           in_arc_zero_set, make_arc, substitute_arc)
from locbound.core.poly import MPoly
from locbound.errors import ArcInsideIndeterminacy, ConstantArc, UnboundedArc
from locbound.parse import parse_arc

exponents = st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 2),
                             Fraction(3, 2), Fraction(1, 3), Fraction(3)])
coeffs = st.sampled_from([Fraction(c) for c in (1, -1, 2, -2, 3)] + [Fraction(1, 2)])


@st.composite
def puiseux(draw, const=Fraction(0)):
    terms = {Fraction(0): const} if const else {}
    for _ in range(draw(st.integers(1, 2))):
        e = draw(exponents)
        terms[e] = terms.get(e, 0) + draw(coeffs)
    return PuiseuxPoly(terms)


@st.composite
def arcs_at(draw, point=(0, 0)):
    entries = [draw(puiseux(Fraction(c))) for c in point]
    assume(not all(p.is_constant() for p in entries))
    return make_arc(entries)


def test_validation():
    with pytest.raises(ConstantArc):
        make_arc([PuiseuxPoly.const(1), PuiseuxPoly.const(2)])
    with pytest.raises(UnboundedArc):
        make_arc([PuiseuxPoly({Fraction(-1): 1}), PuiseuxPoly({1: 1})])
    a = parse_arc("(t, 2*t^(3/2))")
    assert a.ramification == 2
    assert a.limit_point() == fr(0, 0)


def test_reference_orders():
    F1, F3, F7 = PLANE_GALLERY["F1"], PLANE_GALLERY["F3"], PLANE_GALLERY["F7"]
    assert compose(F3, parse_arc("(t, t)")).order == -1
    assert compose(F3, parse_arc("(t, t)")).limit is INFINITE
    r = compose(F1, parse_arc("(t, t)"))
    assert r.order == 0 and r.limit == Fraction(1, 2)
    assert compose(F7, parse_arc("(t, -t)")).limit == Fraction(-1, 2)
    assert compose(F1, parse_arc("(0, t)")).order == INFINITY
    with pytest.raises(ArcInsideIndeterminacy):
        compose(1 / PLANE_GALLERY["F7"] * 0 + PLANE_GALLERY["F1"] / PLANE_GALLERY["F7"],
                parse_arc("(t, 0)"))


@given(bounded_functions(), arcs_at())
def test_bounded_functions_have_nonnegative_order(f, arc):
    try:
        r = compose(f, arc)
    except ArcInsideIndeterminacy:
        return
    assert r.order >= 0


@given(st.sampled_from(sorted(PLANE_GALLERY)), st.sampled_from(sorted(PLANE_GALLERY)),
       arcs_at())
def test_order_is_multiplicative(a, b, arc):
    f, g = PLANE_GALLERY[a], PLANE_GALLERY[b]
    try:
        of, og = compose(f, arc).order, compose(g, arc).order
    except ArcInsideIndeterminacy:
        return
    ofg = compose(f * g, arc).order
    if of == INFINITY or og == INFINITY:
        assert ofg == INFINITY
    else:
        assert ofg == of + og


SMALL = [f"F{i}" for i in range(1, 8)]


@given(st.sampled_from(SMALL), bounded_functions(), arcs_at())
def test_zero_set_is_an_ideal_along_arcs(name, h, arc):
    f = PLANE_GALLERY[name]
    try:
        zero = in_arc_zero_set(f, arc)
        compose(h, arc)
        fh = in_arc_zero_set(f * h, arc)
    except ArcInsideIndeterminacy:
        return
    if zero:
        assert fh


@given(st.lists(st.sampled_from([0, 0, 1, -2]), min_size=2, max_size=3)
       .flatmap(lambda pt: arcs_at(pt)))
def test_positive_orders_reach_the_origin(arc):
    if all(p.order() > 0 for p in arc.entries):
        assert all(c == 0 for c in arc.limit_point())
    else:
        assert any(c != 0 for c in arc.limit_point())


def test_substitute_and_concat():
    a = parse_arc("(t, t^2)")
    x, y = MPoly.var(0, 2), MPoly.var(1, 2)
    img = substitute_arc([x * y, x + 1], a)
    assert img == parse_arc("(t^3, 1 + t)")
    c = concat_arcs(a, parse_arc("(1, t)"))
    assert len(c) == 4 and c.limit_point() == fr(0, 0, 1, 0)
