from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from conftest import ORIGIN, PLANE_GALLERY, fr, small_fracs
from locbound.arcs import compose
from locbound.core.printing import format_poly
from locbound.errors import NotLocallyBounded
from locbound.geometry import (contains, is_invertible, is_regulous_at, loja_exponent,
                               radical_member, sum_of_squares, weak_nullstellensatz,
                               zero_set, zero_set_included)
from locbound.parse import parse_function
from locbound.resolve import is_locally_bounded

BOUNDED = ["F1", "F2", "F4", "F5", "F6", "F7", "F8", "f_1", "f_2"]


def member(f, pt):
    return contains(f, pt).member


def probe_points(*fs):
    pts = [ORIGIN, fr(1, 0), fr(0, 1), fr(1, 1), fr(0, 2), fr(-1, 2)]
    for f in fs:
        pts.extend(zero_set(f).sample_points(2))
    return pts


def validated(arc, g, f):
    """``g`` tends to 0 along ``arc`` while ``f`` does not."""
    return compose(g, arc).vanishes and not compose(f, arc).vanishes


def test_zero_set_of_f1():
    z = zero_set(PLANE_GALLERY["F1"])
    assert format_poly(z.curve_part) == "x"
    assert [p.point for p in z.points] == [ORIGIN]
    assert (z.points[0].certificate.lo, z.points[0].certificate.hi) == (0, 1)


def test_not_bounded_is_rejected():
    with pytest.raises(NotLocallyBounded) as exc:
        zero_set(PLANE_GALLERY["F3"])
    assert compose(PLANE_GALLERY["F3"], exc.value.witness).order < 0


@pytest.mark.parametrize("a,b", list(combinations_with_replacement(BOUNDED[:7], 2)))
def test_sum_of_squares_law(a, b):
    f, g = PLANE_GALLERY[a], PLANE_GALLERY[b]
    h = f * f + g * g
    for pt in probe_points(f, g):
        if member(h, pt):
            assert member(f, pt) and member(g, pt)


@given(st.sampled_from(BOUNDED[:7]),
       st.lists(st.integers(-2, 2), min_size=1, max_size=4))
def test_sum_of_squares_with_a_polynomial(name, cs):
    f = PLANE_GALLERY[name]
    x, y = f.var(0, 2), f.var(1, 2)
    p = sum((c * m for c, m in zip(cs, [x, y, x - y, x * y - 1])), f.const(0, 2))
    h = f * f + p * p
    for pt in probe_points(f):
        assert member(h, pt) == (member(f, pt) and member(p, pt))


def test_nullstellensatz_round_trip():
    g = PLANE_GALLERY
    ideals = [[g["F1"]], [g["F1"], g["F2"]], [g["F4"]], [g["F5"], g["F6"]], [g["F7"], g["F1"]]]
    for gens in ideals:
        for h in gens:
            r = radical_member(h, gens)
            assert r.member
            assert h ** r.exponent == r.witness * sum_of_squares(gens)
    r = radical_member(g["F2"], [g["F1"]])
    assert not r.member
    assert validated(r.counterexample, g["F1"], g["F2"])


def test_loja_minimality():
    x, y = PLANE_GALLERY["F1"].var(0, 2), PLANE_GALLERY["F1"].var(1, 2)
    cases = [(x, x ** 2 + y ** 2, 2), (x ** 2 + y ** 2, x ** 4 + y ** 4, 2),
             (x, x ** 6 + y ** 2, 6), (x * y, x ** 4 + y ** 4, 2)]
    for f, g, n in cases:
        r = loja_exponent(f, g)
        assert r.status == "found" and r.exponent == n
        assert is_locally_bounded(f ** n / g).bounded
        below = f ** (n - 1) / g
        assert compose(below, r.refutation).order < 0


def test_loja_precondition():
    x, y = PLANE_GALLERY["F1"].var(0, 2), PLANE_GALLERY["F1"].var(1, 2)
    r = loja_exponent(x ** 2 + y ** 2, x)
    assert r.status == "precondition_failed"
    assert validated(r.counterexample, x, x ** 2 + y ** 2)


def test_invertibility():
    g = PLANE_GALLERY
    r = is_invertible(g["F5"] * g["F5"] + g["F6"] * g["F6"])
    assert r.invertible
    assert r.inverse * (g["F5"] * g["F5"] + g["F6"] * g["F6"]) == 1
    assert not is_invertible(g["F1"]).invertible
    assert is_invertible(parse_function("1 + x^2")).invertible


def test_weak_nullstellensatz():
    g = PLANE_GALLERY
    r = weak_nullstellensatz([g["F5"], g["F6"]])
    assert r.unit
    total = r.coefficients[0] * g["F5"] + r.coefficients[1] * g["F6"]
    assert total == 1
    for a in r.coefficients:
        assert is_locally_bounded(a).bounded
    assert weak_nullstellensatz([g["F1"], g["F2"]]).unit
    r = weak_nullstellensatz([g["F1"], parse_function("y")])
    assert not r.unit and r.point == ORIGIN


@pytest.mark.parametrize("a", BOUNDED[:7])
@pytest.mark.parametrize("b", ["F1", "F2", "F4", "F7"])
def test_radical_agrees_with_inclusion(a, b):
    f, g = PLANE_GALLERY[a], PLANE_GALLERY[b]
    inc = zero_set_included(g, f)
    rad = radical_member(f, [g])
    assert rad.member == inc.included
    if not inc.included:
        assert validated(inc.counterexample, g, f)


@given(st.lists(small_fracs, min_size=2, max_size=2))
def test_regulous_at_regular_points(pt):
    ok, iv = is_regulous_at(PLANE_GALLERY["F4"], pt)
    assert ok


def test_regulous():
    assert is_regulous_at(PLANE_GALLERY["F4"], ORIGIN)[0]
    assert not is_regulous_at(PLANE_GALLERY["F1"], ORIGIN)[0]
    assert is_regulous_at(parse_function("x^3/(x^2+y^2)"), ORIGIN)[0]


def test_algebraic_zero_curve():
    z = zero_set(PLANE_GALLERY["F8"])
    assert z.curve_part is not None
    for pt in z.sample_points(3):
        assert member(PLANE_GALLERY["F8"], pt)
    r = loja_exponent(parse_function("y^2 - 2*x^2"), PLANE_GALLERY["F8"])
    assert r.status == "found" and r.exponent == 2
    assert z.points[0].point == ORIGIN and z.points[0].certificate.lo == 0
