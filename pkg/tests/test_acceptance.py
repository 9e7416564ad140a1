"""Acceptance checks, one marker per criterion.

Every test here carries ``@pytest.mark.criterion(n)``; the terminal summary
prints one PASS/FAIL line per criterion (a criterion passes when all of its
tests pass).  Tolerances are exact unless a check says otherwise.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given

from conftest import ORIGIN, PLANE_GALLERY, bounded_functions, fr, random_functions
from locbound import cli
from locbound.arcs import compose
from locbound.constructions import (certify_zero, chain_zero_arc, encode_closed_sa_set,
                                    segment_function)
from locbound.core.poly import MPoly
from locbound.core.realalg import minimal_polynomial
from locbound.core.scalar import is_zero
from locbound.geometry import (contains, is_regulous_at, loja_exponent, radical_member,
                               weak_nullstellensatz, zero_set)
from locbound.parse import parse_arc, parse_function
from locbound.resolve import (is_bounded_near_exceptional, is_locally_bounded,
                              is_locally_bounded_at, value_set)
from locbound.scan import ScanBudget, arc_family_scan

CRITERIA = {
    1: "x^2/(x^2+y^2): bounded, indeterminacy {(0,0)}, value set [0,1]",
    2: "x/(x^2+y^2): unbounded, witness re-evaluates to order -1",
    3: "F1^2+F2^2 has empty zero set while F1 and F2 vanish at the origin",
    4: "least exponent for x against x^2+y^2 is 2 with both certificates",
    5: "radical membership in both directions with exact identity / arc",
    6: "<F5, F6> is the unit ideal; value set of F5^2+F6^2 is [1/2, 1]",
    7: "x^4/(x^2+y^2) has value set [0,0] and is continuous at the origin",
    8: "algebraic fibers v^2-2: bounded, value set [0,1], scan within [0,1]",
    9: "property suites: union law, ring closure, orders, blowups, oracle",
    10: "segment and encoder fixtures in three or more variables",
}

x, y = PLANE_GALLERY["F1"].var(0, 2), PLANE_GALLERY["F1"].var(1, 2)
F = PLANE_GALLERY
SCAN = ScanBudget(exponents=(Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3)))
BOUNDED_GALLERY = sorted(k for k in F if k != "F3")


def cli_doc(line):
    doc, code = cli._run_line(line + " --no-timing")
    assert code == 0, doc
    return doc


# -- 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_criterion_1_prototype():
    r = is_locally_bounded(F["F1"])
    assert r.bounded
    assert r.indet == [ORIGIN]
    iv = value_set(F["F1"], ORIGIN)
    assert isinstance(iv.lo, Fraction) and isinstance(iv.hi, Fraction)
    assert (iv.lo, iv.hi) == (0, 1)
    doc = cli_doc("bounded 'x^2/(x^2+y^2)'")
    assert doc["verdict"] == "bounded" and doc["indet"] == [[0, 0]]
    doc = cli_doc("valueset 'x^2/(x^2+y^2)' --at '(0,0)'")
    assert doc["interval"] == {"lo": 0, "hi": 1}


# -- 2 -------------------------------------------------------------------------

@pytest.mark.criterion(2)
def test_criterion_2_unbounded_witness():
    doc = cli_doc("bounded 'x/(x^2+y^2)'")
    assert doc["verdict"] == "unbounded"
    ev = cli_doc(f"arc-eval 'x/(x^2+y^2)' '{doc['witness']['text']}'")
    assert ev["order"] == -1 and ev["limit"] == "infinite"
    r = is_locally_bounded(F["F3"])
    assert not r.bounded and compose(F["F3"], r.witness).order == -1


# -- 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_criterion_3_counterexample_pair():
    assert zero_set(F["F1"] ** 2 + F["F2"] ** 2).empty
    assert contains(F["F1"], ORIGIN).member
    assert contains(F["F2"], ORIGIN).member


# -- 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_criterion_4_least_exponent():
    r = loja_exponent(x, x ** 2 + y ** 2)
    assert r.status == "found" and r.exponent == 2
    assert r.certificate.bounded and r.quotient == F["F1"]
    assert all(t.bounded for t in r.certificate.certificates)
    assert compose(x / (x ** 2 + y ** 2), r.refutation).order < 0
    assert not is_locally_bounded(x / (x ** 2 + y ** 2)).bounded


# -- 5 -------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_criterion_5_radical():
    r = radical_member(x, [x ** 2 + y ** 2])
    assert r.member and r.exponent == 2
    assert x ** 2 == r.witness * (x ** 2 + y ** 2)
    assert is_locally_bounded(r.witness).bounded
    r = radical_member(x ** 2 + y ** 2, [x])
    assert not r.member
    arc = r.counterexample
    assert compose(x, arc).vanishes
    assert not compose(x ** 2 + y ** 2, arc).vanishes


# -- 6 -------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_criterion_6_weak_nullstellensatz():
    f5, f6 = F["F5"], F["F6"]
    assert f5 == parse_function("(x^2 + y^4)/(x^2 + y^2)")
    r = weak_nullstellensatz([f5, f6])
    assert r.unit
    assert r.coefficients[0] * f5 + r.coefficients[1] * f6 == 1
    for a in r.coefficients:
        assert is_locally_bounded(a).bounded
    iv = value_set(f5 ** 2 + f6 ** 2, ORIGIN)
    assert (iv.lo, iv.hi) == (Fraction(1, 2), 1)


# -- 7 -------------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_criterion_7_regulous():
    iv = value_set(F["F4"], ORIGIN)
    assert (iv.lo, iv.hi) == (0, 0)
    assert is_regulous_at(F["F4"], ORIGIN)[0] is True


# -- 8 -------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_criterion_8_algebraic_recursion():
    f = F["F8"]
    r = is_locally_bounded(f)
    assert r.bounded
    tree = r.certificates[0]
    assert tree.tower_height() >= 1
    fibers = [v for v in tree.fiber_values() if not isinstance(v, Fraction)]
    assert fibers
    assert all(minimal_polynomial(v) == [-2, 0, 1] for v in fibers)
    iv = value_set(f, ORIGIN)
    assert (iv.lo, iv.hi) == (0, 1)
    s = arc_family_scan(f, ORIGIN)
    assert not s.unbounded
    assert all(0 <= v <= 1 for v in s.limits)
    assert s.max >= Fraction(99, 100)


# -- 9 -------------------------------------------------------------------------

def _member(f, pt):
    return contains(f, pt).member


def _union_points(*fs):
    pts = [ORIGIN, fr(1, 0), fr(0, 1), fr(1, 1), fr(0, 2), fr(-1, 2)]
    for f in fs:
        pts.extend(zero_set(f).sample_points(2))
    return pts


@pytest.mark.criterion(9)
@pytest.mark.parametrize("a,b", list(combinations_with_replacement(BOUNDED_GALLERY, 2)))
def test_criterion_9_union_law_gallery(a, b):
    f, g = F[a], F[b]
    for pt in _union_points(f, g):
        assert _member(f * g, pt) == (_member(f, pt) or _member(g, pt))


@pytest.mark.criterion(9)
@given(bounded_functions(), bounded_functions())
def test_criterion_9_union_law_random(f, g):
    for pt in [ORIGIN, fr(1, 0), fr(0, -1), fr(1, 1), fr(2, -1)]:
        assert _member(f * g, pt) == (_member(f, pt) or _member(g, pt))


@pytest.mark.criterion(9)
@pytest.mark.parametrize("a,b", list(combinations_with_replacement(BOUNDED_GALLERY, 2)))
def test_criterion_9_ring_closure_gallery(a, b):
    assert is_locally_bounded(F[a] + F[b]).bounded
    assert is_locally_bounded(F[a] * F[b]).bounded


@pytest.mark.criterion(9)
@given(bounded_functions(), bounded_functions())
def test_criterion_9_ring_closure_random(f, g):
    assert is_locally_bounded(f + g).bounded
    assert is_locally_bounded(f * g).bounded


def _orders_nonnegative(f):
    r = is_locally_bounded(f)
    assert r.bounded
    for pt in r.indet:
        if all(isinstance(c, Fraction) for c in pt):
            s = arc_family_scan(f, pt, SCAN)
            assert not s.unbounded
            iv = value_set(f, pt)
            assert all(iv.contains(v) for v in s.limits)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name", BOUNDED_GALLERY)
def test_criterion_9_orders_gallery(name):
    _orders_nonnegative(F[name])


@pytest.mark.criterion(9)
@given(bounded_functions())
def test_criterion_9_orders_random(f):
    _orders_nonnegative(f)


def _blowup_agrees(f):
    local = is_locally_bounded_at(f, ORIGIN).bounded
    charts = is_bounded_near_exceptional(f, "A") and is_bounded_near_exceptional(f, "B")
    assert local == charts


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name", sorted(F))
def test_criterion_9_blowup_gallery(name):
    f = F[name]
    if name.startswith("f_"):
        f = f.substitute([x, y + int(name[2:])])  # move the pole to the origin
    _blowup_agrees(f)


@pytest.mark.criterion(9)
@given(random_functions())
def test_criterion_9_blowup_random(f):
    _blowup_agrees(f)


def _oracle_agrees(f):
    r = is_locally_bounded(f)
    if not r.bounded:
        assert compose(f, r.witness).order < 0
        assert all(is_zero(a - b) for a, b in zip(r.witness.limit_point(), r.witness_point))
    for pt in (list(r.indet) or [ORIGIN]):
        if not all(isinstance(c, Fraction) for c in pt):
            continue
        s = arc_family_scan(f, pt, SCAN)
        if s.unbounded:
            assert not r.bounded
            assert compose(f, s.unbounded_arc).order < 0


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name", sorted(F))
def test_criterion_9_oracle_gallery(name):
    _oracle_agrees(F[name])


@pytest.mark.criterion(9)
@given(random_functions(max_deg=4))
def test_criterion_9_oracle_random(f):
    _oracle_agrees(f)


# -- 10 ------------------------------------------------------------------------

@pytest.mark.criterion(10)
@pytest.mark.parametrize("c", [0, Fraction(1, 4), Fraction(1, 2), 1])
def test_criterion_10_segment_zeros(c):
    cert = certify_zero(segment_function(), fr(0, 0, c), chain_zero_arc(1, c))
    assert cert.order > 0


@pytest.mark.criterion(10)
@pytest.mark.parametrize("pt", [fr(0, 0, 2), fr(1, 0, 0)])
def test_criterion_10_segment_non_zeros(pt):
    s = arc_family_scan(segment_function(), pt)
    assert s.total == len(ScanBudget().options()) ** 3 - 1  # all but the constant arc
    assert not s.unbounded
    assert s.limits and all(v >= Fraction(1, 4) for v in s.limits)


@pytest.mark.criterion(10)
def test_criterion_10_encoders():
    half = encode_closed_sa_set([MPoly.var(0, 1)])
    for v in [0, Fraction(1, 3), 1, 7]:
        pt = (Fraction(v),)
        assert half.project(half.embed(pt)) == pt
        certify_zero(half.h, half.embed(pt), half.certificate_arc(pt))
    X, Y = MPoly.var(0, 2), MPoly.var(1, 2)
    disc = encode_closed_sa_set([1 - X * X - Y * Y])
    for pt in [fr(0, 0), fr(1, 0), fr(Fraction(1, 2), Fraction(1, 3)), fr(Fraction(3, 5), Fraction(-4, 5))]:
        assert disc.project(disc.embed(pt)) == pt
        certify_zero(disc.h, disc.embed(pt), disc.certificate_arc(pt))
    assert parse_arc(disc.certificate_arc(fr(0, 0)).to_text()) == disc.certificate_arc(fr(0, 0))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
