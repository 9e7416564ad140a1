from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import ORIGIN, PLANE_GALLERY, fr, random_functions, small_fracs
from locbound import _scan_py, scan
from locbound.arcs import compose
from locbound.core.scalar import is_zero
from locbound.errors import DepthExceeded
from locbound.parse import parse_function
from locbound.ratfunc import evaluate
from locbound.resolve import is_locally_bounded, pullback_function, value_set
from locbound.scan import ScanBudget, arc_family_scan

SMALL_BUDGET = ScanBudget(exponents=(Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3)))

EXPECTED = {"F1": True, "F2": True, "F3": False, "F4": True, "F5": True,
            "F6": True, "F7": True, "F8": True, "f_1": True, "f_2": True,
            "f_3": True}


def _rational(pt):
    return all(isinstance(c, Fraction) for c in pt)


def check_soundness(f, r):
    if r.bounded:
        return
    assert compose(f, r.witness).order < 0
    assert all(is_zero(a - b) for a, b in zip(r.witness.limit_point(), r.witness_point))


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_gallery_verdicts(name):
    f = PLANE_GALLERY[name]
    r = is_locally_bounded(f)
    assert r.bounded == EXPECTED[name]
    check_soundness(f, r)
    for pt in r.indet:
        if _rational(pt) and r.bounded:
            assert not arc_family_scan(f, pt, SMALL_BUDGET).unbounded


def test_gallery_value_sets():
    g = PLANE_GALLERY
    cases = {"F1": (0, 1), "F2": (0, 1), "F4": (0, 0), "F5": (0, 1),
             "F6": (0, 1), "F7": (Fraction(-1, 2), Fraction(1, 2)), "F8": (0, 1)}
    for name, (lo, hi) in cases.items():
        iv = value_set(g[name], ORIGIN)
        assert (iv.lo, iv.hi) == (lo, hi), name
    assert (value_set(g["f_2"], fr(0, 2)).lo, value_set(g["f_2"], fr(0, 2)).hi) == (0, 1)


def test_depth_limit():
    f = PLANE_GALLERY["F8"]
    with pytest.raises(DepthExceeded):
        is_locally_bounded(f, max_depth=0)


def test_curve_of_poles():
    f = parse_function("1/(x^2 - y^2)")
    r = is_locally_bounded(f)
    assert not r.bounded and r.curve
    check_soundness(f, r)


def test_pullback_chart_a():
    f = PLANE_GALLERY["F1"]
    g = pullback_function(f, ["A"])
    assert g == parse_function("1/(1 + y^2)")


@given(st.sampled_from(sorted(PLANE_GALLERY)),
       st.lists(small_fracs, min_size=2, max_size=2))
def test_regular_value_set_is_a_point(name, pt):
    f = PLANE_GALLERY[name]
    if is_zero(f.den.evaluate(pt)):
        return
    iv = value_set(f, pt)
    assert iv.degenerate and iv.lo == evaluate(f, pt)


# -- scan kernels --------------------------------------------------------------

@given(random_functions(), st.lists(st.integers(-1, 1), min_size=2, max_size=2))
def test_kernels_agree(f, pt):
    a = arc_family_scan(f, pt, SMALL_BUDGET)
    b = arc_family_scan(f, pt, SMALL_BUDGET, kernel=_scan_py.lowest_terms)
    assert a.limits == b.limits and a.unbounded == b.unbounded
    assert a.skipped == b.skipped


def test_kernel_selection():
    assert scan.KERNEL_NAME in ("compiled", "numpy")
    exps = np.array([[1, 0], [0, 1]], dtype=np.int64)
    coefs = np.array([1, -1], dtype=np.int64)
    opt_w = np.array([1, 2], dtype=np.int64)
    opt_pow = np.array([[1, 1], [1, 2]], dtype=np.int64)
    o1, l1 = _scan_py.lowest_terms(exps, coefs, opt_w, opt_pow, 0, 4)
    o2, l2 = scan._KERNEL(exps, coefs, opt_w, opt_pow, 0, 4)
    assert list(o1) == list(o2) and list(l1) == list(l2)


def test_scan_value_set_endpoints():
    s = arc_family_scan(PLANE_GALLERY["F7"], ORIGIN)
    assert s.min == Fraction(-1, 2) and s.max == Fraction(1, 2)
