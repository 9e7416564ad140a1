import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from locbound.constructions import gallery
from locbound.core.poly import MPoly
from locbound.ratfunc import RationalFunction

settings.register_profile(
    "repo", max_examples=100, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

ZERO = Fraction(0)
ORIGIN = (ZERO, ZERO)

small_ints = st.integers(min_value=-3, max_value=3)
small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def fr(*xs):
    return tuple(Fraction(x) for x in xs)


@st.composite
def plane_polys(draw, max_deg=3, low_deg=0, nonzero=False):
    """Random integer polynomial in x, y with terms of degree in
    ``[low_deg, max_deg]``."""
    terms = {}
    for i in range(max_deg + 1):
        for j in range(max_deg + 1 - i):
            if i + j >= low_deg and draw(st.booleans()):
                c = draw(small_ints)
                if c:
                    terms[(i, j)] = Fraction(c)
    if nonzero and not terms:
        terms[(low_deg, 0)] = Fraction(1)
    return MPoly(2, terms)


@st.composite
def random_functions(draw, max_deg=4):
    """``p/q`` with ``deg <= max_deg``; half of the denominators are sums of
    two squares vanishing at the origin, the rest are unrestricted."""
    p = draw(plane_polys(max_deg))
    if draw(st.booleans()):
        a = draw(plane_polys(2, 1, nonzero=True))
        b = draw(plane_polys(2, 1))
        q = a * a + b * b
    else:
        q = draw(plane_polys(max_deg, nonzero=True))
    return RationalFunction(p, q)


def _shifted(i, s):
    return RationalFunction.var(i, 2) - s


@st.composite
def bounded_functions(draw):
    """Sums of ``c * X^i Y^j / (X^2 + Y^2)^k`` with ``i + j >= 2k`` in
    coordinates ``X, Y`` centred at small integer points, plus a polynomial;
    bounded because ``|X^i Y^j| <= r^(i+j)``."""
    f = RationalFunction.poly(draw(plane_polys(2)))
    for _ in range(draw(st.integers(1, 2))):
        s, u = draw(st.sampled_from([(0, 0), (0, 0), (1, 0), (0, -1), (1, 1)]))
        X, Y = _shifted(0, s), _shifted(1, u)
        k = draw(st.integers(1, 2))
        i = draw(st.integers(0, 2 * k + 1))
        j = draw(st.integers(max(0, 2 * k - i), 2 * k + 1 - i + 1))
        c = draw(st.integers(1, 3)) * draw(st.sampled_from([1, -1]))
        f = f + c * X ** i * Y ** j / (X ** 2 + Y ** 2) ** k
    return f


PLANE_GALLERY = {k: v for k, v in gallery().items() if v.arity == 2}
GALLERY = gallery()


@pytest.fixture(scope="session")
def plane_gallery():
    return PLANE_GALLERY


# -- acceptance summary ----------------------------------------------------------

_OUTCOMES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if report.when == "call" or report.failed:
        _OUTCOMES[n] = _OUTCOMES.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    import test_acceptance

    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(test_acceptance.CRITERIA):
        if n not in _OUTCOMES:
            status = "NOT RUN"
        else:
            status = "PASS" if _OUTCOMES[n] else "FAIL"
        tr.write_line(f"criterion {n:>2}: {status:<7} {test_acceptance.CRITERIA[n]}")
