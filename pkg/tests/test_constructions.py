from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fr, small_fracs
from locbound.arcs import PuiseuxPoly, compose, make_arc
from locbound.constructions import (certify_zero, chain_function, chain_zero_arc,
                                    encode_closed_sa_set, orthant_zero_arc,
                                    orthant_zero_function, product_zero_arc,
                                    product_zero_function, segment_function,
                                    semiline_function, semiline_zero_arc)
from locbound.core.poly import MPoly
from locbound.errors import InvariantViolation, LocboundError
from locbound.parse import parse_arc, parse_function


@settings(max_examples=50)
@given(small_fracs, small_fracs)
def test_semiline_closed_form(a, z0):
    f = semiline_function()
    arc = make_arc([PuiseuxPoly({1: 1}), PuiseuxPoly({1: a}), PuiseuxPoly.const(z0)])
    expected = (2 * z0 / (1 + z0 ** 2) - 1 / (1 + a ** 2)) ** 2
    assert compose(f, arc).limit == expected


@pytest.mark.parametrize("c", [0, Fraction(1, 4), Fraction(1, 2), 1])
def test_segment_certificates(c):
    f = segment_function()
    cert = certify_zero(f, fr(0, 0, c), chain_zero_arc(1, c))
    assert cert.order > 0


def test_chain_and_semiline_certificates():
    certify_zero(chain_function(Fraction(3, 2)), fr(0, 0, 1),
                 chain_zero_arc(Fraction(3, 2), 1))
    for z0 in (0, Fraction(1, 3), 1, 5):
        certify_zero(semiline_function(), fr(0, 0, z0), semiline_zero_arc(z0))
    with pytest.raises(LocboundError):
        semiline_zero_arc(-1)


def test_bad_certificate_is_rejected():
    with pytest.raises(InvariantViolation):
        certify_zero(segment_function(), fr(0, 0, 2), parse_arc("(t, 0, 2)"))


def test_orthant_reduces_to_semiline():
    assert orthant_zero_function(1) == semiline_function().substitute(
        [parse_function("x2", 3), parse_function("x3", 3), parse_function("x1", 3)])


@pytest.mark.parametrize("ys", [(1, 2), (0, 0), (Fraction(1, 2), 3)])
def test_orthant_certificates(ys):
    h = orthant_zero_function(2)
    pt = tuple(Fraction(v) for v in ys) + (Fraction(0),) * 4
    certify_zero(h, pt, orthant_zero_arc(ys))


def test_product_certificates_compose():
    f = segment_function()
    g = parse_function("x^2/(x^2+y^2)")
    h = product_zero_function(f, g)
    arc = product_zero_arc(chain_zero_arc(1, Fraction(1, 2)), parse_arc("(0, t)"))
    certify_zero(h, fr(0, 0, Fraction(1, 2), 0, 0), arc)


def _encoders():
    x = MPoly.var(0, 1)
    half_line = encode_closed_sa_set([x])
    X, Y = MPoly.var(0, 2), MPoly.var(1, 2)
    disc = encode_closed_sa_set([1 - X * X - Y * Y])
    return half_line, disc


HALF_LINE, DISC = _encoders()


@given(small_fracs)
def test_encoder_half_line(x):
    pt = (x,)
    assert HALF_LINE.project(HALF_LINE.embed(pt)) == pt
    if x >= 0:
        arc = HALF_LINE.certificate_arc(pt)
        certify_zero(HALF_LINE.h, HALF_LINE.embed(pt), arc)
    else:
        with pytest.raises(LocboundError):
            HALF_LINE.certificate_arc(pt)


@given(st.lists(st.fractions(min_value=-1, max_value=1, max_denominator=5),
                min_size=2, max_size=2))
def test_encoder_disc(pt):
    pt = tuple(pt)
    assert DISC.project(DISC.embed(pt)) == pt
    if DISC.in_set(pt):
        certify_zero(DISC.h, DISC.embed(pt), DISC.certificate_arc(pt))


def test_encoder_shapes():
    assert HALF_LINE.arity == 4 and DISC.arity == 5
    assert HALF_LINE.embed((Fraction(1),)) == fr(1, 1, 0, 0)
    assert DISC.embed(fr(0, 0)) == fr(0, 0, 1, 0, 0)
