"""Overlap coefficients: closed form, quadrature routes, and symmetries."""

import math

import pytest

from spdc_oam import (
    CLOSED_FORM,
    FULL_2D,
    LG,
    POV,
    RADIAL_QUADRATURE,
    ModeSpec,
    P_CONSTANT,
    closed_form_coefficient,
    coefficient,
    conserves_oam,
    norm_squared,
)


def lg(l, p=0, w0=1.0):
    return ModeSpec(LG, l, p=p, w0=w0)


def ring(l, r0=0.25, w0=0.5):
    return ModeSpec(POV, l, r0=r0, w0=w0)


def test_p_constant_value():
    assert P_CONSTANT == math.sqrt(8.0 / math.pi) / 3.0
    assert P_CONSTANT == pytest.approx(0.5319230405352436, rel=1e-14)


def test_gaussian_pump_cross_pair():
    # l_p=0, l_s=1, l_i=-1: L=1, so the coefficient is (2/3) of the constant
    val = closed_form_coefficient(0, 1, -1)
    assert val == pytest.approx(2.0 / 3.0 * P_CONSTANT, rel=1e-14)
    assert val == pytest.approx(0.3546153603568291, rel=1e-12)


def test_equal_split_beats_full_transfer_charge_two():
    ratio = closed_form_coefficient(2, 1, 1) / closed_form_coefficient(2, 2, 0)
    assert ratio == pytest.approx(math.sqrt(2.0), rel=1e-13)


def test_equal_split_beats_full_transfer_charge_four():
    ratio = closed_form_coefficient(4, 2, 2) / closed_form_coefficient(4, 4, 0)
    assert ratio == pytest.approx(math.sqrt(6.0), rel=1e-13)


def test_conservation_predicate():
    assert conserves_oam(2, 1, 1)
    assert conserves_oam(0, -3, 3)
    assert not conserves_oam(1, 1, 1)
    assert not conserves_oam(0, 2, 1)


def test_nonconserving_short_circuits_to_exact_zero(quad):
    coeff = coefficient(lg(1), lg(1), lg(1), quad)
    assert coeff.value == 0.0
    assert closed_form_coefficient(3, 1, 1) == 0.0
    # the short circuit happens before any family validation can object
    coeff2 = coefficient(lg(0), ring(2), ring(1), quad, method=CLOSED_FORM)
    assert coeff2.value == 0.0


@pytest.mark.parametrize("l_p,l_s,l_i", [
    (0, 0, 0),
    (0, 1, -1),
    (0, 3, -3),
    (1, 1, 0),
    (1, 0, 1),
    (2, 1, 1),
    (2, 2, 0),
    (2, 3, -1),
    (3, 2, 1),
    (4, 2, 2),
    (4, 4, 0),
])
def test_radial_quadrature_matches_closed_form(quad, l_p, l_s, l_i):
    numeric = coefficient(lg(l_p), lg(l_s), lg(l_i), quad).value
    exact = closed_form_coefficient(l_p, l_s, l_i)
    assert numeric.imag == 0.0
    assert numeric.real == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("pump,signal,idler", [
    (lg(0), lg(0), lg(0)),
    (lg(1), lg(1), lg(0)),
    (lg(2), lg(1), lg(1)),
    (lg(3), lg(2), lg(1)),
    (lg(0), lg(2, p=1), lg(-2)),
    (lg(2), ring(1), ring(1)),
    (lg(1), ring(0), ring(1)),
    (ring(2), lg(1), lg(1)),
    (ring(1), ring(1), ring(0)),
    (ring(3), ring(2), ring(1)),
])
def test_full_2d_matches_radial_route(quad, pump, signal, idler):
    radial = coefficient(pump, signal, idler, quad, method=RADIAL_QUADRATURE).value
    full = coefficient(pump, signal, idler, quad, method=FULL_2D).value
    assert full == pytest.approx(radial, rel=1e-9, abs=1e-13)


def test_exchange_symmetry_is_bitwise(quad):
    a = coefficient(lg(3), lg(2), lg(1), quad).value
    b = coefficient(lg(3), lg(1), lg(2), quad).value
    assert a == b
    c = coefficient(lg(2), ring(0), ring(2), quad).value
    d = coefficient(lg(2), ring(2), ring(0), quad).value
    assert c == d


def test_charge_sign_flip_is_bitwise(quad):
    a = coefficient(lg(2), lg(1), lg(1), quad).value
    b = coefficient(lg(-2), lg(-1), lg(-1), quad).value
    assert a == b
    c = coefficient(lg(1), ring(2), ring(-1), quad).value
    d = coefficient(lg(-1), ring(-2), ring(1), quad).value
    assert c == d


def test_unknown_method_rejected(quad):
    with pytest.raises(ValueError, match="unknown overlap method"):
        coefficient(lg(0), lg(0), lg(0), quad, method="Simpson")


def test_closed_form_rejects_off_design_modes(quad):
    with pytest.raises(ValueError, match="closed form"):
        coefficient(lg(0), lg(1, p=1), lg(-1), quad, method=CLOSED_FORM)
    with pytest.raises(ValueError, match="closed form"):
        coefficient(lg(0), lg(1, w0=2.0), lg(-1), quad, method=CLOSED_FORM)
    with pytest.raises(ValueError, match="closed form"):
        coefficient(lg(2), ring(1), ring(1), quad, method=CLOSED_FORM)


def test_projection_normalization_rescales_by_mode_norms(quad):
    pump, signal, idler = lg(2), ring(1), ring(1)
    raw = coefficient(pump, signal, idler, quad).value
    scaled = coefficient(pump, signal, idler, quad, normalize_projections=True).value
    expected = raw / math.sqrt(norm_squared(signal) * norm_squared(idler))
    assert scaled == pytest.approx(expected, rel=1e-14)
    # LG projections are already unit norm, so the flag is a no-op there
    raw_lg = coefficient(lg(2), lg(1), lg(1), quad).value
    scaled_lg = coefficient(lg(2), lg(1), lg(1), quad, normalize_projections=True).value
    assert scaled_lg == pytest.approx(raw_lg, rel=1e-14)
