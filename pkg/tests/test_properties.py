"""Property-based checks of the algebraic invariants.

The deterministic hypothesis profile (see conftest) makes these reproducible
run to run; each property states a relation that must hold for every drawn
input, not just the frozen reference points.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spdc_oam import (
    LG,
    POV,
    ModeSpec,
    QuadratureConfig,
    SchmidtDecomposition,
    bessel_i_scaled,
    build_spectrum,
    closed_form_coefficient,
    coefficient,
    conserves_oam,
    integrate_radial,
    laguerre_poly,
    lg_to_lg,
    schmidt_from_spectrum,
    von_neumann_entropy,
)

charges = st.integers(min_value=-6, max_value=6)
small_charges = st.integers(min_value=-4, max_value=4)


@given(l_p=charges, l_s=charges, l_i=charges)
def test_nonconserving_coefficients_vanish_exactly(l_p, l_s, l_i):
    if conserves_oam(l_p, l_s, l_i):
        assert closed_form_coefficient(l_p, l_s, l_i) > 0.0
    else:
        assert closed_form_coefficient(l_p, l_s, l_i) == 0.0


@given(l_p=small_charges, l_s=small_charges)
@settings(max_examples=20)
def test_exchange_and_sign_flip_are_bitwise(quad, l_p, l_s):
    l_i = l_p - l_s
    pump = ModeSpec(LG, l_p)
    a = coefficient(pump, ModeSpec(LG, l_s), ModeSpec(LG, l_i), quad).value
    b = coefficient(pump, ModeSpec(LG, l_i), ModeSpec(LG, l_s), quad).value
    assert a == b
    c = coefficient(ModeSpec(LG, -l_p), ModeSpec(LG, -l_s), ModeSpec(LG, -l_i), quad).value
    assert a == c


@given(l_p=small_charges, l_s=small_charges)
@settings(max_examples=20)
def test_quadrature_agrees_with_closed_form(quad, l_p, l_s):
    l_i = l_p - l_s
    numeric = coefficient(ModeSpec(LG, l_p), ModeSpec(LG, l_s), ModeSpec(LG, l_i), quad).value
    assert numeric.real == pytest.approx(closed_form_coefficient(l_p, l_s, l_i), rel=1e-9)


@given(l_p=st.integers(min_value=0, max_value=3))
@settings(max_examples=4)
def test_spectrum_normalization(quad, l_p):
    grid = build_spectrum(lg_to_lg(l_p), quad)
    assert sum(p for (_, _, p) in grid.anti_diagonal()) == pytest.approx(1.0, abs=1e-12)


@given(weights=st.lists(st.floats(min_value=1e-6, max_value=1.0), min_size=1, max_size=24))
def test_entropy_bounds(weights):
    total = sum(weights)
    decomp = SchmidtDecomposition(0, tuple(w / total for w in weights), normalized=False)
    s = von_neumann_entropy(decomp)
    assert -1e-12 <= s <= math.log(decomp.rank) + 1e-12


@given(p=st.integers(min_value=1, max_value=8),
       a=st.integers(min_value=0, max_value=6),
       x=st.floats(min_value=0.0, max_value=40.0))
def test_laguerre_three_term_recurrence(p, a, x):
    lhs = (p + 1) * laguerre_poly(p + 1, a, x)
    rhs = ((2 * p + 1 + a - x) * laguerre_poly(p, a, x)
           - (p + a) * laguerre_poly(p - 1, a, x))
    scale = max(1.0, abs(lhs), abs(rhs))
    assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-8 * scale)


@given(l=st.integers(min_value=1, max_value=8),
       x=st.floats(min_value=0.05, max_value=60.0))
def test_bessel_i_recurrence_in_scaled_form(l, x):
    # I_{l-1}(x) - I_{l+1}(x) = (2 l / x) I_l(x); the common exp(-x) scale
    # of the overflow-safe form divides out
    lhs = bessel_i_scaled(l - 1, x) - bessel_i_scaled(l + 1, x)
    rhs = (2.0 * l / x) * bessel_i_scaled(l, x)
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-13)


@given(m=st.integers(min_value=0, max_value=4),
       b=st.floats(min_value=0.8, max_value=4.0))  # b >= 0.8 keeps the tail inside r_max
@settings(max_examples=25)
def test_radial_quadrature_reproduces_gaussian_moments(quad, m, b):
    # integral_0^inf r^{2m+1} e^{-b r^2} dr = m! / (2 b^{m+1})
    import numpy as np
    value = integrate_radial(lambda r: r ** (2 * m + 1) * np.exp(-b * r * r), quad)
    exact = math.factorial(m) / (2.0 * b ** (m + 1))
    assert value == pytest.approx(exact, rel=1e-10)


@given(l_s=small_charges, l_i=small_charges)
@settings(max_examples=15)
def test_ring_projection_exchange_symmetry(quad, l_s, l_i):
    pump = ModeSpec(POV, l_s + l_i, r0=0.25, w0=0.5)
    ring = lambda l: ModeSpec(POV, l, r0=0.25, w0=0.5)
    a = coefficient(pump, ring(l_s), ring(l_i), quad).value
    b = coefficient(pump, ring(l_i), ring(l_s), quad).value
    assert a == b
