"""Pair OAM spectra and entanglement entropy for structured-light pumps.

The package computes the joint orbital-angular-momentum distribution of
down-converted photon pairs for Gaussian-waist (LG) and ring-shaped (POV)
pump and projection modes, and quantifies the entanglement of the pair
through the Schmidt weights along the conserving anti-diagonal.
"""

from .entanglement import (CalibrationEntry, CalibrationReport, Convention,
                           EntropyReport, REFERENCE_ENTROPIES, REFERENCE_L_P,
                           SCENARIO_LABELS, SchmidtDecomposition, calibrate,
                           entropy_table, schmidt_from_spectrum,
                           von_neumann_entropy)
from .modes import (BESSEL_GAUSS, DEFAULT_RING_RADIUS, DEFAULT_RING_WIDTH, LG,
                    POV, ModeSpec, bg_mode, bg_norm_squared, bg_radial,
                    fourier_lens_transform, l2_normalize, lens_output_ring,
                    lg_mode, lg_radial, norm_squared, pov_mode,
                    pov_norm_squared, pov_radial, pov_ring_radius,
                    radial_profile)
from .overlap import (CLOSED_FORM, FULL_2D, P_CONSTANT, RADIAL_QUADRATURE,
                      Coefficient, closed_form_coefficient, coefficient,
                      conserves_oam)
from .quadrature import (QuadratureConfig, QuadratureError, integrate_polar_2d,
                         integrate_radial)
from .special import bessel_i, bessel_i_scaled, bessel_j, laguerre_poly
from .spectrum import (Scenario, SpectrumGrid, WindowTooSmallError,
                       build_spectrum, default_l_window, find_maxima,
                       global_maxima, lg_to_lg, pov_to_lg, pov_to_pov,
                       secondary_maxima, spectrum_width)

__version__ = "0.1.0"

__all__ = [
    "BESSEL_GAUSS", "CLOSED_FORM", "CalibrationEntry", "CalibrationReport",
    "Coefficient", "Convention", "DEFAULT_RING_RADIUS", "DEFAULT_RING_WIDTH",
    "EntropyReport", "FULL_2D", "LG", "ModeSpec", "POV", "P_CONSTANT",
    "QuadratureConfig", "QuadratureError", "RADIAL_QUADRATURE",
    "REFERENCE_ENTROPIES", "REFERENCE_L_P", "SCENARIO_LABELS", "Scenario",
    "SchmidtDecomposition", "SpectrumGrid", "WindowTooSmallError",
    "bessel_i", "bessel_i_scaled", "bessel_j", "bg_mode", "bg_norm_squared",
    "bg_radial", "build_spectrum", "calibrate", "closed_form_coefficient",
    "coefficient", "conserves_oam", "default_l_window", "entropy_table",
    "find_maxima", "fourier_lens_transform", "global_maxima",
    "integrate_polar_2d", "integrate_radial", "l2_normalize",
    "laguerre_poly", "lens_output_ring", "lg_mode", "lg_radial", "lg_to_lg",
    "norm_squared", "pov_mode", "pov_norm_squared", "pov_radial",
    "pov_ring_radius", "pov_to_lg", "pov_to_pov", "radial_profile",
    "schmidt_from_spectrum", "secondary_maxima", "spectrum_width",
    "von_neumann_entropy",
]
