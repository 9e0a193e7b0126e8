"""Transverse mode families: Laguerre-Gauss, Bessel-Gauss, and the practical
perfect-vortex ring mode, plus the lens Fourier transform that turns the
second into the third.

Conventions
-----------
* Azimuthal phase is exp(+i l phi) for every family; projection amplitudes
  conjugate it, which is where the l_p = l_s + l_i selection rule comes from.
* Lengths are measured in units of the Laguerre-Gauss waist, i.e. w0 = 1 for
  LG modes unless asked otherwise.
* The ring mode is evaluated through the exponentially scaled Bessel function
  so that ring radii far beyond the ring width cannot overflow:
  exp(-(r^2+r0^2)/w0^2) I_l(2 r0 r / w0^2)
      = exp(-((r-r0)/w0)^2) * [exp(-x) I_l(x)]  with x = 2 r0 r / w0^2.
"""

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureConfig, integrate_polar_2d
from .special import bessel_i_scaled, bessel_j, laguerre_poly

LG = "LG"
BESSEL_GAUSS = "BesselGauss"
POV = "POV"

# ring geometry reproducing the published projection scenarios; equals the
# lens output for k=4, f=1, k_r=1, w=1 (r0 = k_r f / k, w0 = 2 f / (k w))
DEFAULT_RING_RADIUS = 0.25
DEFAULT_RING_WIDTH = 0.5


@dataclass(frozen=True)
class ModeSpec:
    """A transverse mode: family tag plus indices and geometry.

    w0 is the Gaussian waist for LG, the ring width for POV, and the envelope
    waist for BesselGauss.  r0 is the ring radius (POV only).  k_r is the
    radial wavevector (BesselGauss only).
    """
    family: str
    l: int
    p: int = 0
    w0: float = 1.0
    r0: float = DEFAULT_RING_RADIUS
    k_r: float = 1.0

    def __post_init__(self):
        if self.family not in (LG, BESSEL_GAUSS, POV):
            raise ValueError("unknown mode family %r" % (self.family,))
        if self.p < 0:
            raise ValueError("radial index p must be nonnegative")
        if self.family != LG and self.p != 0:
            raise ValueError("radial index is meaningful only for LG modes")
        if self.w0 <= 0:
            raise ValueError("w0 must be positive")
        if self.family == POV and self.r0 <= 0:
            raise ValueError("ring radius r0 must be positive")
        if self.family == BESSEL_GAUSS and self.k_r <= 0:
            raise ValueError("k_r must be positive")


def lg_radial(l: int, p: int, r, w0: float = 1.0):
    """Radial amplitude of the LG mode, unit L2 norm by construction.

    sqrt(2 p! / (pi (|l|+p)!)) (sqrt2 r)^{|l|} L_p^{|l|}(2 r^2) exp(-r^2)
    at w0 = 1; general w0 rescales r -> r/w0 with a 1/w0 amplitude factor.
    """
    la = abs(l)
    r = np.asarray(r, dtype=float) / w0
    norm = math.sqrt(2.0 * math.factorial(p) / (math.pi * math.factorial(la + p))) / w0
    return norm * (math.sqrt(2.0) * r) ** la * laguerre_poly(p, la, 2.0 * r * r) * np.exp(-r * r)


def bg_radial(l: int, k_r: float, w: float, rho):
    """Radial amplitude of the Bessel-Gauss mode, J_l(k_r rho) exp(-rho^2/w^2).

    Not normalized; its L2 norm is available in closed form, see
    bg_norm_squared.
    """
    rho = np.asarray(rho, dtype=float)
    return bessel_j(abs(l), k_r * rho) * np.exp(-(rho / w) ** 2)


def pov_radial(l: int, r0: float, w0: float, r):
    """Radial amplitude of the practical perfect-vortex ring mode.

    This is the overflow-safe product exp(-((r-r0)/w0)^2) * ive(|l|, x),
    identically equal to exp(-(r^2+r0^2)/w0^2) I_{|l|}(2 r0 r / w0^2).  The
    constant envelope-waist prefactor of the lens output is omitted here (it
    carries no r or l dependence); the construction check reinstates it.
    """
    r = np.asarray(r, dtype=float)
    return np.exp(-((r - r0) / w0) ** 2) * bessel_i_scaled(abs(l), 2.0 * r0 * r / (w0 * w0))


def pov_norm_squared(l: int, r0: float, w0: float) -> float:
    """Analytic L2 norm of pov_radial over the transverse plane.

    integral |pov|^2 r dr dphi = (pi w0^2 / 2) ive(|l|, r0^2/w0^2).
    """
    return math.pi * w0 * w0 / 2.0 * float(bessel_i_scaled(abs(l), r0 * r0 / (w0 * w0)))


def bg_norm_squared(l: int, k_r: float, w: float) -> float:
    """Analytic L2 norm of bg_radial: (pi w^2 / 2) ive(|l|, k_r^2 w^2 / 4)."""
    return math.pi * w * w / 2.0 * float(bessel_i_scaled(abs(l), k_r * k_r * w * w / 4.0))


def radial_profile(spec: ModeSpec, r):
    """Real radial amplitude of any family at radius r (phase excluded)."""
    if spec.family == LG:
        return lg_radial(spec.l, spec.p, r, spec.w0)
    if spec.family == BESSEL_GAUSS:
        return bg_radial(spec.l, spec.k_r, spec.w0, r)
    return pov_radial(spec.l, spec.r0, spec.w0, r)


def norm_squared(spec: ModeSpec) -> float:
    """Analytic L2 norm squared of the spec's radial profile."""
    if spec.family == LG:
        return 1.0
    if spec.family == BESSEL_GAUSS:
        return bg_norm_squared(spec.l, spec.k_r, spec.w0)
    return pov_norm_squared(spec.l, spec.r0, spec.w0)


def lg_mode(spec: ModeSpec, r, phi):
    """Complex LG amplitude at (r, phi); unit L2 norm."""
    if spec.family != LG:
        raise ValueError("lg_mode needs an LG spec")
    return lg_radial(spec.l, spec.p, r, spec.w0) * np.exp(1j * spec.l * np.asarray(phi, dtype=float))


def bg_mode(spec: ModeSpec, rho, theta):
    """Complex Bessel-Gauss amplitude at (rho, theta); not normalized."""
    if spec.family != BESSEL_GAUSS:
        raise ValueError("bg_mode needs a BesselGauss spec")
    return bg_radial(spec.l, spec.k_r, spec.w0, rho) * np.exp(1j * spec.l * np.asarray(theta, dtype=float))


def pov_mode(spec: ModeSpec, r, phi, normalized: bool = True):
    """Complex perfect-vortex amplitude at (r, phi).

    normalized=True divides by the analytic L2 norm; normalized=False returns
    the raw ring amplitude (the fixed-aperture projection convention used by
    the spectrum layer).  The i^{l-1} factor of the lens output is kept so
    that the raw mode matches the transform up to its constant scale.

    The ring-shape property (peak radius independent of l) holds in the thin
    ring regime r0 >~ 3 w0; for wide rings the low orders peak on axis.
    """
    if spec.family != POV:
        raise ValueError("pov_mode needs a POV spec")
    amp = pov_radial(spec.l, spec.r0, spec.w0, r)
    if normalized:
        amp = amp / math.sqrt(pov_norm_squared(spec.l, spec.r0, spec.w0))
    phase = 1j ** (spec.l - 1)
    return phase * amp * np.exp(1j * spec.l * np.asarray(phi, dtype=float))


def l2_normalize(mode, quad: QuadratureConfig):
    """Return the mode function scaled to unit L2 norm over the window.

    mode is any callable (r, phi) -> complex accepting broadcast arrays.  The
    norm is evaluated by the 2D quadrature, so this works for arbitrary user
    supplied fields, not only the built-in families.  Raises ValueError on a
    zero-norm (degenerate) input.
    """
    n2 = integrate_polar_2d(lambda r, phi: np.abs(mode(r, phi)) ** 2 * r, quad)
    n2 = float(n2.real)
    if n2 <= 0.0:
        raise ValueError("mode has zero L2 norm on the quadrature window")
    scale = 1.0 / math.sqrt(n2)

    def normalized(r, phi):
        return scale * np.asarray(mode(r, phi))

    return normalized


def fourier_lens_transform(source, f: float, k: float, r: float, phi: float,
                           quad: QuadratureConfig):
    """Field behind an ideal lens of focal length f at the focal plane point
    (r, phi), for wavenumber k:

        (k / (i 2 pi f)) * integral source(rho, theta)
                           exp(-i (k/f) rho r cos(theta - phi)) rho drho dtheta

    source is a callable (rho, theta) -> complex over the input plane.  The
    integral runs over the quadrature window, so the source must have decayed
    at r_max; the polar kernel checks this and the node-doubling convergence.
    """
    kscale = k / f

    def integrand(rho, theta):
        return source(rho, theta) * np.exp(-1j * kscale * rho * r * np.cos(theta - phi)) * rho

    value = integrate_polar_2d(integrand, quad)
    return value * k / (1j * 2.0 * math.pi * f)


def lens_output_ring(k_r: float, w: float, f: float, k: float):
    """Ring geometry (r0, w0) produced by lensing a Bessel-Gauss mode:
    r0 = k_r f / k, w0 = 2 f / (k w)."""
    return k_r * f / k, 2.0 * f / (k * w)


def pov_ring_radius(l: int, r0: float, w0: float, quad: QuadratureConfig) -> float:
    """Peak radius of the ring-mode intensity, located on the uniform grid
    whose step matches the quadrature resolution r_max / (panels * nodes)."""
    n = quad.panels * quad.radial_nodes
    r = np.linspace(0.0, quad.r_max, n + 1)
    intensity = pov_radial(l, r0, w0, r) ** 2
    return float(r[int(np.argmax(intensity))])
