"""Special functions needed by the transverse mode family evaluations.

The associated Laguerre polynomial is written out as its finite sum so the
alternating sign is explicit; several published transcriptions drop it.  The
modified Bessel function is delegated to scipy, with the exponentially scaled
variant exposed separately because the ring-mode envelope cancels the growing
exponential analytically.
"""

import math

import numpy as np
from scipy import special as sp


def laguerre_poly(p: int, l_abs: int, x):
    """Associated Laguerre polynomial L_p^{l_abs}(x).

    Standard definition with the alternating sign,

        L_p^a(x) = sum_{m=0}^{p} (-1)^m C(p+a, p-m) x^m / m!

    Accepts scalar or ndarray x.  Exact for polynomial arguments up to
    floating point rounding; p and l_abs must be nonnegative integers.
    """
    if p < 0 or l_abs < 0:
        raise ValueError("laguerre_poly needs nonnegative p and l_abs")
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for m in range(p + 1):
        coef = (-1.0) ** m * math.comb(p + l_abs, p - m) / math.factorial(m)
        out = out + coef * x ** m
    if out.ndim == 0:
        return float(out)
    return out


def bessel_i(l: int, x):
    """Modified Bessel function of the first kind I_l(x), l >= 0, x >= 0.

    For negative orders use I_{-l} = I_l (integer order).  Raises
    OverflowError once the result leaves the double exponent range; callers
    working against Gaussian envelopes should prefer bessel_i_scaled.
    """
    if l < 0:
        raise ValueError("bessel_i takes l >= 0; use I_{-l} = I_l")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_i takes x >= 0")
    out = sp.iv(l, x)
    if np.any(np.isinf(out)):
        raise OverflowError("I_l(x) overflows for x ~ %g; use bessel_i_scaled" % float(np.max(x)))
    if out.ndim == 0:
        return float(out)
    return out


def bessel_i_scaled(l: int, x):
    """Exponentially scaled modified Bessel function, exp(-x) I_l(x).

    Safe for arbitrarily large x; the caller folds the exp(+x) back into
    whatever decaying envelope multiplies it.
    """
    if l < 0:
        raise ValueError("bessel_i_scaled takes l >= 0; use I_{-l} = I_l")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_i_scaled takes x >= 0")
    out = sp.ive(l, x)
    if out.ndim == 0:
        return float(out)
    return out


def bessel_j(l: int, x):
    """Bessel function of the first kind J_l(x); thin scipy wrapper."""
    out = sp.jv(l, np.asarray(x, dtype=float))
    if out.ndim == 0:
        return float(out)
    return out
