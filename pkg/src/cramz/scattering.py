"""Closed-form scattering amplitudes for the two-site-coupled emitter.

A right-moving wave exp(ikj) scatters off the emitter attached to sites 0
and 1.  With E = E(k), D = E - omega (detuning) and s = sin k, the
amplitudes are

    t(k) = 2i*s*(D*xi - g0*g1) / den(k),
    r(k) = (2i*s*g1^2*e^{ik} + 2*g0*g1*e^{ik} + g0^2 + g1^2) / den(k),
    den(k) = 2i*s*D*xi - 2*g0*g1*e^{ik} - (g0^2 + g1^2),

with |r|^2 + |t|^2 = 1 for any 0 < k < pi and real parameters.  The
transmission zero sits at E = omega + g0*g1/xi, pushed above the bare
emitter resonance by the two-site coupling; when that energy leaves the
band, no zero remains.

den(k) never vanishes strictly inside the band (its real part is
-(g0^2 + g1^2 + 2*g0*g1*cos k) <= -(g0 - g1)^2, and the g0 = g1, k -> pi
degeneracy is excluded by the open-interval domain), so these expressions
are finite everywhere they are allowed to be evaluated.
"""

from __future__ import annotations

import numpy as np

from .model import (ModelParams, OutOfBandError, momentum_from_energy,
                    require_interior_momentum)


def greens_factor(energy: float, omega: float) -> complex:
    """Resolvent factor 1/(E - omega) of the bare emitter.

    Diverges at E = omega (raises ZeroDivisionError there); the combined
    amplitude formulas stay finite at resonance, so callers needing the
    resonant point should use those instead.
    """
    return 1.0 / complex(energy - omega)


def _denominator(karr: np.ndarray, p: ModelParams) -> np.ndarray:
    e = p.omega_c - 2.0 * p.xi * np.cos(karr)
    d = (e - p.omega) * p.xi
    return (2j * np.sin(karr) * d
            - 2.0 * p.g0 * p.g1 * np.exp(1j * karr)
            - (p.g0 ** 2 + p.g1 ** 2))


def transmission_amplitude(k, params: ModelParams):
    """Complex t(k) for 0 < k < pi; scalar or array k."""
    karr = require_interior_momentum(k)
    if params.g0 == 0.0 and params.g1 == 0.0:
        # decoupled emitter: free propagation (the formula is 0/0 at E = omega)
        return np.ones_like(karr, dtype=complex)[()]
    e = params.omega_c - 2.0 * params.xi * np.cos(karr)
    num = 2j * np.sin(karr) * ((e - params.omega) * params.xi
                               - params.g0 * params.g1)
    return (num / _denominator(karr, params))[()]


def reflection_amplitude(k, params: ModelParams):
    """Complex r(k) for 0 < k < pi; scalar or array k."""
    karr = require_interior_momentum(k)
    if params.g0 == 0.0 and params.g1 == 0.0:
        return np.zeros_like(karr, dtype=complex)[()]
    phase = np.exp(1j * karr)
    num = (2j * np.sin(karr) * params.g1 ** 2 * phase
           + 2.0 * params.g0 * params.g1 * phase
           + (params.g0 ** 2 + params.g1 ** 2))
    return (num / _denominator(karr, params))[()]


def scattering_coefficients(k, params: ModelParams):
    """(R, T) = (|r|^2, |t|^2); R + T = 1 up to rounding."""
    r = reflection_amplitude(k, params)
    t = transmission_amplitude(k, params)
    return np.abs(r) ** 2, np.abs(t) ** 2


def resonant_transmission(params: ModelParams):
    """t at the emitter resonance E(k) = omega.

    Evaluates the on-resonance form

        t = 2i*g0*g1*sin(k) / (2*g0*g1*e^{ik} + g0^2 + g1^2)

    at the k solving dispersion(k) = omega.  Nonzero whenever both
    couplings are: the two-site geometry transmits at resonance, unlike a
    single coupled site.  Raises OutOfBandError when omega is not strictly
    inside the band.
    """
    lo, hi = params.lattice.band_min, params.lattice.band_max
    if not (lo < params.omega < hi):
        raise OutOfBandError(
            f"emitter frequency {params.omega} is not strictly inside the "
            f"band ({lo}, {hi}); no propagating resonance exists")
    if params.g0 == 0.0 and params.g1 == 0.0:
        return 1.0 + 0.0j
    k = momentum_from_energy(params.omega, params.lattice)
    g01 = params.g0 * params.g1
    return (2j * g01 * np.sin(k)
            / (2.0 * g01 * np.exp(1j * k) + params.g0 ** 2 + params.g1 ** 2))


def transmission_zero_energy(params: ModelParams):
    """Energy of the transmission zero, or None when there is none.

    The zero sits at E0 = omega + g0*g1/xi and exists only while E0 stays
    strictly inside the band and at least one coupling is nonzero (with
    both zero the chain is free and T = 1 everywhere).
    """
    if params.g0 == 0.0 and params.g1 == 0.0:
        return None
    e0 = params.omega + params.g0 * params.g1 / params.xi
    if params.lattice.band_min < e0 < params.lattice.band_max:
        return e0
    return None


def band_transmission_minimum(params: ModelParams, edge_margin: float = 0.1,
                              n_points: int = 4001) -> float:
    """Minimum of T over a dense momentum grid k in [edge_margin, pi - edge_margin].

    The margin excludes the generic ~O((pi - k)^2) vanishing of T at the
    band edges, which is unrelated to the interference dip; use
    transmission_zero_energy for the exact zero location.
    """
    k = np.linspace(edge_margin, np.pi - edge_margin, n_points)
    _, t_coef = scattering_coefficients(k, params)
    return float(np.min(t_coef))
