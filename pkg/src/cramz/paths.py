"""Bonding/anti-bonding decomposition: the two-arm interferometer picture.

Superposing the two coupled-site modes by the mixing angle
tan(theta) = g1/g0,

    B =  cos(theta)*a0 + sin(theta)*a1       (bonding, couples to emitter)
    D = -sin(theta)*a0 + cos(theta)*a1       (anti-bonding, decoupled)

turns the scattering region into a two-arm ring between the leads.  The
arm frequencies are omega_c -/+ xi*sin(2*theta) and only B talks to the
emitter, with strength sqrt(g0^2 + g1^2).  For equal couplings
(theta = pi/4) the arms have no direct B-D hopping, and the transmission
splits into partial waves t = t_B + t_D, each being the amplitude through
one arm with the other removed.  On resonance t_B = 0: the emitter blocks
arm B completely and all transmitted amplitude flows through D.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ModelParams, require_interior_momentum
from .scattering import transmission_amplitude


@dataclass(frozen=True)
class PathBasis:
    """Mixing angle, arm frequencies and effective emitter coupling."""

    theta: float
    omega_B: float
    omega_D: float
    g_B: float


@dataclass(frozen=True)
class PathAmplitudes:
    """Partial transmissions through the two arms; t = t_B + t_D."""

    t_B: complex
    t_D: complex

    @property
    def total(self):
        return self.t_B + self.t_D


def mixing_angle(g0: float, g1: float) -> float:
    """theta = atan2(g1, g0) in [0, pi/2]; undefined when both vanish."""
    if g0 == 0.0 and g1 == 0.0:
        raise ValueError("mixing angle undefined for g0 = g1 = 0 "
                         "(no preferred superposition of the two sites)")
    return float(np.arctan2(g1, g0))


def path_basis(params: ModelParams) -> PathBasis:
    """Arm frequencies and coupling for the given parameters."""
    theta = mixing_angle(params.g0, params.g1)
    shift = params.xi * np.sin(2.0 * theta)
    g_b = float(np.hypot(params.g0, params.g1))
    return PathBasis(theta=theta,
                     omega_B=params.omega_c - shift,
                     omega_D=params.omega_c + shift,
                     g_B=g_b)


def site_to_path_amplitudes(u0, u1, theta: float):
    """(u0, u1) -> (uB, uD) by the orthogonal rotation of the site modes."""
    c, s = np.cos(theta), np.sin(theta)
    return c * u0 + s * u1, -s * u0 + c * u1


def path_to_site_amplitudes(u_b, u_d, theta: float):
    """Inverse of site_to_path_amplitudes (transpose rotation)."""
    c, s = np.cos(theta), np.sin(theta)
    return c * u_b - s * u_d, s * u_b + c * u_d


def _require_equal_couplings(params: ModelParams) -> float:
    if params.g0 != params.g1:
        raise ValueError(
            f"path decomposition needs equal couplings, got g0={params.g0}, "
            f"g1={params.g1}; for unequal couplings the arms acquire a "
            "direct hopping and the two-path picture does not apply")
    return params.g0


def t_path_D(k):
    """Anti-bonding-arm transmission i*sin(k/2)*exp(-ik/2) = (1 - e^{-ik})/2.

    The decoupled arm never sees the emitter, so this is parameter-free;
    |t_D|^2 = sin^2(k/2).
    """
    karr = require_interior_momentum(k)
    return (1j * np.sin(karr / 2.0) * np.exp(-1j * karr / 2.0))[()]


def t_path_B(k, params: ModelParams):
    """Bonding-arm transmission for g0 = g1 = g.

    t_B = e^{-ik/2} * xi*(E - omega) * cos(k/2)
          / (xi*(E - omega) - g^2 + i*g^2*cot(k/2)),

    which vanishes at E = omega: the emitter suppresses arm B completely
    on resonance.  At g = 0 it reduces to the free split (1 + e^{-ik})/2.
    """
    karr = require_interior_momentum(k)
    g = _require_equal_couplings(params)
    e = params.omega_c - 2.0 * params.xi * np.cos(karr)
    detune = params.xi * (e - params.omega)
    half = karr / 2.0
    cot = np.cos(half) / np.sin(half)
    return (np.exp(-1j * half) * detune * np.cos(half)
            / (detune - g ** 2 + 1j * g ** 2 * cot))[()]


def decompose(k, params: ModelParams) -> PathAmplitudes:
    """Both arm amplitudes; their sum equals transmission_amplitude(k)."""
    return PathAmplitudes(t_B=t_path_B(k, params), t_D=t_path_D(k))


def decomposition_residual(k, params: ModelParams):
    """|t_B + t_D - t| — identity check helper used by verify and tests."""
    amps = decompose(k, params)
    return np.abs(amps.total - transmission_amplitude(k, params))
