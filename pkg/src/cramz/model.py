"""Model parameters and band structure of the resonator chain.

A uniform 1D chain of cavities (frequency ``omega_c``, nearest-neighbour
hopping ``xi``) carries a single excitation with dispersion

    E(k) = omega_c - 2*xi*cos(k),      0 <= k <= pi,

so the propagating band is [omega_c - 2*xi, omega_c + 2*xi].  A two-level
emitter (level spacing ``omega``) couples to the two adjacent sites 0 and 1
with strengths ``g0`` and ``g1``.  Everything downstream (closed-form
amplitudes, exact solvers, sweeps) takes these parameters.

All quantities are in the same energy units; xi = 1 is the conventional
choice.  Momenta are dimensionless (lattice constant = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class OutOfBandError(ValueError):
    """Requested energy lies outside the propagating band."""


class BandEdgeError(ValueError):
    """Momentum at (or beyond) a band edge, where sin k = 0 and the
    scattering formulas degenerate."""


@dataclass(frozen=True)
class LatticeParams:
    """Uniform chain: on-site frequency and inter-cavity hopping."""

    omega_c: float = 2.0
    xi: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.omega_c):
            raise ValueError(f"omega_c must be finite, got {self.omega_c}")
        if not (math.isfinite(self.xi) and self.xi > 0):
            raise ValueError(f"xi must be finite and > 0, got {self.xi}")

    @property
    def band_min(self) -> float:
        return self.omega_c - 2.0 * self.xi

    @property
    def band_max(self) -> float:
        return self.omega_c + 2.0 * self.xi


@dataclass(frozen=True)
class EmitterParams:
    """Two-level emitter: level spacing and couplings to sites 0 and 1.

    Couplings are nonnegative reals; complex phases are out of scope.
    """

    omega: float = 2.0
    g0: float = 0.0
    g1: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ValueError(f"omega must be finite, got {self.omega}")
        for name, g in (("g0", self.g0), ("g1", self.g1)):
            if not (math.isfinite(g) and g >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {g}")


@dataclass(frozen=True)
class ModelParams:
    """Full physics input: chain plus emitter."""

    lattice: LatticeParams
    emitter: EmitterParams

    @classmethod
    def create(cls, omega_c: float = 2.0, xi: float = 1.0,
               omega: float | None = None, g0: float = 0.0,
               g1: float = 0.0) -> "ModelParams":
        """Flat constructor; omega defaults to omega_c (resonant emitter)."""
        if omega is None:
            omega = omega_c
        return cls(LatticeParams(omega_c, xi), EmitterParams(omega, g0, g1))

    # flat accessors, used constantly by the amplitude formulas
    @property
    def omega_c(self) -> float:
        return self.lattice.omega_c

    @property
    def xi(self) -> float:
        return self.lattice.xi

    @property
    def omega(self) -> float:
        return self.emitter.omega

    @property
    def g0(self) -> float:
        return self.emitter.g0

    @property
    def g1(self) -> float:
        return self.emitter.g1


def _as_array(k) -> np.ndarray:
    return np.asarray(k, dtype=float)


def require_band_momentum(k) -> np.ndarray:
    """Validate 0 <= k <= pi (band edges allowed). Returns k as ndarray."""
    karr = _as_array(k)
    if np.any(karr < 0.0) or np.any(karr > np.pi):
        raise ValueError(f"momentum must lie in [0, pi], got {k}")
    return karr


def require_interior_momentum(k) -> np.ndarray:
    """Validate 0 < k < pi strictly; scattering formulas need sin k != 0."""
    karr = _as_array(k)
    if np.any(karr <= 0.0) or np.any(karr >= np.pi):
        raise BandEdgeError(
            f"momentum must lie strictly inside (0, pi); got {k}. "
            "At the band edges sin k = 0 and the scattering amplitudes "
            "degenerate; evaluate at an epsilon offset instead.")
    return karr


def dispersion(k, lattice: LatticeParams):
    """Band energy E(k) = omega_c - 2*xi*cos(k) for k in [0, pi]."""
    karr = require_band_momentum(k)
    e = lattice.omega_c - 2.0 * lattice.xi * np.cos(karr)
    return e[()]


def momentum_from_energy(energy, lattice: LatticeParams):
    """Invert the dispersion on the principal branch [0, pi].

    Raises OutOfBandError when the energy lies outside
    [omega_c - 2*xi, omega_c + 2*xi].
    """
    earr = np.asarray(energy, dtype=float)
    lo, hi = lattice.band_min, lattice.band_max
    if np.any(earr < lo) or np.any(earr > hi):
        raise OutOfBandError(
            f"energy {energy} outside the band [{lo}, {hi}] "
            f"(omega_c = {lattice.omega_c}, xi = {lattice.xi})")
    # the in-band check passed; clip guards against 1-ulp overshoot in the
    # division, which would turn arccos into NaN at the edges
    x = np.clip((lattice.omega_c - earr) / (2.0 * lattice.xi), -1.0, 1.0)
    return np.arccos(x)[()]


def group_velocity(k, lattice: LatticeParams):
    """dE/dk = 2*xi*sin(k), in sites per unit time."""
    karr = require_band_momentum(k)
    return (2.0 * lattice.xi * np.sin(karr))[()]
