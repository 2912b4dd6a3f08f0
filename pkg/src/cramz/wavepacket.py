"""Time-domain oracle: Gaussian wavepacket scattering on a finite lattice.

A normalized packet exp(i*k0*j - (j - j0)^2/(4*sigma^2)) is launched toward
the emitter (coupled to the two sites at the lattice midpoint) and the
single-excitation amplitudes (lattice sites + emitter) are integrated with
a fixed-step classical 4th-order Runge-Kutta scheme.  Transmitted and
reflected probabilities are tallied over the two half-lattices once the
packet has cleared the coupling region; what is left near the emitter is
reported as ``residual`` rather than dropped.

The state is propagated in the frame rotated by the carrier energy
E0 = E(k0) (a global phase, so every probability is unchanged).  This
keeps the dominant eigenfrequencies near zero, where the Runge-Kutta
amplitude error ~ (omega*dt)^6 is far below the norm-drift budget at the
default dt = 0.02/xi; in the lab frame the same step size would lose
~1e-5 of norm over a run.

The time-averaged outcome matches the momentum-weighted stationary
prediction sum_k |c_k|^2 |t(k)|^2 (see analytic_packet_transmission), and
projecting the transmitted packet back onto plane waves recovers |t(k)|^2
pointwise (see momentum_resolved_transmission).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams, dispersion, group_velocity
from .scattering import scattering_coefficients


class IntegrationError(RuntimeError):
    """Norm conservation broke down during time stepping."""


@dataclass(frozen=True)
class WavepacketConfig:
    """Lattice geometry, initial packet and integration controls.

    dt defaults to 0.02/xi; t_max defaults to the time for the packet
    center to travel 5*sigma + 20 sites past the coupling region at the
    carrier group velocity.
    """

    n_sites: int = 600
    source_center: int = 150
    k0: float = np.pi / 2
    sigma: float = 20.0
    dt: float | None = None
    t_max: float | None = None

    def coupling_sites(self) -> tuple[int, int]:
        """Emitter-coupled sites: the adjacent pair at the lattice midpoint."""
        return self.n_sites // 2, self.n_sites // 2 + 1


@dataclass(frozen=True)
class WavepacketResult:
    """Probability bookkeeping after the packet clears the emitter."""

    T_num: float
    R_num: float
    residual: float
    P_e_max: float
    norm_drift: float
    t_final: float
    trace: np.ndarray | None = field(default=None, repr=False)
    state: np.ndarray | None = field(default=None, repr=False)


def initial_packet(cfg: WavepacketConfig) -> np.ndarray:
    """Normalized lattice amplitudes of the initial Gaussian packet."""
    j = np.arange(cfg.n_sites)
    psi = np.exp(1j * cfg.k0 * j
                 - (j - cfg.source_center) ** 2 / (4.0 * cfg.sigma ** 2))
    return psi / np.linalg.norm(psi)


def packet_spectrum(cfg: WavepacketConfig) -> tuple[np.ndarray, np.ndarray]:
    """(k, weight) over the FFT momentum grid; weights sum to 1."""
    c = np.fft.fft(initial_packet(cfg), norm="ortho")
    k = 2.0 * np.pi * np.arange(cfg.n_sites) / cfg.n_sites
    return k, np.abs(c) ** 2


def _resolve_times(cfg: WavepacketConfig, params: ModelParams) -> tuple[float, float]:
    dt = cfg.dt if cfg.dt is not None else 0.02 / params.xi
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if cfg.t_max is not None:
        return dt, cfg.t_max
    v_g = group_velocity(cfg.k0, params.lattice)
    if v_g <= 1e-6:
        raise ValueError(
            f"carrier momentum k0={cfg.k0} has group velocity {v_g}; the "
            "packet would never clear the coupling region (pick k0 away "
            "from the band edges or set t_max explicitly)")
    _, c1 = cfg.coupling_sites()
    travel = (c1 - cfg.source_center) + 5.0 * cfg.sigma + 20.0
    return dt, travel / v_g


def _validate_geometry(cfg: WavepacketConfig, params: ModelParams,
                       t_max: float) -> None:
    c0, c1 = cfg.coupling_sites()
    if cfg.sigma < 5.0:
        raise ValueError(f"sigma must be at least 5 sites, got {cfg.sigma}")
    if not 0 <= cfg.source_center < cfg.n_sites:
        raise ValueError(f"source_center {cfg.source_center} outside the "
                         f"lattice [0, {cfg.n_sites})")
    if cfg.source_center + 3.0 * cfg.sigma > c0:
        raise ValueError(
            f"packet (center {cfg.source_center}, sigma {cfg.sigma}) "
            f"overlaps the coupling region starting at site {c0}")
    # fastest component that carries weight: scan the central +-4 sigma_k
    # momentum window for the largest group velocity
    sigma_k = 1.0 / (2.0 * cfg.sigma)
    k_lo = max(cfg.k0 - 4.0 * sigma_k, 1e-9)
    k_hi = min(cfg.k0 + 4.0 * sigma_k, np.pi)
    candidates = [k_lo, k_hi]
    if k_lo < np.pi / 2 < k_hi:
        candidates.append(np.pi / 2)
    v_fast = max(group_velocity(k, params.lattice) for k in candidates)
    margin = 4.0 * cfg.sigma
    right_reach = cfg.source_center + v_fast * t_max + margin
    left_reach = min(cfg.source_center - margin,
                     2 * c0 - cfg.source_center - v_fast * t_max - margin)
    if right_reach >= cfg.n_sites - 1 or left_reach <= 0:
        raise ValueError(
            f"packet would reach a lattice wall within t_max={t_max:.1f} "
            f"(reach [{left_reach:.0f}, {right_reach:.0f}] vs lattice "
            f"[0, {cfg.n_sites})); enlarge n_sites or shorten t_max")


def evolve_wavepacket(cfg: WavepacketConfig, params: ModelParams,
                      trace_every: int = 0,
                      keep_state: bool = False) -> WavepacketResult:
    """Propagate the packet and tally transmission/reflection.

    trace_every > 0 records (time, left_norm, right_norm, P_e) every that
    many steps into result.trace; keep_state retains the final amplitudes
    (lattice sites then emitter) in result.state.
    """
    dt, t_max = _resolve_times(cfg, params)
    _validate_geometry(cfg, params, t_max)
    n = cfg.n_sites
    c0, c1 = cfg.coupling_sites()
    e0 = dispersion(cfg.k0, params.lattice)

    psi = np.zeros(n + 1, dtype=complex)
    psi[:n] = initial_packet(cfg)

    site_diag = params.omega_c - e0
    emitter_diag = params.omega - e0
    xi, g0, g1 = params.xi, params.g0, params.g1

    def ham(p: np.ndarray) -> np.ndarray:
        out = np.empty_like(p)
        out[:n] = site_diag * p[:n]
        out[1:n] -= xi * p[:n - 1]
        out[:n - 1] -= xi * p[1:n]
        out[c0] += g0 * p[n]
        out[c1] += g1 * p[n]
        out[n] = emitter_diag * p[n] + g0 * p[c0] + g1 * p[c1]
        return out

    def halves(p: np.ndarray) -> tuple[float, float]:
        left = float(np.sum(np.abs(p[:c0]) ** 2))
        right = float(np.sum(np.abs(p[c1 + 1:n]) ** 2))
        return left, right

    n_steps = int(np.ceil(t_max / dt))
    pe_max = abs(psi[n]) ** 2
    drift = 0.0
    trace_rows = []
    if trace_every > 0:
        left, right = halves(psi)
        trace_rows.append((0.0, left, right, abs(psi[n]) ** 2))

    for step in range(1, n_steps + 1):
        k1 = -1j * ham(psi)
        k2 = -1j * ham(psi + 0.5 * dt * k1)
        k3 = -1j * ham(psi + 0.5 * dt * k2)
        k4 = -1j * ham(psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

        pe = abs(psi[n]) ** 2
        pe_max = max(pe_max, pe)
        drift = max(drift, abs(1.0 - float(np.vdot(psi, psi).real)))
        if drift > 1e-6:
            raise IntegrationError(
                f"norm drifted by {drift:.3e} at t={step * dt:.2f}; "
                f"reduce dt (currently {dt})")
        if trace_every > 0 and (step % trace_every == 0 or step == n_steps):
            left, right = halves(psi)
            trace_rows.append((step * dt, left, right, pe))

    left, right = halves(psi)
    residual = float(abs(psi[c0]) ** 2 + abs(psi[c1]) ** 2 + abs(psi[n]) ** 2)
    return WavepacketResult(
        T_num=right, R_num=left, residual=residual, P_e_max=float(pe_max),
        norm_drift=float(drift), t_final=n_steps * dt,
        trace=np.array(trace_rows) if trace_every > 0 else None,
        state=psi if keep_state else None)


def analytic_packet_transmission(cfg: WavepacketConfig,
                                 params: ModelParams) -> float:
    """Momentum-weighted stationary prediction sum_k |c_k|^2 |t(k)|^2."""
    k, w = packet_spectrum(cfg)
    sel = (k > 1e-9) & (k < np.pi - 1e-9)
    _, t_coef = scattering_coefficients(k[sel], params)
    return float(np.sum(w[sel] * t_coef))


def momentum_resolved_transmission(cfg: WavepacketConfig, final_state: np.ndarray):
    """Per-momentum transmitted fraction from a final state.

    Projects the final lattice amplitudes beyond the coupling region onto
    plane waves and divides by the initial spectrum: the ratio estimates
    |t(k)|^2 pointwise.  Returns (k, measured, weight) over the in-band
    momenta; the estimate is only meaningful where weight is appreciable.
    """
    n = cfg.n_sites
    _, c1 = cfg.coupling_sites()
    transmitted = np.array(final_state[:n])
    transmitted[:c1 + 1] = 0.0
    spec_out = np.abs(np.fft.fft(transmitted, norm="ortho")) ** 2
    k, w = packet_spectrum(cfg)
    sel = (k > 1e-9) & (k < np.pi - 1e-9)
    with np.errstate(divide="ignore", invalid="ignore"):
        measured = np.where(w[sel] > 0, spec_out[sel] / w[sel], 0.0)
    return k[sel], measured, w[sel]
