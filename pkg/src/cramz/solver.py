"""Exact stationary solvers: boundary-matched linear systems.

These are the independent oracles for the closed forms.  Both assemble the
single-excitation Schrodinger equation directly from the Hamiltonian (not
from any pre-simplified amplitude expression) and impose the lead ansatz

    u_j = e^{ikj} + r e^{-ikj}   (j <= -1),       u_j = t e^{ikj}   (j >= 2),

where the reflected wave moves left, hence e^{-ikj}.  The equations at
j = -1 and j = 2 reduce exactly to the continuity relations u_0 = 1 + r
and u_1 = t e^{ik}, leaving a 5x5 complex system.

solve_scattering_exact works in the site basis {u0, u1}; solve_path_space
works in the rotated bonding/anti-bonding basis {uB, uD} on the equivalent
ring network (equal couplings only).  Agreement of the two, and of both
with the closed forms, is the central consistency check of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ModelParams, dispersion, require_interior_momentum


class SingularSystemError(RuntimeError):
    """The boundary-matched system could not be solved.

    Only possible at band edges or measure-zero parameter degeneracies;
    carries the condition number of the assembled matrix.
    """

    def __init__(self, message: str, condition_number: float):
        super().__init__(f"{message} (condition number {condition_number:.3e})")
        self.condition_number = condition_number


@dataclass(frozen=True)
class ScatteringSolution:
    """Site-basis solution: amplitudes relative to a unit incident wave."""

    r: complex
    t: complex
    u0: complex
    u1: complex
    ue: complex


@dataclass(frozen=True)
class PathSpaceSolution:
    """Ring-network solution in the bonding/anti-bonding basis."""

    r: complex
    t: complex
    uB: complex
    uD: complex
    ue: complex


def _solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(f"scattering system is singular: {exc}",
                                  float(np.linalg.cond(a))) from exc


def solve_scattering_exact(k: float, params: ModelParams) -> ScatteringSolution:
    """Solve the stationary problem at momentum k (0 < k < pi).

    Unknowns (u0, u1, ue, r, t); rows are the site-0, site-1 and emitter
    equations plus the two lead-continuity relations.
    """
    k = float(require_interior_momentum(k))
    p = params
    e = dispersion(k, p.lattice)
    a = np.exp(1j * k)
    mat = np.array([
        #  u0          u1          ue           r        t
        [p.omega_c - e, -p.xi,      p.g0,        -p.xi * a, 0.0],
        [-p.xi,        p.omega_c - e, p.g1,      0.0,      -p.xi * a * a],
        [p.g0,         p.g1,       p.omega - e,  0.0,      0.0],
        [1.0,          0.0,        0.0,          -1.0,     0.0],
        [0.0,          1.0,        0.0,          0.0,      -a],
    ], dtype=complex)
    rhs = np.array([p.xi * np.conj(a), 0.0, 0.0, 1.0, 0.0], dtype=complex)
    u0, u1, ue, r, t = _solve(mat, rhs)
    return ScatteringSolution(r=r, t=t, u0=u0, u1=u1, ue=ue)


def solve_path_space(k: float, params: ModelParams) -> PathSpaceSolution:
    """Solve the equivalent two-arm ring network (g0 = g1 only).

    Nodes are lead site -1, the arms B and D, lead site 2 and the emitter;
    at theta = pi/4 the arm frequencies are omega_c -/+ xi and all
    lead-arm hoppings are xi/sqrt(2).  Unknowns (r, t, uB, uD, ue) with
    u_{-1}, u_{-2}, u_2, u_3 taken from the lead ansatz.
    """
    k = float(require_interior_momentum(k))
    p = params
    if p.g0 != p.g1:
        raise ValueError(
            f"path-space solver needs equal couplings, got g0={p.g0}, "
            f"g1={p.g1}")
    g = p.g0
    e = dispersion(k, p.lattice)
    a = np.exp(1j * k)
    ai = np.conj(a)
    w_b = p.omega_c - p.xi
    w_d = p.omega_c + p.xi
    hop = p.xi / np.sqrt(2.0)
    g_b = np.sqrt(2.0) * g

    mat = np.zeros((5, 5), dtype=complex)
    rhs = np.zeros(5, dtype=complex)
    #        r  t  uB  uD  ue
    # lead site -1:  (omega_c - E)u_{-1} - xi u_{-2} - hop (uB - uD) = 0
    mat[0, 0] = (p.omega_c - e) * a - p.xi * a * a
    mat[0, 2] = -hop
    mat[0, 3] = hop
    rhs[0] = -((p.omega_c - e) * ai - p.xi * ai * ai)
    # lead site 2:   (omega_c - E)u_2 - xi u_3 - hop (uB + uD) = 0
    mat[1, 1] = (p.omega_c - e) * a * a - p.xi * a ** 3
    mat[1, 2] = -hop
    mat[1, 3] = -hop
    # arm B:  (omega_B - E)uB - hop (u_{-1} + u_2) + g_B ue = 0
    mat[2, 2] = w_b - e
    mat[2, 0] = -hop * a
    mat[2, 1] = -hop * a * a
    mat[2, 4] = g_b
    rhs[2] = hop * ai
    # arm D:  (omega_D - E)uD + hop (u_{-1} - u_2) = 0
    mat[3, 3] = w_d - e
    mat[3, 0] = hop * a
    mat[3, 1] = -hop * a * a
    rhs[3] = -hop * ai
    # emitter: (omega - E)ue + g_B uB = 0
    mat[4, 4] = p.omega - e
    mat[4, 2] = g_b

    r, t, u_b, u_d, ue = _solve(mat, rhs)
    return PathSpaceSolution(r=r, t=t, uB=u_b, uD=u_d, ue=ue)
