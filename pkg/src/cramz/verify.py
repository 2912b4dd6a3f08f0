"""Seeded self-verification: closed forms against the exact solvers.

Draws random in-band scattering problems and cross-checks every identity
the package promises: unitarity of (r, t), agreement of the closed forms
with the boundary-matched solve, the emitter-amplitude defining equation,
the two-arm decomposition t = t_B + t_D and the path-space/real-space
solver agreement (the latter two on equal-coupling draws).  Deterministic
for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams, dispersion
from .paths import decomposition_residual
from .scattering import reflection_amplitude, transmission_amplitude
from .solver import solve_path_space, solve_scattering_exact

CHECK_NAMES = (
    "unitarity",
    "oracle_t",
    "oracle_r",
    "emitter_equation",
    "decomposition",
    "path_space_t",
    "path_space_r",
)


@dataclass
class WorstCase:
    residual: float = 0.0
    where: str = ""

    def update(self, residual: float, where: str) -> None:
        if residual > self.residual:
            self.residual = residual
            self.where = where


@dataclass
class VerifyReport:
    seed: int
    n_cases: int
    tol: float
    worst: dict[str, WorstCase] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [name for name, case in self.worst.items()
                if case.residual > self.tol]

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = []
        for name in CHECK_NAMES:
            case = self.worst[name]
            status = "PASS" if case.residual <= self.tol else "FAIL"
            out.append(f"{status}  {name:<18} worst residual "
                       f"{case.residual:.3e}  at {case.where}")
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"{verdict}  overall: {self.n_cases} cases, seed "
                   f"{self.seed}, tolerance {self.tol:g}")
        return out


def run_checks(params: ModelParams, seed: int = 42, n_cases: int = 1000,
               tol: float = 1e-10) -> VerifyReport:
    """Run the full identity suite on n_cases random draws.

    Randomizes k in (0.01, pi-0.01), xi in [0.5, 2], g0, g1 in [0, 3] and
    omega across the band widened by 1, all around the passed omega_c.
    """
    if n_cases < 1:
        raise ValueError(f"n_cases must be >= 1, got {n_cases}")
    rng = np.random.default_rng(seed)
    omega_c = params.omega_c
    report = VerifyReport(seed=seed, n_cases=n_cases, tol=tol,
                          worst={name: WorstCase() for name in CHECK_NAMES})

    for _ in range(n_cases):
        k = rng.uniform(0.01, np.pi - 0.01)
        xi = rng.uniform(0.5, 2.0)
        g0, g1 = rng.uniform(0.0, 3.0, size=2)
        omega = rng.uniform(omega_c - 2.0 * xi - 1.0, omega_c + 2.0 * xi + 1.0)
        p = ModelParams.create(omega_c, xi, omega, g0, g1)
        where = (f"k={k:.6f} xi={xi:.4f} g0={g0:.4f} g1={g1:.4f} "
                 f"omega={omega:.4f}")

        t = transmission_amplitude(k, p)
        r = reflection_amplitude(k, p)
        report.worst["unitarity"].update(
            abs(abs(r) ** 2 + abs(t) ** 2 - 1.0), where)

        sol = solve_scattering_exact(k, p)
        report.worst["oracle_t"].update(abs(sol.t - t), where)
        report.worst["oracle_r"].update(abs(sol.r - r), where)
        e = dispersion(k, p.lattice)
        report.worst["emitter_equation"].update(
            abs((e - omega) * sol.ue - (g0 * sol.u0 + g1 * sol.u1)), where)

        # equal-coupling variant of the same draw for the two-arm checks
        g = g0
        p_eq = ModelParams.create(omega_c, xi, omega, g, g)
        where_eq = f"k={k:.6f} xi={xi:.4f} g={g:.4f} omega={omega:.4f}"
        report.worst["decomposition"].update(
            float(decomposition_residual(k, p_eq)), where_eq)
        site = solve_scattering_exact(k, p_eq)
        ring = solve_path_space(k, p_eq)
        report.worst["path_space_t"].update(abs(site.t - ring.t), where_eq)
        report.worst["path_space_r"].update(abs(site.r - ring.r), where_eq)

    return report
