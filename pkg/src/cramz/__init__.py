"""cramz: single-excitation transport in a coupled-resonator array with a
two-site-coupled emitter, its two-arm interference decomposition, and the
numerical oracles that validate the closed forms."""

from ._version import __version__
from .model import (BandEdgeError, EmitterParams, LatticeParams, ModelParams,
                    OutOfBandError, dispersion, group_velocity,
                    momentum_from_energy)
from .scattering import (band_transmission_minimum, greens_factor,
                         reflection_amplitude, resonant_transmission,
                         scattering_coefficients, transmission_amplitude,
                         transmission_zero_energy)
from .paths import (PathAmplitudes, PathBasis, decompose, mixing_angle,
                    path_basis, path_to_site_amplitudes,
                    site_to_path_amplitudes, t_path_B, t_path_D)
from .solver import (PathSpaceSolution, ScatteringSolution,
                     SingularSystemError, solve_path_space,
                     solve_scattering_exact)
from .wavepacket import (IntegrationError, WavepacketConfig, WavepacketResult,
                         analytic_packet_transmission, evolve_wavepacket,
                         initial_packet, momentum_resolved_transmission,
                         packet_spectrum)
from .sweeps import (ConfigurationError, GridSpec, SpectrumGrid, SweepSpec,
                     read_csv, run_grid, run_sweep)
from .verify import VerifyReport, run_checks

__all__ = [
    "__version__",
    "BandEdgeError", "EmitterParams", "LatticeParams", "ModelParams",
    "OutOfBandError", "dispersion", "group_velocity", "momentum_from_energy",
    "band_transmission_minimum", "greens_factor", "reflection_amplitude",
    "resonant_transmission", "scattering_coefficients",
    "transmission_amplitude", "transmission_zero_energy",
    "PathAmplitudes", "PathBasis", "decompose", "mixing_angle", "path_basis",
    "path_to_site_amplitudes", "site_to_path_amplitudes", "t_path_B",
    "t_path_D",
    "PathSpaceSolution", "ScatteringSolution", "SingularSystemError",
    "solve_path_space", "solve_scattering_exact",
    "IntegrationError", "WavepacketConfig", "WavepacketResult",
    "analytic_packet_transmission", "evolve_wavepacket", "initial_packet",
    "momentum_resolved_transmission", "packet_spectrum",
    "ConfigurationError", "GridSpec", "SpectrumGrid", "SweepSpec", "read_csv",
    "run_grid", "run_sweep",
    "VerifyReport", "run_checks",
]
