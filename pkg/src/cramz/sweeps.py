"""Parameter sweeps and tabulated spectra with flat-file emission.

run_sweep tabulates (E, k, T, R, t, r) along one axis; run_grid tabulates
T over an (energy x coupling) grid in long format, with the coupling
applied symmetrically (g0 = g1 = g).  Axes are clipped to the open band
with a 1e-6 margin because the amplitudes degenerate where sin k = 0.

Output is deterministic: CSV rows use shortest-round-trip float repr and
the header block records every parameter plus the package version, so
identical specs emit byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .model import ModelParams, dispersion, momentum_from_energy
from .paths import decompose
from .scattering import reflection_amplitude, transmission_amplitude

EDGE_EPS = 1e-6


class ConfigurationError(ValueError):
    """Sweep/grid specification cannot be run as given."""


@dataclass(frozen=True)
class SweepSpec:
    """One-axis sweep: axis is "energy" or "momentum"."""

    axis: str
    start: float
    stop: float
    n_points: int
    params: ModelParams

    def __post_init__(self):
        if self.axis not in ("energy", "momentum"):
            raise ConfigurationError(
                f"axis must be 'energy' or 'momentum', got {self.axis!r}")
        if not self.start < self.stop:
            raise ConfigurationError(
                f"need start < stop, got [{self.start}, {self.stop}]")
        if self.n_points < 2:
            raise ConfigurationError(
                f"need at least 2 points, got {self.n_points}")


@dataclass(frozen=True)
class GridSpec:
    """Energy x coupling grid with g applied as g0 = g1 = g."""

    e_start: float
    e_stop: float
    e_points: int
    g_start: float
    g_stop: float
    g_points: int
    params: ModelParams

    def __post_init__(self):
        if not self.e_start < self.e_stop:
            raise ConfigurationError(
                f"need e_start < e_stop, got [{self.e_start}, {self.e_stop}]")
        if not self.g_start < self.g_stop:
            raise ConfigurationError(
                f"need g_start < g_stop, got [{self.g_start}, {self.g_stop}]")
        if self.e_points < 2 or self.g_points < 2:
            raise ConfigurationError("need at least 2 points per axis")
        if self.g_start < 0:
            raise ConfigurationError(f"couplings are nonnegative, "
                                     f"got g_start={self.g_start}")


@dataclass(frozen=True)
class SpectrumGrid:
    """Tabulated spectrum: named columns, float rows, header metadata."""

    columns: tuple[str, ...]
    rows: np.ndarray
    meta: dict

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]

    def dump(self, fh, fmt: str = "csv") -> None:
        if fmt == "csv":
            for key, value in self.meta.items():
                fh.write(f"# {key} = {value}\n")
            fh.write(",".join(self.columns) + "\n")
            for row in self.rows:
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
        elif fmt == "json":
            json.dump({"meta": self.meta,
                       "columns": list(self.columns),
                       "rows": [[float(v) for v in row] for row in self.rows]},
                      fh)
            fh.write("\n")
        else:
            raise ConfigurationError(f"format must be csv or json, got {fmt!r}")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            self.dump(fh, "csv")

    def to_json(self, path) -> None:
        with open(path, "w", newline="") as fh:
            self.dump(fh, "json")


def read_csv(path) -> SpectrumGrid:
    """Re-parse a file written by SpectrumGrid.to_csv."""
    meta = {}
    columns = None
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                meta[key.strip()] = value.strip()
            elif columns is None:
                columns = tuple(line.split(","))
            else:
                rows.append([float(v) for v in line.split(",")])
    if columns is None:
        raise ConfigurationError(f"{path} has no column header")
    return SpectrumGrid(columns=columns, rows=np.array(rows), meta=meta)


def _clip_energy_axis(start: float, stop: float, params: ModelParams,
                      n_points: int) -> np.ndarray:
    lo = params.lattice.band_min + EDGE_EPS
    hi = params.lattice.band_max - EDGE_EPS
    cs, ce = max(start, lo), min(stop, hi)
    if not cs < ce:
        raise ConfigurationError(
            f"energy range [{start}, {stop}] clipped against the open band "
            f"({params.lattice.band_min}, {params.lattice.band_max}) is empty")
    return np.linspace(cs, ce, n_points)


def _param_meta(params: ModelParams) -> dict:
    return {"tool": f"cramz {__version__}",
            "omega_c": params.omega_c, "xi": params.xi,
            "omega": params.omega, "g0": params.g0, "g1": params.g1}


def run_sweep(spec: SweepSpec, with_paths: bool = False) -> SpectrumGrid:
    """Tabulate amplitudes along the axis.

    Columns: E,k,T,R,re_t,im_t,re_r,im_r, plus re_tB,im_tB,re_tD,im_tD when
    with_paths is set (which requires g0 = g1).
    """
    p = spec.params
    if spec.axis == "energy":
        energies = _clip_energy_axis(spec.start, spec.stop, p, spec.n_points)
        k = momentum_from_energy(energies, p.lattice)
    else:
        cs = max(spec.start, EDGE_EPS)
        ce = min(spec.stop, np.pi - EDGE_EPS)
        if not cs < ce:
            raise ConfigurationError(
                f"momentum range [{spec.start}, {spec.stop}] clipped against "
                f"(0, pi) is empty")
        k = np.linspace(cs, ce, spec.n_points)
        energies = dispersion(k, p.lattice)

    t = transmission_amplitude(k, p)
    r = reflection_amplitude(k, p)
    cols = [energies, k, np.abs(t) ** 2, np.abs(r) ** 2,
            t.real, t.imag, r.real, r.imag]
    names = ["E", "k", "T", "R", "re_t", "im_t", "re_r", "im_r"]
    if with_paths:
        if p.g0 != p.g1:
            raise ConfigurationError(
                f"path decomposition columns need g0 = g1, got "
                f"g0={p.g0}, g1={p.g1}")
        amps = decompose(k, p)
        cols += [np.broadcast_to(np.asarray(a), k.shape)
                 for a in (amps.t_B.real, amps.t_B.imag,
                           amps.t_D.real, amps.t_D.imag)]
        names += ["re_tB", "im_tB", "re_tD", "im_tD"]

    meta = _param_meta(p)
    meta.update(axis=spec.axis, start=spec.start, stop=spec.stop,
                n_points=spec.n_points, decompose=with_paths)
    return SpectrumGrid(columns=tuple(names),
                        rows=np.column_stack(cols), meta=meta)


def run_grid(spec: GridSpec) -> SpectrumGrid:
    """Tabulate T over the (g, E) grid in long format (g outer, E inner)."""
    base = spec.params
    energies = _clip_energy_axis(spec.e_start, spec.e_stop, base,
                                 spec.e_points)
    k = momentum_from_energy(energies, base.lattice)
    g_values = np.linspace(spec.g_start, spec.g_stop, spec.g_points)
    blocks = []
    for g in g_values:
        p = ModelParams.create(base.omega_c, base.xi, base.omega, g, g)
        t = transmission_amplitude(k, p)
        blocks.append(np.column_stack(
            [np.full_like(energies, g), energies, np.abs(t) ** 2]))
    meta = _param_meta(base)
    del meta["g0"], meta["g1"]
    meta.update(e_start=spec.e_start, e_stop=spec.e_stop,
                e_points=spec.e_points, g_start=spec.g_start,
                g_stop=spec.g_stop, g_points=spec.g_points)
    return SpectrumGrid(columns=("g", "E", "T"),
                        rows=np.concatenate(blocks), meta=meta)
