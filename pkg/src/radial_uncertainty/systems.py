"""Uniform access to the three radial problems.

Each system is described by a :class:`System` record so that the oracle
harness, the CLI and the estimator wrapper can treat them alike. Radii
handed to ``wavefunction``/``derivative`` are in the system's natural
length unit, which for hydrogen means ``a0/Z``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import hydrogenic, isw, sho
from .observables import InvalidStateError
from .specfun import spherical_bessel_j

SYSTEM_NAMES = ("hydrogen", "isw", "sho")


@dataclass(frozen=True)
class QuantumState:
    """A validated ``(system, n, ell)`` triple; ``Z`` only matters for hydrogen."""

    system: str
    n: int
    ell: int
    Z: int = 1

    def __post_init__(self):
        if self.system not in SYSTEM_NAMES:
            raise InvalidStateError(f"unknown system {self.system!r}; expected one of {SYSTEM_NAMES}")
        if self.system != "hydrogen" and self.Z != 1:
            raise InvalidStateError(f"Z applies to hydrogen only, got Z={self.Z} for {self.system}")
        self.spec  # validates the quantum numbers

    @property
    def spec(self):
        if self.system == "hydrogen":
            return hydrogenic.HydrogenicSpec(self.Z, self.n, self.ell)
        if self.system == "isw":
            return isw.IswSpec(self.n, self.ell)
        return sho.ShoSpec(self.n, self.ell)

    @property
    def label(self):
        z = f",Z={self.Z}" if self.system == "hydrogen" and self.Z != 1 else ""
        return f"{self.system}({self.n},{self.ell}{z})"


@dataclass(frozen=True)
class System:
    name: str
    units: dict
    closed_form: Callable
    # natural-unit radius -> R and dR/dr, no domain check (stencils may poke past R for the well)
    wavefunction: Callable
    derivative: Callable
    finite_extent: float | None  # outer radius, or None for [0, inf)
    length_scale: Callable  # state -> typical radius, used to size maps and steps


def _hydrogen_wf(state):
    spec = state.spec
    # r in a0/Z -> a0; R picks up Z^(3/2) which we divide out to stay in natural units
    scale = state.Z ** -1.5

    def f(r):
        return scale * hydrogenic.radial_wavefunction(spec, np.asarray(r, dtype=float) / state.Z)

    def df(r):
        return scale / state.Z * hydrogenic.radial_derivative(spec, np.asarray(r, dtype=float) / state.Z)

    return f, df


def _isw_wf(state):
    spec = state.spec
    z = spec.z
    norm = isw.normalization_constant(spec)
    at_origin = 1.0 if spec.ell == 0 else 0.0

    def f(r):
        r = np.asarray(r, dtype=float)
        safe = np.where(r > 0, r, 1.0)
        out = norm * np.where(r > 0, spherical_bessel_j(spec.ell, z * safe), at_origin)
        return out if out.ndim else float(out)

    def df(r):
        return isw.radial_derivative(spec, r)

    return f, df


def _sho_wf(state):
    spec = state.spec
    return (lambda r: sho.radial_wavefunction(spec, r)), (lambda r: sho.radial_derivative(spec, r))


SYSTEMS = {
    "hydrogen": System(
        "hydrogen", hydrogenic.UNITS,
        lambda st: hydrogenic.observables(st.spec),
        lambda st: _hydrogen_wf(st)[0], lambda st: _hydrogen_wf(st)[1],
        None, lambda st: float(st.n * st.n),
    ),
    "isw": System(
        "isw", isw.UNITS,
        lambda st: isw.observables(st.spec),
        lambda st: _isw_wf(st)[0], lambda st: _isw_wf(st)[1],
        1.0, lambda st: 1.0 / (st.n + st.ell),
    ),
    "sho": System(
        "sho", sho.UNITS,
        lambda st: sho.observables(st.spec),
        lambda st: _sho_wf(st)[0], lambda st: _sho_wf(st)[1],
        None, lambda st: math.sqrt(st.n + 1.5),
    ),
}


def get_system(name):
    try:
        return SYSTEMS[name]
    except KeyError:
        raise InvalidStateError(f"unknown system {name!r}; expected one of {SYSTEM_NAMES}") from None


def closed_form(state):
    return get_system(state.system).closed_form(state)


def scan_states(system, max_n, Z=1, max_ell=None):
    """States of one system in table order, up to ``max_n``."""
    if system == "hydrogen":
        return [QuantumState("hydrogen", s.n, s.ell, Z) for s in hydrogenic.states(max_n, Z)]
    if system == "isw":
        return [QuantumState("isw", s.n, s.ell) for s in isw.states(max_n, max_ell)]
    if system == "sho":
        return [QuantumState("sho", s.n, s.ell) for s in sho.states(max_n)]
    raise InvalidStateError(f"unknown system {system!r}")
