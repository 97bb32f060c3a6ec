"""Plot-ready series for the observable-versus-quantum-number figures and
the ground-state profiles. Nothing is drawn; each family returns columns
that an external plotting tool can consume.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .observables import FIELDS
from .systems import QuantumState, closed_form, get_system, scan_states

FAMILIES = ("vs-n", "vs-ell", "per-orbital", "ground-state-profile")
PROFILE_EXTENT = {"hydrogen": 10.0, "isw": 1.0, "sho": 4.0}
PROFILE_UNITS = {
    "hydrogen": ("a0/Z", "(Z/a0)^(3/2)", "Z/a0"),
    "isw": ("R", "R^(-3/2)", "1/R"),
    "sho": ("sqrt(hbar/m/omega)", "(m*omega/hbar)^(3/4)", "sqrt(m*omega/hbar)"),
}


@dataclass
class Series:
    family: str
    system: str
    names: list
    units: list
    rows: list


def _observable_columns(system):
    units = get_system(system).units
    return list(FIELDS), [units[f] for f in FIELDS]


def _obs_rows(states, leading):
    rows = []
    for st in states:
        obs = closed_form(st).as_dict()
        rows.append(leading(st) + [obs[f] for f in FIELDS])
    return rows


def vs_n(system, ell=0, max_n=6, Z=1):
    """Observables against n at fixed ell."""
    states = [s for s in scan_states(system, max_n, Z, max_ell=ell if system == "isw" else None)
              if s.ell == ell]
    names, units = _observable_columns(system)
    return Series("vs-n", system, ["n", "ell"] + names, ["", ""] + units,
                  _obs_rows(states, lambda s: [s.n, s.ell]))


def vs_ell(system, n, Z=1):
    """Observables against ell at fixed n."""
    if system == "isw":
        states = [QuantumState("isw", n, ell) for ell in range(n)]
    else:
        states = [s for s in scan_states(system, n, Z) if s.n == n]
    names, units = _observable_columns(system)
    return Series("vs-ell", system, ["n", "ell"] + names, ["", ""] + units,
                  _obs_rows(states, lambda s: [s.n, s.ell]))


def per_orbital(system, max_n=4, Z=1):
    """Every state up to ``max_n`` in table order, labelled."""
    states = scan_states(system, max_n, Z)
    names, units = _observable_columns(system)
    return Series("per-orbital", system, ["label", "n", "ell"] + names, ["", "", ""] + units,
                  _obs_rows(states, lambda s: [_label(s), s.n, s.ell]))


def _label(state):
    if state.system == "hydrogen":
        return state.spec.orbital
    return f"({state.n},{state.ell})"


def ground_state_profile(system, points=201, r_max=None, Z=1):
    """``R(r)`` and ``P(r) = r^2 R^2`` on a uniform grid, natural units."""
    n = 0 if system == "sho" else 1
    state = QuantumState(system, n, 0, Z)
    top = PROFILE_EXTENT[system] if r_max is None else r_max
    if system == "isw":
        top = min(top, 1.0)
    r = np.linspace(0.0, top, points)
    R = np.asarray(get_system(system).wavefunction(state)(r), dtype=float)
    P = r**2 * R**2
    rows = [[float(a), float(b), float(c)] for a, b, c in zip(r, R, P)]
    return Series("ground-state-profile", system, ["r", "R", "P"], list(PROFILE_UNITS[system]), rows)


def figure(family, system, ell=None, n=None, max_n=None, Z=1, points=201, r_max=None):
    if family == "vs-n":
        return vs_n(system, 0 if ell is None else ell, 6 if max_n is None else max_n, Z)
    if family == "vs-ell":
        return vs_ell(system, 4 if n is None else n, Z)
    if family == "per-orbital":
        return per_orbital(system, 4 if max_n is None else max_n, Z)
    if family == "ground-state-profile":
        return ground_state_profile(system, points, r_max, Z)
    raise ValueError(f"unknown figure family {family!r}; expected one of {FAMILIES}")
