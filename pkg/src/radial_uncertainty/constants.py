"""Physical constants (SI) and one-electron reduced masses.

Fundamental constants are the CODATA 2018 recommended values. They are
only used for energies in joules/eV; all observables are computed in
natural units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HBAR = 1.054571817e-34  # J s, CODATA 2018 (exact via h)
ELEMENTARY_CHARGE = 1.602176634e-19  # C, exact since 2019 SI
EPSILON_0 = 8.8541878128e-12  # F/m, CODATA 2018
ELECTRON_MASS = 9.1093837015e-31  # kg, CODATA 2018
BOHR_RADIUS = 5.29177210903e-11  # m, CODATA 2018 (infinite nuclear mass)
COULOMB_K = 1.0 / (4.0 * math.pi * EPSILON_0)
EV = ELEMENTARY_CHARGE  # J per eV


@dataclass(frozen=True)
class ReducedMassEntry:
    system: str
    Z: int
    mu: float  # kg


REDUCED_MASSES = (
    ReducedMassEntry("H", 1, 9.104878e-31),
    ReducedMassEntry("He+", 2, 9.108597e-31),
    ReducedMassEntry("Li2+", 3, 9.109010e-31),
    ReducedMassEntry("Be3+", 4, 9.109272e-31),
)


def reduced_mass(Z):
    """Tabulated reduced mass entry for atomic number ``Z`` (1 to 4)."""
    for entry in REDUCED_MASSES:
        if entry.Z == Z:
            return entry
    raise KeyError(f"no reduced mass tabulated for Z={Z}")
