"""One-electron atoms: H, He+, Li2+, Be3+.

Radial lengths passed to the wavefunction helpers are in Bohr radii
``a0``; the observables are returned in ``a0/Z`` (lengths) and
``Z hbar / a0`` (momenta), the units in which they no longer depend on Z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import constants
from .observables import InvalidStateError, RadialObservables
from .specfun import assoc_laguerre, assoc_laguerre_deriv

ORBITAL_LETTERS = "spdfghiklmnoqrtuv"

UNITS = {
    "mean_r": "a0/Z",
    "mean_r2": "(a0/Z)^2",
    "mean_inv_r": "Z/a0",
    "mean_inv_r2": "(Z/a0)^2",
    "delta_r": "a0/Z",
    "mean_pr": "Z*hbar/a0",
    "mean_pr2": "(Z*hbar/a0)^2",
    "delta_pr": "Z*hbar/a0",
    "sigma_r": "1",
    "product": "hbar",
}


@dataclass(frozen=True)
class HydrogenicSpec:
    Z: int
    n: int
    ell: int

    def __post_init__(self):
        if int(self.Z) != self.Z or self.Z < 1:
            raise InvalidStateError(f"Z must be a positive integer, got {self.Z!r}")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidStateError(f"n must be an integer >= 1, got {self.n!r}")
        if int(self.ell) != self.ell or not 0 <= self.ell <= self.n - 1:
            raise InvalidStateError(f"ell must satisfy 0 <= ell <= n-1 = {self.n - 1}, got {self.ell!r}")

    @property
    def orbital(self):
        return f"{self.n}{ORBITAL_LETTERS[self.ell]}"


def states(max_n, Z=1):
    """All (n, ell) states with ``n <= max_n`` in table order."""
    return [HydrogenicSpec(Z, n, ell) for n in range(1, max_n + 1) for ell in range(n)]


def _laguerre_args(spec):
    return spec.n - spec.ell - 1, 2 * spec.ell + 1


def normalization_constant(spec):
    """``N_nl`` in ``(1/a0)^(3/2)``."""
    n, ell, Z = spec.n, spec.ell, spec.Z
    return math.sqrt((2.0 * Z / n) ** 3 * math.factorial(n - ell - 1)
                     / (2.0 * n * math.factorial(n + ell)))


def radial_wavefunction(spec, r):
    """``R_nl(r)`` with ``r`` in Bohr radii."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    b, a = _laguerre_args(spec)
    rho = 2.0 * spec.Z * r / spec.n
    out = normalization_constant(spec) * np.exp(-rho / 2) * rho**spec.ell * assoc_laguerre(b, rho, a)
    return out if out.ndim else float(out)


def radial_derivative(spec, r):
    """Analytic ``dR_nl/dr`` for ``r > 0`` (Bohr radii)."""
    r = np.asarray(r, dtype=float)
    b, a = _laguerre_args(spec)
    k = 2.0 * spec.Z / spec.n
    rho = k * r
    lag = assoc_laguerre(b, rho, a)
    dlag = assoc_laguerre_deriv(b, rho, a)
    ell = spec.ell
    shape = np.exp(-rho / 2) * (ell * rho ** (ell - 1.0) * lag - 0.5 * rho**ell * lag + rho**ell * dlag)
    out = normalization_constant(spec) * k * shape
    return out if out.ndim else float(out)


def observables(spec):
    """Closed-form radial observables of a hydrogenic state."""
    n, ell = spec.n, spec.ell
    L = ell * (ell + 1)
    mean_r = 0.5 * (3 * n * n - L)
    mean_r2 = 0.5 * n * n * (5 * n * n - 3 * L + 1)
    spread = math.sqrt(n * n * (n * n + 2) - L * L)
    centrifugal = 1.0 - 2.0 * L / (n * (2 * ell + 1))
    delta_pr = math.sqrt(centrifugal) / n
    delta_r = 0.5 * spread
    return RadialObservables(
        mean_r=mean_r,
        mean_r2=mean_r2,
        mean_inv_r=1.0 / n**2,
        mean_inv_r2=2.0 / ((2 * ell + 1) * n**3),
        delta_r=delta_r,
        mean_pr=0.0,
        mean_pr2=centrifugal / n**2,
        delta_pr=delta_pr,
        sigma_r=spread / (3 * n * n - L),
        product=spread / (2.0 * n) * math.sqrt(centrifugal),
    )


def stretched_state_product(n):
    """Uncertainty product for ``ell = n - 1``, in units of hbar."""
    return 0.5 * math.sqrt((2 * n + 1) / (2 * n - 1))


@dataclass(frozen=True)
class Energy:
    joules: float
    ev: float


def energy(spec, mu=None):
    """Bound-state energy ``-Z^2 hbar^2 / (2 mu n^2 a0^2)``.

    ``a0 = hbar^2/(mu k e^2)`` is built from the same reduced mass. ``mu``
    defaults to the tabulated entry for ``spec.Z``.
    """
    if mu is None:
        mu = constants.reduced_mass(spec.Z)
    if mu.Z != spec.Z:
        raise ValueError(f"reduced mass entry {mu.system} has Z={mu.Z}, state has Z={spec.Z}")
    a0 = constants.HBAR**2 / (mu.mu * constants.COULOMB_K * constants.ELEMENTARY_CHARGE**2)
    joules = -(spec.Z**2) * constants.HBAR**2 / (2.0 * mu.mu * spec.n**2 * a0**2)
    return Energy(joules, joules / constants.EV)


def most_probable_radius_ground(Z=1):
    """``a0/Z``, in Bohr radii."""
    if Z < 1:
        raise ValueError("Z must be >= 1")
    return 1.0 / Z


def degeneracy(n, spin=False):
    """Number of (ell, m) states in shell ``n``; doubled with spin."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = sum(2 * ell + 1 for ell in range(n))
    return 2 * d if spin else d
