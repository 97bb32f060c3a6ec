"""Particle in an infinite spherical well of radius R.

Natural units throughout: R = 1, lengths in R, momenta in hbar/R,
energies in hbar^2/(2 m R^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .observables import InvalidStateError, RadialObservables
from .quadrature import integrate_finite
from .specfun import (
    Hyp2F3Params,
    gamma_fn,
    hyp2f3,
    spherical_bessel_j,
    spherical_bessel_j_deriv,
    spherical_bessel_zero,
)

MAX_ELL = 10
MOMENT_REL_TOL = 1e-13

UNITS = {
    "mean_r": "R",
    "mean_r2": "R^2",
    "mean_inv_r": "1/R",
    "mean_inv_r2": "1/R^2",
    "delta_r": "R",
    "mean_pr": "hbar/R",
    "mean_pr2": "(hbar/R)^2",
    "delta_pr": "hbar/R",
    "sigma_r": "1",
    "product": "hbar",
}


@dataclass(frozen=True)
class IswSpec:
    n: int
    ell: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidStateError(f"n (zero index) must be an integer >= 1, got {self.n!r}")
        if int(self.ell) != self.ell or not 0 <= self.ell <= MAX_ELL:
            raise InvalidStateError(f"ell must be an integer in [0, {MAX_ELL}], got {self.ell!r}")

    @property
    def z(self):
        return spherical_bessel_zero(self.ell, self.n).value


@dataclass(frozen=True)
class ShapeFactors:
    A: float
    B: float
    D: float


def states(max_n=5, max_ell=None):
    """States ordered by n then ell; ``ell < n`` unless ``max_ell`` is given."""
    out = []
    for n in range(1, max_n + 1):
        top = n - 1 if max_ell is None else max_ell
        out.extend(IswSpec(n, ell) for ell in range(top + 1))
    return out


def energy(spec):
    return spec.z**2


def c_coefficient(spec):
    """``C_nl = 1/|j_{l+1}(z_nl)|``."""
    return 1.0 / abs(spherical_bessel_j(spec.ell + 1, spec.z))


def normalization_constant(spec):
    return math.sqrt(2.0) * c_coefficient(spec)


def _j_with_origin(ell, x):
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    at_origin = 1.0 if ell == 0 else 0.0
    return np.where(x > 0, spherical_bessel_j(ell, safe), at_origin)


def radial_wavefunction(spec, r):
    """``R_nl(r)`` on ``0 <= r <= 1``."""
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)):
        raise ValueError("ISW wavefunction is evaluated only inside the well, 0 <= r <= R")
    out = normalization_constant(spec) * _j_with_origin(spec.ell, spec.z * r)
    return out if out.ndim else float(out)


def radial_derivative(spec, r):
    """Analytic ``dR_nl/dr`` on ``0 < r <= 1``."""
    r = np.asarray(r, dtype=float)
    z = spec.z
    out = normalization_constant(spec) * z * spherical_bessel_j_deriv(spec.ell, z * r)
    return out if np.ndim(out) else float(out)


def bessel_moment(ell, x, power, rel_tol=MOMENT_REL_TOL):
    """``int_0^x rho^power j_ell(rho)^2 d rho`` by adaptive quadrature."""
    def integrand(rho):
        return rho**power * spherical_bessel_j(ell, rho) ** 2

    return integrate_finite(integrand, 0.0, x, rel_tol=rel_tol, abs_tol=0.0).value


def indefinite_square_integral(ell, x):
    """``int_0^x t^2 j_ell(t)^2 dt = x^3/2 (j_l^2 - j_{l-1} j_{l+1})``."""
    x = np.asarray(x, dtype=float)
    if ell == 0:
        j_prev = np.cos(x) / x  # j_{-1}
    else:
        j_prev = spherical_bessel_j(ell - 1, x)
    out = 0.5 * x**3 * (spherical_bessel_j(ell, x) ** 2 - j_prev * spherical_bessel_j(ell + 1, x))
    return out if np.ndim(out) else float(out)


def shape_factors(spec):
    """A, B and D from quadrature of the elementary Bessel integrands."""
    ell, z = spec.ell, spec.z
    jn2 = spherical_bessel_j(ell + 1, z) ** 2
    A = 2.0 / (z**4 * jn2) * bessel_moment(ell, z, 3)
    B = 2.0 / (z**5 * jn2) * bessel_moment(ell, z, 4)
    if ell == 0:
        D = 0.0
    else:
        D = 2.0 * ell * (ell + 1) / (z**3 * jn2) * bessel_moment(ell, z, 0)
    return ShapeFactors(A, B, D)


def shape_factors_series(spec, min_digits=10.0):
    """A, B and D through the closed forms in 2F3.

    Raises :class:`~radial_uncertainty.specfun.PrecisionLossError` where
    the alternating series cannot keep ``min_digits`` digits, which
    happens for all but the lowest zeros.
    """
    ell, z = spec.ell, spec.z
    jn2 = spherical_bessel_j(ell + 1, z) ** 2
    x = -(z**2)

    fa = hyp2f3(Hyp2F3Params(ell + 1, ell + 2, ell + 1.5, ell + 3, 2 * ell + 2, x), min_digits=min_digits)
    A = (z ** (2 * ell) / (2.0 * jn2) * math.sqrt(math.pi) * gamma_fn(ell + 1) * gamma_fn(ell + 2)
         / (gamma_fn(ell + 1.5) * gamma_fn(ell + 3) * gamma_fn(2 * ell + 2)) * fa)

    fb = hyp2f3(Hyp2F3Params(ell + 1, ell + 2.5, ell + 1.5, ell + 3.5, 2 * ell + 2, x), min_digits=min_digits)
    B = (2.0 ** (-3 - 2 * ell) * z ** (2 * ell) / jn2 * (3 + 2 * ell) * math.pi
         / (gamma_fn(ell + 1.5) * gamma_fn(ell + 3.5)) * fb)

    if ell == 0:
        D = 0.0
    else:
        fd = hyp2f3(Hyp2F3Params(ell + 0.5, ell + 1, ell + 1.5, ell + 1.5, 2 * ell + 2, x), min_digits=min_digits)
        # the integral of j_l^2 carries z^(2l+1), so D carries z^(2l-2)
        D = (2.0 ** (1 - 2 * ell) * z ** (2 * ell - 2) / jn2 * math.pi * ell * (ell + 1)
             / ((2 * ell + 1) ** 3 * gamma_fn(ell + 0.5) ** 2) * fd)
    return ShapeFactors(A, B, D)


def observables(spec):
    """Radial observables from the shape factors (R = 1, hbar = 1)."""
    ell, z = spec.ell, spec.z
    sf = shape_factors(spec)
    jn2 = spherical_bessel_j(ell + 1, z) ** 2
    delta_r = math.sqrt(sf.B - sf.A**2)
    root = math.sqrt(1.0 - sf.D)
    mean_inv_r = 2.0 / (z**2 * jn2) * bessel_moment(ell, z, 1)
    mean_inv_r2 = 2.0 / (z * jn2) * bessel_moment(ell, z, 0)
    return RadialObservables(
        mean_r=sf.A,
        mean_r2=sf.B,
        mean_inv_r=mean_inv_r,
        mean_inv_r2=mean_inv_r2,
        delta_r=delta_r,
        mean_pr=0.0,
        mean_pr2=z**2 * (1.0 - sf.D),
        delta_pr=z * root,
        sigma_r=delta_r / sf.A,
        product=z * delta_r * root,
    )


def most_probable_radius_ground():
    """R/2, in units of R."""
    return 0.5
