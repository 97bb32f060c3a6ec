"""Isotropic three-dimensional harmonic oscillator.

Natural units: alpha = m omega / hbar = 1, so lengths are in
sqrt(hbar/m omega), momenta in sqrt(m hbar omega) and energies in
hbar omega.

Every Laguerre-weighted integral met here has the form
``int_0^inf eta^s e^-eta L_b L_c d eta`` with ``s`` integer or
half-integer, so expanding the polynomials gives an exact value: a
rational number, possibly times sqrt(pi).  :func:`exact_moments` does that
with :class:`fractions.Fraction`; the quadrature route is kept alongside
as an independent check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .observables import InvalidStateError, RadialObservables
from .quadrature import integrate_semi_infinite
from .specfun import assoc_laguerre, assoc_laguerre_deriv, gamma_fn

UNITS = {
    "mean_r": "sqrt(hbar/m/omega)",
    "mean_r2": "hbar/m/omega",
    "mean_inv_r": "sqrt(m*omega/hbar)",
    "mean_inv_r2": "m*omega/hbar",
    "delta_r": "sqrt(hbar/m/omega)",
    "mean_pr": "sqrt(m*hbar*omega)",
    "mean_pr2": "m*hbar*omega",
    "delta_pr": "sqrt(m*hbar*omega)",
    "sigma_r": "1",
    "product": "hbar",
}


@dataclass(frozen=True)
class ShoSpec:
    n: int
    ell: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise InvalidStateError(f"n must be an integer >= 0, got {self.n!r}")
        if int(self.ell) != self.ell or self.ell < 0:
            raise InvalidStateError(f"ell must be an integer >= 0, got {self.ell!r}")
        if self.ell > self.n or (self.n - self.ell) % 2:
            raise InvalidStateError(
                f"ell={self.ell} is not allowed for n={self.n}: n - ell must be even and "
                f"non-negative (allowed: {allowed_ell(self.n)})"
            )

    @property
    def p(self):
        return (self.n + self.ell) // 2

    @property
    def q(self):
        """Radial quantum number, also the Laguerre degree."""
        return (self.n - self.ell) // 2

    @property
    def a(self):
        return self.ell + 0.5


def allowed_ell(n):
    """``[n, n-2, ..., 0 or 1]``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(range(n, -1, -2))


def states(max_n=6):
    """States ordered by n, then increasing ell."""
    return [ShoSpec(n, ell) for n in range(max_n + 1) for ell in sorted(allowed_ell(n))]


def energy(spec):
    return spec.n + 1.5


def normalization_constant(spec, alpha=1.0):
    """``N_nl = sqrt(2 alpha^(3/2) q! / Gamma(p + 3/2))``."""
    return math.sqrt(2.0 * alpha**1.5 * math.factorial(spec.q) / gamma_fn(spec.p + 1.5))


def radial_wavefunction(spec, r, alpha=1.0):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    rho = math.sqrt(alpha) * r
    out = (normalization_constant(spec, alpha) * rho**spec.ell * np.exp(-(rho**2) / 2)
           * assoc_laguerre(spec.q, rho**2, spec.a))
    return out if out.ndim else float(out)


def radial_derivative(spec, r, alpha=1.0):
    """Analytic ``dR/dr`` for ``r > 0``."""
    r = np.asarray(r, dtype=float)
    sa = math.sqrt(alpha)
    rho = sa * r
    eta = rho**2
    ell = spec.ell
    lag = assoc_laguerre(spec.q, eta, spec.a)
    dlag = assoc_laguerre_deriv(spec.q, eta, spec.a)
    shape = np.exp(-eta / 2) * (ell * rho ** (ell - 1.0) * lag - rho ** (ell + 1) * lag
                                + 2.0 * rho ** (ell + 1) * dlag)
    out = normalization_constant(spec, alpha) * sa * shape
    return out if out.ndim else float(out)


# ---------------------------------------------------------------------------
# Exact Laguerre moments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiRational:
    """``coef * pi**(half_powers / 2)``."""

    coef: Fraction
    half_powers: int = 0

    def __float__(self):
        return float(self.coef) * math.pi ** (self.half_powers / 2)


def _gamma_exact(x):
    """Gamma at a positive integer or half-integer as a :class:`PiRational`."""
    x = Fraction(x)
    if x.denominator == 1:
        return PiRational(Fraction(math.factorial(int(x) - 1)))
    if x.denominator != 2 or x <= 0:
        raise ValueError(f"exact gamma needs a positive (half-)integer, got {x}")
    r = int(x - Fraction(1, 2))
    return PiRational(Fraction(math.factorial(2 * r), 4**r * math.factorial(r)), 1)


def laguerre_coefficients(b, a):
    """Monomial coefficients of ``L^a_b`` (``a`` rational), lowest first."""
    a = Fraction(a)
    coeffs = []
    for i in range(b + 1):
        binom = Fraction(1)
        for j in range(i + 1, b + 1):
            binom *= a + j
        binom /= math.factorial(b - i)
        coeffs.append((-1) ** i * binom / math.factorial(i))
    return coeffs


def _weighted_moment(s, b1, b2, a):
    """Exact ``int_0^inf eta^s e^-eta L^a_b1 L^a_b2 d eta``."""
    s = Fraction(s)
    ca = laguerre_coefficients(b1, a)
    cb = laguerre_coefficients(b2, a)
    total = Fraction(0)
    half = None
    for i, ci in enumerate(ca):
        for j, cj in enumerate(cb):
            g = _gamma_exact(s + i + j + 1)
            half = g.half_powers
            total += ci * cj * g.coef
    return PiRational(total, half)


@dataclass(frozen=True)
class ExactMoments:
    """Exact integrals for one oscillator state.

    ``c_tilde`` is ``q!/Gamma(p+3/2)``; ``norm`` the normalization integral;
    ``i1``, ``i7`` and ``inv_r`` carry the weights eta^(l+1), eta^(l-1/2)
    and eta^l; ``i4``, ``i5``, ``i6`` are the three pieces of the radial
    momentum mean.
    """

    c_tilde: PiRational
    norm: PiRational
    i1: PiRational
    i7: PiRational
    inv_r: PiRational
    i4: Fraction
    i5: Fraction
    i6: Fraction


def exact_moments(spec):
    ell, b = spec.ell, spec.q
    a = Fraction(2 * ell + 1, 2)
    g = _gamma_exact(Fraction(2 * spec.p + 3, 2))
    c_tilde = PiRational(Fraction(math.factorial(b)) / g.coef, -g.half_powers)
    plain = _weighted_moment(ell, b, b, a)
    i1 = _weighted_moment(ell + 1, b, b, a)
    i6 = Fraction(0) if b == 0 else -(b + a) * _weighted_moment(ell, b, b - 1, a).coef
    return ExactMoments(
        c_tilde=c_tilde,
        norm=_weighted_moment(a, b, b, a),
        i1=i1,
        i7=_weighted_moment(Fraction(2 * ell - 1, 2), b, b, a),
        inv_r=plain,
        i4=(Fraction(ell, 2) + b + Fraction(1, 2)) * plain.coef,
        i5=-Fraction(1, 2) * i1.coef,
        i6=i6,
    )


@dataclass(frozen=True)
class ExactObservables:
    """Closed forms with ``mean_r = mean_r_over * / sqrt(pi)`` and
    ``delta_r^2 = mean_r2 - mean_r_sq_pi / pi``; the rest are rational."""

    mean_r_coef: Fraction  # times 1/sqrt(pi)
    mean_r2: Fraction
    mean_inv_r_coef: Fraction  # times 1/sqrt(pi)
    mean_inv_r2: Fraction
    mean_pr2: Fraction

    @property
    def delta_r_radicand(self):
        """(rational part, coefficient of 1/pi)."""
        return self.mean_r2, -self.mean_r_coef**2


def exact_observables(spec):
    m = exact_moments(spec)
    # c_tilde ~ 1/sqrt(pi); i7 ~ sqrt(pi); i1 and inv_r rational
    mean_r = m.c_tilde.coef * m.i1.coef
    mean_inv_r = m.c_tilde.coef * m.inv_r.coef
    mean_inv_r2 = m.c_tilde.coef * m.i7.coef
    e = Fraction(2 * spec.n + 3, 2)
    return ExactObservables(
        mean_r_coef=mean_r,
        mean_r2=e,
        mean_inv_r_coef=mean_inv_r,
        mean_inv_r2=mean_inv_r2,
        mean_pr2=e - spec.ell * (spec.ell + 1) * mean_inv_r2,
    )


def _frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def exact_strings(spec):
    """Human-readable exact forms of the Table-style entries."""
    m = exact_moments(spec)
    ex = exact_observables(spec)

    def over_sqrt_pi(c):
        return f"{c.numerator}/sqrt(pi)" if c.denominator == 1 else f"{c.numerator}/({c.denominator}*sqrt(pi))"

    def times_sqrt_pi(c):
        if c == 1:
            return "sqrt(pi)"
        if c.denominator == 1:
            return f"{c.numerator}*sqrt(pi)"
        if c.numerator == 1:
            return f"sqrt(pi)/{c.denominator}"
        return f"{c.numerator}*sqrt(pi)/{c.denominator}"

    sq = ex.mean_r_coef**2
    return {
        "c_tilde": over_sqrt_pi(m.c_tilde.coef),
        "i1": _frac(m.i1.coef),
        "i7": times_sqrt_pi(m.i7.coef),
        "mean_r": over_sqrt_pi(ex.mean_r_coef),
        "delta_r": f"sqrt({_frac(ex.mean_r2)} - {sq.numerator}/({sq.denominator}*pi))"
        if sq.denominator != 1 else f"sqrt({_frac(ex.mean_r2)} - {sq.numerator}/pi)",
        "delta_pr": f"sqrt({_frac(ex.mean_pr2)})",
        "i4": _frac(m.i4),
        "i5": _frac(m.i5),
        "i6": _frac(m.i6),
    }


# ---------------------------------------------------------------------------
# Integrals in floating point
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShoIntegrals:
    c_tilde: float
    i1: float
    i7: float


def tabulated_i1(n, x):
    """Published closed forms of the eta^(l+1) integral for ``ell = n - 2x``,
    ``x = 0..3``; ``None`` beyond that."""
    if x == 0:
        return gamma_fn(2 + n)
    if x == 1:
        return (0.25 + n) * gamma_fn(n)
    if x == 2:
        return (33 + 16 * n * (-5 + 2 * n)) / 64 * gamma_fn(n - 2)
    if x == 3:
        return (-1965 + 4 * n * (667 + 8 * n * (-33 + 4 * n))) / 768 * gamma_fn(n - 4)
    return None


def _laguerre_sq_integral(spec, power, rel_tol=1e-12):
    b, a = spec.q, spec.a

    def integrand(eta):
        return eta**power * np.exp(-eta) * assoc_laguerre(b, eta, a) ** 2

    return integrate_semi_infinite(integrand, rel_tol=rel_tol, scale=spec.n + 1.5).value


def sho_integrals(spec, method="closed"):
    """``(C~, I~1, I~7)`` for a state.

    ``method="closed"`` uses gamma arithmetic for ``C~``, the published
    forms of ``I~1`` where they exist, and the exact expansion otherwise.
    ``method="quadrature"`` integrates ``I~1`` and ``I~7`` numerically.
    """
    c_tilde = math.factorial(spec.q) / gamma_fn(spec.p + 1.5)
    if method == "closed":
        m = exact_moments(spec)
        i1 = tabulated_i1(spec.n, spec.q)
        if i1 is None:
            i1 = float(m.i1)
        return ShoIntegrals(c_tilde, i1, float(m.i7))
    if method == "quadrature":
        return ShoIntegrals(
            c_tilde,
            _laguerre_sq_integral(spec, spec.ell + 1),
            _laguerre_sq_integral(spec, spec.ell - 0.5),
        )
    raise ValueError(f"unknown method {method!r}")


def momentum_pieces(spec, method="exact"):
    """``(I~4, I~5, I~6)``, whose sum is the radial momentum mean up to a
    factor ``-i hbar N^2/alpha``."""
    if method == "exact":
        m = exact_moments(spec)
        return float(m.i4), float(m.i5), float(m.i6)
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")
    b, a, ell = spec.q, spec.a, spec.ell
    scale = spec.n + 1.5

    def weighted(power, other):
        def f(eta):
            return eta**power * np.exp(-eta) * assoc_laguerre(b, eta, a) * assoc_laguerre(other, eta, a)
        return integrate_semi_infinite(f, rel_tol=1e-12, scale=scale).value

    plain = weighted(ell, b)
    i4 = (ell / 2 + b + 0.5) * plain
    i5 = -0.5 * weighted(ell + 1, b)
    i6 = 0.0 if b == 0 else -(b + a) * weighted(ell, b - 1)
    return i4, i5, i6


def observables(spec):
    """Closed-form observables from the exact moments."""
    ex = exact_observables(spec)
    sqrt_pi = math.sqrt(math.pi)
    mean_r = float(ex.mean_r_coef) / sqrt_pi
    mean_r2 = float(ex.mean_r2)
    # rational radicand minus c^2/pi, formed once to limit cancellation
    delta_r = math.sqrt(float(ex.mean_r2) - float(ex.mean_r_coef**2) / math.pi)
    delta_pr = math.sqrt(float(ex.mean_pr2))
    return RadialObservables(
        mean_r=mean_r,
        mean_r2=mean_r2,
        mean_inv_r=float(ex.mean_inv_r_coef) / sqrt_pi,
        mean_inv_r2=float(ex.mean_inv_r2),
        delta_r=delta_r,
        mean_pr=0.0,
        mean_pr2=float(ex.mean_pr2),
        delta_pr=delta_pr,
        sigma_r=delta_r / mean_r,
        product=delta_r * delta_pr,
    )


def degeneracy_parity(n):
    """``(sum over allowed ell of 2l+1, (-1)^n)``."""
    d = sum(2 * ell + 1 for ell in allowed_ell(n))
    return d, (-1) ** n


def cartesian_states(n):
    """All ``(nx, ny, nz)`` with ``nx + ny + nz = n``."""
    return [t for t in itertools.product(range(n + 1), repeat=3) if sum(t) == n]


def most_probable_radius_ground(alpha=1.0):
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return 1.0 / math.sqrt(alpha)
