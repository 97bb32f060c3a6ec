"""Special functions used by the three radial problems.

Gamma, associated Laguerre polynomials, spherical Bessel functions of the
first kind and their positive zeros, and the generalized hypergeometric
function 2F3.  Everything here is real-valued and works on floats or numpy
arrays unless noted otherwise.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BesselZero",
    "Hyp2F3Params",
    "LaguerreIndex",
    "PrecisionLossError",
    "assoc_laguerre",
    "assoc_laguerre_deriv",
    "gamma_fn",
    "hyp2f3",
    "spherical_bessel_j",
    "spherical_bessel_j_deriv",
    "spherical_bessel_zero",
    "spherical_bessel_zeros",
]

MAX_BESSEL_ORDER = 25
MAX_ZERO_INDEX = 50


class PrecisionLossError(ArithmeticError):
    """A series was summed but too few significant digits survived."""

    def __init__(self, message, value=float("nan"), digits=0.0):
        super().__init__(message)
        self.value = value
        self.digits = digits


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_PI = math.sqrt(math.pi)


def _lanczos(x):
    if x < 0.5:
        # reflection keeps the series in its accurate half-plane
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    x -= 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def gamma_fn(x):
    """Gamma function of a real argument.

    Integers and half-integers take exact factorial paths; everything
    else goes through a Lanczos approximation (about 15 digits).

    Raises
    ------
    ValueError
        At the poles ``x = 0, -1, -2, ...``.
    """
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise ValueError(f"gamma_fn has a pole at {x!r}")
    if x == math.floor(x):
        if x <= 171:
            return float(math.factorial(int(x) - 1))
        return math.inf
    twice = 2.0 * x
    if twice == math.floor(twice) and 0 < x <= 170:
        # Gamma(r + 1/2) = (2r)! sqrt(pi) / (4^r r!)
        r = int(x - 0.5)
        num = math.factorial(2 * r)
        den = 4**r * math.factorial(r)
        return num / den * _SQRT_PI
    return _lanczos(x)


# ---------------------------------------------------------------------------
# Associated Laguerre
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaguerreIndex:
    """Degree ``b`` and superscript ``a`` of :math:`L^a_b`."""

    b: int
    a: float

    def __post_init__(self):
        if int(self.b) != self.b or self.b < 0:
            raise ValueError(f"Laguerre degree must be a non-negative integer, got {self.b!r}")
        if self.a < 0:
            raise ValueError(f"Laguerre superscript must be >= 0, got {self.a!r}")


def _as_index(idx, a):
    if isinstance(idx, LaguerreIndex):
        return idx.b, idx.a
    return LaguerreIndex(int(idx), float(a)).b, float(a)


def assoc_laguerre(idx, x, a=None):
    """Associated Laguerre polynomial :math:`L^a_b(x)`.

    Normalized so that ``int_0^inf x^a e^-x L^a_b L^a_c dx`` equals
    ``Gamma(a+b+1)/b! * delta_bc``. Evaluated by the three-term recurrence
    in the degree.

    ``idx`` is a :class:`LaguerreIndex`, or the integer degree with the
    superscript given as ``a``.
    """
    b, a = _as_index(idx, a)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("assoc_laguerre is only defined here for x >= 0")
    prev = np.ones_like(x)
    if b == 0:
        return prev if prev.ndim else float(prev)
    cur = a + 1.0 - x
    for k in range(1, b):
        prev, cur = cur, ((2 * k + a + 1.0 - x) * cur - (k + a) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def assoc_laguerre_deriv(idx, x, a=None):
    """First derivative of :math:`L^a_b` for ``x > 0``.

    Uses ``x L' = b L^a_b - (b + a) L^a_{b-1}``.
    """
    b, a = _as_index(idx, a)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("assoc_laguerre_deriv requires x > 0")
    if b == 0:
        out = np.zeros_like(x)
    else:
        out = (b * assoc_laguerre(b, x, a) - (b + a) * assoc_laguerre(b - 1, x, a)) / x
    return out if np.ndim(out) else float(out)


# ---------------------------------------------------------------------------
# Spherical Bessel functions
# ---------------------------------------------------------------------------


def _miller_start(ell, z_max):
    return ell + 20 + int(math.ceil(z_max)) + int(math.ceil(math.sqrt(40.0 * (ell + 1))))


def _upward(ell, z):
    j0 = np.sin(z) / z
    if ell == 0:
        return j0
    j1 = np.sin(z) / z**2 - np.cos(z) / z
    for k in range(1, ell):
        j0, j1 = j1, (2 * k + 1) / z * j1 - j0
    return j1


def _downward(ell, z):
    # Miller: recur down from an arbitrary seed and normalize against
    # whichever of j0, j1 is larger in magnitude at each point.
    start = _miller_start(ell, float(np.max(z)))
    nxt = np.zeros_like(z)
    cur = np.full_like(z, 1e-300)
    target = np.zeros_like(z)
    j1_raw = np.zeros_like(z)
    for k in range(start, 0, -1):
        prev = (2 * k + 1) / z * cur - nxt
        nxt, cur = cur, prev
        # cur holds order k-1 now
        if k - 1 == ell:
            target = cur.copy()
        if k - 1 == 1:
            j1_raw = cur.copy()
        big = np.abs(cur) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            cur *= scale
            nxt *= scale
            target *= scale
            j1_raw *= scale
    j0_raw = cur
    j0 = np.sin(z) / z
    j1 = np.sin(z) / z**2 - np.cos(z) / z
    use_j0 = np.abs(j0) >= np.abs(j1)
    ref_true = np.where(use_j0, j0, j1)
    ref_raw = np.where(use_j0, j0_raw, j1_raw)
    if ell == 0:
        return j0
    return target * (ref_true / ref_raw)


def spherical_bessel_j(ell, z):
    """Spherical Bessel function :math:`j_\\ell(z)` for ``z > 0``.

    Upward recurrence from ``j_0, j_1`` where ``z >= ell``; Miller's
    downward recurrence below the turning point, where upward recurrence
    loses accuracy.
    """
    ell = int(ell)
    if ell < 0:
        raise ValueError("order must be non-negative")
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(z <= 0):
        raise ValueError("spherical_bessel_j requires z > 0")
    out = np.empty_like(z)
    up = z >= ell
    if np.any(up):
        out[up] = _upward(ell, z[up])
    if np.any(~up):
        out[~up] = _downward(ell, z[~up])
    return float(out[0]) if scalar else out


def spherical_bessel_j_deriv(ell, z):
    """:math:`j_\\ell'(z) = (\\ell/z) j_\\ell(z) - j_{\\ell+1}(z)`."""
    z = np.asarray(z, dtype=float)
    out = ell / z * spherical_bessel_j(ell, z) - spherical_bessel_j(ell + 1, z)
    return out if np.ndim(out) else float(out)


@dataclass(frozen=True)
class BesselZero:
    ell: int
    n: int
    value: float


def _bisect_all(ell, lo, hi):
    """Vectorized bisection of ``j_ell`` on every bracket [lo_i, hi_i]."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    flo = spherical_bessel_j(ell, lo)
    fhi = spherical_bessel_j(ell, hi)
    if np.any(np.sign(flo) == np.sign(fhi)):
        bad = np.flatnonzero(np.sign(flo) == np.sign(fhi))
        raise RuntimeError(f"bracket for j_{ell} zero #{bad[0] + 1} does not straddle a sign change")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        done = (mid <= lo) | (mid >= hi)
        if np.all(done):
            break
        fmid = spherical_bessel_j(ell, mid)
        left = np.sign(fmid) == np.sign(flo)
        lo = np.where(left & ~done, mid, lo)
        flo = np.where(left & ~done, fmid, flo)
        hi = np.where(~left & ~done, mid, hi)
    # finish on whichever endpoint has the smaller residual
    return np.where(
        np.abs(spherical_bessel_j(ell, lo)) <= np.abs(spherical_bessel_j(ell, hi)), lo, hi
    )


@functools.lru_cache(maxsize=None)
def _zero_table(ell, count):
    # zeros of j_{k} interlace those of j_{k-1}: z_{n,k-1} < z_{n,k} < z_{n+1,k-1}
    needed = count + ell
    zeros = tuple(n * math.pi for n in range(1, needed + 1))
    for k in range(1, ell + 1):
        brackets = np.asarray(zeros)
        zeros = tuple(float(v) for v in _bisect_all(k, brackets[:-1], brackets[1:]))
    return zeros[:count]


def spherical_bessel_zeros(ell, count):
    """First ``count`` positive zeros of :math:`j_\\ell` as a tuple of floats."""
    ell, count = int(ell), int(count)
    if not 0 <= ell <= MAX_BESSEL_ORDER:
        raise ValueError(f"order must be in [0, {MAX_BESSEL_ORDER}], got {ell}")
    if not 1 <= count <= MAX_ZERO_INDEX:
        raise ValueError(f"count must be in [1, {MAX_ZERO_INDEX}], got {count}")
    if ell == 0:
        return tuple(n * math.pi for n in range(1, count + 1))
    # one shared table per order keeps repeated lookups cheap
    return _zero_table(ell, MAX_ZERO_INDEX)[:count]


def spherical_bessel_zero(ell, n):
    """The ``n``-th positive zero of :math:`j_\\ell` (``n >= 1``)."""
    if int(n) < 1:
        raise ValueError("zero index starts at 1")
    value = spherical_bessel_zeros(ell, n)[n - 1]
    return BesselZero(int(ell), int(n), float(value))


# ---------------------------------------------------------------------------
# 2F3
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hyp2F3Params:
    a1: float
    a2: float
    b1: float
    b2: float
    b3: float
    z: float

    @property
    def denominators(self):
        return (self.b1, self.b2, self.b3)


_EPS = np.finfo(float).eps


def _is_nonpositive_int(x):
    return x <= 0 and x == math.floor(x)


def _poch(a, k):
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def _rgamma(x):
    return 0.0 if _is_nonpositive_int(x) else 1.0 / gamma_fn(x)


def hyp2f3(params, regularized=False, min_digits=10.0, max_terms=5000):
    """Generalized hypergeometric 2F3 by its power series.

    The terms are generated by their ratio and summed with ``math.fsum``.
    Rounding of the individual terms is what limits accuracy: the error is
    estimated as ``eps * log2(K) * sum|t_k|``, and a
    :class:`PrecisionLossError` is raised when fewer than ``min_digits``
    significant digits remain.

    With ``regularized=True`` every term carries ``1/Gamma(b_j + k)``
    instead of ``1/(b_j)_k``, which equals the plain series divided by
    ``Gamma(b1) Gamma(b2) Gamma(b3)`` and stays finite when a denominator
    parameter is a non-positive integer.
    """
    a1, a2 = params.a1, params.a2
    bs = params.denominators
    z = float(params.z)
    poles = [b for b in bs if _is_nonpositive_int(b)]
    if poles and not regularized:
        raise ValueError(f"denominator parameter {poles[0]} is a non-positive integer")
    # first index with every 1/Gamma(b_j + k) nonzero
    k0 = max([int(-b) + 1 for b in poles], default=0)
    if regularized:
        term = _poch(a1, k0) * _poch(a2, k0) * z**k0 / math.factorial(k0)
        for b in bs:
            term *= _rgamma(b + k0)
    else:
        term = 1.0
    if z == 0.0:
        return term if k0 == 0 else 0.0
    terms = [term]
    abs_sum = abs(term)
    b1, b2, b3 = bs
    for k in range(k0, k0 + max_terms):
        term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1)) * z
        terms.append(term)
        abs_sum += abs(term)
        if term == 0.0 or (k > abs(z) ** 0.5 + 2 and abs(term) < _EPS * 1e-3 * abs_sum):
            break
    else:
        raise PrecisionLossError("2F3 series did not converge", digits=0.0)
    value = math.fsum(terms)
    err = _EPS * abs_sum * (2.0 + math.log2(len(terms)))
    if value == 0.0:
        digits = 0.0 if err > 0 else 16.0
    else:
        digits = min(16.0, -math.log10(err / abs(value)))
    if digits < min_digits:
        raise PrecisionLossError(
            f"2F3 series at z={z:g} keeps only {digits:.1f} digits", value=value, digits=digits
        )
    return value
