"""Adaptive Gauss-Legendre quadrature and a one-dimensional maximizer.

These are the numerical oracles: every closed-form expectation value in the
package is checked against an integral evaluated here.  Integrands must
accept and return numpy arrays.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_REL_TOL",
    "QuadratureError",
    "QuadratureResult",
    "integrate_finite",
    "integrate_semi_infinite",
    "locate_maximum",
]

DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_EVALUATIONS = 1_000_000
ABS_FLOOR = 1e-14

# Panel rule pair: the 10-point rule supplies the error estimate for the
# 21-point rule (exact through degree 41).
_LO_NODES, _LO_WEIGHTS = np.polynomial.legendre.leggauss(10)
_HI_NODES, _HI_WEIGHTS = np.polynomial.legendre.leggauss(21)
POLYNOMIAL_DEGREE = 41


class QuadratureError(RuntimeError):
    """The adaptive integrator hit its evaluation cap before converging."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __float__(self):
        return self.value


def _panel(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = np.concatenate((mid + half * _HI_NODES, mid + half * _LO_NODES))
    y = np.asarray(f(x), dtype=float)
    n_hi = _HI_NODES.size
    hi = half * float(np.dot(_HI_WEIGHTS, y[:n_hi]))
    lo = half * float(np.dot(_LO_WEIGHTS, y[n_hi:]))
    return hi, abs(hi - lo), x.size


def integrate_finite(
    f, a, b, rel_tol=DEFAULT_REL_TOL, abs_tol=ABS_FLOOR, max_evaluations=DEFAULT_MAX_EVALUATIONS,
    breakpoints=(),
):
    """Integrate ``f`` over ``[a, b]`` by globally adaptive bisection.

    The panel with the largest error estimate is split until the summed
    estimate drops below ``max(rel_tol * |I|, abs_tol)``.

    Parameters
    ----------
    f : callable
        Vectorized integrand.
    a, b : float
        Finite limits with ``a < b``.
    breakpoints : sequence of float, optional
        Interior points where the integrand is known to be non-smooth;
        they become initial panel edges.

    Raises
    ------
    QuadratureError
        If ``max_evaluations`` integrand evaluations do not suffice.
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    edges = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    heap = []
    total = 0.0
    err = 0.0
    evals = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, e, n = _panel(f, lo, hi)
        evals += n
        total += val
        err += e
        heapq.heappush(heap, (-e, lo, hi, val))
    while err > max(rel_tol * abs(total), abs_tol):
        if evals >= max_evaluations:
            raise QuadratureError(
                f"no convergence on [{a}, {b}] after {evals} evaluations "
                f"(estimate {total!r}, error {err:.3g})"
            )
        neg_e, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # panel can no longer be split in floating point
            heapq.heappush(heap, (0.0, lo, hi, val))
            err += neg_e
            continue
        left, e_left, n_left = _panel(f, lo, mid)
        right, e_right, n_right = _panel(f, mid, hi)
        evals += n_left + n_right
        total += left + right - val
        err += e_left + e_right + neg_e
        heapq.heappush(heap, (-e_left, lo, mid, left))
        heapq.heappush(heap, (-e_right, mid, hi, right))
    # re-sum to shed the drift of the running updates
    total = math.fsum(item[3] for item in heap)
    err = math.fsum(-item[0] for item in heap)
    return QuadratureResult(total, err, evals)


def integrate_semi_infinite(
    f, rel_tol=DEFAULT_REL_TOL, scale=1.0, abs_tol=ABS_FLOOR, max_evaluations=DEFAULT_MAX_EVALUATIONS
):
    """Integrate a decaying ``f`` over ``[0, inf)``.

    The substitution ``x = scale * t / (1 - t)`` maps the half line onto
    ``[0, 1)``; no truncation is involved.  ``scale`` should be near the
    length over which ``f`` carries its weight.
    """
    scale = float(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")

    def mapped(t):
        t = np.asarray(t, dtype=float)
        one_minus = 1.0 - t
        x = scale * t / one_minus
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            y = np.asarray(f(x), dtype=float) * scale / one_minus**2
        # far tail: x beyond ~700 scale lengths underflows the exponential
        return np.where(np.isfinite(y), y, 0.0)

    return integrate_finite(mapped, 0.0, 1.0, rel_tol=rel_tol, abs_tol=abs_tol,
                            max_evaluations=max_evaluations)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def locate_maximum(f, a, b, derivative=None):
    """Argmax of a unimodal ``f`` on ``[a, b]``.

    Golden-section search narrows the bracket; if ``derivative`` is given,
    bisection on its sign then finishes the job, because a flat maximum
    only pins the abscissa to about ``sqrt(eps)`` from function values.
    """
    a, b = float(a), float(b)
    stop = (1e-6 if derivative is not None else 1e-15) * (b - a)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > stop:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
        if not a < c < d < b:
            break
    if derivative is None:
        return 0.5 * (a + b)
    width = b - a
    a, b = a - width, b + width
    if derivative(a) < 0 or derivative(b) > 0:
        raise ValueError("derivative does not change sign around the golden-section bracket")
    for _ in range(200):
        mid = 0.5 * (a + b)
        if not a < mid < b:
            break
        if derivative(mid) > 0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)
