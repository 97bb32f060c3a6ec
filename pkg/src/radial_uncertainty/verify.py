"""Quadrature oracle for every closed-form observable.

The oracle only sees the radial wavefunction and its first derivative.
Means are the defining integrals over ``r^2 |R|^2 dr``; the radial momentum
uses ``p_r = -i hbar (d/dr + 1/r)`` and its square
``-hbar^2 (d^2/dr^2 + (2/r) d/dr)``, with the second derivative taken by a
five-point stencil on the analytic first derivative.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .observables import FIELDS, RadialObservables, observables_from_moments
from .quadrature import integrate_finite, integrate_semi_infinite
from .systems import SYSTEM_NAMES, QuantumState, closed_form, get_system, scan_states

ORACLE_REL_TOL = 1e-12
STEP_FACTOR = np.finfo(float).eps ** 0.2
DEGENERATE_AMPLITUDE = 1e-12
HEISENBERG_SLACK = 1e-12
NEAR_ZERO_FIELDS = ("mean_pr",)
REPORT_FIELDS = ("normalization",) + FIELDS
STENCIL_OFFSETS = np.array([-2.0, -1.0, 1.0, 2.0])
STENCIL_WEIGHTS = np.array([1.0, -8.0, 8.0, -1.0])


def _stencil_step(r, scale, outer=None):
    """eps^(1/5) times the local length scale: the state's size, or the
    distance to the origin or outer wall when that is smaller."""
    local = np.minimum(scale, r)
    if outer is not None:
        local = np.minimum(local, outer - r)
    return STEP_FACTOR * local


def five_point(f, r, h):
    """Central difference ``f'(r)`` with O(h^4) error."""
    return (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h)


def _integrate(system, state, integrand):
    if system.finite_extent is not None:
        return integrate_finite(integrand, 0.0, system.finite_extent, rel_tol=ORACLE_REL_TOL,
                                abs_tol=1e-15).value
    return integrate_semi_infinite(integrand, rel_tol=ORACLE_REL_TOL, scale=system.length_scale(state),
                                   abs_tol=1e-15).value


def oracle_moments(state):
    """Raw integrals: normalization, moments of r, and the two momentum means."""
    system = get_system(state.system)
    R = system.wavefunction(state)
    dR = system.derivative(state)
    scale = system.length_scale(state)
    outer = system.finite_extent

    def weighted(power):
        return lambda r: r ** (2 + power) * R(r) ** 2

    def pr_integrand(r):
        return r * r * R(r) * dR(r) + r * R(r) ** 2

    def pr2_integrand(r):
        r = np.asarray(r, dtype=float)
        # no stencil at the end points, where the integrand weight vanishes anyway
        inside = r > 0
        if outer is not None:
            inside &= r < outer
        rs = np.where(inside, r, 0.5 * (outer if outer is not None else scale))
        h = _stencil_step(rs, scale, outer)
        d2 = five_point(dR, rs, h)
        val = -rs * rs * R(rs) * (d2 + 2.0 * dR(rs) / rs)
        return np.where(inside, val, 0.0)

    out = {"normalization": _integrate(system, state, weighted(0))}
    for name, power in (("mean_r", 1), ("mean_r2", 2), ("mean_inv_r", -1), ("mean_inv_r2", -2)):
        out[name] = _integrate(system, state, weighted(power))
    out["mean_pr"] = _integrate(system, state, pr_integrand)
    out["mean_pr2"] = _integrate(system, state, pr2_integrand)
    return out


def oracle_observables(state):
    """Observables of ``state`` from quadrature of its wavefunction alone."""
    m = oracle_moments(state)
    return observables_from_moments(m["mean_r"], m["mean_r2"], m["mean_inv_r"], m["mean_inv_r2"],
                                    m["mean_pr"], m["mean_pr2"])


def derivative_mismatch(state, radii):
    """Max relative gap between the analytic ``dR/dr`` and a five-point difference of ``R``."""
    system = get_system(state.system)
    R, dR = system.wavefunction(state), system.derivative(state)
    r = np.asarray(radii, dtype=float)
    h = _stencil_step(r, system.length_scale(state), system.finite_extent)
    fd = five_point(R, r, h)
    exact = dR(r)
    return float(np.max(np.abs(fd - exact) / np.maximum(np.abs(exact), np.max(np.abs(exact)))))


def commutator_check(state, radii):
    """Max ``|[r, p_r] R / (i hbar R) - 1|`` over the radii, by finite differences.

    Radii where ``|R| < 1e-12`` are skipped. Returns ``(deviation, used)``.
    """
    system = get_system(state.system)
    R = system.wavefunction(state)
    scale = system.length_scale(state)
    worst, used = 0.0, 0
    for r in np.atleast_1d(np.asarray(radii, dtype=float)):
        if r <= 0 or (system.finite_extent is not None and r >= system.finite_extent):
            raise ValueError(f"radius {r} is not interior to the domain")
        value = R(r)
        if abs(value) < DEGENERATE_AMPLITUDE:
            continue
        h = float(_stencil_step(r, scale, system.finite_extent))
        # p_r f = -i hbar (f' + f/r); the 1/r pieces cancel. The two stencils
        # (r D R and D(xR)) are subtracted node by node, so the large r R'
        # parts never meet in floating point.
        x = r + STENCIL_OFFSETS * h
        applied = np.dot(STENCIL_WEIGHTS, (r - x) * R(x)) / (12 * h)
        ratio = -applied / value
        worst = max(worst, abs(ratio - 1.0))
        used += 1
    return worst, used


def sample_radii(state, count=20, seed=0):
    """Fixed-seed radii spread over the region where the state lives."""
    system = get_system(state.system)
    rng = np.random.default_rng(seed)
    if system.finite_extent is not None:
        return np.sort(rng.uniform(0.05, 0.95, count) * system.finite_extent)
    top = 3.0 * system.length_scale(state) + 2.0
    return np.sort(rng.uniform(0.05, top, count))


def heisenberg_holds(obs, slack=HEISENBERG_SLACK):
    """``delta_r * delta_pr >= hbar/2 (1 + slack)``."""
    return obs.product >= 0.5 * (1.0 + slack)


@dataclass(frozen=True)
class VerificationReport:
    system: str
    n: int
    ell: int
    Z: int
    field: str
    closed_form: float
    oracle: float
    abs_diff: float
    rel_diff: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class SuiteConfig:
    systems: tuple = SYSTEM_NAMES
    hydrogen_max_n: int = 6
    isw_max_n: int = 5
    isw_max_ell: int = 4
    sho_max_n: int = 6
    z_values: tuple = (1,)
    rel_tol: float = 1e-8
    abs_tol: float = 1e-9
    workers: int = 4

    def states(self):
        out = []
        for name in self.systems:
            if name == "hydrogen":
                for Z in self.z_values:
                    out.extend(scan_states("hydrogen", self.hydrogen_max_n, Z))
            elif name == "isw":
                out.extend(scan_states("isw", self.isw_max_n, max_ell=self.isw_max_ell))
            elif name == "sho":
                out.extend(scan_states("sho", self.sho_max_n))
            else:
                raise ValueError(f"unknown system {name!r}")
        return out


def compare(state, closed, oracle_obs, normalization, rel_tol, abs_tol):
    """One report line per observable, plus the normalization."""
    rows = []
    cf = dict(asdict(closed), normalization=1.0)
    orc = dict(asdict(oracle_obs), normalization=normalization)
    for name in REPORT_FIELDS:
        a, b = cf[name], orc[name]
        diff = abs(a - b)
        rel = diff / max(abs(b), 1.0)
        if name in NEAR_ZERO_FIELDS:
            tol, passed = abs_tol, diff <= abs_tol
        else:
            tol, passed = rel_tol, rel <= rel_tol
        rows.append(VerificationReport(state.system, state.n, state.ell, state.Z, name,
                                       a, b, diff, rel, tol, bool(passed)))
    return rows


def verify_state(state, rel_tol=1e-8, abs_tol=1e-9):
    closed = closed_form(state)
    moments = oracle_moments(state)
    oracle_obs = observables_from_moments(moments["mean_r"], moments["mean_r2"], moments["mean_inv_r"],
                                          moments["mean_inv_r2"], moments["mean_pr"], moments["mean_pr2"])
    return compare(state, closed, oracle_obs, moments["normalization"], rel_tol, abs_tol)


def run_suite(config=None):
    """Closed form vs oracle over the configured scan, in scan order."""
    config = config or SuiteConfig()
    states = config.states()
    if not states:
        return []

    def work(state):
        return verify_state(state, config.rel_tol, config.abs_tol)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(work, states))
    else:
        chunks = [work(s) for s in states]
    return [row for chunk in chunks for row in chunk]


@dataclass
class Summary:
    states: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def summarize(reports):
    keys = {(r.system, r.n, r.ell, r.Z) for r in reports}
    return Summary(len(keys), len(reports), [r for r in reports if not r.passed])


def reports_to_csv(reports):
    buf = io.StringIO()
    names = list(VerificationReport.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\r\n")
    writer.writeheader()
    for r in reports:
        row = asdict(r)
        for k, v in row.items():
            if isinstance(v, float):
                row[k] = repr(v)
        writer.writerow(row)
    return buf.getvalue()


def reports_to_json(reports):
    return json.dumps([asdict(r) for r in reports], indent=2)


__all__ = [
    "QuantumState",
    "RadialObservables",
    "SuiteConfig",
    "VerificationReport",
    "commutator_check",
    "derivative_mismatch",
    "heisenberg_holds",
    "oracle_observables",
    "run_suite",
    "sample_radii",
    "summarize",
    "verify_state",
]
