"""Acceptance criteria 1 to 12, each at its stated tolerance.

Every test records a verdict line (printed in the terminal summary and to
stdout) before asserting, so a failing criterion still reports what it saw.
Printed values come from the shipped table fixtures; fixture cells flagged
``typo:`` are exempted only where the criterion names them or the oracle
confirms the misprint, and each exemption is listed in the verdict line.
"""

import math
import time

import mpmath as mp
import numpy as np
import pytest

from conftest import ACCEPTANCE_RESULTS
from radial_uncertainty import hydrogenic, isw, sho, tables, verify
from radial_uncertainty.quadrature import integrate_semi_infinite, locate_maximum
from radial_uncertainty.specfun import assoc_laguerre, gamma_fn, spherical_bessel_j
from radial_uncertainty.systems import QuantumState, closed_form, get_system, scan_states

MP_FUNCS = {"sin": mp.sin, "cos": mp.cos, "sqrt": mp.sqrt, "pi": mp.pi}


def record(number, failures, detail=""):
    passed = not failures
    shown = "; ".join(map(str, failures[:6])) + (f"; ... {len(failures) - 6} more" if len(failures) > 6 else "")
    line = detail if passed else f"{len(failures)} mismatches: {shown}"
    ACCEPTANCE_RESULTS[number] = (passed, line)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {line}")
    assert passed, line


def _num(value):
    return float(tables.evaluate_expression(value)) if isinstance(value, str) else float(value)


def _cell_mismatches(table_id, columns, tol, exempt=()):
    """Cells of ``columns`` where the generated table and fixture differ by more than ``tol``."""
    gen, fx = tables.generate(table_id), tables.load_fixture(table_id)
    bad = []
    for grow, frow in zip(gen.rows, fx.rows):
        key = (grow.get("n"), grow.get("ell"))
        for col in columns:
            if (key, col) in exempt:
                continue
            printed, computed = fx.value(frow, col), _num(grow[col])
            if abs(printed - computed) > tol:
                bad.append(f"{table_id}{key} {col}: printed {printed} computed {computed:.6g}")
    return bad


@pytest.fixture(scope="module")
def full_scan():
    config = verify.SuiteConfig(z_values=(1, 4))
    start = time.perf_counter()
    reports = verify.run_suite(config)
    return config, reports, time.perf_counter() - start


def test_criterion_01_hydrogen_table_iii():
    start = time.perf_counter()
    bad = _cell_mismatches("III", ("mean_r", "delta_r", "sigma_r"), 1e-3)
    elapsed = time.perf_counter() - start
    obs = closed_form(QuantumState("hydrogen", 3, 2))
    for name, want in (("mean_r", 10.5), ("delta_r", 3.9686), ("sigma_r", 0.3780)):
        if abs(getattr(obs, name) - want) > 1e-3:
            bad.append(f"3d {name}")
    if elapsed >= 1.0:
        bad.append(f"runtime {elapsed:.2f} s")
    record(1, bad, f"10 orbitals x 3 columns within 1e-3, {elapsed * 1e3:.1f} ms")


def test_criterion_02_hydrogen_table_iv():
    bad = _cell_mismatches("IV", ("product",), 1e-3)
    fx = tables.load_fixture("IV")
    covered = 0
    for row in fx.rows:
        n, ell = fx.key(row)
        if ell == n - 1:
            covered += 1
            stretched = 0.5 * math.sqrt((2 * n + 1) / (2 * n - 1))
            if abs(stretched - fx.value(row, "product")) > 1e-4:
                bad.append(f"stretched ({n},{ell})")
            if abs(hydrogenic.stretched_state_product(n) - stretched) > 1e-12:
                bad.append(f"stretched helper ({n},{ell})")
    record(2, bad, f"10 products within 1e-3; ell=n-1 form matches {covered} rows within 1e-4")


def test_criterion_03_bessel_zeros_table_vi():
    bad = []
    gen, fx = tables.generate("VI"), tables.load_fixture("VI")
    for grow, frow in zip(gen.rows, fx.rows):
        for n in range(1, 6):
            z = grow[f"n{n}"]
            if abs(z - fx.value(frow, f"n{n}")) > 1e-4:
                bad.append(f"z({n},{grow['ell']})")
            if grow["ell"] == 0 and abs(z - n * math.pi) > 1e-12:
                bad.append(f"z({n},0) != n pi")
    record(3, bad, "25 zeros within 1e-4; ell=0 equals n pi within 1e-12")


def test_criterion_04_isw_table_vii():
    bad = _cell_mismatches("VII", ("C",), 1e-3)
    for spec in isw.states(5):
        if spec.ell == 0 and abs(isw.c_coefficient(spec) - spec.z) > 1e-12:
            bad.append(f"C({spec.n},0) != z")
    record(4, bad, "15 coefficients within 1e-3; ell=0 rows equal z within 1e-12")


def test_criterion_05_isw_tables_viii_ix():
    tol = 2.5e-3
    # The (2,1) delta_r entries of the two tables disagree (0.23473 vs 0.23743).
    # The oracle decides which is right; the other is exempted.
    oracle21 = verify.oracle_observables(QuantumState("isw", 2, 1))
    viii, ix = tables.load_fixture("VIII"), tables.load_fixture("IX")
    row_viii = next(r for r in viii.rows if viii.key(r) == (2, 1))
    row_ix = next(r for r in ix.rows if ix.key(r) == (2, 1))
    pair = {"VIII": viii.value(row_viii, "delta_r"), "IX": ix.value(row_ix, "delta_r")}
    winner = min(pair, key=lambda t: abs(pair[t] - oracle21.delta_r))
    loser = "IX" if winner == "VIII" else "VIII"
    exempt = {"VIII": set(), "IX": set()}
    exempt[loser].add(((2, 1), "delta_r"))
    notes = [f"(2,1) delta_r pair resolved for table {winner} (oracle {oracle21.delta_r:.5f})"]

    # (3,1) mean_r in table VIII is a digit slip; exempt it only if the oracle
    # agrees with the corrected digit and the printed sigma_r of that row.
    oracle31 = verify.oracle_observables(QuantumState("isw", 3, 1))
    row31 = next(r for r in viii.rows if viii.key(r) == (3, 1))
    printed_sigma = viii.value(row31, "sigma_r")
    if abs(oracle31.mean_r - 0.52254) < 1e-5 and abs(viii.value(row31, "delta_r") / 0.52254 - printed_sigma) < 1e-4:
        exempt["VIII"].add(((3, 1), "mean_r"))
        notes.append("(3,1) mean_r slip exempted by oracle")

    bad = _cell_mismatches("VIII", ("mean_r", "delta_r", "sigma_r"), tol, exempt["VIII"])
    bad += _cell_mismatches("IX", ("delta_r", "delta_pr", "product"), tol, exempt["IX"])
    p10 = closed_form(QuantumState("isw", 1, 0)).product
    if abs(p10 - 0.5679) > 1e-3:
        bad.append(f"product(1,0) {p10}")
    record(5, bad, "; ".join(notes) + f"; product(1,0) = {p10:.5f}")


def _sho_oracle_value(spec, column):
    """Independent value for a misprinted cell of the oscillator tables."""
    if column == "c_tilde":
        return sho.sho_integrals(spec, method="quadrature").c_tilde
    if column == "i1":
        return sho.sho_integrals(spec, method="quadrature").i1
    obs = verify.oracle_observables(QuantumState("sho", spec.n, spec.ell))
    return getattr(obs, column)


def test_criterion_06_sho_tables_x_xii():
    bad, exempted, exact_cells = [], [], 0
    for table_id, exact_cols, decimal_cols in (("X", ("c_tilde", "i1", "mean_r", "delta_r"), ("sigma_r",)),
                                               ("XII", ("c_tilde", "i1", "i7", "delta_r", "delta_pr"),
                                                ("product",))):
        gen, fx = tables.generate(table_id), tables.load_fixture(table_id)
        for grow, frow in zip(gen.rows, fx.rows):
            spec = sho.ShoSpec(grow["n"], grow["ell"])
            typos = fx.typos(frow)
            for col in exact_cols + decimal_cols:
                computed = _num(grow[col])
                tol = 1e-12 * max(1.0, abs(computed)) if col in exact_cols else 1e-4
                if col in typos:
                    oracle = _sho_oracle_value(spec, col)
                    exempted.append(f"{table_id}({spec.n},{spec.ell}) {col}")
                    if abs(computed - oracle) > 1e-8 * max(1.0, abs(oracle)):
                        bad.append(f"{table_id}({spec.n},{spec.ell}) {col} vs oracle")
                    continue
                exact_cells += col in exact_cols
                printed = fx.value(frow, col)
                if abs(printed - computed) > tol:
                    bad.append(f"{table_id}({spec.n},{spec.ell}) {col}: printed {printed} computed {computed}")
    if sho.exact_strings(sho.ShoSpec(3, 1))["mean_r"] != "52/(15*sqrt(pi))":
        bad.append("mean_r(3,1) exact form")
    if abs(sho.observables(sho.ShoSpec(2, 2)).delta_pr - math.sqrt(11 / 10)) > 1e-12:
        bad.append("delta_pr(2,2)")
    record(6, bad, f"{exact_cells} exact cells within 1e-12; exempted to oracle: {', '.join(exempted)}")


def test_criterion_07_oracle_equivalence(full_scan):
    config, reports, elapsed = full_scan
    summary = verify.summarize(reports)
    bad = [f"{r.system}({r.n},{r.ell},Z={r.Z}) {r.field} rel={r.rel_diff:.2g}" for r in summary.failures]
    expected = len(config.states())
    if summary.states != expected:
        bad.append(f"scanned {summary.states} of {expected} states")
    if elapsed >= 60.0:
        bad.append(f"runtime {elapsed:.1f} s")
    worst = max(r.rel_diff for r in reports if r.field not in verify.NEAR_ZERO_FIELDS)
    record(7, bad, f"{summary.states} states, {summary.checks} checks, worst rel {worst:.2g}, {elapsed:.1f} s")


def test_criterion_08_heisenberg_floor(full_scan):
    _, reports, _ = full_scan
    products = [r for r in reports if r.field == "product"]
    bad = [f"{r.system}({r.n},{r.ell},Z={r.Z})" for r in products if not (r.closed_form > 0.5 and r.oracle > 0.5)]
    low = min(min(r.closed_form, r.oracle) for r in products)
    record(8, bad, f"{len(products)} states above hbar/2 in both routes, minimum product {low:.6f}")


def test_criterion_09_commutator():
    bad, details = [], []
    rng = np.random.default_rng(2024)
    for system in ("hydrogen", "isw", "sho"):
        states = scan_states(system, {"hydrogen": 6, "isw": 5, "sho": 6}[system], max_ell=4 if system == "isw" else None)
        used, worst, draw = 0, 0.0, 0
        while used < 20:
            state = states[rng.integers(len(states))]
            radius = verify.sample_radii(state, count=1, seed=draw)
            draw += 1
            deviation, ok = verify.commutator_check(state, radius)
            if ok:
                used += 1
                worst = max(worst, deviation)
        if worst > 1e-6:
            bad.append(f"{system} worst {worst:.2g}")
        details.append(f"{system} {worst:.1e}")
    record(9, bad, "20 pairs per system, worst deviation " + ", ".join(details))


def test_criterion_10_degeneracy_parity():
    bad = []
    table = tables.generate("XIII")
    for row in table.rows:
        n = row["n"]
        d = (n + 1) * (n + 2) // 2
        parity = "+" if n % 2 == 0 else "-"
        if not (row["d_s"] == row["d_c"] == d and row["p_s"] == row["p_c"] == parity):
            bad.append(f"n={n}")
    fx = tables.load_fixture("XIII")
    for grow, frow in zip(table.rows, fx.rows):
        if str(grow["d_s"]) != frow["d_s"] or str(grow["d_c"]) != frow["d_c"]:
            bad.append(f"printed degeneracy n={grow['n']}")
    for n in range(1, 7):
        if hydrogenic.degeneracy(n) != n * n:
            bad.append(f"hydrogen n={n}")
    record(10, bad, "oscillator n <= 6 and hydrogen n <= 6")


def _numeric_peak(R, dR, top):
    def P(r):
        return r * r * R(r) ** 2

    def dP(r):
        return 2 * r * R(r) * (R(r) + r * dR(r))

    return locate_maximum(P, 1e-6 * top, top, derivative=dP)


def test_criterion_11_ground_state_peaks():
    bad, details = [], []
    cases = []
    for Z in (1, 2, 3, 4):
        # radius in a0, so the peak must land on a0/Z itself
        spec = hydrogenic.HydrogenicSpec(Z, 1, 0)
        cases.append((f"hydrogen Z={Z}", lambda r, s=spec: hydrogenic.radial_wavefunction(s, r),
                      lambda r, s=spec: hydrogenic.radial_derivative(s, r), 10.0,
                      hydrogenic.most_probable_radius_ground(Z)))
    for system, n, top, exact in (("isw", 1, 1.0, isw.most_probable_radius_ground()),
                                  ("sho", 0, 4.0, sho.most_probable_radius_ground())):
        state = QuantumState(system, n, 0)
        sysobj = get_system(system)
        cases.append((system, sysobj.wavefunction(state), sysobj.derivative(state), top, exact))
    for label, R, dR, top, exact in cases:
        found = _numeric_peak(R, dR, top)
        if abs(found - exact) > 1e-8:
            bad.append(f"{label}: {found} vs {exact}")
        details.append(f"{label} {abs(found - exact):.0e}")
    record(11, bad, "offsets " + ", ".join(details))


def test_criterion_12_identity_suites():
    bad = []
    # orthogonality of the generalized Laguerre polynomials, 1e-8 relative
    for a in (1, 3, 5):
        for b in range(7):
            for c in range(b, 7):
                size = math.sqrt(gamma_fn(a + b + 1) / gamma_fn(b + 1) * gamma_fn(a + c + 1) / gamma_fn(c + 1))
                val = integrate_semi_infinite(
                    lambda x: x**a * np.exp(-x) * assoc_laguerre(b, x, a) * assoc_laguerre(c, x, a),
                    rel_tol=1e-12, scale=a + b + c + 1, abs_tol=1e-11 * size).value
                expected = gamma_fn(a + b + 1) / gamma_fn(b + 1) if b == c else 0.0
                if abs(val - expected) > 1e-8 * max(abs(expected), 1.0):
                    bad.append(f"orthogonality a={a} b={b} c={c}")

    # indefinite integral of t^2 j_l(t)^2, 50 random points, 1e-9 relative
    rng = np.random.default_rng(51)
    mp.mp.dps = 30
    for ell, x in zip(rng.integers(0, 5, 50), rng.uniform(1.0, 25.0, 50)):
        ref = mp.quad(lambda t: t**2 * (mp.sqrt(mp.pi / (2 * t)) * mp.besselj(int(ell) + 0.5, t)) ** 2, [0, x])
        got = isw.indefinite_square_integral(int(ell), float(x))
        if abs(got - float(ref)) > 1e-9 * abs(float(ref)):
            bad.append(f"indefinite integral ell={ell} x={x:.3f}")

    # closed forms of j_0..j_4, 100 random z in (0.1, 30), 1e-10 relative
    mp.mp.dps = 40
    fx = tables.load_fixture("V")
    zs = np.random.default_rng(5).uniform(0.1, 30.0, 100)
    for row in fx.rows:
        ell = int(row["ell"])
        for z in zs:
            ref = float(tables.evaluate_expression(row["corrected"], functions=MP_FUNCS, z=mp.mpf(float(z))))
            if abs(spherical_bessel_j(ell, float(z)) - ref) > 1e-10 * abs(ref):
                bad.append(f"j_{ell}({z:.3f})")
    printed4 = next(r for r in fx.rows if r["ell"] == "4")
    note = "printed ell=4 row carries sign slips, checked via its corrected form" if "printed" in fx.typos(printed4) else ""
    record(12, bad, f"orthogonality 84 pairs, 50 integral points, 500 closed-form points; {note}")
