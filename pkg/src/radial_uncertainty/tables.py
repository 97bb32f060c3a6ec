"""Regenerate the published tables from computation, and load the shipped
copies of the printed values for regression checks.

Generated tables never read the fixtures. The fixtures are small CSV files
under ``data/`` with ``#`` provenance comments; a ``note`` column carries
``typo:<field>`` flags for entries known to be misprinted.
"""

from __future__ import annotations

import ast
import csv
import importlib.resources
import math
import operator
from dataclasses import dataclass, field

import numpy as np

from . import hydrogenic, isw, sho
from .specfun import spherical_bessel_zero

TABLE_IDS = ("III", "IV", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII")
FIXTURE_IDS = TABLE_IDS + ("V",)


@dataclass(frozen=True)
class Column:
    name: str
    unit: str = ""

    @property
    def header(self):
        return f"{self.name} [{self.unit}]" if self.unit else self.name


@dataclass
class Table:
    id: str
    title: str
    columns: tuple
    rows: list = field(default_factory=list)

    @property
    def names(self):
        return [c.name for c in self.columns]

    def column(self, name):
        return [row[name] for row in self.rows]


# ---------------------------------------------------------------------------
# Generated tables
# ---------------------------------------------------------------------------


def _hydrogen_rows(fields):
    rows = []
    for spec in hydrogenic.states(4):
        obs = hydrogenic.observables(spec).as_dict()
        rows.append({"orbital": spec.orbital, "n": spec.n, "ell": spec.ell, **{f: obs[f] for f in fields}})
    return rows


def table_iii():
    u = hydrogenic.UNITS
    cols = (Column("orbital"), Column("n"), Column("ell"), Column("mean_r", u["mean_r"]),
            Column("delta_r", u["delta_r"]), Column("sigma_r", u["sigma_r"]))
    return Table("III", "Relative dispersion of radial position, hydrogenic atoms", cols,
                 _hydrogen_rows(("mean_r", "delta_r", "sigma_r")))


def table_iv():
    u = hydrogenic.UNITS
    cols = (Column("orbital"), Column("n"), Column("ell"), Column("delta_r", u["delta_r"]),
            Column("delta_pr", u["delta_pr"]), Column("product", u["product"]))
    return Table("IV", "Uncertainties in radial position, momentum and their product, hydrogenic atoms",
                 cols, _hydrogen_rows(("delta_r", "delta_pr", "product")))


def table_vi(max_ell=4, max_n=5):
    cols = (Column("ell"),) + tuple(Column(f"n{n}") for n in range(1, max_n + 1))
    rows = []
    for ell in range(max_ell + 1):
        row = {"ell": ell}
        for n in range(1, max_n + 1):
            row[f"n{n}"] = spherical_bessel_zero(ell, n).value
        rows.append(row)
    return Table("VI", "Zeros of the spherical Bessel functions", cols, rows)


def table_vii():
    cols = (Column("n"), Column("ell"), Column("z"), Column("C"))
    rows = [{"n": s.n, "ell": s.ell, "z": s.z, "C": isw.c_coefficient(s)} for s in isw.states(5)]
    return Table("VII", "Normalization coefficients of the infinite spherical well", cols, rows)


def _isw_rows(fields):
    rows = []
    for spec in isw.states(5):
        obs = isw.observables(spec).as_dict()
        rows.append({"n": spec.n, "ell": spec.ell, "z": spec.z, **{f: obs[f] for f in fields}})
    return rows


def table_viii():
    u = isw.UNITS
    cols = (Column("n"), Column("ell"), Column("z"), Column("mean_r", u["mean_r"]),
            Column("delta_r", u["delta_r"]), Column("sigma_r", u["sigma_r"]))
    return Table("VIII", "Mean radius, spread and relative dispersion, infinite spherical well", cols,
                 _isw_rows(("mean_r", "delta_r", "sigma_r")))


def table_ix():
    u = isw.UNITS
    cols = (Column("n"), Column("ell"), Column("z"), Column("delta_r", u["delta_r"]),
            Column("delta_pr", u["delta_pr"]), Column("product", u["product"]))
    return Table("IX", "Radial uncertainty product, infinite spherical well", cols,
                 _isw_rows(("delta_r", "delta_pr", "product")))


def table_x():
    u = sho.UNITS
    cols = (Column("n"), Column("ell"), Column("c_tilde"), Column("i1"), Column("mean_r", u["mean_r"]),
            Column("delta_r", u["delta_r"]), Column("sigma_r", u["sigma_r"]))
    rows = []
    for spec in sho.states(6):
        ex = sho.exact_strings(spec)
        rows.append({"n": spec.n, "ell": spec.ell, "c_tilde": ex["c_tilde"], "i1": ex["i1"],
                     "mean_r": ex["mean_r"], "delta_r": ex["delta_r"],
                     "sigma_r": sho.observables(spec).sigma_r})
    return Table("X", "Mean radius and spread, isotropic oscillator", cols, rows)


def table_xi():
    cols = (Column("n"), Column("ell"), Column("i4"), Column("i5"), Column("i6"), Column("total"))
    rows = []
    for spec in sho.states(6):
        m = sho.exact_moments(spec)
        ex = sho.exact_strings(spec)
        rows.append({"n": spec.n, "ell": spec.ell, "i4": ex["i4"], "i5": ex["i5"], "i6": ex["i6"],
                     "total": str(m.i4 + m.i5 + m.i6)})
    return Table("XI", "Pieces of the radial momentum mean, isotropic oscillator", cols, rows)


def table_xii():
    u = sho.UNITS
    cols = (Column("n"), Column("ell"), Column("c_tilde"), Column("i1"), Column("i7"),
            Column("delta_r", u["delta_r"]), Column("delta_pr", u["delta_pr"]),
            Column("product", u["product"]))
    rows = []
    for spec in sho.states(6):
        ex = sho.exact_strings(spec)
        rows.append({"n": spec.n, "ell": spec.ell, "c_tilde": ex["c_tilde"], "i1": ex["i1"],
                     "i7": ex["i7"], "delta_r": ex["delta_r"], "delta_pr": ex["delta_pr"],
                     "product": sho.observables(spec).product})
    return Table("XII", "Radial uncertainty product, isotropic oscillator", cols, rows)


def _parity(p):
    return "+" if p > 0 else "-"


def table_xiii(max_n=6):
    cols = (Column("n"), Column("states_s"), Column("d_s"), Column("p_s"), Column("E_s", "hbar*omega"),
            Column("states_c"), Column("d_c"), Column("p_c"), Column("E_c", "hbar*omega"))
    rows = []
    for n in range(max_n + 1):
        d_s, parity = sho.degeneracy_parity(n)
        labels = " ".join(f"({(n - ell) // 2}{ell})" for ell in sorted(sho.allowed_ell(n)))
        triples = sho.cartesian_states(n)
        energy = f"{2 * n + 3}/2"
        rows.append({
            "n": n, "states_s": labels, "d_s": d_s, "p_s": _parity(parity), "E_s": energy,
            "states_c": " ".join("".join(map(str, t)) for t in triples),
            "d_c": len(triples), "p_c": _parity((-1) ** n), "E_c": energy,
        })
    return Table("XIII", "Energy, parity and degeneracy of the isotropic oscillator", cols, rows)


GENERATORS = {
    "III": table_iii, "IV": table_iv, "VI": table_vi, "VII": table_vii, "VIII": table_viii,
    "IX": table_ix, "X": table_x, "XI": table_xi, "XII": table_xii, "XIII": table_xiii,
}


def generate(table_id):
    key = str(table_id).upper()
    if key not in GENERATORS:
        raise KeyError(f"unknown table {table_id!r}; expected one of {', '.join(TABLE_IDS)}")
    return GENERATORS[key]()


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}
_FUNCS = {"sqrt": np.sqrt, "sin": np.sin, "cos": np.cos}


def evaluate_expression(text, functions=None, **variables):
    """Evaluate a printed arithmetic expression such as ``sqrt(3/2 - 4/pi)``.

    Only numbers, ``+ - * / **``, ``pi``, the functions ``sqrt``, ``sin``,
    ``cos`` and the keyword variables are accepted. ``functions`` may
    replace the numpy implementations (and ``pi``), e.g. with mpmath ones.
    """
    funcs = dict(_FUNCS)
    names = {"pi": math.pi}
    if functions:
        names["pi"] = functions.get("pi", math.pi)
        funcs.update({k: v for k, v in functions.items() if k != "pi"})
    names.update(variables)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand))
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS
                and len(node.args) == 1 and not node.keywords):
            return funcs[node.func.id](ev(node.args[0]))
        raise ValueError(f"unsupported element in expression {text!r}: {ast.dump(node)}")

    return ev(ast.parse(text.strip(), mode="eval"))


@dataclass
class Fixture:
    id: str
    columns: list
    rows: list

    def typos(self, row):
        return {tok.split(":", 1)[1] for tok in row.get("note", "").split() if tok.startswith("typo:")}

    def value(self, row, name, **variables):
        return float(evaluate_expression(row[name], **variables))

    def key(self, row):
        return int(row["n"]), int(row["ell"])


def load_fixture(table_id):
    key = str(table_id).upper()
    if key not in FIXTURE_IDS:
        raise KeyError(f"no fixture for table {table_id!r}")
    text = (importlib.resources.files("radial_uncertainty") / "data" / f"table_{key.lower()}.csv").read_text("utf-8")
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    rows = [dict(r) for r in reader]
    return Fixture(key, list(reader.fieldnames), rows)
