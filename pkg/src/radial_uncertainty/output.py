"""Text, CSV and JSON rendering shared by the CLI subcommands.

Headers always carry the unit of each column, e.g. ``delta_r [a0/Z]``.
Floats are printed with ``precision`` significant digits; 17 digits
round-trip exactly through CSV and JSON.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

from .observables import FIELDS
from .systems import get_system

DEFAULT_PRECISION = 6
FORMATS = ("table", "csv", "json")
_HEADER_UNIT = re.compile(r"^(?P<name>[^\[]+?)(?: \[(?P<unit>.*)\])?$")


@dataclass(frozen=True)
class OutputRecord:
    system: str
    n: int
    ell: int
    Z: int
    values: dict
    units: dict

    @classmethod
    def from_state(cls, state, obs):
        units = get_system(state.system).units
        return cls(state.system, state.n, state.ell, state.Z, obs.as_dict(), dict(units))

    def columns(self):
        keys = [("system", ""), ("n", ""), ("ell", ""), ("Z", "")]
        return keys + [(f, self.units.get(f, "")) for f in FIELDS]

    def row(self):
        return {"system": self.system, "n": self.n, "ell": self.ell, "Z": self.Z, **self.values}


def format_value(value, precision=DEFAULT_PRECISION):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{precision}g}"
    return str(value)


def header(name, unit):
    return f"{name} [{unit}]" if unit else name


def split_header(text):
    m = _HEADER_UNIT.match(text)
    return m.group("name"), m.group("unit") or ""


def _rows_to_csv(headers, rows, precision):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([format_value(v, precision) for v in row])
    return buf.getvalue()


def _rows_to_text(headers, rows, precision):
    cells = [headers] + [[format_value(v, precision) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _rows_to_json(names, units, rows, precision, extra=None):
    def conv(v):
        if isinstance(v, float):
            return float(format_value(v, precision))
        return v

    records = [{k: conv(v) for k, v in zip(names, row)} for row in rows]
    doc = {"units": {k: u for k, u in zip(names, units) if u}, "records": records}
    if extra:
        doc = {**extra, **doc}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render(names, units, rows, fmt="table", precision=DEFAULT_PRECISION, title=None):
    """Render rows (sequences aligned with ``names``) in one of :data:`FORMATS`."""
    headers = [header(n, u) for n, u in zip(names, units)]
    if fmt == "csv":
        return _rows_to_csv(headers, rows, precision)
    if fmt == "json":
        return _rows_to_json(names, units, rows, precision, {"title": title} if title else None)
    if fmt == "table":
        text = _rows_to_text(headers, rows, precision)
        return f"{title}\n{text}" if title else text
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_records(records, fmt="table", precision=DEFAULT_PRECISION):
    if not records:
        return ""
    cols = records[0].columns()
    names = [c for c, _ in cols]
    units = [u for _, u in cols]
    rows = [[r.row()[n] for n in names] for r in records]
    return render(names, units, rows, fmt, precision)


def render_table(table, fmt="table", precision=DEFAULT_PRECISION):
    names = table.names
    units = [c.unit for c in table.columns]
    rows = [[row[n] for n in names] for row in table.rows]
    return render(names, units, rows, fmt, precision, title=f"Table {table.id}: {table.title}")


def parse_csv(text):
    """Inverse of the CSV renderer: list of dicts keyed by bare column name.

    Cells that parse as int or float are converted; everything else stays text.
    """
    reader = csv.reader(io.StringIO(text))
    headers = next(reader)
    names = [split_header(h)[0] for h in headers]
    out = []
    for row in reader:
        rec = {}
        for name, cell in zip(names, row):
            rec[name] = _convert(cell)
        out.append(rec)
    return out


def _convert(cell):
    for kind in (int, float):
        try:
            return kind(cell)
        except ValueError:
            pass
    return cell
