"""Comparison tables: exact levels against the three semiclassical methods."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import catalog, numerics, quantizers
from .errors import ShapeInvError

ALL_METHODS = ("exact", "wkb", "swkb", "ft")
FORMATS = ("table", "csv", "json")
CSV_FIELDS = ("family", "params", "n", "e_exact", "e_wkb", "e_swkb", "e_ft",
              "pct_err_wkb", "pct_err_ft")
# parameters of the worked Rosen-Morse II example, appended to table2
RM2_EXAMPLE = {"A": 2.0, "B": 1.0, "alpha": 1.0}


@dataclass(frozen=True)
class RunConfig:
    families: Sequence[str] = tuple(catalog.FAMILY_INFO)
    overrides: Mapping[str, Mapping[str, float]] = field(default_factory=dict)
    n_max: int = 0
    methods: Sequence[str] = ALL_METHODS
    format: str = "table"
    action_rel_tol: float = quantizers.ACTION_QUAD.rel_tol
    energy_rel_tol: float = quantizers.ENERGY_TOL

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if not self.methods:
            raise ValueError("at least one method is required")
        bad = [m for m in self.methods if m not in ALL_METHODS]
        if bad:
            raise ValueError(f"unknown method(s) {bad}; use {ALL_METHODS}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; use {FORMATS}")
        unknown = [f for f in self.families if f not in catalog.FAMILIES]
        if unknown:
            raise ValueError(f"unknown family {unknown[0]!r}; choose from "
                             f"{', '.join(catalog.FAMILIES)}")


@dataclass
class ComparisonRow:
    family_id: str
    params: dict
    n: int
    e_exact: float | None = None
    e_wkb: float | None = None
    e_swkb: float | None = None
    e_ft: float | None = None
    pct_err_wkb: float | None = None
    pct_err_ft: float | None = None
    energy_minus: dict = field(default_factory=dict)
    note: str = ""


def pct_err(value, exact):
    if value is None or exact is None or not exact > 0:
        return None
    return 100.0 * (value - exact) / exact


def compute_row(spec: catalog.PotentialSpec, n: int,
                methods: Sequence[str] = ALL_METHODS,
                quad: numerics.QuadratureSpec = quantizers.ACTION_QUAD,
                rel_tol: float = quantizers.ENERGY_TOL) -> ComparisonRow:
    row = ComparisonRow(spec.family_id, spec.params.as_dict(), n)
    if not spec.has_level(n):
        row.note = f"unbound: {spec.max_level} bound state(s)"
        return row
    # percent errors need the exact level even when it is not displayed
    exact = catalog.exact_spectrum(spec, n)[-1]
    if "exact" in methods:
        row.e_exact = exact.e_shifted
        row.energy_minus["exact"] = exact.e_minus
    notes = []
    for m in quantizers.METHODS:
        if m not in methods:
            continue
        try:
            res = quantizers.solve(spec, n, m, quad=quad, rel_tol=rel_tol)
        except ShapeInvError as exc:
            notes.append(f"{m}: {type(exc).__name__}")
            continue
        setattr(row, f"e_{m}", res.energy)
        row.energy_minus[m] = res.energy_minus
    row.pct_err_wkb = pct_err(row.e_wkb, exact.e_shifted)
    row.pct_err_ft = pct_err(row.e_ft, exact.e_shifted)
    row.note = "; ".join(notes)
    return row


def run_comparison(cfg: RunConfig) -> list[ComparisonRow]:
    """One row per (family, n) in config order."""
    quad = numerics.QuadratureSpec(rel_tol=cfg.action_rel_tol,
                                   abs_tol=quantizers.ACTION_QUAD.abs_tol,
                                   max_subdivisions=100)
    rows = []
    for fid in cfg.families:
        spec = catalog.make_spec(fid, cfg.overrides.get(fid))
        for n in range(cfg.n_max + 1):
            rows.append(compute_row(spec, n, cfg.methods, quad,
                                    cfg.energy_rel_tol))
    return rows


def table2_rows() -> list[ComparisonRow]:
    """Ground states of every family at its defaults, plus the Rosen-Morse II
    worked example."""
    methods = ("exact", "wkb", "ft")
    rows = [compute_row(catalog.make_spec(fid), 0, methods)
            for fid in catalog.FAMILY_INFO]
    rows.append(compute_row(catalog.make_spec("rosen_morse_2", RM2_EXAMPLE),
                            0, methods))
    return rows


# ---------------------------------------------------------------------------
# output


def format_params(params: Mapping[str, float]) -> str:
    return ";".join(f"{k}={v:g}" for k, v in params.items())


def _record(row):
    return {
        "family": row.family_id,
        "params": format_params(row.params),
        "n": row.n,
        "e_exact": row.e_exact,
        "e_wkb": row.e_wkb,
        "e_swkb": row.e_swkb,
        "e_ft": row.e_ft,
        "pct_err_wkb": row.pct_err_wkb,
        "pct_err_ft": row.pct_err_ft,
    }


def _sig6(v):
    if v is None:
        return "-"
    return f"{v:.6g}"


def emit(rows: Sequence[ComparisonRow], fmt: str = "table",
         columns: Sequence[str] | None = None) -> str:
    """Render rows as an aligned table, CSV or JSON.

    ``columns`` restricts the table format only; CSV always carries the full
    header and JSON every field.
    """
    if not rows:
        raise ValueError("nothing to emit")
    if fmt == "json":
        out = []
        for row in rows:
            rec = _record(row)
            rec["params"] = dict(row.params)
            rec["energy_minus"] = dict(row.energy_minus)
            rec["note"] = row.note
            out.append(rec)
        return json.dumps(out, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for row in rows:
            rec = _record(row)
            writer.writerow(
                "" if rec[k] is None else
                (f"{rec[k]:.17e}" if isinstance(rec[k], float) else rec[k])
                for k in CSV_FIELDS)
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    cols = list(columns or CSV_FIELDS)
    body = []
    for row in rows:
        rec = _record(row)
        body.append([_sig6(rec[c]) if isinstance(rec[c], float) or rec[c] is None
                     else str(rec[c]) for c in cols])
    widths = [max(len(c), *(len(r[i]) for r in body)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(
            v.ljust(w) if i < 2 else v.rjust(w)
            for i, (v, w) in enumerate(zip(r, widths))))
    notes = [f"{row.family_id} n={row.n}: {row.note}" for row in rows if row.note]
    if notes:
        lines.append("")
        lines.extend(notes)
    return "\n".join(lines) + "\n"
