"""Grid scans over the shape regions and their CSV / JSON / SVG export."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cc import mass_map
from .domain import (
    INV_SQRT3,
    SQRT3,
    Region,
    bounding_box,
    concave_divider,
    in_region_mask,
    lower_boundary,
)
from .errors import KiteError
from .index import F_value, index_sign
from .stability import GAP_TOL, REAL_TOL, spectrum

SCAN_INSET = 1e-6
WHATS = ("index", "stability", "masses")
CSV_COLUMNS = ("xhat", "yhat", "in_region", "m1", "m3", "m", "F", "index",
               "n_complex", "n_real", "n_imag", "max_real", "stable")


@dataclass
class ScanRow:
    xhat: float
    yhat: float
    in_region: bool
    m1: Optional[float] = None
    m3: Optional[float] = None
    m: Optional[float] = None
    F: Optional[float] = None
    index: Optional[int] = None
    klass: Optional[tuple] = None
    max_real: Optional[float] = None
    stable: Optional[bool] = None

    def as_dict(self):
        k = self.klass or (None, None, None)
        return {
            "xhat": self.xhat, "yhat": self.yhat, "in_region": self.in_region,
            "m1": self.m1, "m3": self.m3, "m": self.m, "F": self.F, "index": self.index,
            "n_complex": k[0], "n_real": k[1], "n_imag": k[2],
            "max_real": self.max_real, "stable": self.stable,
        }


def grid_axes(region, n, inset=SCAN_INSET):
    x0, x1, y0, y1 = bounding_box(region)
    return np.linspace(x0 + inset, x1 - inset, n), np.linspace(y0 + inset, y1 - inset, n)


def evaluate_point(x, y, region, what, real_tol=REAL_TOL, gap_tol=GAP_TOL):
    """One scan cell; out-of-region cells carry coordinates only."""
    if not bool(in_region_mask(region, x, y)):
        return ScanRow(x, y, False)
    try:
        masses = mass_map((x, y))
    except KiteError:
        return ScanRow(x, y, False)
    row = ScanRow(x, y, True, masses.m1, masses.m3, masses.m)
    if what == "index":
        row.F = float(F_value((x, y)))
        row.index = index_sign((x, y), masses)
    elif what == "stability":
        rep = spectrum((x, y), masses, real_tol, gap_tol)
        row.klass = rep.klass
        row.max_real = rep.max_real
        row.stable = rep.stable
    return row


def _scan_column(args):
    x, ys, region, what, real_tol, gap_tol = args
    return [evaluate_point(float(x), float(y), region, what, real_tol, gap_tol) for y in ys]


def scan_region(region, n=300, what="index", n_jobs=1, real_tol=REAL_TOL, gap_tol=GAP_TOL):
    """``n * n`` rows over the inset bounding box of ``region``.

    Rows are ordered with ``xhat`` outer and ``yhat`` inner.  Cells outside
    the region are kept (``in_region=False``) so that grids line up.
    """
    if isinstance(region, str):
        region = Region.parse(region)
    if not region.is_open_region:
        raise ValueError(f"cannot scan {region.value}")
    if n < 2:
        raise ValueError("grid size must be at least 2")
    if what not in WHATS:
        raise ValueError(f"what must be one of {WHATS}, got {what!r}")
    xs, ys = grid_axes(region, n)
    tasks = [(x, ys, region, what, real_tol, gap_tol) for x in xs]
    if n_jobs == 1:
        columns = map(_scan_column, tasks)
    else:
        with ProcessPoolExecutor(max_workers=None if n_jobs < 0 else n_jobs) as pool:
            columns = list(pool.map(_scan_column, tasks))
    return [row for col in columns for row in col]


def mass_lines(region, n_lines=20, n_points=100):
    """Rows along ``n_lines`` vertical segments through ``region`` (mass-map image)."""
    if isinstance(region, str):
        region = Region.parse(region)
    x0, x1, y0, y1 = bounding_box(region)
    rows = []
    for x in np.linspace(x0, x1, n_lines + 2)[1:-1]:
        if region is Region.CONVEX:
            lo, hi = float(lower_boundary(x)), float(x)
        elif region is Region.CONCAVE1:
            lo, hi = -SQRT3, float(concave_divider(x))
        else:
            lo, hi = float(concave_divider(x)), 0.0
        for y in np.linspace(lo, hi, n_points + 2)[1:-1]:
            rows.append(evaluate_point(float(x), float(y), region, "masses"))
    return rows


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return "%.17g" % v


def to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        d = r.as_dict()
        w.writerow([_fmt(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(rows, meta):
    return json.dumps({"meta": meta, "rows": [r.as_dict() for r in rows]}, indent=1) + "\n"


# SVG colors keyed by spectrum class, following the usual labeling of the
# stability figures.
CLASS_COLORS = {
    (8, 0, 0): "#1f77b4", (4, 4, 0): "#ff7f0e", (4, 2, 2): "#2ca02c",
    (4, 0, 4): "#d62728", (0, 8, 0): "#9467bd", (0, 6, 2): "#8c564b",
    (0, 4, 4): "#e377c2", (0, 2, 6): "#7f7f7f", (0, 0, 8): "#17becf",
}
INDEX_COLORS = {1: "#d62728", -1: "#1f77b4", 0: "#000000"}


def _boundary_curves(region):
    if region is Region.CONVEX:
        xs = np.linspace(INV_SQRT3, SQRT3, 200)
        return [list(zip(xs, lower_boundary(xs))), list(zip(xs, xs)),
                [(SQRT3, 2.0 - SQRT3), (SQRT3, SQRT3)]]
    if region is Region.CONCAVE1:
        xs = np.linspace(SQRT3, 2.0 + SQRT3, 200)
        return [list(zip(xs, concave_divider(xs))), [(SQRT3, -SQRT3), (2.0 + SQRT3, -SQRT3)],
                [(SQRT3, -SQRT3), (SQRT3, -INV_SQRT3)]]
    xs = np.linspace(1.0, SQRT3, 200)
    return [list(zip(xs, concave_divider(xs))), [(1.0, 0.0), (SQRT3, 0.0)],
            [(SQRT3, -INV_SQRT3), (SQRT3, 0.0)]]


def to_svg(rows, region, width=600, height=600, curve=None):
    """Static scatter of a scan colored by index sign or spectrum class."""
    if isinstance(region, str):
        region = Region.parse(region)
    x0, x1, y0, y1 = bounding_box(region)
    pad, legend_w = 40, 150
    sx = (width - 2 * pad) / (x1 - x0)
    sy = (height - 2 * pad) / (y1 - y0)

    def px(x, y):
        return pad + (x - x0) * sx, height - pad - (y - y0) * sy

    by_class = any(r.klass is not None for r in rows)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + legend_w}" height="{height}">',
           f'<rect width="{width + legend_w}" height="{height}" fill="white"/>']
    n = max(1, int(math.isqrt(len(rows))))
    cell = max(1.0, (width - 2 * pad) / n)
    used = {}
    for r in rows:
        if not r.in_region:
            continue
        if by_class:
            key = r.klass
            color = CLASS_COLORS.get(key, "#000000")
        elif r.index is not None:
            key = r.index
            color = INDEX_COLORS[key]
        else:
            key, color = "masses", "#555555"
        used[key] = color
        cx, cy = px(r.xhat, r.yhat)
        out.append(f'<rect x="{cx - cell / 2:.2f}" y="{cy - cell / 2:.2f}" '
                   f'width="{cell:.2f}" height="{cell:.2f}" fill="{color}"/>')
    curves = _boundary_curves(region) + ([curve] if curve else [])
    for pts in curves:
        path = " ".join("%.2f,%.2f" % px(x, y) for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="black" stroke-width="1.5"/>')
    for i, (key, color) in enumerate(sorted(used.items(), key=lambda kv: str(kv[0]))):
        label = f"index {key:+d}" if isinstance(key, int) else str(key)
        y = pad + 20 * i
        out.append(f'<rect x="{width + 5}" y="{y}" width="12" height="12" fill="{color}"/>')
        out.append(f'<text x="{width + 22}" y="{y + 11}" font-size="12">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
