"""Chamber-fan slices rendered to SVG.

Slicing happens in exact arithmetic; coordinates only become floats inside
matplotlib. Output is reproducible: fixed hash salt, no timestamp metadata,
and colors keyed to a stable digest of each chamber's support set.
"""

from __future__ import annotations

import colorsys
import hashlib
from fractions import Fraction
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .errors import InputError, UnboundedSliceError, UnsupportedError  # noqa: E402
from .polytopes import convex_hull_2d, hyperplane_slice  # noqa: E402
from .variety import VarietyData, ZariskiChamber  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "okzar"


def support_color(support: Sequence[int]) -> str:
    digest = hashlib.sha256(("support:" + ",".join(map(str, support))).encode()).digest()
    hue = digest[0] / 255.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.45, 0.92)
    return "#{:02x}{:02x}{:02x}".format(int(r * 255), int(g * 255), int(b * 255))


def slice_cells(
    v: VarietyData, chambers: Sequence[ZariskiChamber], hyperplane: Sequence
) -> list[dict]:
    """Intersect every chamber with {h.x = 1}; empty cells are dropped and
    unbounded ones reported without geometry."""
    coeffs = [Fraction(x) for x in hyperplane]
    if len(coeffs) != v.n:
        raise InputError(f"hyperplane needs {v.n} coefficients")
    if all(c <= 0 for c in coeffs):
        raise InputError("hyperplane misses the interior of the effective cone")
    cells = []
    for ch in chambers:
        entry = {
            "support": list(ch.support),
            "generators": ch.generator_labels(),
            "color": support_color(ch.support),
        }
        try:
            poly = hyperplane_slice(ch.cone, coeffs)
        except UnboundedSliceError:
            entry["unbounded"] = True
            entry["vertices"] = []
            cells.append(entry)
            continue
        if poly.is_empty:
            continue
        entry["unbounded"] = False
        entry["vertices"] = [[str(c) for c in vert] for vert in poly.vertices]
        entry["_exact_vertices"] = poly.vertices
        cells.append(entry)
    return cells


def _drop_pivot(hyperplane: Sequence[Fraction]) -> int:
    """Coordinate to eliminate when flattening the slice plane."""
    best = max(range(len(hyperplane)), key=lambda i: (abs(hyperplane[i]), -i))
    return best


def _project(vertex: Sequence[Fraction], pivot: int, mix: Sequence[Sequence[Fraction]]) -> tuple:
    reduced = [c for i, c in enumerate(vertex) if i != pivot]
    return tuple(sum(row[j] * reduced[j] for j in range(len(reduced))) for row in mix)


_MIX_2 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
# fixed generic projection for 3-dimensional cells
_MIX_3 = (
    (Fraction(1), Fraction(1, 3), Fraction(1, 9)),
    (Fraction(0), Fraction(1), Fraction(1, 4)),
)


def render_cells_svg(cells: list[dict], hyperplane: Sequence, out_path: str) -> None:
    coeffs = [Fraction(x) for x in hyperplane]
    pivot = _drop_pivot(coeffs)
    mix = _MIX_2 if len(coeffs) == 3 else _MIX_3
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    drawn = False
    for cell in cells:
        verts = cell.get("_exact_vertices")
        if not verts:
            continue
        pts2d = [_project(vt, pivot, mix) for vt in verts]
        hull = convex_hull_2d(pts2d)
        if len(hull) < 2:
            continue
        xs = [float(p[0]) for p in hull]
        ys = [float(p[1]) for p in hull]
        ax.fill(xs, ys, color=cell["color"], alpha=0.75, edgecolor="black", linewidth=0.8)
        cx = sum(xs) / len(xs)
        cy = sum(ys) / len(ys)
        ax.text(cx, cy, ",".join(cell["generators"]), ha="center", va="center", fontsize=7)
        drawn = True
    if not drawn:
        ax.text(0.5, 0.5, "no bounded cells", ha="center", va="center")
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_chambers(
    v: VarietyData,
    chambers: Sequence[ZariskiChamber],
    hyperplane: Sequence,
    out_path: str,
) -> list[dict]:
    """Slice, render the SVG, and return the JSON-ready cell list."""
    if v.n not in (3, 4):
        raise UnsupportedError("chamber plots are available in dimensions 3 and 4")
    cells = slice_cells(v, chambers, hyperplane)
    render_cells_svg(cells, hyperplane, out_path)
    for cell in cells:
        cell.pop("_exact_vertices", None)
    return cells
