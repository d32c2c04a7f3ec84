"""Rank-2 alcove diagrams with nonemptiness/dimension annotations.

Renders the alcove tiling of a rank-2 (semisimple) datum through matplotlib
and writes it to a figure file (SVG by default), with a companion CSV of the
per-alcove verdicts next to it.  The engine itself stays exact: floats appear
only here, at presentation time, after all decisions have been made.

Alcoves are drawn for the Omega-coset of the class b, out to the requested
length; each alcove carries its dimension (or is left gray when empty), and
the shrunken region is shaded.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "classpoly"  # reproducible ids in SVG output

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as MplPolygon  # noqa: E402

from .adlv import SigmaClass, dim_adlv
from .affine_weyl import encode_element, is_shrunken, length
from .conjugacy import coset_elements_by_length
from .errors import InputError
from .hecke_cocenter import get_engine
from .intlinalg import solve_fraction
from .laurent import NEG_INFINITY
from .root_datum import RootDatum


def _euclidean_embedding(datum: RootDatum):
    """A W-invariant inner product, Cholesky-factored for drawing."""
    g = [[0.0, 0.0], [0.0, 0.0]]
    for a in datum.positive_roots:
        for i in range(2):
            for j in range(2):
                g[i][j] += float(a[i]) * float(a[j])
    l11 = math.sqrt(g[0][0])
    l12 = g[0][1] / l11
    l22 = math.sqrt(g[1][1] - l12 * l12)

    def embed(p):
        x, y = float(p[0]), float(p[1])
        return (l11 * x + l12 * y, l22 * y)

    return embed


def _base_alcove_vertices(datum: RootDatum):
    a1, a2 = datum.simple_roots
    theta = datum.highest_root(datum.components[0])
    v0 = (0, 0)
    v1 = solve_fraction(((a2[0], a2[1]), (theta[0], theta[1])), (0, 1))
    v2 = solve_fraction(((a1[0], a1[1]), (theta[0], theta[1])), (0, 1))
    return [v0, tuple(v1), tuple(v2)]


def render_alcove_diagram(datum: RootDatum, b: SigmaClass, max_len: int,
                          out_path, engine=None) -> tuple[Path, Path]:
    """Write the annotated alcove figure and its companion CSV.

    Returns (figure_path, csv_path).  Restricted to semisimple rank-2 data.
    """
    if datum.rank != 2 or datum.num_simples != 2 or len(datum.components) != 1:
        raise InputError("alcove diagrams need a semisimple rank-2 datum")
    if engine is None:
        engine = get_engine(datum)
    out_path = Path(out_path)
    csv_path = out_path.with_suffix(".csv")
    embed = _euclidean_embedding(datum)
    base = _base_alcove_vertices(datum)

    rows = []
    fig, ax = plt.subplots(figsize=(9, 9))
    for level in coset_elements_by_length(datum, b.invariant.kappa, max_len):
        for w in level:
            verts = [embed(w.apply(v)) for v in base]
            report = dim_adlv(w, b, engine=engine, with_methods=False)
            shrunken = is_shrunken(w)
            if report.nonempty:
                face = plt.cm.viridis(0.25 + 0.09 * min(report.dim, 8))
                label = str(report.dim)
            else:
                face = (0.92, 0.92, 0.92, 1.0)
                label = ""
            edge = "black" if shrunken else "dimgray"
            ax.add_patch(MplPolygon(verts, closed=True, facecolor=face,
                                    edgecolor=edge,
                                    linewidth=1.2 if shrunken else 0.5,
                                    alpha=0.9 if shrunken else 0.55))
            cx = sum(v[0] for v in verts) / 3
            cy = sum(v[1] for v in verts) / 3
            if label:
                ax.text(cx, cy, label, ha="center", va="center", fontsize=7)
            rows.append({
                "w": encode_element(w),
                "length": length(w),
                "shrunken": shrunken,
                "nonempty": report.nonempty,
                "dim": "-inf" if report.dim == NEG_INFINITY else report.dim,
            })
    ax.set_aspect("equal")
    ax.autoscale()
    ax.set_axis_off()
    ax.set_title(f"{datum.name}: dim X_w(b) for b with {b.describe()}\n"
                 f"alcoves to length {max_len}; shrunken region outlined")
    metadata = {"Date": None} if out_path.suffix == ".svg" else None
    fig.savefig(out_path, bbox_inches="tight", metadata=metadata)
    plt.close(fig)

    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=["w", "length", "shrunken",
                                                "nonempty", "dim"])
        writer.writeheader()
        writer.writerows(rows)
    return out_path, csv_path
