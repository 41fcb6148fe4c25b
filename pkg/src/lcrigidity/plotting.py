"""Figure rendering for frameworks.

Draws a realized framework: vertices as labeled points, edges as
segments, and each loop as a dashed slider line through its vertex,
perpendicular to the loop normal.
"""

import csv
import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def _float_point(xs):
    return tuple(float(Fraction(x)) for x in xs)


def draw_framework(g, r, path, title=None):
    """Render one framework to an image file."""
    fig, ax = plt.subplots(figsize=(5, 5))
    pts = {v: _float_point(r.p[v]) for v in g.vertices}
    xs = [x for x, _ in pts.values()] or [0.0]
    ys = [y for _, y in pts.values()] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    for u, v in g.edges:
        ax.plot(
            [pts[u][0], pts[v][0]], [pts[u][1], pts[v][1]], color="black", zorder=1
        )
    for lid, w in g.loops:
        qx, qy = _float_point(r.q[lid])
        norm = (qx * qx + qy * qy) ** 0.5
        # slider direction is perpendicular to the loop normal
        dx, dy = -qy / norm, qx / norm
        h = 0.25 * span
        x0, y0 = pts[w]
        ax.plot(
            [x0 - h * dx, x0 + h * dx],
            [y0 - h * dy, y0 + h * dy],
            color="tab:blue",
            linestyle="--",
            linewidth=1,
            zorder=0,
        )
    for v, (x, y) in pts.items():
        ax.plot([x], [y], marker="o", color="tab:red", zorder=2)
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(4, 4))
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report(g, realizations, outdir):
    """Write one figure per realization plus a CSV of exact coordinates.

    Returns the list of files written.
    """
    os.makedirs(outdir, exist_ok=True)
    written = []
    csv_path = os.path.join(outdir, "realizations.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["realization", "vertex", "x", "y"])
        for i, r in enumerate(realizations):
            for v in g.vertices:
                writer.writerow([i, v] + [str(x) for x in r.p[v]])
    written.append(csv_path)
    for i, r in enumerate(realizations):
        path = os.path.join(outdir, "realization_%02d.png" % i)
        draw_framework(g, r, path, title="realization %d" % i)
        written.append(path)
    return written
