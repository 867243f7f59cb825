"""SVG and CSV renderings of the regions, the amoeba, its subdivision and the piles."""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path

import numpy as np

from .. import kernels
from ..errors import UnknownFigure
from ..regions import cyclic_map_arrays

FIGURES = ("regions-ST", "amoeba", "subdivision", "pile")
TENTACLE_LIMIT = 6.0
PILE_LAYERS = 8
PANEL = 320.0
PAD = 30.0

Curve = tuple[str, np.ndarray, np.ndarray]


def amoeba_curves(points: int = 200) -> list[Curve]:
    """Three boundary branches of U with |x|, |y| <= 6.

    The first-quadrant branch y = -log(1 - e^-x) is sampled on a log-spaced
    grid in x (which also contains x = log 2); the other two are its images
    under the cyclic map, which preserves the boundary.
    """
    lo = float(kernels.boundary_height(np.array([TENTACLE_LIMIT]))[0])
    x = np.unique(np.concatenate([np.geomspace(lo, TENTACLE_LIMIT, points), [math.log(2.0)]]))
    y = kernels.boundary_height(x)
    x1, y1 = cyclic_map_arrays(x, y)
    x2, y2 = cyclic_map_arrays(x1, y1)
    return [
        ("U boundary: e^-x + e^-y = 1", x, y),
        ("U boundary: e^-x = 1 + e^-y", x1, y1),
        ("U boundary: e^-y = 1 + e^-x", x2, y2),
    ]


def regions_curves(extent: float = 4.0) -> list[Curve]:
    pi = math.pi
    return [
        ("S edge: A + B = 1", np.array([1.0, 0.0]), np.array([0.0, 1.0])),
        ("S edge: A = 1 + B", np.array([1.0, extent]), np.array([0.0, extent - 1.0])),
        ("S edge: B = 1 + A", np.array([0.0, extent - 1.0]), np.array([1.0, extent])),
        ("T outline", np.array([0.0, pi, 0.0, 0.0]), np.array([0.0, 0.0, pi, 0.0])),
    ]


def subdivision_curves() -> list[Curve]:
    lim = TENTACLE_LIMIT
    third, half = math.pi / 3, math.pi / 2
    return [
        ("U asymptote x = 0 (U0 | U1)", np.array([0.0, 0.0]), np.array([0.0, lim])),
        ("U asymptote y = 0 (U0 | U2)", np.array([0.0, lim]), np.array([0.0, 0.0])),
        ("U asymptote x = y (U1 | U2)", np.array([0.0, -lim]), np.array([0.0, -lim])),
        ("T median 2a + b = pi (T0 | T1)", np.array([third, half]), np.array([third, 0.0])),
        ("T median a + 2b = pi (T0 | T2)", np.array([third, 0.0]), np.array([third, half])),
        ("T median a = b (T1 | T2)", np.array([third, half]), np.array([third, half])),
    ]


def pile_columns(layers: int = PILE_LAYERS, points: int = 400) -> tuple[list[str], list[np.ndarray]]:
    # stops at x = 3 so every layer stays resolvably below the boundary in double precision
    x = np.geomspace(0.05, 3.0, points)
    cols = [x, kernels.boundary_height(x)]
    names = ["x", "boundary"]
    for n in range(1, layers + 1):
        names.append(f"pile_{n}")
        cols.append(kernels.pile_heights(x, n))
    return names, cols


def _curves_for(which: str) -> list[Curve]:
    if which == "regions-ST":
        return regions_curves()
    if which == "amoeba":
        return amoeba_curves()
    if which == "subdivision":
        return subdivision_curves()
    raise UnknownFigure(which)


def to_csv(which: str) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if which == "pile":
        names, cols = pile_columns()
        writer.writerow(names)
        for row in zip(*(c.tolist() for c in cols)):
            writer.writerow([repr(v) for v in row])
        return buf.getvalue()
    curves = _curves_for(which)
    writer.writerow(["curve", "x", "y"])
    for name, xs, ys in curves:
        for x, y in zip(xs.tolist(), ys.tolist()):
            writer.writerow([name, repr(x), repr(y)])
    return buf.getvalue()


class _Panel:
    """Maps a math-coordinate window onto a square pixel panel."""

    def __init__(self, xmin, xmax, ymin, ymax, left):
        self.xmin, self.xmax, self.ymin, self.ymax = xmin, xmax, ymin, ymax
        self.left = left
        self.sx = PANEL / (xmax - xmin)
        self.sy = PANEL / (ymax - ymin)

    def transform(self) -> str:
        # first quadrant up and to the right
        tx = self.left - self.xmin * self.sx
        ty = PAD + self.ymax * self.sy
        return f"matrix({self.sx!r} 0 0 {-self.sy!r} {tx!r} {ty!r})"

    def pixel(self, x, y) -> tuple[float, float]:
        return self.left + (x - self.xmin) * self.sx, PAD + (self.ymax - y) * self.sy


_COLORS = ("#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#2e4053")


def _polyline(xs, ys, color, dash=False) -> str:
    pts = " ".join(f"{x!r},{y!r}" for x, y in zip(xs.tolist(), ys.tolist()))
    extra = ' stroke-dasharray="4 3"' if dash else ""
    return (f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5" '
            f'vector-effect="non-scaling-stroke"{extra}/>')


def _axes(panel: _Panel) -> list[str]:
    out = []
    x0, y0 = panel.pixel(panel.xmin, 0.0)
    x1, _ = panel.pixel(panel.xmax, 0.0)
    out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" style="stroke:#999;stroke-width:0.75"/>')
    xa, ya0 = panel.pixel(0.0, panel.ymin)
    _, ya1 = panel.pixel(0.0, panel.ymax)
    out.append(f'<line x1="{xa:.2f}" y1="{ya0:.2f}" x2="{xa:.2f}" y2="{ya1:.2f}" style="stroke:#999;stroke-width:0.75"/>')
    return out


def _text(panel: _Panel, x, y, label, size=12) -> str:
    px, py = panel.pixel(x, y)
    return f'<text x="{px:.2f}" y="{py:.2f}" style="font:{size}px sans-serif;fill:#222">{label}</text>'


def to_svg(which: str) -> str:
    body: list[str] = []
    width = PANEL + 2 * PAD
    if which == "amoeba":
        lim = TENTACLE_LIMIT
        panel = _Panel(-lim, lim, -lim, lim, PAD)
        body += _axes(panel)
        body.append(f'<g transform="{panel.transform()}">')
        for i, (_, xs, ys) in enumerate(amoeba_curves()):
            body.append(_polyline(xs, ys, _COLORS[i]))
        body.append("</g>")
        body.append(_text(panel, 0.6, 0.6, "U"))
        body.append(_text(panel, 1.2, 2.0, "e^-x + e^-y = 1", 10))
        note = f"tentacles truncated at |x|, |y| &lt;= {lim:g}"
    elif which == "regions-ST":
        width = 2 * PANEL + 3 * PAD
        s_panel = _Panel(0.0, 4.0, 0.0, 4.0, PAD)
        t_panel = _Panel(0.0, 3.5, 0.0, 3.5, 2 * PAD + PANEL)
        curves = regions_curves()
        for panel, group in ((s_panel, curves[:3]), (t_panel, curves[3:])):
            body += _axes(panel)
            body.append(f'<g transform="{panel.transform()}">')
            for i, (_, xs, ys) in enumerate(group):
                body.append(_polyline(xs, ys, _COLORS[i]))
            body.append("</g>")
        body.append(_text(s_panel, 1.6, 1.6, "S"))
        body.append(_text(t_panel, 0.8, 0.8, "T"))
        body.append(_text(s_panel, 3.7, 0.15, "A"))
        body.append(_text(s_panel, 0.1, 3.7, "B"))
        body.append(_text(t_panel, 3.2, 0.15, "alpha"))
        body.append(_text(t_panel, 0.1, 3.3, "beta"))
        note = "S is unbounded; edges drawn up to A, B &lt;= 4"
    elif which == "subdivision":
        width = 2 * PANEL + 3 * PAD
        lim = TENTACLE_LIMIT
        u_panel = _Panel(-lim, lim, -lim, lim, PAD)
        t_panel = _Panel(0.0, 3.5, 0.0, 3.5, 2 * PAD + PANEL)
        body += _axes(u_panel) + _axes(t_panel)
        body.append(f'<g transform="{u_panel.transform()}">')
        for i, (_, xs, ys) in enumerate(amoeba_curves()):
            body.append(_polyline(xs, ys, "#444"))
        curves = subdivision_curves()
        for i, (_, xs, ys) in enumerate(curves[:3]):
            body.append(_polyline(xs, ys, _COLORS[i], dash=True))
        body.append("</g>")
        body.append(f'<g transform="{t_panel.transform()}">')
        pi = math.pi
        body.append(_polyline(np.array([0.0, pi, 0.0, 0.0]), np.array([0.0, 0.0, pi, 0.0]), "#444"))
        for i, (_, xs, ys) in enumerate(curves[3:]):
            body.append(_polyline(xs, ys, _COLORS[i], dash=True))
        body.append("</g>")
        body.append(_text(u_panel, 1.5, 1.5, "U0"))
        body.append(_text(u_panel, -3.0, 0.8, "U1"))
        body.append(_text(u_panel, 0.8, -3.0, "U2"))
        body.append(_text(t_panel, 0.5, 0.5, "T0"))
        body.append(_text(t_panel, 1.9, 0.4, "T1"))
        body.append(_text(t_panel, 0.3, 1.9, "T2"))
        note = f"asymptotes meet at (0, 0); tentacles truncated at |x|, |y| &lt;= {lim:g}"
    elif which == "pile":
        names, cols = pile_columns()
        panel = _Panel(0.0, 3.0, 0.0, 3.0, PAD)
        body += _axes(panel)
        body.append(f'<g transform="{panel.transform()}">')
        x = cols[0]
        for i, col in enumerate(cols[2:]):
            shade = 0.85 - 0.6 * i / max(1, len(cols) - 3)
            grey = f"#{int(255 * shade):02x}{int(255 * shade):02x}{int(255 * shade):02x}"
            body.append(_polyline(x, col, grey))
        body.append(_polyline(x, cols[1], _COLORS[1]))
        body.append("</g>")
        body.append(_text(panel, 0.8, 2.2, "e^-x + e^-y = 1", 10))
        note = f"first {len(cols) - 2} layers of the pile under the boundary of U0"
    else:
        raise UnknownFigure(which)
    height = PANEL + 2 * PAD + 20
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
            f'viewBox="0 0 {width:g} {height:g}">')
    legend = f'<text x="{PAD:g}" y="{height - 8:g}" style="font:10px sans-serif;fill:#555">{note}</text>'
    return "\n".join([head, '<rect width="100%" height="100%" style="fill:white"/>', *body, legend, "</svg>", ""])


def render_figure(which: str, out: str | Path, fmt: str = "svg") -> Path:
    if which not in FIGURES:
        raise UnknownFigure(which)
    if fmt == "svg":
        text = to_svg(which)
    elif fmt == "csv":
        text = to_csv(which)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    path = Path(out)
    path.write_text(text)
    return path
