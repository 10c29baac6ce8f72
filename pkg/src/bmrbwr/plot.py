"""Static SVG convergence plots built from trace CSV files."""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .harness import read_trace_csv

WIDTH, HEIGHT = 720, 440
MARGIN = dict(left=90, right=150, top=30, bottom=60)
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def series_from_traces(traces: dict) -> dict:
    """Mean best-so-far curve per algorithm, keyed by the run_id prefix."""
    groups: dict = {}
    for rid, cols in traces.items():
        groups.setdefault(rid.split(":", 1)[0], []).append(cols)
    out = {}
    for algo, runs in groups.items():
        length = max(len(r["iteration"]) for r in runs)
        total = np.zeros(length)
        count = np.zeros(length)
        iters = np.zeros(length)
        for r in runs:
            k = len(r["iteration"])
            total[:k] += r["best_penalized"]
            count[:k] += 1
            iters[:k] = r["iteration"]
        out[algo] = (iters, total / count)
    return out


def _ticks(lo: float, hi: float, n: int = 5) -> np.ndarray:
    if hi == lo:
        return np.array([lo])
    return np.linspace(lo, hi, n)


def _num(x: float) -> str:
    return f"{x:.2f}"


def render_svg(series: dict, title: str = "", log_scale: bool = False) -> str:
    if not series:
        raise ValueError("nothing to plot")
    xs = np.concatenate([s[0] for s in series.values()])
    ys = np.concatenate([s[1] for s in series.values()])
    if log_scale:
        positive = ys[ys > 0]
        if positive.size == 0:
            log_scale = False
        else:
            floor = positive.min()
            series = {k: (x, np.log10(np.maximum(y, floor))) for k, (x, y) in series.items()}
            ys = np.concatenate([s[1] for s in series.values()])
    finite = ys[np.isfinite(ys)]
    y_lo, y_hi = (finite.min(), finite.max()) if finite.size else (0.0, 1.0)
    x_lo, x_hi = float(xs.min()), float(xs.max())
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5

    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def px(x):
        return MARGIN["left"] + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y):
        return MARGIN["top"] + (y_hi - y) / (y_hi - y_lo) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           '<rect width="100%" height="100%" fill="white"/>',
           f'<rect x="{MARGIN["left"]}" y="{MARGIN["top"]}" width="{pw}" height="{ph}" '
           'fill="none" stroke="black"/>']
    if title:
        out.append(f'<text x="{MARGIN["left"] + pw / 2:.2f}" y="20" text-anchor="middle" '
                   f'font-size="14">{escape(title)}</text>')
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        out.append(f'<line x1="{_num(x)}" y1="{MARGIN["top"] + ph}" x2="{_num(x)}" '
                   f'y2="{MARGIN["top"] + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{_num(x)}" y="{MARGIN["top"] + ph + 18}" text-anchor="middle" '
                   f'font-size="11">{t:.6g}</text>')
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        label = f"1e{t:.3g}" if log_scale else f"{t:.4g}"
        out.append(f'<line x1="{MARGIN["left"] - 5}" y1="{_num(y)}" x2="{MARGIN["left"]}" '
                   f'y2="{_num(y)}" stroke="black"/>')
        out.append(f'<text x="{MARGIN["left"] - 8}" y="{_num(y + 4)}" text-anchor="end" '
                   f'font-size="11">{label}</text>')
    out.append(f'<text x="{MARGIN["left"] + pw / 2:.2f}" y="{HEIGHT - 15}" '
               'text-anchor="middle" font-size="13">Iteration</text>')
    ylab = "Mean best penalized fitness" + (" (log10)" if log_scale else "")
    cy = MARGIN["top"] + ph / 2
    out.append(f'<text x="20" y="{cy:.2f}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 20 {cy:.2f})">{ylab}</text>')

    lx = MARGIN["left"] + pw + 15
    for i, (name, (x, y)) in enumerate(series.items()):
        color = COLORS[i % len(COLORS)]
        keep = np.isfinite(y)
        pts = [(px(a), py(b)) for a, b in zip(x[keep], y[keep])]
        tag = f'class="series" data-series="{escape(name)}"'
        if len(pts) == 1:
            out.append(f'<circle {tag} cx="{_num(pts[0][0])}" cy="{_num(pts[0][1])}" r="4" '
                       f'fill="{color}"/>')
        elif pts:
            coords = " ".join(f"{_num(a)},{_num(b)}" for a, b in pts)
            out.append(f'<polyline {tag} fill="none" stroke="{color}" stroke-width="1.5" '
                       f'points="{coords}"/>')
        ly = MARGIN["top"] + 15 + 20 * i
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" '
                   'stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}" font-size="12">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_csv(csv_path, svg_path, title: str = "", log_scale: bool = False) -> Path:
    series = series_from_traces(read_trace_csv(csv_path))
    svg_path = Path(svg_path)
    svg_path.parent.mkdir(parents=True, exist_ok=True)
    svg_path.write_text(render_svg(series, title, log_scale))
    return svg_path
