"""CSV, JSON and SVG writers for experiment artifacts."""

from __future__ import annotations

import csv
import json
from html import escape
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .modes import ModeLabel

__all__ = [
    "fmt_float",
    "fmt_x128",
    "write_csv",
    "write_json",
    "distribution_rows",
    "joint_rows",
    "line_plot_svg",
    "heatmap_svg",
]


def fmt_float(x: float) -> str:
    """Shortest round-trip representation of a double."""
    return repr(float(x))


def fmt_x128(p: float) -> str:
    """Probability scaled by 128, formatted like the reference tables."""
    v = round(p * 128.0, 9)
    if v == 0:
        v = 0.0
    return f"{v:g}"


def _cell(v) -> str:
    if isinstance(v, ModeLabel):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    return str(v)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([_cell(v) for v in row] for row in rows)
    return path


def write_json(path: Path, experiment: str, steps: int, initial: str, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"experiment": experiment, "steps": steps, "initial": initial, "data": data}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return path


def distribution_rows(dist: dict[int, float]) -> list[tuple[int, float]]:
    return [(q, float(dist[q])) for q in sorted(dist)]


def joint_rows(joint: dict[tuple[int, int], float], x128: bool = False) -> list[tuple]:
    """Rows ``q1, q2, P`` with ``q1 >= q2``, sorted by ``(q1, q2)``."""
    rows = []
    for (q1, q2) in sorted(joint):
        p = joint[(q1, q2)]
        rows.append((q1, q2, p, fmt_x128(p)) if x128 else (q1, q2, p))
    return rows


_W, _H, _PAD = 640, 400, 50
_COLORS = ("#000000", "#d62728", "#1f77b4", "#2ca02c")


def line_plot_svg(path: Path, xs: Sequence[float], series: dict[str, Sequence[float]],
                  title: str = "", xlabel: str = "q", ylabel: str = "P") -> Path:
    """Static polyline plot, one line per series."""
    xs = np.asarray(xs, dtype=float)
    ymax = max(float(np.max(v)) for v in series.values()) or 1.0
    xmin, xmax = float(xs.min()), float(xs.max())
    span = (xmax - xmin) or 1.0

    def px(x):
        return _PAD + (x - xmin) / span * (_W - 2 * _PAD)

    def py(y):
        return _H - _PAD - y / ymax * (_H - 2 * _PAD)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<text x="{_W / 2}" y="{_PAD / 2}" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<text x="{_W / 2}" y="{_H - 10}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>',
        f'<text x="12" y="{_H / 2}" font-size="12">{escape(ylabel)}</text>',
        f'<text x="{_PAD}" y="{_H - _PAD + 15}" text-anchor="middle" font-size="10">{xmin:g}</text>',
        f'<text x="{_W - _PAD}" y="{_H - _PAD + 15}" text-anchor="middle" font-size="10">{xmax:g}</text>',
        f'<text x="{_PAD - 5}" y="{_PAD}" text-anchor="end" font-size="10">{ymax:.3g}</text>',
    ]
    for i, (name, ys) in enumerate(series.items()):
        color = _COLORS[i % len(_COLORS)]
        dash = "" if i == 0 else ' stroke-dasharray="6,3"'
        pts = " ".join(f"{px(x):.2f},{py(float(y)):.2f}" for x, y in zip(xs, ys))
        parts.append(f'<polyline fill="none" stroke="{color}"{dash} points="{pts}"/>')
        parts.append(
            f'<text x="{_W - _PAD}" y="{_PAD + 15 * (i + 1)}" text-anchor="end" font-size="11" '
            f'fill="{color}">{escape(name)}</text>'
        )
    parts.append("</svg>")
    return _write_text(path, "\n".join(parts) + "\n")


def heatmap_svg(path: Path, sites: Sequence[int], matrix: np.ndarray, title: str = "") -> Path:
    """Grayscale heatmap of a site-by-site matrix; ``q1`` along x, ``q2`` along y."""
    matrix = np.asarray(matrix, dtype=float)
    n = len(sites)
    size = min(_W, _H) - 2 * _PAD
    cell = size / max(n, 1)
    vmax = float(matrix.max()) or 1.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size + 2 * _PAD}" height="{size + 2 * _PAD}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{(size + 2 * _PAD) / 2}" y="{_PAD / 2}" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]
    for i in range(n):
        for j in range(n):
            shade = int(round(255 * (1.0 - matrix[i, j] / vmax)))
            x = _PAD + j * cell
            y = _PAD + (n - 1 - i) * cell
            parts.append(
                f'<rect x="{x:.2f}" y="{y:.2f}" width="{cell:.2f}" height="{cell:.2f}" '
                f'fill="rgb({shade},{shade},{shade})"/>'
            )
    parts.append(f'<text x="{_PAD}" y="{_PAD + size + 15}" font-size="10">{sites[0]}</text>')
    parts.append(f'<text x="{_PAD + size}" y="{_PAD + size + 15}" text-anchor="end" font-size="10">{sites[-1]}</text>')
    parts.append("</svg>")
    return _write_text(path, "\n".join(parts) + "\n")


def _write_text(path: Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path
