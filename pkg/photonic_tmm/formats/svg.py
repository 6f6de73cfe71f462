"""Deterministic SVG line plots."""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from collections.abc import Mapping, Sequence

import numpy as np

from photonic_tmm.errors import InvalidSeriesError

WIDTH = 800
HEIGHT = 500
MARGIN_LEFT = 80
MARGIN_RIGHT = 170
MARGIN_TOP = 40
MARGIN_BOTTOM = 60
TICK_COUNT = 6

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")

Series = tuple[Sequence[float], Sequence[float]]


def _nice_axis(lo: float, hi: float) -> tuple[float, float, np.ndarray]:
    """Round the range outward to a 1/2/2.5/5 step and return its ticks."""
    if hi <= lo:
        pad = abs(lo) * 0.05 or 0.5
        lo, hi = lo - pad, hi + pad
    raw = (hi - lo) / TICK_COUNT
    magnitude = 10.0 ** math.floor(math.log10(raw))
    step = next(m * magnitude for m in (1.0, 2.0, 2.5, 5.0, 10.0) if m * magnitude >= raw)
    lo = math.floor(lo / step) * step
    hi = math.ceil(hi / step) * step
    count = int(round((hi - lo) / step))
    return lo, hi, lo + step * np.arange(count + 1)


def _validated(series: Mapping[str, Series]) -> list[tuple[str, np.ndarray, np.ndarray]]:
    if not series:
        raise InvalidSeriesError("at least one series is required")
    result = []
    for name, (xs, ys) in series.items():
        x = np.asarray(xs, dtype=np.float64)
        y = np.asarray(ys, dtype=np.float64)
        if x.shape != y.shape or x.ndim != 1:
            raise InvalidSeriesError(f"series {name!r}: x and y must be 1-D of equal length")
        if len(x) < 2:
            raise InvalidSeriesError(f"series {name!r}: need at least 2 points, got {len(x)}")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise InvalidSeriesError(f"series {name!r}: non-finite values")
        result.append((name, x, y))
    return result


def _text(parent: ET.Element, x: float, y: float, label: str, **attr: str) -> None:
    node = ET.SubElement(parent, "text", x=f"{x:.2f}", y=f"{y:.2f}", **attr)
    node.text = label


def render_svg(
    series: Mapping[str, Series],
    x_label: str,
    y_label: str,
    title: str = "",
) -> bytes:
    """SVG 1.1 document with one polyline per series, ticked linear axes and a legend."""
    data = _validated(series)

    x_lo, x_hi, x_ticks = _nice_axis(min(float(x.min()) for _, x, _ in data), max(float(x.max()) for _, x, _ in data))
    y_lo, y_hi, y_ticks = _nice_axis(min(float(y.min()) for _, _, y in data), max(float(y.max()) for _, _, y in data))

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(value: float) -> float:
        return MARGIN_LEFT + (value - x_lo) / (x_hi - x_lo) * plot_w

    def py(value: float) -> float:
        return MARGIN_TOP + (y_hi - value) / (y_hi - y_lo) * plot_h

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(WIDTH),
        height=str(HEIGHT),
        viewBox=f"0 0 {WIDTH} {HEIGHT}",
    )
    ET.SubElement(root, "rect", x="0", y="0", width=str(WIDTH), height=str(HEIGHT), fill="white")
    if title:
        _text(root, WIDTH / 2, MARGIN_TOP / 2 + 5, title, **{"text-anchor": "middle", "font-size": "16"})

    axes = ET.SubElement(root, "g", stroke="black", fill="none", **{"stroke-width": "1"})
    ET.SubElement(axes, "rect", x=f"{MARGIN_LEFT}", y=f"{MARGIN_TOP}", width=f"{plot_w}", height=f"{plot_h}")

    labels = ET.SubElement(root, "g", **{"font-family": "sans-serif", "font-size": "12"})
    bottom = MARGIN_TOP + plot_h
    for tick in x_ticks:
        x = px(float(tick))
        ET.SubElement(axes, "line", x1=f"{x:.2f}", y1=f"{bottom:.2f}", x2=f"{x:.2f}", y2=f"{bottom + 5:.2f}")
        _text(labels, x, bottom + 20, f"{tick:.4g}", **{"text-anchor": "middle"})
    for tick in y_ticks:
        y = py(float(tick))
        ET.SubElement(axes, "line", x1=f"{MARGIN_LEFT - 5}", y1=f"{y:.2f}", x2=f"{MARGIN_LEFT}", y2=f"{y:.2f}")
        _text(labels, MARGIN_LEFT - 8, y + 4, f"{tick:.4g}", **{"text-anchor": "end"})

    _text(labels, MARGIN_LEFT + plot_w / 2, HEIGHT - 15, x_label, **{"text-anchor": "middle"})
    _text(
        labels, 20, MARGIN_TOP + plot_h / 2, y_label,
        **{"text-anchor": "middle", "transform": f"rotate(-90 20 {MARGIN_TOP + plot_h / 2:.2f})"},
    )

    curves = ET.SubElement(root, "g", fill="none", **{"stroke-width": "1.5"})
    legend = ET.SubElement(root, "g", **{"font-family": "sans-serif", "font-size": "12"})
    legend_x = MARGIN_LEFT + plot_w + 15
    for i, (name, x, y) in enumerate(data):
        color = PALETTE[i % len(PALETTE)]
        points = " ".join(f"{px(float(a)):.2f},{py(float(b)):.2f}" for a, b in zip(x, y))
        ET.SubElement(curves, "polyline", points=points, stroke=color)

        ly = MARGIN_TOP + 15 + 20 * i
        ET.SubElement(
            legend, "line", x1=f"{legend_x}", y1=f"{ly}", x2=f"{legend_x + 25}", y2=f"{ly}",
            stroke=color, **{"stroke-width": "2"},
        )
        _text(legend, legend_x + 32, ly + 4, name)

    body = ET.tostring(root, encoding="unicode")
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n").encode("utf-8")
