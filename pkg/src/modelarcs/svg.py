"""Deterministic standalone SVG rendering of a layout.

Output is reproducible byte for byte: fixed-precision numbers, no ids or
timestamps derived from anything but the input, element order fixed (arcs
inner to outer, lines in creation order, then points, labels, legend).
Every arc and line carries a <title> with its feature path and score, so
hovering shows a tooltip even in a plain image viewer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .encoding import PerformanceEncoder, rgb_to_hex
from .errors import ConfigError
from .layout import Layout

POINT_RADIUS = 2.5
POINT_COLOUR = "#1f1f1f"
LABEL_COLOUR = "#111111"


@dataclass(frozen=True)
class RenderConfig:
    show_points: bool = True
    label_font_size: float = 12.0
    legend: bool = True
    decimal_precision: int = 3

    def __post_init__(self):
        if not 1 <= self.decimal_precision <= 6:
            raise ConfigError(
                f"decimal_precision must be in 1..6, got {self.decimal_precision}"
            )


def polar_to_cartesian(
    radius: float, angle_deg: float, centre: tuple[float, float] = (0.0, 0.0)
) -> tuple[float, float]:
    """Screen coordinates of a polar point; y grows downward."""
    theta = math.radians(angle_deg)
    return (centre[0] + radius * math.cos(theta), centre[1] - radius * math.sin(theta))


def _formatter(precision: int):
    zero = f"0.{'0' * precision}"

    def fmt(value: float) -> str:
        text = f"{value:.{precision}f}"
        return zero if text == f"-{zero}" else text

    return fmt


def _arc_path(radius: float, extent: float, centre: tuple[float, float], fmt) -> str:
    cx, cy = centre
    x0, y0 = polar_to_cartesian(radius, 0.0, centre)
    if extent >= 360.0:
        # Extents can exceed a full turn; draw the complete circle.
        xh, yh = polar_to_cartesian(radius, 180.0, centre)
        r = fmt(radius)
        return (
            f"M {fmt(x0)} {fmt(y0)} A {r} {r} 0 1 0 {fmt(xh)} {fmt(yh)} "
            f"A {r} {r} 0 1 0 {fmt(x0)} {fmt(y0)}"
        )
    x1, y1 = polar_to_cartesian(radius, extent, centre)
    large = 1 if extent > 180.0 else 0
    r = fmt(radius)
    return f"M {fmt(x0)} {fmt(y0)} A {r} {r} 0 {large} 0 {fmt(x1)} {fmt(y1)}"


def _title(path: tuple[str, ...], performance: float, fmt) -> str:
    names = escape(", ".join(path))
    return f"<title>features=[{names}]; performance={fmt(performance)}</title>"


def render_svg(
    layout: Layout,
    encoder: PerformanceEncoder,
    config: RenderConfig = RenderConfig(),
) -> str:
    """Render a layout to a standalone SVG document string."""
    width = layout.config.canvas_width
    height = layout.config.canvas_height
    if width <= 0 or height <= 0:
        raise ConfigError("canvas has zero or negative size")
    fmt = _formatter(config.decimal_precision)
    centre = (width / 2.0, height / 2.0)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(width)}" '
        f'height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f'<rect x="0" y="0" width="{fmt(width)}" height="{fmt(height)}" fill="#ffffff"/>',
    ]

    for arc in layout.arcs:
        out.append(
            f'<path d="{_arc_path(arc.radius, arc.extent, centre, fmt)}" fill="none" '
            f'stroke="{encoder.hex_for(arc.performance)}" '
            f'stroke-width="{fmt(encoder.width_for(arc.performance))}">'
            f"{_title((arc.feature,), arc.performance, fmt)}</path>"
        )

    for line in layout.lines:
        x1, y1 = polar_to_cartesian(line.start.radius, line.start.angle, centre)
        x2, y2 = polar_to_cartesian(line.end.radius, line.end.angle, centre)
        out.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{encoder.hex_for(line.performance)}" '
            f'stroke-width="{fmt(encoder.width_for(line.performance))}" '
            f'stroke-linecap="round">{_title(line.path, line.performance, fmt)}</line>'
        )

    if config.show_points:
        seen = set()
        for line in layout.lines:
            for point in (line.start, line.end):
                x, y = polar_to_cartesian(point.radius, point.angle, centre)
                coords = (fmt(x), fmt(y))
                if coords in seen:
                    continue
                seen.add(coords)
                out.append(
                    f'<circle cx="{coords[0]}" cy="{coords[1]}" r="{fmt(POINT_RADIUS)}" '
                    f'fill="{POINT_COLOUR}"/>'
                )

    for arc in layout.arcs:
        # Label sits just past the far end of the arc, nudged ~8 px along it.
        nudge = math.degrees(8.0 / arc.radius)
        x, y = polar_to_cartesian(arc.radius, min(arc.extent, 360.0) + nudge, centre)
        out.append(
            f'<text x="{fmt(x)}" y="{fmt(y)}" font-family="sans-serif" '
            f'font-size="{fmt(config.label_font_size)}" fill="{LABEL_COLOUR}">'
            f"{escape(arc.feature)}</text>"
        )

    if config.legend:
        out.extend(_legend(encoder, width, height, config, fmt))

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _legend(
    encoder: PerformanceEncoder, width: float, height: float, config: RenderConfig, fmt
) -> list[str]:
    lo, hi = encoder._resolved_domain()
    bar_x, bar_h = 12.0, 10.0
    bar_w = min(220.0, width - 2 * bar_x)
    bar_y = height - bar_h - 14.0
    stops = "".join(
        f'<stop offset="{fmt(fraction)}" stop-color="{rgb_to_hex(tuple(int(c) for c in rgb))}"/>'
        for fraction, rgb in encoder.colour_stops
    )
    label_y = bar_y + bar_h + 11.0
    font = fmt(min(config.label_font_size, 10.0))
    return [
        f'<defs><linearGradient id="performance-scale" x1="0" y1="0" x2="1" y2="0">{stops}'
        "</linearGradient></defs>",
        f'<rect x="{fmt(bar_x)}" y="{fmt(bar_y)}" width="{fmt(bar_w)}" height="{fmt(bar_h)}" '
        f'fill="url(#performance-scale)" stroke="#999999" stroke-width="{fmt(0.5)}"/>',
        f'<text x="{fmt(bar_x)}" y="{fmt(label_y)}" font-family="sans-serif" '
        f'font-size="{font}" fill="{LABEL_COLOUR}">{fmt(lo)}</text>',
        f'<text x="{fmt(bar_x + bar_w)}" y="{fmt(label_y)}" font-family="sans-serif" '
        f'font-size="{font}" fill="{LABEL_COLOUR}" text-anchor="end">{fmt(hi)}</text>',
    ]
