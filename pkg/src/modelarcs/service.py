"""HTTP layout service: computes layouts on demand for the viewer.

The loaded model table is immutable shared state; every endpoint is a pure
function of it and the query parameters, so responses are deterministic and
no locking is needed.  Layouts are recomputed per request (they take
microseconds at chart scale) rather than cached.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import HTMLResponse, JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import io as formats
from .encoding import PerformanceEncoder
from .errors import ConfigError
from .layout import LayoutConfig, build_layout
from .model_table import ModelTable, feature_importance_summary
from .svg import RenderConfig, render_svg

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>modelarcs</title></head>
<body>
<h1>modelarcs layout service</h1>
<p>No viewer assets configured (start with --static-dir to serve the viewer).</p>
<ul>
  <li><a href="/api/layout?spanning=240&amp;width=600">/api/layout?spanning=240&amp;width=600</a></li>
  <li><a href="/api/svg?spanning=240&amp;width=600">/api/svg?spanning=240&amp;width=600</a></li>
  <li><a href="/api/table">/api/table</a></li>
  <li><a href="/api/importance">/api/importance</a></li>
</ul>
</body></html>
"""


def _parse_chart_query(spanning: str, width: str) -> LayoutConfig:
    try:
        spanning_deg = float(spanning)
        width_px = float(width)
    except ValueError:
        raise ConfigError(
            f"spanning and width must be numbers, got spanning={spanning!r} width={width!r}"
        ) from None
    return LayoutConfig(arc_spanning=spanning_deg, canvas_width=width_px)


def create_app(
    table: ModelTable,
    meta: dict | None = None,
    static_dir: Path | None = None,
) -> FastAPI:
    """Build the service around one validated model table."""
    app = FastAPI(title="modelarcs", docs_url=None, redoc_url=None)
    table_json = formats.model_table_to_json(table, meta)
    importance_json = json.dumps(
        [
            {"feature": feature, "mean_performance": mean}
            for feature, mean in feature_importance_summary(table).items()
        ],
        indent=2,
    ) + "\n"

    def chart_inputs(spanning: str, width: str):
        config = _parse_chart_query(spanning, width)
        layout = build_layout(table, config)
        encoder = PerformanceEncoder().fit(table.entries.values())
        return layout, encoder

    @app.get("/api/layout")
    def api_layout(spanning: str = "240", width: str = "600"):
        try:
            layout, encoder = chart_inputs(spanning, width)
        except ConfigError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return Response(formats.layout_to_json(layout, encoder),
                        media_type="application/json")

    @app.get("/api/svg")
    def api_svg(spanning: str = "240", width: str = "600"):
        try:
            layout, encoder = chart_inputs(spanning, width)
        except ConfigError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return Response(render_svg(layout, encoder, RenderConfig()),
                        media_type="image/svg+xml")

    @app.get("/api/table")
    def api_table():
        return Response(table_json, media_type="application/json")

    @app.get("/api/importance")
    def api_importance():
        return Response(importance_json, media_type="application/json")

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="viewer")
    else:

        @app.get("/")
        def index():
            return HTMLResponse(_FALLBACK_PAGE)

    return app
