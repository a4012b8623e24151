"""File formats: model-table JSON and layout JSON, with schemas.

Both formats are plain UTF-8 JSON.  Serialisation is deterministic (sorted
keys, floats rounded to a fixed precision) so identical inputs produce
identical bytes, which the CLI and service rely on.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .encoding import PerformanceEncoder, rgb_to_hex
from .errors import ValidationError
from .layout import Layout, PolarPoint
from .model_table import ModelTable, canonical_path, validate_table
from .svg import polar_to_cartesian

JSON_PRECISION = 3

MODEL_TABLE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["features", "models"],
    "properties": {
        "features": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "string", "minLength": 1},
        },
        "models": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["features", "performance"],
                "properties": {
                    "features": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "string"},
                    },
                    "performance": {"type": "number"},
                },
            },
        },
        "meta": {
            "type": "object",
            "properties": {
                "algorithm": {"type": "string"},
                "dataset": {"type": "string"},
            },
        },
    },
}

_POLAR_POINT_SCHEMA = {
    "type": "object",
    "required": ["angle_deg", "radius", "x", "y"],
    "properties": {
        "angle_deg": {"type": "number"},
        "radius": {"type": "number", "minimum": 0},
        "x": {"type": "number"},
        "y": {"type": "number"},
    },
}

LAYOUT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["config", "arcs", "lines", "legend"],
    "properties": {
        "config": {
            "type": "object",
            "required": ["arc_spanning", "canvas_width", "canvas_height", "arc_extent_mode"],
            "properties": {
                "arc_spanning": {"type": "number", "exclusiveMinimum": 0, "maximum": 360},
                "canvas_width": {"type": "number", "exclusiveMinimum": 0},
                "canvas_height": {"type": "number", "exclusiveMinimum": 0},
                "arc_extent_mode": {"enum": ["paper", "cover_points"]},
            },
        },
        "arcs": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["feature", "radius", "extent_deg", "performance",
                             "width_px", "colour_hex"],
                "properties": {
                    "feature": {"type": "string", "minLength": 1},
                    "radius": {"type": "number", "exclusiveMinimum": 0},
                    "extent_deg": {"type": "number", "minimum": 0},
                    "performance": {"type": "number"},
                    "width_px": {"type": "number", "exclusiveMinimum": 0},
                    "colour_hex": {"type": "string", "pattern": "^#[0-9a-f]{6}$"},
                },
            },
        },
        "lines": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["features", "performance", "start", "end",
                             "width_px", "colour_hex", "parent"],
                "properties": {
                    "features": {
                        "type": "array",
                        "minItems": 2,
                        "items": {"type": "string"},
                    },
                    "performance": {"type": "number"},
                    "start": _POLAR_POINT_SCHEMA,
                    "end": _POLAR_POINT_SCHEMA,
                    "width_px": {"type": "number", "exclusiveMinimum": 0},
                    "colour_hex": {"type": "string", "pattern": "^#[0-9a-f]{6}$"},
                    "parent": {
                        "oneOf": [
                            {"type": "null"},
                            {"type": "array", "minItems": 2, "items": {"type": "string"}},
                        ]
                    },
                },
            },
        },
        "legend": {
            "type": "object",
            "required": ["domain_low", "domain_high", "stops"],
            "properties": {
                "domain_low": {"type": "number"},
                "domain_high": {"type": "number"},
                "stops": {
                    "type": "array",
                    "minItems": 2,
                    "items": {
                        "type": "array",
                        "prefixItems": [
                            {"type": "number", "minimum": 0, "maximum": 1},
                            {"type": "string", "pattern": "^#[0-9a-f]{6}$"},
                        ],
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
    },
}


def parse_model_table(text: str) -> tuple[ModelTable, dict]:
    """Parse and validate model-table JSON; returns (table, meta)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    try:
        jsonschema.validate(obj, MODEL_TABLE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ValidationError(f"model-table file: {exc.message}") from exc
    entries = [(m["features"], m["performance"]) for m in obj["models"]]
    table = validate_table(obj["features"], entries)
    return table, obj.get("meta", {})


def model_table_to_obj(table: ModelTable, meta: dict | None = None) -> dict:
    obj: dict[str, Any] = {
        "features": list(table.features),
        "models": [
            {"features": list(key), "performance": score}
            for key, score in table.entries.items()
        ],
    }
    if meta:
        obj["meta"] = meta
    return obj


def model_table_to_json(table: ModelTable, meta: dict | None = None) -> str:
    return json.dumps(model_table_to_obj(table, meta), sort_keys=True, indent=2) + "\n"


def _point_obj(point: PolarPoint, centre: tuple[float, float]) -> dict:
    x, y = polar_to_cartesian(point.radius, point.angle, centre)
    return {
        "angle_deg": round(point.angle, JSON_PRECISION),
        "radius": round(point.radius, JSON_PRECISION),
        "x": round(x, JSON_PRECISION),
        "y": round(y, JSON_PRECISION),
    }


def layout_to_obj(layout: Layout, encoder: PerformanceEncoder) -> dict:
    """Layout plus encodings as a JSON-ready dict (the layout-file shape)."""
    cfg = layout.config
    centre = (cfg.canvas_width / 2.0, cfg.canvas_height / 2.0)
    lo, hi = encoder._resolved_domain()
    return {
        "config": {
            "arc_spanning": round(cfg.arc_spanning, JSON_PRECISION),
            "canvas_width": round(cfg.canvas_width, JSON_PRECISION),
            "canvas_height": round(cfg.canvas_height, JSON_PRECISION),
            "arc_extent_mode": cfg.arc_extent_mode,
        },
        "arcs": [
            {
                "feature": arc.feature,
                "radius": round(arc.radius, JSON_PRECISION),
                "extent_deg": round(arc.extent, JSON_PRECISION),
                "performance": round(arc.performance, JSON_PRECISION),
                "width_px": round(encoder.width_for(arc.performance), JSON_PRECISION),
                "colour_hex": encoder.hex_for(arc.performance),
            }
            for arc in layout.arcs
        ],
        "lines": [
            {
                "features": list(line.path),
                "performance": round(line.performance, JSON_PRECISION),
                "start": _point_obj(line.start, centre),
                "end": _point_obj(line.end, centre),
                "width_px": round(encoder.width_for(line.performance), JSON_PRECISION),
                "colour_hex": encoder.hex_for(line.performance),
                "parent": (
                    list(canonical_path(line.parent_key, layout.order))
                    if line.parent_key is not None
                    else None
                ),
            }
            for line in layout.lines
        ],
        "legend": {
            "domain_low": round(lo, JSON_PRECISION),
            "domain_high": round(hi, JSON_PRECISION),
            "stops": [
                [round(float(fraction), JSON_PRECISION), rgb_to_hex(tuple(int(c) for c in rgb))]
                for fraction, rgb in encoder.colour_stops
            ],
        },
    }


def layout_to_json(layout: Layout, encoder: PerformanceEncoder) -> str:
    return json.dumps(layout_to_obj(layout, encoder), sort_keys=True, indent=2) + "\n"


def validate_layout_obj(obj: dict) -> None:
    """Schema-check a layout-file dict; raises ValidationError on mismatch."""
    try:
        jsonschema.validate(obj, LAYOUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ValidationError(f"layout file: {exc.message}") from exc
