"""Radial charts comparing models trained on every feature subset.

Single features are concentric arcs (best feature innermost); every
multi-feature model is a line whose chain of connected segments spells out
its feature set.  Width and colour encode performance.

Typical flow::

    table = evaluate_all_subsets(load_csv(text, "label"))   # or parse a JSON file
    layout = RadialLayout(arc_spanning=240).transform(table)
    svg = render_svg(layout, PerformanceEncoder().fit(table.entries.values()))
"""

from .encoding import DEFAULT_COLOUR_STOPS, PerformanceEncoder, rgb_to_hex
from .errors import ConfigError, DatasetWarning, ModelTableWarning, ValidationError
from .evaluate import (
    Dataset,
    KNNClassifier,
    SubsetEvaluator,
    cross_validate,
    evaluate_all_subsets,
    knn_accuracy,
    load_csv,
    stratified_fold_ids,
)
from .io import (
    LAYOUT_SCHEMA,
    MODEL_TABLE_SCHEMA,
    layout_to_json,
    layout_to_obj,
    model_table_to_json,
    model_table_to_obj,
    parse_model_table,
    validate_layout_obj,
)
from .layout import (
    ArcRecord,
    Layout,
    LayoutConfig,
    LineRecord,
    PolarPoint,
    RadialLayout,
    angle_step,
    arc_parameters,
    build_layout,
    line_parameters,
)
from .model_table import (
    ModelTable,
    canonical_order,
    canonical_path,
    feature_importance_summary,
    model_count,
    storage_key,
    validate_table,
)
from .svg import RenderConfig, polar_to_cartesian, render_svg

__version__ = "0.1.0"

__all__ = [
    "ArcRecord",
    "ConfigError",
    "DEFAULT_COLOUR_STOPS",
    "Dataset",
    "DatasetWarning",
    "KNNClassifier",
    "LAYOUT_SCHEMA",
    "Layout",
    "LayoutConfig",
    "LineRecord",
    "MODEL_TABLE_SCHEMA",
    "ModelTable",
    "ModelTableWarning",
    "PerformanceEncoder",
    "PolarPoint",
    "RadialLayout",
    "RenderConfig",
    "SubsetEvaluator",
    "ValidationError",
    "angle_step",
    "arc_parameters",
    "build_layout",
    "canonical_order",
    "canonical_path",
    "cross_validate",
    "evaluate_all_subsets",
    "feature_importance_summary",
    "knn_accuracy",
    "layout_to_json",
    "layout_to_obj",
    "line_parameters",
    "load_csv",
    "model_count",
    "model_table_to_json",
    "model_table_to_obj",
    "parse_model_table",
    "polar_to_cartesian",
    "render_svg",
    "rgb_to_hex",
    "storage_key",
    "stratified_fold_ids",
    "validate_layout_obj",
    "validate_table",
]
