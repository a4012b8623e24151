"""Radial layout: arc geometry, recursive line placement, chart assembly.

Arcs are concentric, one per feature, innermost = best single feature.
Each multi-feature model becomes a line.  A line whose inner features form
another model attaches to that model's line end, so chains of related
models share points; otherwise it is placed as a fresh radial segment at
the next free angle.  A single monotonically advancing angular cursor
hands out those fresh angles, which is what makes the chart spiral.

All angles are in degrees, measured counterclockwise from the positive
x axis; radii are in pixels from the canvas centre.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from sklearn.base import BaseEstimator, TransformerMixin

from .errors import ConfigError, ValidationError
from .model_table import ModelTable, SubsetKey, canonical_order

ARC_EXTENT_MODES = ("paper", "cover_points")


@dataclass(frozen=True)
class LayoutConfig:
    """Geometry knobs: spanning angle, canvas size, arc-extent policy.

    ``arc_spanning`` is the user-adjustable angular budget; smaller values
    compact the chart.  ``cover_points`` (default) lengthens each arc so
    every point a line places on it actually lies on the drawn arc; ``paper``
    keeps the bare half-cursor extents.
    """

    arc_spanning: float = 240.0
    canvas_width: float = 600.0
    canvas_height: float | None = None
    arc_extent_mode: str = "cover_points"

    def __post_init__(self):
        if not (0.0 < self.arc_spanning <= 360.0):  # also rejects nan
            raise ConfigError(f"arc_spanning must be in (0, 360], got {self.arc_spanning}")
        if not (self.canvas_width > 0 and math.isfinite(self.canvas_width)):
            raise ConfigError(f"canvas_width must be positive, got {self.canvas_width}")
        if self.canvas_height is None:
            object.__setattr__(self, "canvas_height", float(self.canvas_width))
        elif not (self.canvas_height > 0 and math.isfinite(self.canvas_height)):
            raise ConfigError(f"canvas_height must be positive, got {self.canvas_height}")
        object.__setattr__(self, "arc_spanning", float(self.arc_spanning))
        object.__setattr__(self, "canvas_width", float(self.canvas_width))
        object.__setattr__(self, "canvas_height", float(self.canvas_height))
        if self.arc_extent_mode not in ARC_EXTENT_MODES:
            raise ConfigError(
                f"arc_extent_mode must be one of {ARC_EXTENT_MODES}, got {self.arc_extent_mode!r}"
            )


@dataclass(frozen=True)
class PolarPoint:
    angle: float
    radius: float


@dataclass(frozen=True)
class ArcRecord:
    """One feature arc: radius fixed by importance rank, extent by the layout."""

    feature: str
    radius: float
    extent: float
    performance: float
    position: int  # 1-based; 1 = innermost = best singleton


@dataclass(frozen=True)
class LineRecord:
    """One multi-feature model line in polar coordinates.

    ``key`` lists the subset innermost-first.  ``parent_key`` names the line
    this one starts from, or None when the line starts directly on an arc.
    ``performance`` is None only for anchor records of subsets absent from
    the table; those are never emitted in a Layout.
    """

    key: SubsetKey
    start: PolarPoint
    end: PolarPoint
    performance: float | None
    parent_key: SubsetKey | None

    @property
    def path(self) -> SubsetKey:
        """Display order: outermost feature first."""
        return tuple(reversed(self.key))


@dataclass(frozen=True)
class Layout:
    """Assembled chart: arcs inner to outer, lines in creation order."""

    arcs: tuple[ArcRecord, ...]
    lines: tuple[LineRecord, ...]
    order: tuple[str, ...]
    cursor_final: float
    config: LayoutConfig

    def arc_for(self, feature: str) -> ArcRecord:
        for arc in self.arcs:
            if arc.feature == feature:
                return arc
        raise KeyError(feature)


def angle_step(n: int, arc_spanning: float) -> float:
    """Angular step between fresh radial segments.

    Sized so the outermost arc's 2^(n-1) - 1 line end points fit in twice
    the spanning angle.  For n < 3 there are fewer than two such points and
    the formula degenerates; the spanning angle itself is used.
    """
    if n < 1:
        raise ValidationError(f"need at least one feature, got {n}")
    num_points = 2 ** (n - 1) - 1
    if num_points <= 1:
        return float(arc_spanning)
    return 2.0 * arc_spanning / (num_points - 1)


def arc_parameters(
    order: tuple[str, ...], table: ModelTable, config: LayoutConfig
) -> list[ArcRecord]:
    """Evenly spaced arcs, radius i * canvas_width / (2N) for rank i.

    Extents start at the full spanning angle; :func:`build_layout` rewrites
    them once the lines are known.
    """
    n = len(order)
    spacing = config.canvas_width / (2 * n)
    return [
        ArcRecord(
            feature=f,
            radius=(i + 1) * spacing,
            extent=config.arc_spanning,
            performance=table.singleton(f),
            position=i + 1,
        )
        for i, f in enumerate(order)
    ]


def line_parameters(
    subset_key: SubsetKey,
    table: ModelTable,
    order: tuple[str, ...],
    arcs: list[ArcRecord],
    step: float,
    cursor: float,
    records: dict[SubsetKey, LineRecord] | None = None,
) -> tuple[dict[SubsetKey, LineRecord], float]:
    """Place one multi-feature subset's line, recursing to missing parents.

    ``subset_key`` is innermost-first.  Placement rules:

    * parent (the key minus its outermost feature) already placed: start at
      the parent line's end; the end fans out by one step per skipped arc,
      so an adjacent outermost feature continues purely radially;
    * singleton parent: advance the cursor one step and drop a radial
      segment from the inner feature's arc to the outermost feature's arc;
    * multi-feature parent not yet placed: place it first, recursively.
      Parents absent from the table get anchor records (performance None)
      that consume cursor budget but are not drawn.

    Returns the record map and the advanced cursor.  The cursor never
    decreases.
    """
    if len(subset_key) < 2:
        raise ValidationError(f"line subsets need at least two features, got {list(subset_key)}")
    position = {f: i + 1 for i, f in enumerate(order)}
    unknown = [f for f in subset_key if f not in position]
    if unknown:
        raise ValidationError(f"unknown feature(s) {unknown} in subset {list(subset_key)}")
    radius = {arc.feature: arc.radius for arc in arcs}
    if records is None:
        records = {}

    def place(key: SubsetKey) -> None:
        nonlocal cursor
        if key in records:
            return
        parent = key[:-1]
        outer_radius = radius[key[-1]]
        performance = table.entries.get(table.key(key))
        if len(parent) >= 2:
            if parent not in records:
                place(parent)
            parent_rec = records[parent]
            start = parent_rec.end
            dist = position[key[-1]] - position[parent[-1]]
            end = PolarPoint(start.angle + step * (dist - 1), outer_radius)
            cursor = max(cursor, end.angle)
            records[key] = LineRecord(key, start, end, performance, parent)
        else:
            cursor += step
            start = PolarPoint(cursor, radius[key[0]])
            end = PolarPoint(cursor, outer_radius)
            records[key] = LineRecord(key, start, end, performance, None)

    place(subset_key)
    return records, cursor


def _keys_with_outermost(table: ModelTable, order: tuple[str, ...], rank: int) -> list[SubsetKey]:
    """Table subsets whose outermost feature is order[rank], innermost-first.

    Enumerated by a binary counter over the inner ranks (bit j = order[j]),
    so parents of straight radial chains come out before their children.
    """
    outer = order[rank]
    keys = []
    for counter in range(1, 1 << rank):
        inner = tuple(order[j] for j in range(rank) if counter >> j & 1)
        key = inner + (outer,)
        if key in table:
            keys.append(key)
    return keys


def build_layout(table: ModelTable, config: LayoutConfig | None = None) -> Layout:
    """Assemble the full chart for a model table.

    Features are processed innermost to outermost; within one feature, its
    subsets in binary-counter order.  After a feature's last line the arc's
    extent is set to half the cursor, which truncates inner arcs and makes
    the chart spiral outward.  In ``cover_points`` mode arcs are then
    lengthened to reach every drawn line end point sitting on them.
    """
    if config is None:
        config = LayoutConfig()
    order = canonical_order(table)
    arcs = arc_parameters(order, table, config)
    step = angle_step(len(order), config.arc_spanning)
    radius_to_feature = {arc.radius: arc.feature for arc in arcs}

    records: dict[SubsetKey, LineRecord] = {}
    cursor = 0.0
    extents = {f: config.arc_spanning for f in order}
    for rank, feature in enumerate(order):
        keys = _keys_with_outermost(table, order, rank)
        for key in keys:
            records, cursor = line_parameters(key, table, order, arcs, step, cursor, records)
        if keys:
            extents[feature] = cursor / 2.0

    lines = tuple(rec for rec in records.values() if rec.performance is not None)

    if config.arc_extent_mode == "cover_points":
        # Anchor records of undrawn subsets are ignored: a point is only a
        # feature point if a drawn line actually touches the arc there.
        for rec in lines:
            for point in (rec.start, rec.end):
                feature = radius_to_feature[point.radius]
                if point.angle > extents[feature]:
                    extents[feature] = point.angle

    final_arcs = tuple(replace(arc, extent=extents[arc.feature]) for arc in arcs)
    return Layout(arcs=final_arcs, lines=lines, order=order, cursor_final=cursor, config=config)


class RadialLayout(TransformerMixin, BaseEstimator):
    """Estimator-style wrapper around :func:`build_layout`.

    Stateless: ``fit`` only validates the configuration, ``transform`` maps a
    :class:`ModelTable` to a :class:`Layout`.  Exists so the layout step can
    sit in sklearn-style pipelines and be configured via ``get_params`` /
    ``set_params``.
    """

    def __init__(
        self,
        arc_spanning: float = 240.0,
        canvas_width: float = 600.0,
        canvas_height: float | None = None,
        arc_extent_mode: str = "cover_points",
    ):
        self.arc_spanning = arc_spanning
        self.canvas_width = canvas_width
        self.canvas_height = canvas_height
        self.arc_extent_mode = arc_extent_mode

    def _config(self) -> LayoutConfig:
        return LayoutConfig(
            arc_spanning=self.arc_spanning,
            canvas_width=self.canvas_width,
            canvas_height=self.canvas_height,
            arc_extent_mode=self.arc_extent_mode,
        )

    def fit(self, X: ModelTable | None = None, y=None):
        self._config()
        return self

    def transform(self, X: ModelTable) -> Layout:
        return build_layout(X, self._config())
