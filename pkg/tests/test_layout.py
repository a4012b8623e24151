"""Layout engine: arc geometry, line recursion, chart assembly invariants."""

import contextlib
import itertools
import random

import pytest

from modelarcs import (
    LayoutConfig,
    ConfigError,
    RadialLayout,
    ValidationError,
    angle_step,
    arc_parameters,
    build_layout,
    canonical_order,
    canonical_path,
    line_parameters,
    validate_table,
)

from conftest import complete_table


class TestLayoutConfig:
    def test_height_defaults_to_width(self):
        config = LayoutConfig(canvas_width=500)
        assert config.canvas_height == 500

    @pytest.mark.parametrize("spanning", [0.0, -10.0, 361.0])
    def test_rejects_bad_spanning(self, spanning):
        with pytest.raises(ConfigError):
            LayoutConfig(arc_spanning=spanning)

    def test_rejects_zero_canvas(self):
        with pytest.raises(ConfigError):
            LayoutConfig(canvas_width=0)

    def test_rejects_unknown_extent_mode(self):
        with pytest.raises(ConfigError):
            LayoutConfig(arc_extent_mode="stretchy")


class TestArcParameters:
    def test_six_arcs_evenly_spaced(self):
        table = complete_table(6)
        order = canonical_order(table)
        arcs = arc_parameters(order, table, LayoutConfig(canvas_width=600))
        assert [a.radius for a in arcs] == [50, 100, 150, 200, 250, 300]

    def test_single_feature(self):
        table = validate_table(["F1"], {("F1",): 0.8})
        arcs = arc_parameters(("F1",), table, LayoutConfig(canvas_width=400))
        assert len(arcs) == 1
        assert arcs[0].radius == 200

    def test_best_singleton_is_innermost(self):
        table = complete_table(4)
        layout = build_layout(table)
        innermost = min(layout.arcs, key=lambda a: a.radius)
        assert innermost.feature == "F1"
        assert innermost.position == 1

    def test_arcs_carry_singleton_performance(self):
        table = complete_table(3)
        layout = build_layout(table)
        for arc in layout.arcs:
            assert arc.performance == table.singleton(arc.feature)


class TestAngleStep:
    def test_forced_arithmetic(self):
        assert angle_step(4, 180.0) == pytest.approx(60.0)
        assert angle_step(6, 120.0) == pytest.approx(8.0)

    def test_degenerate_small_n(self):
        assert angle_step(2, 180.0) == 180.0
        assert angle_step(1, 90.0) == 90.0

    def test_rejects_zero_features(self):
        with pytest.raises(ValidationError):
            angle_step(0, 90.0)


class TestLineParameters:
    def test_two_feature_base_case(self):
        # one pair: a radial segment one step (= spanning) from zero
        table = validate_table(
            ["F1", "F2"], {("F1",): 0.9, ("F2",): 0.8, ("F1", "F2"): 0.7}
        )
        config = LayoutConfig(arc_spanning=150.0, canvas_width=400)
        order = canonical_order(table)
        arcs = arc_parameters(order, table, config)
        records, cursor = line_parameters(
            ("F1", "F2"), table, order, arcs, angle_step(2, 150.0), 0.0
        )
        record = records[("F1", "F2")]
        assert cursor == 150.0
        assert (record.start.angle, record.start.radius) == (150.0, 100.0)
        assert (record.end.angle, record.end.radius) == (150.0, 200.0)
        assert record.parent_key is None

    def test_rejects_singleton(self, three_feature_table):
        table = three_feature_table
        order = canonical_order(table)
        arcs = arc_parameters(order, table, LayoutConfig())
        with pytest.raises(ValidationError):
            line_parameters(("F1",), table, order, arcs, 10.0, 0.0)

    def test_rejects_unknown_feature(self, three_feature_table):
        table = three_feature_table
        order = canonical_order(table)
        arcs = arc_parameters(order, table, LayoutConfig())
        with pytest.raises(ValidationError, match="F9"):
            line_parameters(("F1", "F9"), table, order, arcs, 10.0, 0.0)


class TestHandTrace:
    """Frozen full trace of the N=3, 60-degree layout."""

    def layout(self, mode="cover_points"):
        table = validate_table(
            ["F1", "F2", "F3"],
            {
                ("F1",): 0.9,
                ("F2",): 0.8,
                ("F3",): 0.7,
                ("F1", "F2"): 0.85,
                ("F1", "F3"): 0.75,
                ("F2", "F3"): 0.72,
                ("F1", "F2", "F3"): 0.95,
            },
        )
        return build_layout(
            table,
            LayoutConfig(arc_spanning=60.0, canvas_width=600, arc_extent_mode=mode),
        )

    def test_line_geometry(self):
        layout = self.layout()
        by_key = {line.key: line for line in layout.lines}
        expected = {
            ("F1", "F2"): ((60.0, 100.0), (60.0, 200.0)),
            ("F1", "F3"): ((120.0, 100.0), (120.0, 300.0)),
            ("F2", "F3"): ((180.0, 200.0), (180.0, 300.0)),
            ("F1", "F2", "F3"): ((60.0, 200.0), (60.0, 300.0)),
        }
        assert set(by_key) == set(expected)
        for key, ((sa, sr), (ea, er)) in expected.items():
            line = by_key[key]
            assert line.start.angle == pytest.approx(sa, abs=1e-9)
            assert line.start.radius == pytest.approx(sr, abs=1e-9)
            assert line.end.angle == pytest.approx(ea, abs=1e-9)
            assert line.end.radius == pytest.approx(er, abs=1e-9)

    def test_chain_attaches_to_pair(self):
        layout = self.layout()
        by_key = {line.key: line for line in layout.lines}
        chain = by_key[("F1", "F2", "F3")]
        assert chain.parent_key == ("F1", "F2")
        assert chain.start == by_key[("F1", "F2")].end

    def test_paper_mode_extents(self):
        layout = self.layout(mode="paper")
        extents = {a.feature: a.extent for a in layout.arcs}
        # F1 has no outermost lines so keeps the spanning angle; the other
        # arcs get half the cursor value reached after their last line.
        assert extents == {"F1": 60.0, "F2": 30.0, "F3": 90.0}

    def test_cover_points_extents_reach_every_point(self):
        layout = self.layout(mode="cover_points")
        extents = {a.feature: a.extent for a in layout.arcs}
        assert extents == {"F1": 120.0, "F2": 180.0, "F3": 180.0}
        radius_to_feature = {a.radius: a.feature for a in layout.arcs}
        for line in layout.lines:
            for point in (line.start, line.end):
                assert point.angle <= extents[radius_to_feature[point.radius]]

    def test_cursor_final(self):
        assert self.layout().cursor_final == pytest.approx(180.0, abs=1e-9)


def walk_chain_features(layout, line):
    """Oracle: read a line's feature path off the geometry alone.

    Follow parent links inward collecting the arc feature under each line
    end; the terminal line contributes the arc its start sits on.  Per the
    chart's reading rules this must spell the canonical path.
    """
    by_key = {rec.key: rec for rec in layout.lines}
    radius_to_feature = {arc.radius: arc.feature for arc in layout.arcs}
    chain = [radius_to_feature[line.end.radius]]
    current = line
    while current.parent_key is not None:
        parent = by_key[current.parent_key]
        assert current.start == parent.end
        chain.append(radius_to_feature[parent.end.radius])
        current = parent
    chain.append(radius_to_feature[current.start.radius])
    return tuple(chain)


class TestBuildLayoutInvariants:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete_table_counts(self, n):
        layout = build_layout(complete_table(n))
        assert len(layout.arcs) == n
        assert len(layout.lines) == 2**n - 1 - n

    @pytest.mark.parametrize("n", range(2, 9))
    def test_paths_reconstructed_from_geometry(self, n):
        table = complete_table(n)
        layout = build_layout(table)
        for line in layout.lines:
            assert walk_chain_features(layout, line) == canonical_path(line.key, layout.order)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_outermost_arc_point_count(self, n):
        layout = build_layout(complete_table(n))
        outer = max(a.radius for a in layout.arcs)
        ends = [line for line in layout.lines if line.end.radius == outer]
        assert len(ends) == 2 ** (n - 1) - 1

    def test_line_radii_come_from_arcs_and_widen(self):
        layout = build_layout(complete_table(6))
        radii = {a.radius for a in layout.arcs}
        for line in layout.lines:
            assert line.end.radius in radii
            assert line.start.radius in radii
            assert line.end.radius > line.start.radius

    def test_cursor_bounds_every_line_angle(self):
        layout = build_layout(complete_table(6))
        top = max(max(l.start.angle, l.end.angle) for l in layout.lines)
        assert layout.cursor_final >= top

    def test_only_singletons_gives_no_lines(self):
        with pytest.warns(UserWarning, match="multi-feature"):
            table = validate_table(
                ["F1", "F2", "F3"], {("F1",): 0.9, ("F2",): 0.8, ("F3",): 0.7}
            )
        layout = build_layout(table)
        assert layout.lines == ()
        assert len(layout.arcs) == 3

    def test_single_feature_layout(self):
        table = validate_table(["F1"], {("F1",): 0.8})
        layout = build_layout(table)
        assert len(layout.arcs) == 1
        assert layout.lines == ()

    def test_missing_parent_gets_phantom_anchor(self):
        # {F1,F2} absent: the chain still anchors where that line would be,
        # consuming one cursor step, but only one line is drawn.
        with pytest.warns(UserWarning, match="multi-feature"):
            table = validate_table(
                ["F1", "F2", "F3"],
                {("F1",): 0.9, ("F2",): 0.8, ("F3",): 0.7, ("F1", "F2", "F3"): 0.95},
            )
        config = LayoutConfig(arc_spanning=60.0, canvas_width=600)
        layout = build_layout(table, config)
        assert len(layout.lines) == 1
        (line,) = layout.lines
        assert line.key == ("F1", "F2", "F3")
        assert line.parent_key == ("F1", "F2")
        assert (line.start.angle, line.start.radius) == (60.0, 200.0)
        assert (line.end.angle, line.end.radius) == (60.0, 300.0)

    def test_random_incomplete_tables_keep_invariants(self):
        rng = random.Random(99)
        for _ in range(30):
            n = rng.randint(2, 7)
            names = [f"F{i + 1}" for i in range(n)]
            entries = {(f,): round(rng.uniform(0.2, 0.95), 3) for f in names}
            for size in range(2, n + 1):
                for combo in itertools.combinations(names, size):
                    if rng.random() < 0.6:
                        entries[combo] = round(rng.uniform(0.2, 0.95), 3)
            guard = (
                pytest.warns(UserWarning)
                if len(entries) < 2**n - 1
                else contextlib.nullcontext()
            )
            with guard:
                table = validate_table(names, entries)
            layout = build_layout(table)
            assert len(layout.lines) == sum(1 for k in table.entries if len(k) > 1)
            by_key = {rec.key: rec for rec in layout.lines}
            for line in layout.lines:
                if line.parent_key is not None and line.parent_key in by_key:
                    assert line.start == by_key[line.parent_key].end

    def test_determinism_across_runs(self):
        table = complete_table(6)
        first = build_layout(table)
        second = build_layout(table)
        assert first == second


class TestRadialLayoutEstimator:
    def test_get_params_round_trip(self):
        est = RadialLayout(arc_spanning=120.0)
        params = est.get_params()
        assert params["arc_spanning"] == 120.0
        est.set_params(canvas_width=800.0)
        assert est.canvas_width == 800.0

    def test_transform_matches_function(self, three_feature_table):
        est = RadialLayout(arc_spanning=60.0, canvas_width=600.0)
        expected = build_layout(
            three_feature_table, LayoutConfig(arc_spanning=60.0, canvas_width=600.0)
        )
        assert est.fit(three_feature_table).transform(three_feature_table) == expected

    def test_fit_validates_params(self):
        with pytest.raises(ConfigError):
            RadialLayout(arc_spanning=0.0).fit()
