"""Command-line interface: render, layout, eval, serve, demo.

Exit codes: 0 success, 1 validation failure (bad table, bad dataset),
2 usage error (bad flags).  Outputs are byte-identical across runs for
identical inputs and flags.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import io as formats
from .datasets import dataset_to_csv, demo_model_table, make_separable_dataset
from .encoding import PerformanceEncoder
from .errors import ConfigError, ValidationError
from .evaluate import evaluate_all_subsets, load_csv
from .layout import LayoutConfig, build_layout
from .model_table import ModelTable
from .svg import RenderConfig, render_svg


def _check_spanning(ctx, param, value):
    if not 0.0 < value <= 360.0:
        raise click.BadParameter("must be in (0, 360]")
    return value


def _check_canvas(ctx, param, value):
    if value <= 0:
        raise click.BadParameter("must be positive")
    return value


_spanning_option = click.option(
    "--spanning", type=float, default=240.0, show_default=True,
    callback=_check_spanning, help="Spanning angle in degrees; smaller is more compact.")
_canvas_option = click.option(
    "--canvas", type=float, default=600.0, show_default=True,
    callback=_check_canvas, help="Canvas width (and default height) in pixels.")
_extent_option = click.option(
    "--extent-mode", type=click.Choice(["paper", "cover_points"]),
    default="cover_points", show_default=True,
    help="Arc extents: bare half-cursor values, or lengthened to cover all points.")
_domain_option = click.option(
    "--domain", type=float, nargs=2, default=None, metavar="LOW HIGH",
    help="Fixed score domain for widths/colours (default: observed min/max).")
_width_range_option = click.option(
    "--width-range", type=float, nargs=2, default=(1.0, 12.0), show_default=True,
    metavar="MIN MAX", help="Stroke widths mapped to the domain endpoints.")


def _load_table(path: str) -> tuple[ModelTable, dict]:
    return formats.parse_model_table(Path(path).read_text(encoding="utf-8"))


def _encoder(table: ModelTable, domain, width_range) -> PerformanceEncoder:
    encoder = PerformanceEncoder(
        domain=tuple(domain) if domain else "auto", width_range=tuple(width_range))
    return encoder.fit(table.entries.values())


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
@click.version_option(package_name="modelarcs")
def main():
    """Radial charts comparing models trained on every feature subset."""


@main.command()
@click.argument("input_path", metavar="TABLE_JSON", type=click.Path(exists=True, dir_okay=False))
@_spanning_option
@_canvas_option
@click.option("--height", type=float, default=None, help="Canvas height; defaults to --canvas.")
@_extent_option
@_domain_option
@_width_range_option
@click.option("--precision", type=click.IntRange(1, 6), default=3, show_default=True,
              help="Decimal places for every number in the SVG.")
@click.option("--points/--no-points", default=True, show_default=True,
              help="Draw dots where lines meet arcs.")
@click.option("--legend/--no-legend", default=True, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), required=True,
              help="Where to write the SVG.")
def render(input_path, spanning, canvas, height, extent_mode, domain, width_range,
           precision, points, legend, output):
    """Render a model-table JSON file to a standalone SVG chart."""
    try:
        table, _ = _load_table(input_path)
        config = LayoutConfig(arc_spanning=spanning, canvas_width=canvas,
                              canvas_height=height, arc_extent_mode=extent_mode)
        layout = build_layout(table, config)
        encoder = _encoder(table, domain, width_range)
        svg = render_svg(layout, encoder, RenderConfig(
            show_points=points, legend=legend, decimal_precision=precision))
    except (ValidationError, ConfigError) as exc:
        _fail(exc)
    Path(output).write_text(svg, encoding="utf-8")
    click.echo(f"wrote {output} ({len(layout.arcs)} arcs, {len(layout.lines)} lines)", err=True)


@main.command("layout")
@click.argument("input_path", metavar="TABLE_JSON", type=click.Path(exists=True, dir_okay=False))
@_spanning_option
@_canvas_option
@click.option("--height", type=float, default=None, help="Canvas height; defaults to --canvas.")
@_extent_option
@_domain_option
@_width_range_option
def layout_cmd(input_path, spanning, canvas, height, extent_mode, domain, width_range):
    """Compute the layout for a model table and print it as JSON."""
    try:
        table, _ = _load_table(input_path)
        config = LayoutConfig(arc_spanning=spanning, canvas_width=canvas,
                              canvas_height=height, arc_extent_mode=extent_mode)
        layout = build_layout(table, config)
        encoder = _encoder(table, domain, width_range)
        text = formats.layout_to_json(layout, encoder)
    except (ValidationError, ConfigError) as exc:
        _fail(exc)
    click.echo(text, nl=False)


@main.command("eval")
@click.option("--dataset", "dataset_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="CSV file with a header row.")
@click.option("--label", required=True, help="Name of the label column.")
@click.option("--k", type=click.IntRange(min=1), default=5, show_default=True,
              help="Neighbours per vote.")
@click.option("--folds", type=click.IntRange(min=2), default=5, show_default=True,
              help="Cross-validation folds.")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--standardize/--no-standardize", default=True, show_default=True,
              help="Z-score features from the training folds.")
@click.option("--max-features", type=int, default=12, show_default=True,
              help="Refuse datasets wider than this (subset count doubles per feature).")
@click.option("--allow-large", is_flag=True, help="Override the feature-count guard.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), required=True,
              help="Where to write the model-table JSON.")
def eval_cmd(dataset_path, label, k, folds, seed, standardize, max_features,
             allow_large, output):
    """Score a k-NN model on every feature subset of a CSV dataset."""
    try:
        ds = load_csv(Path(dataset_path).read_text(encoding="utf-8"), label)
        table = evaluate_all_subsets(ds, k=k, folds=folds, seed=seed,
                                     standardize=standardize, max_features=max_features,
                                     allow_large=allow_large)
    except (ValidationError, ConfigError) as exc:
        _fail(exc)
    meta = {"algorithm": f"knn(k={k}, folds={folds}, seed={seed})",
            "dataset": Path(dataset_path).name}
    Path(output).write_text(formats.model_table_to_json(table, meta), encoding="utf-8")
    click.echo(f"wrote {output} ({len(table)} models over {len(table.features)} features)",
               err=True)


@main.command()
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Model-table JSON to serve.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--static-dir", type=click.Path(file_okay=False), default=None,
              help="Directory with the viewer's built assets, served at /.")
def serve(input_path, host, port, static_dir):
    """Serve layouts, SVGs and the interactive viewer over HTTP."""
    import uvicorn

    from .service import create_app

    try:
        table, meta = _load_table(input_path)
    except (ValidationError, ConfigError) as exc:
        _fail(exc)
    app = create_app(table, meta=meta, static_dir=Path(static_dir) if static_dir else None)
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.option("--features", type=click.IntRange(1, 12), default=6, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--output-dir", "-d", type=click.Path(file_okay=False), default=".",
              show_default=True)
def demo(features, seed, output_dir):
    """Write demo inputs: a scored model table and a separable CSV dataset."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = demo_model_table(features, seed=seed)
    table_path = out / f"demo_table_{features}f.json"
    table_path.write_text(
        formats.model_table_to_json(table, {"algorithm": "demo", "dataset": "synthetic"}),
        encoding="utf-8")
    ds = make_separable_dataset(n_features=features)
    csv_path = out / f"demo_dataset_{features}f.csv"
    csv_path.write_text(dataset_to_csv(ds), encoding="utf-8")
    click.echo(f"wrote {table_path} and {csv_path}", err=True)


if __name__ == "__main__":
    main()
