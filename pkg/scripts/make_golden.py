#!/usr/bin/env python3
"""Regenerate the golden SVGs used by the acceptance suite.

Run from the repository root after an intentional renderer change:

    python3 scripts/make_golden.py
"""

from pathlib import Path

from modelarcs import (
    LayoutConfig,
    PerformanceEncoder,
    RenderConfig,
    build_layout,
    render_svg,
    validate_table,
)
from modelarcs.datasets import demo_model_table

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

HANDTRACE = validate_table(
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


def write(name: str, table, config: LayoutConfig) -> None:
    layout = build_layout(table, config)
    encoder = PerformanceEncoder().fit(table.entries.values())
    path = GOLDEN_DIR / name
    path.write_text(render_svg(layout, encoder, RenderConfig()), encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    write("demo_6f.svg", demo_model_table(6), LayoutConfig())
    write("handtrace_n3.svg", HANDTRACE, LayoutConfig(arc_spanning=60.0, canvas_width=600))


if __name__ == "__main__":
    main()
