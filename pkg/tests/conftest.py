"""Shared builders for test tables."""

from __future__ import annotations

import itertools

import pytest

from modelarcs import ModelTable, validate_table


def complete_table(n: int, spanning_names: list[str] | None = None) -> ModelTable:
    """Complete table over F1..Fn with distinct deterministic scores.

    Singleton scores decrease with the feature index, so the canonical
    order is F1, F2, ..., Fn with F1 innermost.
    """
    names = spanning_names or [f"F{i + 1}" for i in range(n)]
    entries = {}
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            score = 0.9 - 0.05 * sum(combo) / n + 0.02 * (size - 1)
            entries[tuple(names[i] for i in combo)] = round(score, 6)
    return validate_table(names, entries)


@pytest.fixture
def three_feature_table() -> ModelTable:
    return validate_table(
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
