"""Synthetic demo data: a pre-scored model table and a separable dataset.

The demo table gives the chart something organic-looking to draw without
shipping any real data; the separable dataset exercises the evaluator (one
genuinely informative feature, the rest noise).
"""

from __future__ import annotations

import numpy as np

from .evaluate import Dataset
from .model_table import ModelTable, validate_table


def demo_model_table(n_features: int = 6, seed: int = 7, spread: float = 0.04) -> ModelTable:
    """Complete model table with plausible-looking scores.

    Feature f1 is strongest and each later feature a bit weaker; a subset's
    score blends its best member with a mild size bonus plus seeded jitter.
    Different seeds mimic different training algorithms for side-by-side
    comparison.
    """
    if n_features < 1:
        raise ValueError(f"n_features must be >= 1, got {n_features}")
    names = tuple(f"f{i + 1}" for i in range(n_features))
    strength = np.linspace(0.88, 0.52, n_features)
    rng = np.random.default_rng(seed)
    entries = []
    for counter in range(1, 1 << n_features):
        idx = [j for j in range(n_features) if counter >> j & 1]
        best = strength[idx].max()
        mean = strength[idx].mean()
        size_bonus = 0.05 * (len(idx) - 1) / max(n_features - 1, 1)
        jitter = rng.normal(0.0, spread)
        score = float(np.clip(0.7 * best + 0.3 * mean + size_bonus + jitter, 0.05, 0.99))
        entries.append((tuple(names[j] for j in idx), round(score, 4)))
    return validate_table(names, entries)


def make_separable_dataset(
    n_features: int = 6,
    rows_per_class: int = 120,
    seed: int = 42,
    informative: str = "f1",
) -> Dataset:
    """Two-class dataset where exactly one feature separates the classes.

    The informative column sits at 0 for class "a" and 10 for class "b"
    (plus slight spread); every other column is label-independent noise.
    Subsets containing the informative feature classify near-perfectly,
    subsets without it sit at chance.
    """
    names = tuple(f"f{i + 1}" for i in range(n_features))
    if informative not in names:
        raise ValueError(f"informative column {informative!r} not among {names}")
    rng = np.random.default_rng(seed)
    n = 2 * rows_per_class
    X = rng.normal(0.0, 1.0, size=(n, n_features))
    labels = ["a"] * rows_per_class + ["b"] * rows_per_class
    signal = names.index(informative)
    X[:rows_per_class, signal] = rng.normal(0.0, 0.4, rows_per_class)
    X[rows_per_class:, signal] = rng.normal(10.0, 0.4, rows_per_class)
    # Interleave the classes so row order carries no label information.
    perm = rng.permutation(n)
    X = X[perm]
    labels = tuple(labels[i] for i in perm)
    return Dataset(names, "label", X, labels)


def dataset_to_csv(ds: Dataset, float_format: str = "{:.6f}") -> str:
    """Dataset as CSV text (header row, label column last)."""
    lines = [",".join(ds.feature_names + (ds.label_name,))]
    for row, label in zip(ds.X, ds.y):
        lines.append(",".join(float_format.format(v) for v in row) + f",{label}")
    return "\n".join(lines) + "\n"
