"""Exhaustive subset evaluation: k-NN cross-validated on every feature group.

Turns a labelled tabular dataset into a model table by training the
reference classifier on each of the 2^N - 1 feature subsets.  Everything is
deterministic given the seed: fold assignment depends only on the labels
and the seed (never the subset), distance ties break by training-row index,
vote ties by label order.  Scores produced by other algorithms enter the
pipeline through model-table files instead.
"""

from __future__ import annotations

import csv
import io
import warnings
from collections import Counter
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .errors import ConfigError, DatasetWarning, ValidationError
from .model_table import ModelTable, validate_table


@dataclass(frozen=True)
class Dataset:
    """Labelled tabular data: float feature matrix plus categorical labels."""

    feature_names: tuple[str, ...]
    label_name: str
    X: np.ndarray
    y: tuple[str, ...]
    n_rejected: int = 0

    def __post_init__(self):
        if self.X.ndim != 2 or self.X.shape != (len(self.y), len(self.feature_names)):
            raise ValidationError(
                f"feature matrix shape {self.X.shape} does not match "
                f"{len(self.y)} rows x {len(self.feature_names)} features"
            )
        if len(self.y) < 2:
            raise ValidationError(f"need at least 2 usable rows, got {len(self.y)}")
        if len(set(self.y)) < 2:
            raise ValidationError("need at least 2 distinct labels")
        if not np.isfinite(self.X).all():
            raise ValidationError("feature values must be finite")

    def columns_for(self, subset) -> np.ndarray:
        index = {f: i for i, f in enumerate(self.feature_names)}
        unknown = [f for f in subset if f not in index]
        if unknown:
            raise ValidationError(f"unknown feature(s) {unknown}")
        return self.X[:, [index[f] for f in subset]]


def load_csv(text: str, label_column: str) -> Dataset:
    """Parse CSV text (header row required) into a Dataset.

    Rows with a missing or non-numeric feature cell are dropped and counted;
    a warning reports the count.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("CSV is empty") from None
    header = [h.strip() for h in header]
    if label_column not in header:
        raise ValidationError(f"label column {label_column!r} not in header {header}")
    label_idx = header.index(label_column)
    feature_names = tuple(h for i, h in enumerate(header) if i != label_idx)
    feature_idx = [i for i in range(len(header)) if i != label_idx]

    rows: list[list[float]] = []
    labels: list[str] = []
    rejected = 0
    for cells in reader:
        if not cells or all(not c.strip() for c in cells):
            continue
        if len(cells) != len(header):
            rejected += 1
            continue
        try:
            values = [float(cells[i]) for i in feature_idx]
        except ValueError:
            rejected += 1
            continue
        if not all(np.isfinite(values)):
            rejected += 1
            continue
        label = cells[label_idx].strip()
        if not label:
            rejected += 1
            continue
        rows.append(values)
        labels.append(label)

    if rejected:
        warnings.warn(f"rejected {rejected} row(s) with missing or non-numeric cells",
                      DatasetWarning, stacklevel=2)
    if len(rows) < 2:
        raise ValidationError(f"fewer than 2 usable rows ({len(rows)}) after parsing")
    X = np.array(rows, dtype=np.float64)
    return Dataset(feature_names, label_column, X, tuple(labels), rejected)


def _knn_predict(train_X: np.ndarray, train_y, test_X: np.ndarray, k: int) -> list[str]:
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if k > len(train_X):
        raise ValidationError(f"k={k} exceeds training size {len(train_X)}")
    diffs = test_X[:, None, :] - train_X[None, :, :]
    distances = np.sqrt((diffs * diffs).sum(axis=2))
    row_index = np.arange(len(train_X))
    predictions = []
    for dist_row in distances:
        # lexsort: distance first, equal distances by lower training index.
        nearest = np.lexsort((row_index, dist_row))[:k]
        votes = Counter(train_y[i] for i in nearest)
        top = max(votes.values())
        predictions.append(min(label for label, c in votes.items() if c == top))
    return predictions


def knn_accuracy(train: Dataset, test: Dataset, subset, k: int, standardize: bool = False) -> float:
    """Accuracy of a k-NN vote over the subset's columns.

    Euclidean distance; majority vote among the k nearest training rows.
    With ``standardize``, columns are z-scored using the training slice's
    statistics only.
    """
    if len(test.y) == 0:
        raise ValidationError("test slice is empty")
    train_X = train.columns_for(subset)
    test_X = test.columns_for(subset)
    if standardize:
        mean = train_X.mean(axis=0)
        std = train_X.std(axis=0)
        std[std == 0.0] = 1.0
        train_X = (train_X - mean) / std
        test_X = (test_X - mean) / std
    predicted = _knn_predict(train_X, train.y, test_X, k)
    correct = sum(p == actual for p, actual in zip(predicted, test.y))
    return correct / len(test.y)


def stratified_fold_ids(labels, folds: int, seed: int) -> np.ndarray:
    """Deterministic stratified fold assignment, independent of any subset.

    Each label's rows are shuffled with the seeded generator and dealt
    round-robin over the folds.  Labels are visited in sorted order so the
    assignment is a pure function of (labels, folds, seed).
    """
    if folds < 2:
        raise ConfigError(f"folds must be >= 2, got {folds}")
    n = len(labels)
    if folds > n:
        raise ConfigError(f"folds={folds} exceeds row count {n}")
    rng = np.random.default_rng(seed)
    fold_ids = np.empty(n, dtype=np.int64)
    for label in sorted(set(labels)):
        idx = np.array([i for i, lab in enumerate(labels) if lab == label])
        idx = idx[rng.permutation(len(idx))]
        for j, row in enumerate(idx):
            fold_ids[row] = j % folds
    return fold_ids


def _cv_mean_accuracy(
    X: np.ndarray, y, fold_ids: np.ndarray, folds: int, k: int, standardize: bool
) -> float:
    y = np.asarray(y, dtype=object)
    accuracies = []
    for fold in range(folds):
        test_mask = fold_ids == fold
        if not test_mask.any():
            continue  # tiny stratified datasets can leave a fold empty
        train_mask = ~test_mask
        if not train_mask.any():
            raise ValidationError(f"fold {fold} leaves an empty training set")
        train_X, test_X = X[train_mask], X[test_mask]
        if standardize:
            mean = train_X.mean(axis=0)
            std = train_X.std(axis=0)
            std[std == 0.0] = 1.0
            train_X = (train_X - mean) / std
            test_X = (test_X - mean) / std
        if k > len(train_X):
            raise ValidationError(f"k={k} exceeds training-fold size {len(train_X)}")
        predicted = _knn_predict(train_X, y[train_mask], test_X, k)
        actual = y[test_mask]
        accuracies.append(sum(p == a for p, a in zip(predicted, actual)) / len(actual))
    return sum(accuracies) / len(accuracies)


def cross_validate(
    ds: Dataset,
    subset,
    k: int = 5,
    folds: int = 5,
    seed: int = 42,
    standardize: bool = True,
) -> float:
    """Mean k-NN accuracy over stratified folds for one feature subset.

    The fold assignment depends only on (labels, folds, seed), so every
    subset of the same dataset is scored on identical splits.
    """
    fold_ids = stratified_fold_ids(ds.y, folds, seed)
    return _cv_mean_accuracy(ds.columns_for(subset), ds.y, fold_ids, folds, k, standardize)


def evaluate_all_subsets(
    ds: Dataset,
    k: int = 5,
    folds: int = 5,
    seed: int = 42,
    standardize: bool = True,
    max_features: int = 12,
    allow_large: bool = False,
) -> ModelTable:
    """Cross-validate every non-empty feature subset and return the table.

    Subsets are enumerated by a binary counter over the dataset's column
    order, so the table always has exactly 2^N - 1 entries in a fixed order.
    The ``max_features`` guard exists because the subset count doubles per
    feature; pass ``allow_large=True`` to override it.
    """
    n = len(ds.feature_names)
    if n > max_features and not allow_large:
        raise ConfigError(
            f"{n} features would mean {2 ** n - 1} models; raise max_features "
            "or pass allow_large=True to confirm"
        )
    fold_ids = stratified_fold_ids(ds.y, folds, seed)
    entries = []
    for counter in range(1, 1 << n):
        subset = tuple(ds.feature_names[j] for j in range(n) if counter >> j & 1)
        score = _cv_mean_accuracy(ds.columns_for(subset), ds.y, fold_ids, folds, k, standardize)
        entries.append((subset, score))
    return validate_table(ds.feature_names, entries)


class KNNClassifier(ClassifierMixin, BaseEstimator):
    """Reference k-nearest-neighbour classifier with pinned tie-breaking.

    Distance ties go to the lower training-row index, vote ties to the
    lexicographically smaller label; stock implementations leave both
    unspecified, and the charts must be reproducible.
    """

    def __init__(self, k: int = 5):
        self.k = k

    def fit(self, X, y):
        self.X_ = np.asarray(X, dtype=np.float64)
        self.y_ = np.asarray([str(label) for label in y], dtype=object)
        if self.k > len(self.X_):
            raise ValidationError(f"k={self.k} exceeds training size {len(self.X_)}")
        return self

    def predict(self, X):
        X = np.asarray(X, dtype=np.float64)
        return np.array(_knn_predict(self.X_, self.y_, X, self.k), dtype=object)

    def score(self, X, y) -> float:
        predicted = self.predict(X)
        y = [str(label) for label in y]
        return sum(p == a for p, a in zip(predicted, y)) / len(y)


class SubsetEvaluator(BaseEstimator):
    """Fits one k-NN model per feature subset and collects the model table.

    ``fit`` stores the table on ``model_table_``; :meth:`evaluate` is the
    one-shot convenience.  Given identical data and parameters the result is
    bit-for-bit reproducible.
    """

    def __init__(
        self,
        k_neighbours: int = 5,
        folds: int = 5,
        seed: int = 42,
        max_features: int = 12,
        standardize: bool = True,
        allow_large: bool = False,
    ):
        self.k_neighbours = k_neighbours
        self.folds = folds
        self.seed = seed
        self.max_features = max_features
        self.standardize = standardize
        self.allow_large = allow_large

    def fit(self, dataset: Dataset, y=None):
        if self.k_neighbours < 1:
            raise ConfigError(f"k_neighbours must be >= 1, got {self.k_neighbours}")
        self.model_table_ = evaluate_all_subsets(
            dataset,
            k=self.k_neighbours,
            folds=self.folds,
            seed=self.seed,
            standardize=self.standardize,
            max_features=self.max_features,
            allow_large=self.allow_large,
        )
        return self

    def evaluate(self, dataset: Dataset) -> ModelTable:
        return self.fit(dataset).model_table_
