"""Feature-subset bookkeeping: the model table and its canonical orderings.

A model table maps feature subsets to the performance of the model trained
on exactly those features.  Every chart starts from one.  The canonical
feature order (best single feature first) fixes arc radii; the canonical
path of a subset (outermost feature first) is how a line's feature list is
read off the chart.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ModelTableWarning, ValidationError

SubsetKey = tuple[str, ...]


def model_count(n: int) -> int:
    """Number of models trainable from n features: one per non-empty subset."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"feature count must be a positive integer, got {n!r}")
    return 2 ** n - 1


@dataclass(frozen=True)
class ModelTable:
    """Validated map from feature subsets to performance scores.

    ``entries`` is keyed by tuples of feature names in the order they appear
    in ``features`` (column order).  Use :meth:`key` to normalise an
    arbitrary collection of names before lookup.  Instances are immutable
    and safe to share across threads.
    """

    features: tuple[str, ...]
    entries: dict[SubsetKey, float]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {f: i for i, f in enumerate(self.features)})

    def key(self, members: Iterable[str]) -> SubsetKey:
        """Normalise a subset to its column-order tuple key."""
        members = list(members)
        unknown = [m for m in members if m not in self._index]
        if unknown:
            raise ValidationError(f"unknown feature(s) {unknown} (table has {list(self.features)})")
        if len(set(members)) != len(members):
            raise ValidationError(f"duplicate members in subset {members}")
        if not members:
            raise ValidationError("subset must contain at least one feature")
        return tuple(sorted(members, key=self._index.__getitem__))

    def performance(self, members: Iterable[str]) -> float:
        key = self.key(members)
        if key not in self.entries:
            raise KeyError(f"no entry for subset {list(key)}")
        return self.entries[key]

    def get(self, members: Iterable[str]) -> float | None:
        return self.entries.get(self.key(members))

    def singleton(self, feature: str) -> float:
        return self.performance((feature,))

    def __contains__(self, members) -> bool:
        return self.key(members) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def multi_feature_keys(self) -> list[SubsetKey]:
        """Keys of all entries with two or more features, in entry order."""
        return [k for k in self.entries if len(k) > 1]


def validate_table(
    features: Iterable[str],
    entries: Iterable[tuple[Iterable[str], float]] | Mapping,
) -> ModelTable:
    """Build a :class:`ModelTable`, raising on structural problems.

    Hard errors: empty feature list, duplicate feature names, unknown or
    duplicate subsets, a missing singleton, non-finite scores.  Missing
    multi-feature subsets and scores outside [0, 1] are legal and only
    warned about: an absent subset's line simply is not drawn.
    """
    features = tuple(features)
    if not features:
        raise ValidationError("feature list is empty")
    if any(not isinstance(f, str) or not f for f in features):
        raise ValidationError("feature names must be non-empty strings")
    if len(set(features)) != len(features):
        dupes = sorted({f for f in features if features.count(f) > 1})
        raise ValidationError(f"duplicate feature name(s): {dupes}")

    if isinstance(entries, Mapping):
        entries = entries.items()

    index = {f: i for i, f in enumerate(features)}
    table_entries: dict[SubsetKey, float] = {}
    for members, score in entries:
        members = list(members)
        if not members:
            raise ValidationError("subset must contain at least one feature")
        unknown = [m for m in members if m not in index]
        if unknown:
            raise ValidationError(f"unknown feature(s) {unknown} in subset {members}")
        if len(set(members)) != len(members):
            raise ValidationError(f"duplicate members in subset {members}")
        key = tuple(sorted(members, key=index.__getitem__))
        if key in table_entries:
            raise ValidationError(f"duplicate subset {list(key)}")
        score = float(score)
        if not math.isfinite(score):
            raise ValidationError(f"non-finite performance for subset {list(key)}")
        table_entries[key] = score

    missing_singletons = [f for f in features if (f,) not in table_entries]
    if missing_singletons:
        raise ValidationError(
            f"missing singleton entr{'y' if len(missing_singletons) == 1 else 'ies'} "
            f"for feature(s) {missing_singletons}"
        )

    n = len(features)
    expected_multi = model_count(n) - n
    present_multi = sum(1 for k in table_entries if len(k) > 1)
    if present_multi < expected_multi:
        warnings.warn(
            f"{expected_multi - present_multi} of {expected_multi} multi-feature "
            "subsets have no entry; their lines will not be drawn",
            ModelTableWarning,
            stacklevel=2,
        )
    out_of_range = [k for k, v in table_entries.items() if not 0.0 <= v <= 1.0]
    if out_of_range:
        warnings.warn(
            f"{len(out_of_range)} score(s) outside [0, 1] (e.g. subset "
            f"{list(out_of_range[0])}); encodings use the observed domain",
            ModelTableWarning,
            stacklevel=2,
        )
    return ModelTable(features, table_entries)


def canonical_order(table: ModelTable) -> tuple[str, ...]:
    """Features sorted by singleton performance, best first.

    The best single feature is drawn on the innermost arc.  Ties break by
    feature name ascending so the order is a deterministic function of the
    table.
    """
    return tuple(sorted(table.features, key=lambda f: (-table.singleton(f), f)))


def canonical_path(members: Iterable[str], order: Iterable[str]) -> tuple[str, ...]:
    """A subset's display path: outermost feature first, innermost last."""
    order = tuple(order)
    position = {f: i for i, f in enumerate(order)}
    members = list(members)
    unknown = [m for m in members if m not in position]
    if unknown:
        raise ValidationError(f"feature(s) {unknown} not in order {list(order)}")
    if len(set(members)) != len(members):
        raise ValidationError(f"duplicate members in subset {members}")
    return tuple(sorted(members, key=position.__getitem__, reverse=True))


def storage_key(members: Iterable[str], order: Iterable[str]) -> tuple[str, ...]:
    """A subset's layout key: innermost feature first.

    The reverse of :func:`canonical_path`.  Dropping the last element strips
    the outermost feature, which is what the line-placement recursion needs.
    """
    return tuple(reversed(canonical_path(members, order)))


def feature_importance_summary(table: ModelTable) -> dict[str, float]:
    """Mean performance over all subsets containing each feature.

    Returned dict is ordered by mean descending (ties by name) so it can be
    reported directly.
    """
    totals = {f: 0.0 for f in table.features}
    counts = {f: 0 for f in table.features}
    for key, score in table.entries.items():
        for f in key:
            totals[f] += score
            counts[f] += 1
    means = {f: totals[f] / counts[f] for f in table.features}
    return dict(sorted(means.items(), key=lambda kv: (-kv[1], kv[0])))
