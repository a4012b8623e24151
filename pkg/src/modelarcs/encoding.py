"""Performance-to-ink mapping: stroke widths and a diverging colour scale.

Both arcs and lines use the same encoding: wider and redder means better,
narrower and bluer means worse.  The scale domain is either fixed by the
caller or resolved from the observed scores.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from sklearn.base import BaseEstimator

from .errors import ConfigError

RGB = tuple[int, int, int]

# Blue -> white -> red; low scores cold, high scores hot.
DEFAULT_COLOUR_STOPS: tuple[tuple[float, RGB], ...] = (
    (0.0, (0x21, 0x66, 0xAC)),
    (0.5, (0xF7, 0xF7, 0xF7)),
    (1.0, (0xB2, 0x18, 0x2B)),
)
DEFAULT_WIDTH_RANGE = (1.0, 12.0)


def _round_half_up(value: float) -> int:
    # round() would round half to even; colours must not depend on that.
    return int(math.floor(value + 0.5))


def rgb_to_hex(colour: RGB) -> str:
    return "#{:02x}{:02x}{:02x}".format(*colour)


class PerformanceEncoder(BaseEstimator):
    """Maps scores to stroke widths (linear) and colours (piecewise linear).

    Parameters
    ----------
    domain : "auto" or (low, high)
        Score range the encoding spans.  "auto" resolves to the observed
        min/max at :meth:`fit` time.  Scores outside the domain clamp to it.
    width_range : (min_px, max_px)
        Stroke widths assigned to the domain endpoints.
    colour_stops : sequence of (fraction, (r, g, b))
        Colour scale control points; fractions must start at 0, end at 1 and
        be sorted.  Interpolation is channel-wise in plain sRGB with
        half-up rounding, so results are identical everywhere.
    """

    def __init__(
        self,
        domain: str | tuple[float, float] = "auto",
        width_range: tuple[float, float] = DEFAULT_WIDTH_RANGE,
        colour_stops: Sequence[tuple[float, RGB]] = DEFAULT_COLOUR_STOPS,
    ):
        self.domain = domain
        self.width_range = width_range
        self.colour_stops = colour_stops

    def _check_params(self) -> None:
        lo, hi = self.width_range
        if not lo < hi:
            raise ConfigError(f"width_range must be increasing, got {self.width_range}")
        stops = tuple(self.colour_stops)
        if len(stops) < 2 or stops[0][0] != 0.0 or stops[-1][0] != 1.0:
            raise ConfigError("colour_stops must run from fraction 0 to fraction 1")
        fractions = [f for f, _ in stops]
        if fractions != sorted(fractions):
            raise ConfigError("colour_stops must be sorted by fraction")
        for _, rgb in stops:
            if len(rgb) != 3 or any(not 0 <= int(c) <= 255 for c in rgb):
                raise ConfigError(f"colour stop {rgb} is not an 8-bit RGB triple")
        if self.domain != "auto":
            lo, hi = self.domain
            if not float(lo) < float(hi):
                raise ConfigError(f"domain must satisfy low < high, got {self.domain}")

    def fit(self, scores: Iterable[float] = (), y=None):
        """Resolve the domain.  Required before encoding when domain="auto"."""
        self._check_params()
        if self.domain == "auto":
            scores = [float(s) for s in scores]
            if not scores:
                raise ConfigError("domain='auto' needs at least one score to resolve")
            lo, hi = min(scores), max(scores)
            if lo == hi:
                # All models equal: centre them on the scale.
                lo, hi = lo - 0.5, hi + 0.5
            self.domain_ = (lo, hi)
        else:
            self.domain_ = (float(self.domain[0]), float(self.domain[1]))
        return self

    def _resolved_domain(self) -> tuple[float, float]:
        if hasattr(self, "domain_"):
            return self.domain_
        if self.domain == "auto":
            raise ConfigError("domain='auto' is unresolved; call fit() with the scores first")
        self._check_params()
        return (float(self.domain[0]), float(self.domain[1]))

    def fraction_for(self, performance: float) -> float:
        """Position of a score on the scale, clamped to [0, 1]."""
        lo, hi = self._resolved_domain()
        clamped = min(max(float(performance), lo), hi)
        return (clamped - lo) / (hi - lo)

    def width_for(self, performance: float) -> float:
        w_lo, w_hi = self.width_range
        return w_lo + self.fraction_for(performance) * (w_hi - w_lo)

    def colour_for(self, performance: float) -> RGB:
        t = self.fraction_for(performance)
        stops = tuple(self.colour_stops)
        for i in range(len(stops) - 1):
            f0, c0 = stops[i]
            f1, c1 = stops[i + 1]
            if t <= f1 or i == len(stops) - 2:
                if f1 == f0:
                    return tuple(int(c) for c in c1)  # coincident stops
                u = (t - f0) / (f1 - f0)
                return tuple(
                    _round_half_up(a + u * (b - a)) for a, b in zip(c0, c1)
                )
        raise AssertionError("unreachable")

    def hex_for(self, performance: float) -> str:
        return rgb_to_hex(self.colour_for(performance))
