"""Equally spaced time series, discrete second differences, and
characteristic-point detection.

A characteristic point is the sample index playing the role of a zero
of some derivative of an underlying growth curve.  For the third
derivative this is where the second derivative peaks, so on sampled
data it is found as a local maximum of the second central difference
(SCD) or the second left difference (SLD):

    SCD[t] = (y[t+1] - 2 y[t] + y[t-1]) / 2      (undefined at both ends)
    SLD[t] = (y[t] - 2 y[t-1] + y[t-2]) / 2      (undefined at first two)

The index is the time axis: series are equally spaced by construction
and any calendar bookkeeping lives in the labels.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import CharacteristicPointNotFound, DomainError

SERIES_KINDS = ("raw", "cumulative")

FIRST_LOCAL_MAX = "first-local-max"
LAST_LOCAL_MAX_BEFORE_DECLINE = "last-local-max-before-decline"
GLOBAL_MAX = "global-max"
POLICIES = (FIRST_LOCAL_MAX, LAST_LOCAL_MAX_BEFORE_DECLINE, GLOBAL_MAX)


@dataclass(frozen=True)
class TimeSeries:
    """Labelled, equally spaced observations.

    kind says how the values are to be read: "raw" for per-period
    increments, "cumulative" for running levels.  Estimators that
    assume a level series check this field.
    """

    labels: tuple[str, ...]
    values: tuple[float, ...]
    kind: str = "raw"

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.labels) != len(self.values):
            raise DomainError(
                f"labels and values differ in length ({len(self.labels)} vs {len(self.values)})"
            )
        if len(self.values) == 0:
            raise DomainError("series must contain at least one observation")
        if self.kind not in SERIES_KINDS:
            raise DomainError(f"kind must be one of {SERIES_KINDS}, got {self.kind!r}")
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise DomainError(f"value at index {i} is not finite: {v!r}")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DiffSeries:
    """A difference transform of a series, aligned index-for-index.

    values has one slot per source observation; slots where the stencil
    would reach outside the series hold None instead of a number.  kind
    is "scd", "sld", or "central-k" for the order-k generalization.
    """

    source: TimeSeries
    kind: str
    values: tuple = field(default=())

    def __post_init__(self):
        if len(self.values) != len(self.source):
            raise DomainError("diff values must align with the source series")

    def defined(self) -> list[tuple[int, float]]:
        """(index, value) pairs for the defined slots, in index order."""
        return [(i, v) for i, v in enumerate(self.values) if v is not None]


@dataclass(frozen=True)
class CharacteristicPoint:
    """A detected index, with enough context to audit the decision.

    ambiguity holds rival candidates as (index, diff_value) pairs: all
    other strict local maxima plus any defined value close to the
    winner (within a quarter of the winner's height above the minimum).
    Rivals are diagnostic only; they never change the selection.
    """

    index: int
    label: str
    diff_value: float
    series_value: float
    policy_used: str
    ambiguity: tuple[tuple[int, float], ...] = ()


def cumulate(ts: TimeSeries) -> TimeSeries:
    """Prefix sums of a raw series; labels are kept."""
    if ts.kind != "raw":
        raise DomainError("series is already cumulative")
    return TimeSeries(
        labels=ts.labels,
        values=tuple(itertools.accumulate(ts.values)),
        kind="cumulative",
    )


def _require_length(ts: TimeSeries, minimum: int) -> None:
    if len(ts) < minimum:
        raise DomainError(f"series too short: need at least {minimum} points, got {len(ts)}")


def second_central_diff(ts: TimeSeries) -> DiffSeries:
    """(y[t+1] - 2 y[t] + y[t-1]) / 2 at the interior indices."""
    _require_length(ts, 3)
    y = ts.values
    n = len(y)
    vals: list = [None] * n
    for t in range(1, n - 1):
        vals[t] = (y[t + 1] - 2.0 * y[t] + y[t - 1]) / 2.0
    return DiffSeries(source=ts, kind="scd", values=tuple(vals))


def second_left_diff(ts: TimeSeries) -> DiffSeries:
    """(y[t] - 2 y[t-1] + y[t-2]) / 2, defined from index 2 on."""
    _require_length(ts, 3)
    y = ts.values
    n = len(y)
    vals: list = [None] * n
    for t in range(2, n):
        vals[t] = (y[t] - 2.0 * y[t - 1] + y[t - 2]) / 2.0
    return DiffSeries(source=ts, kind="sld", values=tuple(vals))


def nth_central_diff(ts: TimeSeries, order: int) -> DiffSeries:
    """Order-k central difference divided by 2, the SCD generalization.

    The stencil is the k-th forward difference over the window starting
    at t - k//2, so order 2 reproduces second_central_diff slot for
    slot (including the halving, which detectors do not care about but
    golden tables do).
    """
    if not isinstance(order, int) or isinstance(order, bool) or order < 2:
        raise DomainError(f"difference order must be an integer >= 2, got {order!r}")
    _require_length(ts, order + 1)
    y = ts.values
    n = len(y)
    lo = order // 2
    hi = (order + 1) // 2
    vals: list = [None] * n
    for t in range(lo, n - hi):
        acc = 0.0
        for j in range(order + 1):
            acc += (-1) ** j * comb(order, j) * y[t - lo + (order - j)]
        vals[t] = acc / 2.0
    kind = "scd" if order == 2 else f"central-{order}"
    return DiffSeries(source=ts, kind=kind, values=tuple(vals))


def _strict_local_maxima(vals: Sequence) -> list[int]:
    # both neighbors must exist and be defined; plateaus never qualify
    out = []
    for i in range(1, len(vals) - 1):
        v, left, right = vals[i], vals[i - 1], vals[i + 1]
        if v is None or left is None or right is None:
            continue
        if v > left and v > right:
            out.append(i)
    return out


def _ambiguity(winner: int, vals, defined) -> tuple[tuple[int, float], ...]:
    winner_value = vals[winner]
    span = winner_value - min(v for _, v in defined)
    rivals: dict[int, float] = {}
    for i in _strict_local_maxima(vals):
        if i != winner:
            rivals[i] = vals[i]
    threshold = 0.25 * span
    for i, v in defined:
        if i != winner and winner_value - v <= threshold:
            rivals[i] = v
    return tuple(sorted(rivals.items()))


def _make_point(ds: DiffSeries, index: int, policy: str) -> CharacteristicPoint:
    return CharacteristicPoint(
        index=index,
        label=ds.source.labels[index],
        diff_value=ds.values[index],
        series_value=ds.source.values[index],
        policy_used=policy,
        ambiguity=_ambiguity(index, ds.values, ds.defined()),
    )


def find_characteristic_point(ds: DiffSeries, policy: str = FIRST_LOCAL_MAX) -> CharacteristicPoint:
    """Select the characteristic index of a difference series.

    first-local-max takes the earliest index strictly above both
    neighbors.  global-max takes the largest defined value, earliest on
    ties.  last-local-max-before-decline takes the last strict local
    max occurring before the series first reaches its global minimum;
    it exists for data whose growth phase ended inside the window, and
    it is the policy under which a late prominent peak wins over early
    wiggle.

    When the requested policy finds no admissible index, the raised
    error carries the global-max point as a fallback suggestion.
    """
    if policy not in POLICIES:
        raise DomainError(f"policy must be one of {POLICIES}, got {policy!r}")
    defined = ds.defined()
    if len(defined) < 3:
        raise DomainError(f"need at least 3 defined difference values, got {len(defined)}")

    maxima = _strict_local_maxima(ds.values)

    if policy == GLOBAL_MAX:
        best_i, best_v = defined[0]
        for i, v in defined[1:]:
            if v > best_v:
                best_i, best_v = i, v
        return _make_point(ds, best_i, policy)

    if policy == FIRST_LOCAL_MAX:
        candidates = maxima
    else:
        min_value = min(v for _, v in defined)
        first_min_index = next(i for i, v in defined if v == min_value)
        candidates = [i for i in maxima if i < first_min_index]

    if not candidates:
        fallback = find_characteristic_point(ds, GLOBAL_MAX)
        raise CharacteristicPointNotFound(
            f"no strict local maximum admissible under policy {policy!r}; "
            f"global maximum is at index {fallback.index} (label {fallback.label!r})",
            fallback=fallback,
        )
    index = candidates[0] if policy == FIRST_LOCAL_MAX else candidates[-1]
    return _make_point(ds, index, policy)
