"""Embedded reference datasets.

Three published adoption processes, shipped with the package so the
test suite and the CLI examples run without external files: weekly
loyalty-card issues from a Polish retail chain (with the ten-week
cumulative window used in worked estimates), mobile-telephony
diffusion levels for Germany and the Slovak Republic, and monthly
purchases of a medical device.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .series import TimeSeries

# weekly card issues, weeks 48/2011 through 48/2013
_NLC_VALUES = (
    7236, 11904, 12887, 10665, 5616, 7133, 8428, 7263, 7135, 7038,
    6173, 5061, 4237, 4953, 5536, 5387, 4868, 4673, 3496, 5474,
    5576, 5245, 5196, 5563, 5252, 4616, 5690, 4307, 5776, 5561,
    5521, 5525, 5625, 5393, 5132, 5768, 5826, 4683, 5337, 7216,
    6396, 5325, 4421, 4111, 4343, 4462, 3780, 4048, 3708, 3474,
    4462, 3957, 5405, 7913, 7741, 8950, 3447, 3510, 6334, 6793,
    6846, 5764, 5803, 5121, 4223, 4955, 3939, 3566, 7844, 5085,
    3158, 3550, 4468, 3498, 3726, 2339, 2628, 2708, 3482, 2142,
    2710, 2077, 1889, 1686, 1651, 1402, 1247, 2026, 1847, 899,
    1132, 1920, 1551, 1172, 935, 903, 826, 619, 840, 701,
    601, 882, 775, 849, 1238,
)

_NLC_LABELS = tuple(
    [f"{w:02d}/11" for w in range(48, 53)]
    + [f"{w:02d}/12" for w in range(1, 53)]
    + [f"{w:02d}/13" for w in range(1, 49)]
)

# cumulative card totals for weeks 05/12 through 14/12
_TNLC_WINDOW = (
    85305, 91478, 96539, 100776, 105729, 111265, 116652, 121520, 126193, 129689,
)

_YEARS = tuple(str(y) for y in range(1995, 2013))

# mobile subscriptions per inhabitant, already a level series
_GERMANY = (
    0.05, 0.07, 0.10, 0.17, 0.28, 0.58, 0.67, 0.71, 0.77,
    0.85, 0.95, 1.02, 1.15, 1.27, 1.26, 1.06, 1.10, 1.12,
)
_SLOVAKIA = (
    0.01, 0.01, 0.04, 0.09, 0.12, 0.23, 0.40, 0.54, 0.68,
    0.79, 0.84, 0.91, 1.12, 1.02, 1.01, 1.09, 1.10, 1.12,
)

# monthly device purchases, June 2009 through March 2012
_QMD_VALUES = (
    3, 12, 8, 17, 22, 30, 15, 11, 4,
    23, 8, 20, 11, 10, 15, 10, 17, 16,
    15, 4, 11, 8, 8, 5, 9, 12, 11,
    16, 17, 25, 12, 8, 5, 5,
)

_QMD_LABELS = tuple(
    [f"{m:02d}/09" for m in range(6, 13)]
    + [f"{m:02d}/10" for m in range(1, 13)]
    + [f"{m:02d}/11" for m in range(1, 13)]
    + [f"{m:02d}/12" for m in range(1, 4)]
)


@dataclass(frozen=True)
class Fixture:
    name: str
    series: TimeSeries


def _build() -> dict[str, Fixture]:
    specs = {
        "loyalty-nlc": TimeSeries(_NLC_LABELS, _NLC_VALUES, kind="raw"),
        "loyalty-tnlc-window": TimeSeries(
            tuple(f"{w:02d}/12" for w in range(5, 15)), _TNLC_WINDOW, kind="cumulative"
        ),
        "mobile-germany": TimeSeries(_YEARS, _GERMANY, kind="cumulative"),
        "mobile-slovakia": TimeSeries(_YEARS, _SLOVAKIA, kind="cumulative"),
        "medical-qmd": TimeSeries(_QMD_LABELS, _QMD_VALUES, kind="raw"),
    }
    return {name: Fixture(name=name, series=ts) for name, ts in specs.items()}


_FIXTURES = _build()

FIXTURE_NAMES = tuple(_FIXTURES)


def get_fixture(name: str) -> Fixture:
    try:
        return _FIXTURES[name]
    except KeyError:
        raise DomainError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        ) from None
