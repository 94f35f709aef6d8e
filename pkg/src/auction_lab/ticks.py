"""Quote-file ingestion and derived series.

Input records are plain-text CSV lines of the form

    2009/12/24,17:17:40,131.053,131.092

(date, time, bid, ask; no header).  Prices are kept both as float64 for
arithmetic and as the original field text so that formatting a parsed tick
reproduces the input line byte-for-byte.  From a tick sequence we derive the
mid point m = (ask + bid) / 2, its one-step return, the +/-1 sign series of
the returns, and the bid-ask spread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ConfigError, InsufficientDataError, TickParseError
from .lagstats import signal_from_returns

ZERO_POLICIES = ("carry", "drop", "plus")


@dataclass(frozen=True)
class Tick:
    """One quote record; `raw` holds the four original field strings."""

    timestamp: datetime
    bid: float
    ask: float
    raw: tuple

    def format(self) -> str:
        return ",".join(self.raw)


@dataclass
class TickSeries:
    """Parsed file: ticks in file order plus a count of timestamp regressions.

    Out-of-order timestamps are counted, never reordered; repeated seconds
    are legitimate in this data.
    """

    ticks: list
    out_of_order: int = 0

    def __len__(self) -> int:
        return len(self.ticks)


def parse_line(line: str, line_number: int = 0) -> Tick:
    """Parse one `date,time,bid,ask` record.

    Raises TickParseError (carrying `line_number`) on a wrong field count,
    an unparseable timestamp, or a non-numeric price.
    """
    fields = line.rstrip("\r\n").split(",")
    if len(fields) != 4:
        raise TickParseError(
            f"expected 4 comma-separated fields, got {len(fields)}", line_number
        )
    date_s, time_s, bid_s, ask_s = fields
    try:
        stamp = datetime.strptime(
            f"{date_s.strip()} {time_s.strip()}", "%Y/%m/%d %H:%M:%S"
        )
    except ValueError as exc:
        raise TickParseError(f"bad timestamp {date_s!r} {time_s!r}: {exc}", line_number)
    try:
        bid = float(bid_s)
        ask = float(ask_s)
    except ValueError:
        raise TickParseError(f"non-numeric price in {bid_s!r},{ask_s!r}", line_number)
    if not (math.isfinite(bid) and math.isfinite(ask)):
        raise TickParseError(f"non-finite price in {bid_s!r},{ask_s!r}", line_number)
    return Tick(stamp, bid, ask, (date_s, time_s, bid_s, ask_s))


def parse_lines(lines: Iterable[str]) -> TickSeries:
    """Parse an iterable of record lines; blank lines are skipped."""
    ticks = []
    out_of_order = 0
    prev = None
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        tick = parse_line(line, lineno)
        if prev is not None and tick.timestamp < prev:
            out_of_order += 1
        prev = tick.timestamp
        ticks.append(tick)
    return TickSeries(ticks, out_of_order)


def read_tick_file(path) -> TickSeries:
    with open(path, "r", encoding="ascii") as fh:
        return parse_lines(fh)


def write_tick_file(path, bids, asks, start_time: datetime = None,
                    price_format: str = "%.6f") -> None:
    """Write arrays of quotes in record format with 1-second synthetic stamps."""
    if start_time is None:
        start_time = datetime(2009, 12, 24, 0, 0, 0)
    step = timedelta(seconds=1)
    path = Path(path)
    with open(path, "w", encoding="ascii", newline="") as fh:
        stamp = start_time
        for bid, ask in zip(bids, asks):
            fh.write(
                f"{stamp:%Y/%m/%d},{stamp:%H:%M:%S},"
                f"{price_format % bid},{price_format % ask}\n"
            )
            stamp += step


@dataclass
class DerivedSeries:
    """Aligned mid/return/signal/spread arrays.

    len(ret) == len(signal) == len(mid) - 1 and spread aligns with mid.
    """

    mid: np.ndarray
    ret: np.ndarray
    signal: np.ndarray
    spread: np.ndarray

    @property
    def length(self) -> int:
        return self.mid.size


def derive_series(ticks: Union[TickSeries, Sequence[Tick]],
                  zero_policy: str = "carry") -> DerivedSeries:
    """Derive mid point, return, signal and spread series from ticks.

    The sign of a zero return is undefined; `zero_policy` picks the
    resolution:

    * ``carry``: carry the previous nonzero sign forward (+1 when no
      nonzero sign has occurred yet);
    * ``drop``: drop the tick that produced the zero return (consecutive
      equal mid points collapse to one observation);
    * ``plus``: map zero returns to +1.
    """
    if isinstance(ticks, TickSeries):
        ticks = ticks.ticks
    if zero_policy not in ZERO_POLICIES:
        raise ConfigError(f"unknown zero_policy {zero_policy!r}; use one of {ZERO_POLICIES}")
    if len(ticks) < 2:
        raise InsufficientDataError(f"need at least 2 ticks, got {len(ticks)}")
    bid = np.array([t.bid for t in ticks])
    ask = np.array([t.ask for t in ticks])
    mid = (ask + bid) / 2.0
    spread = ask - bid
    if zero_policy == "drop":
        keep = np.ones(mid.size, dtype=bool)
        keep[1:] = mid[1:] != mid[:-1]
        mid = mid[keep]
        spread = spread[keep]
        if mid.size < 2:
            raise InsufficientDataError("fewer than 2 distinct mid points after drop")
        ret = np.diff(mid)
        signal = np.sign(ret).astype(np.int8)
    else:
        ret = np.diff(mid)
        signal = signal_from_returns(ret, zero_policy)
    return DerivedSeries(mid=mid, ret=ret, signal=signal, spread=spread)


@dataclass
class EmpiricalHistogram:
    """Binned counts plus the moment-fitted Gaussian of the sample.

    gaussian_mean / gaussian_std are the sample mean and the square root of
    the biased (1/T) sample variance.
    """

    bin_edges: np.ndarray
    counts: np.ndarray
    gaussian_mean: float
    gaussian_std: float

    @property
    def n_samples(self) -> int:
        return int(self.counts.sum())


def _histogram(values: np.ndarray, n_bins: int) -> EmpiricalHistogram:
    if values.size == 0:
        raise InsufficientDataError("cannot build a histogram of an empty series")
    if n_bins < 2:
        raise ConfigError(f"n_bins must be >= 2, got {n_bins}")
    counts, edges = np.histogram(values, bins=n_bins)
    mean = float(values.mean())
    std = float(np.sqrt(np.mean((values - mean) ** 2)))
    return EmpiricalHistogram(bin_edges=edges, counts=counts,
                              gaussian_mean=mean, gaussian_std=std)


def return_histogram(series: DerivedSeries, n_bins: int) -> EmpiricalHistogram:
    """Histogram of the mid-point returns with a moment-fitted Gaussian."""
    return _histogram(np.asarray(series.ret, dtype=float), n_bins)


def spread_distribution(series: DerivedSeries, n_bins: int) -> EmpiricalHistogram:
    """Histogram of the spread values (NaN entries excluded)."""
    spread = np.asarray(series.spread, dtype=float)
    return _histogram(spread[~np.isnan(spread)], n_bins)
