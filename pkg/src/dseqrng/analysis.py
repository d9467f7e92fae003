"""Bipolar mapping, unnormalized autocorrelation and bit balance.

Everything is integer-exact; correlations use int64 dot products.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyInputError

DEFAULT_WINDOW = 40_000


@dataclass(frozen=True)
class CorrelationSeries:
    kind: str
    length_analyzed: int
    entries: tuple  # ((lag, value), ...)

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def __getitem__(self, lag: int) -> int:
        return self.entries[lag][1]

    def off_peak_max(self) -> int:
        return max((abs(v) for lag, v in self.entries if lag), default=0)


def to_bipolar(bits: Iterable[int]) -> list[int]:
    out = []
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        out.append(2 * b - 1)
    return out


def _as_array(seq: Sequence[int]) -> np.ndarray:
    arr = np.asarray(seq, dtype=np.int64)
    if arr.size == 0:
        raise EmptyInputError("autocorrelation of an empty sequence")
    if not np.all(np.abs(arr) == 1):
        raise ValueError("bipolar sequences may only contain -1 and +1")
    return arr


def _lags(n: int, max_lag: Optional[int]) -> range:
    top = n - 1 if max_lag is None else min(max_lag, n - 1)
    return range(top + 1)


def circular_autocorr(seq: Sequence[int], max_lag: Optional[int] = None) -> CorrelationSeries:
    b = _as_array(seq)
    n = b.size
    doubled = np.concatenate([b, b])
    entries = tuple((lag, int(np.dot(b, doubled[lag:lag + n]))) for lag in _lags(n, max_lag))
    return CorrelationSeries("circular", n, entries)


def linear_autocorr(seq: Sequence[int], max_lag: Optional[int] = None) -> CorrelationSeries:
    b = _as_array(seq)
    n = b.size
    entries = tuple((lag, int(np.dot(b[:n - lag], b[lag:]))) for lag in _lags(n, max_lag))
    return CorrelationSeries("linear", n, entries)


def balance(bits: Iterable[int]) -> tuple[int, int]:
    ones = zeros = 0
    for b in bits:
        if b == 1:
            ones += 1
        elif b == 0:
            zeros += 1
        else:
            raise ValueError(f"not a bit: {b!r}")
    return ones, zeros


def analysis_window(period: Optional[int], available: Optional[int] = None) -> int:
    """One full period when it fits in 40,000 bits, else the first 40,000."""
    n = DEFAULT_WINDOW if period is None or period > DEFAULT_WINDOW else period
    if available is not None:
        n = min(n, available)
    return n
