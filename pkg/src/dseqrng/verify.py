"""Built-in reproduction suite for the worked examples of the recursive generator."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import recursive
from .recursive import RecursiveConfig

# (seed, inner, outer) -> published period.  The last entry is not a
# multiple of its SeedSet size (12) and so cannot be an exact period.
REFERENCE_PERIODS = {
    (2, (3, 5), (7, 11)): 120,
    (2, (23, 29), (7, 11)): 9240,
    (2, (3, 7), (23, 29)): 1848,
    (2, (5, 7), (23, 29)): 3639,
}


def reference_period(cfg: RecursiveConfig) -> Optional[int]:
    if cfg.seedset_size not in (None, cfg.inner_period):
        return None
    key = (cfg.seed, tuple(sorted(cfg.inner_primes)), tuple(sorted(cfg.outer_primes)))
    return REFERENCE_PERIODS.get(key)


def reference_note(cfg: RecursiveConfig, predicted: int, measured: Optional[int]) -> Optional[str]:
    ref = reference_period(cfg)
    if ref is None:
        return None
    actual = measured if measured is not None else predicted
    if ref == actual:
        return None
    w = cfg.w
    why = f"{ref} is not a multiple of w={w}" if ref % w else "differs"
    return f"published value {ref} disagrees with {actual} ({why})"


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"[{status}] {self.name}: expected={self.expected} actual={self.actual}"
        return s + (f" ({self.note})" if self.note else "")


def _guard(name: str, expected, fn: Callable[[], object]) -> Check:
    try:
        actual = fn()
    except Exception as exc:  # failures are reported, not raised
        return Check(name, expected, f"error: {exc}", False)
    return Check(name, expected, actual, actual == expected)


def _period_check(name: str, cfg: RecursiveConfig, expected: int, max_bits: int) -> list[Check]:
    return [
        _guard(f"{name} predicted period", expected,
               lambda: recursive.predict_period(cfg).total_period),
        _guard(f"{name} measured period", expected,
               lambda: recursive.measure_period(cfg, max_bits)),
    ]


def _figure1_right() -> list[Check]:
    cfg = RecursiveConfig(2, (5, 7), (23, 29))
    try:
        report = recursive.predict_period(cfg)
        measured = recursive.measure_period(cfg, 4 * report.total_period)
    except Exception as exc:
        return [Check("fig1-right period", "measured == predicted", f"error: {exc}", False)]
    ok = measured == report.total_period and report.total_period % report.w == 0
    note = reference_note(cfg, report.total_period, measured) or ""
    return [Check("fig1-right period (measured adjudicates)", report.total_period,
                  measured, ok, note)]


def run_checks() -> list[Check]:
    ex1 = RecursiveConfig(2, (3, 5), (7, 11))
    ex2 = RecursiveConfig(2, (23, 29), (7, 11))
    fig1_left = RecursiveConfig(2, (3, 7), (23, 29))
    checks = [
        _guard("example1 seedset", (4, 5, 5, 2), lambda: recursive.build_seedset(ex1).values),
        _guard("example1 order matrix", ((3, 5), (6, 5), (6, 5), (3, 10)),
               lambda: recursive.predict_period(ex1).order_matrix),
        _guard("example1 outer period", 30, lambda: recursive.predict_period(ex1).outer_period),
    ]
    checks += _period_check("example1", ex1, 120, 480)
    checks.append(_guard("example2 inner period", 308, lambda: ex2.inner_period))
    checks += _period_check("example2", ex2, 9240, 2 * 9240)
    checks += _period_check("fig1-left", fig1_left, 1848, 4 * 1848)
    checks += _figure1_right()
    return checks
