"""Profit rate and profit-rate variance of a thresholded strategy.

Each completed cycle collects the deterministic profit pi = 2(a - b - c)
in standardized units; only the cycle duration is random. Long-run
performance per unit time is therefore

    profit rate      Pi = pi / E[T]
    variance rate    V  = pi^2 var T / E[T]^3

the latter being the large-t limit of var(pi N_t) / t for the cycle
counting process N_t.
"""

import math
from dataclasses import dataclass

from .cycles import CycleStats, cycle_stats, expected_cycle_time, cycle_time_variance

__all__ = ["Performance", "cycle_profit", "expected_profit_rate",
           "profit_rate_variance", "evaluate"]


@dataclass(frozen=True)
class Performance:
    """Profit rate Pi and variance rate V in standardized units."""

    profit_rate: float
    variance_rate: float


def _check_cost(c: float) -> float:
    c = float(c)
    if not math.isfinite(c) or c < 0.0:
        raise ValueError(f"transaction cost must be finite and >= 0, got {c}")
    return c


def _check_strict(a: float, b: float) -> tuple[float, float]:
    a, b = float(a), float(b)
    if not a > b:
        raise ValueError(f"profit rates require a > b strictly, got a={a}, b={b}")
    return a, b


def cycle_profit(a: float, b: float, c: float) -> float:
    """Deterministic profit collected per completed cycle: 2(a - b - c)."""
    return 2.0 * (float(a) - float(b) - _check_cost(c))


def expected_profit_rate(a: float, b: float, c: float) -> float:
    """Expected profit per standardized time unit, pi / E[T]. Requires a > b."""
    a, b = _check_strict(a, b)
    return cycle_profit(a, b, c) / expected_cycle_time(a, b)


def profit_rate_variance(a: float, b: float, c: float) -> float:
    """Long-run variance of profit per time unit, pi^2 var T / E[T]^3."""
    a, b = _check_strict(a, b)
    pi = cycle_profit(a, b, c)
    if pi == 0.0:
        return 0.0
    et = expected_cycle_time(a, b)
    return pi * pi * cycle_time_variance(a, b) / et ** 3


def evaluate(a: float, b: float, c: float) -> Performance:
    """Profit rate and variance rate together, from a single CycleStats."""
    a, b = _check_strict(a, b)
    pi = cycle_profit(a, b, c)
    stats: CycleStats = cycle_stats(a, b)
    if pi == 0.0:
        return Performance(0.0, 0.0)
    return Performance(profit_rate=pi / stats.mean_t,
                       variance_rate=pi * pi * stats.var_t / stats.mean_t ** 3)
