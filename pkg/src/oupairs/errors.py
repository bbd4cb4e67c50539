"""Exception types shared across the library.

ValueError (and subclasses) signal invalid inputs; the RuntimeError
subclasses below signal numerical failures. The CLI maps the former to
exit code 1 and the latter to exit code 2.
"""


class ConvergenceError(RuntimeError):
    """A series, bracketing search, or likelihood fit failed to converge."""


class SimulationBudgetError(RuntimeError):
    """A simulated trade cycle exceeded the configured step budget.

    Usually means dt is too coarse for the requested thresholds, or the
    thresholds are so extreme that cycles are astronomically long.
    """


class DataError(ValueError):
    """Malformed or degenerate input data (CSV parsing, estimation)."""
