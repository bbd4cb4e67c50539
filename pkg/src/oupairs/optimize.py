"""Threshold optimization: unconstrained, risk-constrained, and the frontier.

The unconstrained problem maximizes the profit rate Pi(a, b) over
feasible thresholds; its optimum is symmetric (b = -a), so the search
runs over the single variable a > c/2. The risk-constrained variant caps
the variance rate at v0 and is solved by bisection on the symmetric
family, which assumes (and verifies) that V(a, -a) is monotone
increasing between the break-even point c/2 and the unconstrained
optimum a*. The efficient frontier is the image of a in [c/2, a*] under
a -> (V(a, -a), Pi(a, -a)).
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .cycles import Strategy
from .errors import ConvergenceError
from .performance import Performance, evaluate, expected_profit_rate, \
    profit_rate_variance

__all__ = ["RiskBound", "OptResult", "FrontierPoint", "maximize_unconstrained",
           "solve_risk_constrained", "efficient_frontier"]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
#: bracketing gives up once a exceeds c/2 + _BRACKET_SPAN
_BRACKET_SPAN = 50.0


@dataclass(frozen=True)
class RiskBound:
    """Exogenous cap v0 > 0 on the variance rate."""

    v0: float

    def __post_init__(self):
        if not (math.isfinite(self.v0) and self.v0 > 0.0):
            raise ValueError(f"risk bound v0 must be finite and > 0, got {self.v0}")


@dataclass(frozen=True)
class OptResult:
    """Optimal symmetric strategy with its performance.

    residual is |V - v0| at the solution when the risk constraint is
    active, 0 otherwise.
    """

    strategy: Strategy
    performance: Performance
    constraint_active: bool
    residual: float


@dataclass(frozen=True)
class FrontierPoint:
    """One sample (a, V(a,-a), Pi(a,-a)) of the efficient frontier."""

    a: float
    variance_rate: float
    profit_rate: float


def _check_cost_positive(c: float) -> float:
    c = float(c)
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"transaction cost must be finite and > 0, got {c}")
    return c


def _golden_max(f, lo: float, hi: float, tol: float) -> float:
    """Argmax of a unimodal f on [lo, hi] to absolute precision tol."""
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
    return 0.5 * (lo + hi)


def maximize_unconstrained(c: float, tol: float = 1e-8) -> OptResult:
    """Symmetric strategy (a*, -a*) maximizing the profit rate for cost c.

    a* is located to absolute precision tol by golden-section search on a
    bracket found by geometric expansion from the break-even point c/2.
    Raises ConvergenceError if no bracket exists within c/2 + 50.
    """
    c = _check_cost_positive(c)
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"tol must be finite and > 0, got {tol}")

    def f(a: float) -> float:
        return expected_profit_rate(a, -a, c)

    # expand from c/2 with doubling steps until the profit rate drops
    half = 0.5 * c
    step = 0.0625 * max(1.0, c)
    points = [half]
    values = [0.0]
    while True:
        a = half + step
        if a - half > _BRACKET_SPAN:
            raise ConvergenceError(
                f"no interior profit-rate maximum found for cost c={c} "
                f"within a <= c/2 + {_BRACKET_SPAN}")
        points.append(a)
        values.append(f(a))
        if len(values) >= 3 and values[-1] < values[-2]:
            break
        step *= 2.0

    lo = points[-3]
    hi = points[-1]
    a_star = _golden_max(f, lo, hi, tol)
    return OptResult(strategy=Strategy(a=a_star, b=-a_star),
                     performance=evaluate(a_star, -a_star, c),
                     constraint_active=False,
                     residual=0.0)


def _variance_is_monotone(c: float, a_star: float, n_probe: int = 32) -> bool:
    grid = np.linspace(0.5 * c, a_star, n_probe)
    v = np.array([profit_rate_variance(a, -a, c) if a > 0 else 0.0 for a in grid])
    slack = 1e-9 * max(1.0, float(v.max()))
    return bool(np.all(np.diff(v) >= -slack))


def solve_risk_constrained(c: float, bound: "RiskBound | float",
                           eps: float = 1e-6, tol: float = 1e-8) -> OptResult:
    """Profit-maximizing symmetric strategy subject to V <= v0.

    If the unconstrained optimum already satisfies the bound it is
    returned unchanged. Otherwise a is bisected on [c/2, a*] until
    |V(a, -a) - v0| <= eps. Should the monotonicity probe of V fail, the
    solver falls back to a dense grid scan and emits a warning.
    """
    if not isinstance(bound, RiskBound):
        bound = RiskBound(float(bound))
    if not (math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"eps must be finite and > 0, got {eps}")
    unconstrained = maximize_unconstrained(c, tol)
    if unconstrained.performance.variance_rate <= bound.v0:
        return unconstrained
    a_star = unconstrained.strategy.a

    if not _variance_is_monotone(c, a_star):
        warnings.warn("variance rate is not monotone on [c/2, a*] at probe "
                      "resolution; falling back to grid scan", RuntimeWarning)
        grid = np.linspace(0.5 * c, a_star, 20001)[1:]
        best_a, best_pi = None, -math.inf
        for a in grid:
            if profit_rate_variance(a, -a, c) <= bound.v0:
                pi = expected_profit_rate(a, -a, c)
                if pi > best_pi:
                    best_a, best_pi = a, pi
        if best_a is None:
            raise ConvergenceError(
                f"no feasible strategy found for v0={bound.v0} with cost c={c}")
        perf = evaluate(best_a, -best_a, c)
        return OptResult(strategy=Strategy(a=best_a, b=-best_a),
                         performance=perf, constraint_active=True,
                         residual=abs(perf.variance_rate - bound.v0))

    lo, hi = 0.5 * c, a_star
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        v_mid = profit_rate_variance(mid, -mid, c)
        if abs(v_mid - bound.v0) <= eps:
            return OptResult(strategy=Strategy(a=mid, b=-mid),
                             performance=evaluate(mid, -mid, c),
                             constraint_active=True,
                             residual=abs(v_mid - bound.v0))
        if v_mid > bound.v0:
            hi = mid
        else:
            lo = mid
    raise ConvergenceError(
        f"bisection on the risk constraint did not reach eps={eps} within "
        f"200 iterations (c={c}, v0={bound.v0})")


def efficient_frontier(c: float, n_points: int) -> list[FrontierPoint]:
    """n_points equally spaced samples of the frontier on [c/2, a*].

    The first point is exactly (c/2, 0, 0) and the last is the
    unconstrained optimum.
    """
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    a_star = maximize_unconstrained(c).strategy.a
    out = []
    for a in np.linspace(0.5 * c, a_star, n_points):
        perf = evaluate(float(a), -float(a), c)
        out.append(FrontierPoint(a=float(a), variance_rate=perf.variance_rate,
                                 profit_rate=perf.profit_rate))
    return out
