"""General Ornstein-Uhlenbeck parametrization and the standardization maps.

The spread follows dX = tau (mu - X) ds + sigma dW with stationary law
N(mu, sigma^2 / (2 tau)). The change of variables

    y = sqrt(2 tau / sigma^2) (x - mu),        t = tau s

maps X to the standardized process Y (zero mean, unit stationary
variance) in which all threshold optimization is carried out. Costs,
thresholds, and performance move between the two frames via the same
scale factor:

    c         = sqrt(2 tau / sigma^2) c_gen
    a_gen     = sqrt(sigma^2 / (2 tau)) a + mu
    Pi_gen    = sqrt(tau sigma^2 / 2) Pi
    V_gen     = (sigma^2 / 2) V
"""

import math
from dataclasses import dataclass

from .cycles import Strategy
from .performance import Performance

__all__ = ["OUParams", "PairSpec", "GeneralStrategy", "GeneralPerformance",
           "combined_cost", "standardize_cost", "destandardize_cost",
           "standardize_point", "destandardize_point",
           "standardize_strategy", "destandardize_strategy",
           "destandardize_performance", "transition"]


@dataclass(frozen=True)
class OUParams:
    """Mean-reversion parameters: long-term mean, reversion speed, sigma^2."""

    mu: float
    tau: float
    sigma2: float

    def __post_init__(self):
        for name in ("mu", "tau", "sigma2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)}")
        if self.tau <= 0.0:
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if self.sigma2 <= 0.0:
            raise ValueError(f"sigma2 must be > 0, got {self.sigma2}")

    @property
    def scale(self) -> float:
        """sqrt(2 tau / sigma^2): price units -> standardized units."""
        return math.sqrt(2.0 * self.tau / self.sigma2)


@dataclass(frozen=True)
class PairSpec:
    """Cointegration coefficient and per-unit transaction costs of the legs."""

    eta: float
    cost_a: float = 0.0
    cost_b: float = 0.0

    def __post_init__(self):
        if self.cost_a < 0.0 or self.cost_b < 0.0:
            raise ValueError(f"transaction costs must be >= 0, got "
                             f"cost_a={self.cost_a}, cost_b={self.cost_b}")


@dataclass(frozen=True)
class GeneralStrategy:
    """Entry/exit thresholds in price units."""

    a_tilde: float
    b_tilde: float

    def __post_init__(self):
        if not self.a_tilde > self.b_tilde:
            raise ValueError(f"entry threshold must exceed exit threshold, got "
                             f"a_tilde={self.a_tilde} <= b_tilde={self.b_tilde}")


@dataclass(frozen=True)
class GeneralPerformance:
    """Profit rate and variance rate in price units per original time."""

    profit_rate: float
    variance_rate: float


def combined_cost(spec: PairSpec) -> float:
    """Round-trip cost of the two-leg portfolio: 2 cost_a + 2 eta cost_b."""
    return 2.0 * spec.cost_a + 2.0 * spec.eta * spec.cost_b


def standardize_cost(p: OUParams, c_general: float) -> float:
    """Map a price-unit round-trip cost into standardized units."""
    if c_general < 0.0:
        raise ValueError(f"cost must be >= 0, got {c_general}")
    return p.scale * c_general


def destandardize_cost(p: OUParams, c: float) -> float:
    """Inverse of standardize_cost."""
    if c < 0.0:
        raise ValueError(f"cost must be >= 0, got {c}")
    return c / p.scale


def standardize_point(p: OUParams, x: float, s: float) -> tuple[float, float]:
    """Map a price-space point (x, s) to standardized coordinates (y, t)."""
    return p.scale * (x - p.mu), p.tau * s


def destandardize_point(p: OUParams, y: float, t: float) -> tuple[float, float]:
    """Inverse of standardize_point."""
    return y / p.scale + p.mu, t / p.tau


def standardize_strategy(p: OUParams, strat: GeneralStrategy) -> Strategy:
    """Map price-space thresholds to standardized thresholds."""
    return Strategy(a=p.scale * (strat.a_tilde - p.mu),
                    b=p.scale * (strat.b_tilde - p.mu))


def destandardize_strategy(p: OUParams, strat: Strategy) -> GeneralStrategy:
    """Map standardized thresholds to price-space thresholds."""
    return GeneralStrategy(a_tilde=strat.a / p.scale + p.mu,
                           b_tilde=strat.b / p.scale + p.mu)


def destandardize_performance(p: OUParams, perf: Performance) -> GeneralPerformance:
    """Map standardized (Pi, V) into price units per original time."""
    return GeneralPerformance(
        profit_rate=math.sqrt(p.tau * p.sigma2 / 2.0) * perf.profit_rate,
        variance_rate=(p.sigma2 / 2.0) * perf.variance_rate)


def transition(p: OUParams, x0: float, dt: float) -> tuple[float, float]:
    """Exact one-step conditional law of X_{s+dt} given X_s = x0.

    Returns (mean, variance):
        mean     = mu + (x0 - mu) exp(-tau dt)
        variance = sigma^2 / (2 tau) (1 - exp(-2 tau dt))
    """
    if not dt > 0.0:
        raise ValueError(f"dt must be > 0, got {dt}")
    decay = math.exp(-p.tau * dt)
    mean = p.mu + (x0 - p.mu) * decay
    variance = p.sigma2 / (2.0 * p.tau) * (1.0 - decay * decay)
    return mean, variance
