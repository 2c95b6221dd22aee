# =============================================================================
## @file    Brownian.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Exact samplers and closed-form laws for the
#    zero set of Brownian motion started at a > 0:
#    first hitting time, last zero, meander endpoint
#    and the (empty, first zero, last zero) summary.
# =============================================================================

from dataclasses import dataclass
from typing import Optional
import math

import numpy as np
import pandas as pd

from RandomSetLab.ClosedSet import ClosedSet
from RandomSetLab.Errors import DomainError
from RandomSetLab import SpecFun

# -----------------------------------------------------------------------------
# Types
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class SeedParams:
    """SeedParams

    Parameters of the Brownian seed.

    Members:
      a:    starting point B_0 = a > 0
      beta: vacuum rate > 0
    """
    a    : float
    beta : float = 1.0

    def __post_init__(self):
        if not self.a > 0.0 or not self.beta > 0.0:
            raise DomainError(f"seed needs a > 0 and beta > 0 (a = {self.a}, beta = {self.beta})")

@dataclass(frozen = True)
class BrownianZeroSummary:
    """BrownianZeroSummary

    Sufficient statistic of a zero set on [0, t]:
    whether it is empty, its first zero and its
    last zero.

    Members:
      horizon: t
      empty:   no zero in [0, t]
      alpha:   first zero (None if empty)
      gLast:   last zero (None if empty)
    """
    horizon : float
    empty   : bool
    alpha   : Optional[float] = None
    gLast   : Optional[float] = None

    def __post_init__(self):
        if self.empty:
            if self.alpha is not None or self.gLast is not None:
                raise DomainError("empty summary carries no zeros")
        elif not (0.0 < self.alpha <= self.gLast <= self.horizon):
            raise DomainError(f"need 0 < alpha <= gLast <= t, got {self.alpha}, {self.gLast}, {self.horizon}")

    @property
    def dm(self):
        """spread gLast - alpha (0 for the empty set)"""
        return 0.0 if self.empty else self.gLast - self.alpha

def EmptySummary(t):
    return BrownianZeroSummary(t, True)

# -----------------------------------------------------------------------------
# Samplers
# -----------------------------------------------------------------------------

def SampleHittingTime(a, rng, size = None):
    """SampleHittingTime

    First hitting time of 0 from a, drawn as a^2 / N^2
    with N standard normal.

    Args:
      a:    starting point > 0
      rng:  numpy Generator
      size: optional number of draws
    Returns:
      hitting time(s)
    """
    if not a > 0.0:
        raise DomainError(f"starting point must be positive, got {a}")
    normal = rng.standard_normal(size)
    return a * a / (normal * normal)

def SampleArcsineLastZero(T, rng, size = None):
    """SampleArcsineLastZero

    Last zero before T of Brownian motion started at
    0: T sin^2(pi U / 2).
    """
    if not T > 0.0:
        raise DomainError(f"horizon must be positive, got {T}")
    s = np.sin(0.5 * np.pi * rng.random(size))
    return T * s * s

def SampleMeanderEndpoint(A, rng, size = None):
    """SampleMeanderEndpoint

    Rayleigh(A) endpoint of a meander of length A:
    sqrt(-2 A ln U).
    """
    if not A > 0.0:
        raise DomainError(f"meander length must be positive, got {A}")
    u = 1.0 - rng.random(size)
    return np.sqrt(-2.0 * A * np.log(u))

def SampleZeroSummary(a, t, rng):
    """SampleZeroSummary

    Summary of the zero set on [0, t] through the
    decomposition at the first zero: empty iff
    T0 > t, else the last zero is T0 plus an arcsine
    draw on the remaining time.

    Args:
      a:   starting point > 0
      t:   horizon > 0
      rng: numpy Generator
    Returns:
      BrownianZeroSummary
    """
    if not t > 0.0:
        raise DomainError(f"horizon must be positive, got {t}")
    alpha = float(SampleHittingTime(a, rng))
    if alpha > t:
        return EmptySummary(t)
    if alpha == t:
        return BrownianZeroSummary(t, False, alpha, alpha)
    gLast = alpha + float(SampleArcsineLastZero(t - alpha, rng))
    return BrownianZeroSummary(t, False, alpha, min(gLast, t))

def SampleZeroSummaryBatch(a, t, n, rng):
    """SampleZeroSummaryBatch

    Vectorized SampleZeroSummary returning column
    arrays (empty, alpha, gLast), NaN where empty.
    """
    alpha = SampleHittingTime(a, rng, int(n))
    empty = alpha > t
    rest  = np.where(empty, 0.0, t - alpha)
    gLast = np.minimum(alpha + SampleArcsineLastZero(1.0, rng, int(n)) * rest, t)
    alpha = np.where(empty, np.nan, alpha)
    gLast = np.where(empty, np.nan, gLast)
    return empty, alpha, gLast

# -----------------------------------------------------------------------------
# Closed forms
# -----------------------------------------------------------------------------

def SurvivalProbability(a, t):
    """SurvivalProbability

    P_a(T0 > t) = 2 Phi(a / sqrt(t)) - 1.
    """
    return SpecFun.HittingSurvival(a, t)

def KilledEndpointDensity(eps, A, y):
    """KilledEndpointDensity

    Density at y > 0 of B_A given survival to A from
    B_0 = eps (method of images); converges to the
    Rayleigh(A) density as eps goes to 0.

    Args:
      eps: starting point > 0
      A:   time > 0
      y:   endpoint value(s)
    Returns:
      conditional density
    """
    y = np.asarray(y, dtype = float)
    scale = math.sqrt(A)
    kernel = (np.exp(-0.5 * ((y - eps) / scale) ** 2) - np.exp(-0.5 * ((y + eps) / scale) ** 2))
    kernel = kernel / (scale * math.sqrt(2.0 * math.pi))
    return np.where(y > 0.0, kernel / SurvivalProbability(eps, A), 0.0)

# -----------------------------------------------------------------------------
# Conversions and dumps
# -----------------------------------------------------------------------------

def SummaryToClosedSet(z):
    """SummaryToClosedSet

    Lossless injection {[alpha, alpha], [G, G]} of a
    summary into the closed-set carrier.
    """
    if z.empty:
        return ClosedSet(z.horizon)
    if z.alpha == z.gLast:
        return ClosedSet(z.horizon, ((z.alpha, z.alpha),))
    return ClosedSet(z.horizon, ((z.alpha, z.alpha), (z.gLast, z.gLast)))

def SummariesToFrame(summaries, seed):
    """SummariesToFrame

    Sample dump with columns seed, t, empty, alpha, g_last.
    """
    return pd.DataFrame({
        "seed"   : [seed] * len(summaries),
        "t"      : [z.horizon for z in summaries],
        "empty"  : [int(z.empty) for z in summaries],
        "alpha"  : [np.nan if z.empty else z.alpha for z in summaries],
        "g_last" : [np.nan if z.empty else z.gLast for z in summaries]
    })

# end =========================================================================
