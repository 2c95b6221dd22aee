# =============================================================================
## @file    Tilt.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Transforms of the Brownian seed: logarithmic
#    anchor localization, Palm uniformization of the
#    anchor, vacuum normalization, and the tilted
#    arcsine law they produce.
# =============================================================================

from dataclasses import dataclass
from typing import Callable
import logging
import math

import numpy as np
import pandas as pd

from RandomSetLab import SpecFun
from RandomSetLab.Brownian import BrownianZeroSummary
from RandomSetLab.Brownian import EmptySummary
from RandomSetLab.Brownian import SurvivalProbability
from RandomSetLab.Errors import DegenerateTiltError
from RandomSetLab.Errors import DomainError

logger = logging.getLogger(__name__)

# below this normalizer rejection from the arcsine is abandoned
DEEP_TILT = 0.01
# below this normalizer the public sampler refuses
DEGENERATE_TILT = 1e-12

# -----------------------------------------------------------------------------
# Localization rate
# -----------------------------------------------------------------------------

def LogRate(x):
    """LogRate

    Tilt rate c(x) = |ln x| / x^2 attached to an
    anchor x in (0, 1].

    Args:
      x: anchor(s)
    Returns:
      c(x)
    """
    arr = np.asarray(x, dtype = float)
    if np.any(arr <= 0.0) or np.any(arr > 1.0):
        raise DomainError("LogRate needs anchors in (0, 1]")
    vals = np.abs(np.log(arr)) / (arr * arr)
    return float(vals) if arr.ndim == 0 else vals

def LocalizationWeight(t, alpha = None, dm = 0.0, empty = False):
    """LocalizationWeight

    Anchor-adapted localized tilt exp(-L(alpha) dm / alpha^2)
    with L(r) = |ln r|; the empty set keeps weight 1.

    Args:
      t:     horizon in (0, 1)
      alpha: anchor in (0, t]
      dm:    spread >= 0
      empty: weight of the empty configuration
    Returns:
      weight in (0, 1]
    """
    if not (0.0 < t < 1.0):
        raise DomainError(f"localization is defined for t in (0, 1), got {t}")
    if empty:
        return 1.0
    if alpha is None or not (0.0 < alpha <= t) or dm < 0.0:
        raise DomainError(f"need 0 < alpha <= t and dm >= 0 (alpha = {alpha}, dm = {dm})")
    return math.exp(-LogRate(alpha) * dm)

# -----------------------------------------------------------------------------
# Tilted arcsine law
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class TiltedArcsineLaw:
    """TiltedArcsineLaw

    Arcsine law on (0, T) tilted by e^{-cg}.

    Members:
      T:          horizon
      c:          tilt rate
      normalizer: Z_T(c) by quadrature
      density:    normalized Density1D
    """
    T          : float
    c          : float
    normalizer : float
    density    : SpecFun.Density1D

def TiltedArcsine(T, c):
    """TiltedArcsine

    Builds the tilted arcsine density and its
    normalizer Z_T(c) by singular quadrature.

    Args:
      T: horizon > 0
      c: tilt rate >= 0
    Returns:
      TiltedArcsineLaw
    """
    if not T > 0.0 or not c >= 0.0:
        raise DomainError(f"tilted arcsine needs T > 0 and c >= 0 (T = {T}, c = {c})")

    def Unnormalized(g):
        return np.exp(-c * g) * SpecFun.ArcsineDensity(g, T)

    norm = SpecFun.Integrate(Unnormalized, 0.0, T, singularLo = True, singularHi = True)
    density = SpecFun.Density1D(
        name = f"tilted-arcsine(T={T:g},c={c:g})",
        lo = 0.0,
        hi = T,
        evaluate = lambda g: Unnormalized(g) / norm,
        singularLo = True,
        singularHi = True
    )
    return TiltedArcsineLaw(T, c, norm, density)

def TiltedArcsineCdf(law, g):
    """TiltedArcsineCdf

    P(G <= g) under the tilted law.
    """
    if g <= 0.0:
        return 0.0
    if g >= law.T:
        return 1.0
    return min(1.0, SpecFun.QuadSingular(law.density, 0.0, g))

def TiltedArcsineTail(law, r):
    """TiltedArcsineTail

    P(G > r) under the tilted law.
    """
    if r <= 0.0:
        return 1.0
    if r >= law.T:
        return 0.0
    return min(1.0, SpecFun.QuadSingular(law.density, r, law.T))

def TiltedArcsineMean(law):
    return SpecFun.Integrate(lambda g: g * law.density(g), 0.0, law.T, True, True)

def _SampleTiltedArray(T, c, rng):
    """SampleTiltedArray

    Elementwise tilted arcsine draws. Rejection from the
    arcsine where Z_T(c) >= DEEP_TILT, otherwise the
    exact von Mises form g = T sin^2(V/2) with
    V ~ vonMises(0, cT/2).
    """
    T   = np.asarray(T, dtype = float)
    c   = np.asarray(c, dtype = float)
    out = np.zeros_like(T)
    live = T > 0.0
    kappa = 0.5 * c * T
    deep = live & (SpecFun.BesselI0e(kappa) < DEEP_TILT)
    if np.any(deep):
        half = 0.5 * rng.vonmises(0.0, kappa[deep])
        out[deep] = T[deep] * np.sin(half) ** 2
    pending = np.flatnonzero(live & ~deep)
    while pending.size > 0:
        s = np.sin(0.5 * np.pi * rng.random(pending.size))
        g = T[pending] * s * s
        accept = rng.random(pending.size) < np.exp(-c[pending] * g)
        out[pending[accept]] = g[accept]
        pending = pending[~accept]
    return out

def SampleTiltedArcsineCounted(T, c, rng):
    """SampleTiltedArcsineCounted

    Rejection draw from the tilted arcsine together
    with the number of arcsine proposals used.

    Args:
      T:   horizon > 0
      c:   tilt rate >= 0
      rng: numpy Generator
    Returns:
      tuple of (draw, proposals)
    """
    if not T > 0.0 or not c >= 0.0:
        raise DomainError(f"tilted arcsine needs T > 0 and c >= 0 (T = {T}, c = {c})")
    norm = SpecFun.ArcsinePhi(c, T)
    if norm < DEGENERATE_TILT:
        raise DegenerateTiltError(f"normalizer {norm:.3e} at c = {c}, T = {T}")
    if norm < DEEP_TILT:
        half = 0.5 * rng.vonmises(0.0, 0.5 * c * T)
        return T * math.sin(half) ** 2, 1
    proposals = 0
    while True:
        proposals += 1
        s = math.sin(0.5 * math.pi * rng.random())
        g = T * s * s
        if rng.random() < math.exp(-c * g):
            return g, proposals

def SampleTiltedArcsine(T, c, rng):
    """SampleTiltedArcsine

    One draw from the arcsine law on (0, T) tilted
    by e^{-cg}.
    """
    return SampleTiltedArcsineCounted(T, c, rng)[0]

# -----------------------------------------------------------------------------
# Palm uniformization
# -----------------------------------------------------------------------------

def _PhiUnchecked(c, T):
    return SpecFun.BesselI0e(0.5 * np.asarray(c) * np.maximum(T, 0.0))

def _AnchorIntegrand(p, t):
    """f_a(x) Phi_{c(x)}(t - x) on (0, t]"""
    def Evaluate(x):
        x = np.asarray(x, dtype = float)
        safe = np.clip(x, 1e-300, t)
        rate = np.abs(np.log(safe)) / (safe * safe)
        vals = p.a / math.sqrt(2.0 * math.pi) * safe ** -1.5 * np.exp(-p.a * p.a / (2.0 * safe))
        return np.where(x > 0.0, vals * _PhiUnchecked(rate, t - safe), 0.0)
    return Evaluate

def LocalizedNormalizer(p, t):
    """LocalizedNormalizer

    Mass of the localized (untilted-vacuum) law:
    P_a(T0 > t) + int_0^t f_a(x) Phi_{c(x)}(t - x) dx.

    Args:
      p: SeedParams
      t: horizon in (0, 1)
    Returns:
      Z_t^loc
    """
    if not (0.0 < t <= 1.0):
        raise DomainError(f"localized normalizer needs t in (0, 1], got {t}")
    return SurvivalProbability(p.a, t) + SpecFun.Integrate(_AnchorIntegrand(p, t), 0.0, t)

@dataclass(frozen = True)
class PalmUniformization:
    """PalmUniformization

    Anchor reweighting of the localized law making
    the anchor exactly uniform on (0, t).

    Members:
      t:          horizon
      normalizer: Z_t^loc
      pLoc:       localized vacuum mass
      kappa:      density of the localized anchor measure
                  on nonempty sets (mass 1 - pLoc)
      h:          reweighting function Z_t^loc / (f_a Phi)
    """
    t          : float
    normalizer : float
    pLoc       : float
    kappa      : Callable
    h          : Callable

    @property
    def constant(self):
        """C_t = pLoc + t"""
        return self.pLoc + self.t

def PalmDensityH(p, t):
    """PalmDensityH

    Palm uniformization of the localized seed: the
    function h with h dkappa^loc = Leb on (0, t).

    Args:
      p: SeedParams
      t: horizon in (0, 1)
    Returns:
      PalmUniformization
    """
    norm   = LocalizedNormalizer(p, t)
    anchor = _AnchorIntegrand(p, t)
    logger.debug(f"Palm uniformization at t = {t}: Z^loc = {norm:.12g}")

    def Kappa(x):
        return anchor(x) / norm

    def H(x):
        with np.errstate(divide = "ignore", over = "ignore"):
            return norm / anchor(x)

    return PalmUniformization(t, norm, SurvivalProbability(p.a, t) / norm, Kappa, H)

# -----------------------------------------------------------------------------
# Seed density and sampler
# -----------------------------------------------------------------------------

def _CheckSeedHorizon(t):
    if not (0.0 < t <= 1.0):
        raise DomainError(f"seed horizons must lie in (0, 1], got {t}")

def SeedDensity(p, t, z):
    """SeedDensity

    Radon-Nikodym derivative of the seed law against
    the Brownian zero-set law at horizon t.

    Args:
      p: SeedParams
      t: horizon in (0, 1]
      z: BrownianZeroSummary at horizon t
    Returns:
      f_t(z)
    """
    _CheckSeedHorizon(t)
    if z.horizon != t:
        raise DomainError(f"summary horizon {z.horizon} differs from t = {t}")
    if z.empty:
        return math.exp(-p.beta * t) / SurvivalProbability(p.a, t)
    if not (0.0 < z.alpha <= t):
        raise DomainError(f"anchor {z.alpha} outside (0, {t}]")
    with np.errstate(over = "ignore"):
        return float(np.exp(_LogSeedDensity(p, t, np.float64(z.alpha), np.float64(z.dm))))

def _LogSeedDensity(p, t, alpha, dm):
    """log f_t on nonempty rows; +inf past the float range"""
    rate = np.abs(np.log(alpha)) / (alpha * alpha)
    with np.errstate(divide = "ignore"):
        logPhi = np.log(_PhiUnchecked(rate, t - alpha))
    return (math.log1p(-math.exp(-p.beta * t)) - math.log(t) - rate * dm
            - SpecFun.LogHittingDensity(p.a, alpha) - logPhi)

def SeedDensityBatch(p, t, empty, alpha, dm):
    """SeedDensityBatch

    SeedDensity on column arrays (NaN anchors where
    empty). Rows whose density overflows come back
    as +inf.
    """
    _CheckSeedHorizon(t)
    empty  = np.asarray(empty, dtype = bool)
    safe   = np.where(empty, t, alpha)
    spread = np.where(empty, 0.0, dm)
    with np.errstate(over = "ignore"):
        full = np.exp(_LogSeedDensity(p, t, safe, spread))
    return np.where(empty, math.exp(-p.beta * t) / SurvivalProbability(p.a, t), full)

def SampleSeed(p, t, rng):
    """SampleSeed

    Draw from the seed law: empty with probability
    e^{-beta t}, otherwise a uniform anchor and a
    tilted arcsine spread.

    Args:
      p:   SeedParams
      t:   horizon in (0, 1]
      rng: numpy Generator
    Returns:
      BrownianZeroSummary
    """
    _CheckSeedHorizon(t)
    if rng.random() < math.exp(-p.beta * t):
        return EmptySummary(t)
    alpha = t * (1.0 - rng.random())
    dm    = float(_SampleTiltedArray(np.array([t - alpha]), np.array([LogRate(alpha)]), rng)[0])
    return BrownianZeroSummary(t, False, alpha, min(alpha + dm, t))

def SampleSeedBatch(p, t, n, rng, nonempty = False):
    """SampleSeedBatch

    Vectorized SampleSeed returning column arrays
    (empty, alpha, dm); NaN anchors where empty.

    Args:
      p:        SeedParams
      t:        horizon in (0, 1]
      n:        number of draws
      rng:      numpy Generator
      nonempty: condition on a nonempty set
    Returns:
      tuple of arrays (empty, alpha, dm)
    """
    _CheckSeedHorizon(t)
    n = int(n)
    if nonempty:
        empty = np.zeros(n, dtype = bool)
    else:
        empty = rng.random(n) < math.exp(-p.beta * t)
    alpha = t * (1.0 - rng.random(n))
    rate  = np.abs(np.log(alpha)) / (alpha * alpha)
    dm    = _SampleTiltedArray(np.where(empty, 0.0, t - alpha), rate, rng)
    dm    = np.minimum(dm, t - alpha)
    return empty, np.where(empty, np.nan, alpha), np.where(empty, np.nan, dm)

def SeedsToFrame(p, t, empty, alpha, dm):
    """SeedsToFrame

    Seed dump with columns t, beta, a, empty, alpha, dm.
    """
    n = len(empty)
    return pd.DataFrame({
        "t"     : np.full(n, t),
        "beta"  : np.full(n, p.beta),
        "a"     : np.full(n, p.a),
        "empty" : np.asarray(empty, dtype = int),
        "alpha" : alpha,
        "dm"    : dm
    })

# -----------------------------------------------------------------------------
# Vacuum
# -----------------------------------------------------------------------------

def VacuumOverlap(beta, t):
    """VacuumOverlap

    Overlap m(t) = e^{-beta t / 2} of the vacuum masses.
    """
    if not t > 0.0:
        raise DomainError(f"vacuum overlap needs t > 0, got {t}")
    return math.exp(-0.5 * beta * t)

# end =========================================================================
