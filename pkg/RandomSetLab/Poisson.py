# =============================================================================
## @file    Poisson.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief The fully spread marked Poisson random-set
#    system: samplers, void probabilities, unit
#    families, covariance kernel, index Gram and
#    the Cox-Poisson mixture cocycle.
# =============================================================================

from dataclasses import dataclass
import logging
import math

import numpy as np
from scipy import stats

from RandomSetLab.ClosedSet import MarkedPointSet
from RandomSetLab.Errors import DomainError

logger = logging.getLogger(__name__)

# counts with mean up to this are drawn by cdf inversion
INVERSION_MAX_MEAN = 30.0

# -----------------------------------------------------------------------------
# Model types
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class PoissonModel:
    """PoissonModel

    Intensity lam * Leb x eta on (0, t) x L with a
    finite atomic mark law eta.

    Members:
      lam:     intensity rate > 0
      weights: eta(l) for marks l = 0..K-1, summing to 1
      markIds: optional labels of the marks
    """
    lam     : float
    weights : tuple
    markIds : tuple = ()

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not self.lam > 0.0:
            raise DomainError(f"intensity must be positive, got {self.lam}")
        if len(weights) == 0 or any(w < 0.0 for w in weights):
            raise DomainError("mark weights must be a nonempty list of nonnegative numbers")
        if abs(math.fsum(weights) - 1.0) > 1e-12:
            raise DomainError(f"mark weights sum to {math.fsum(weights)}, not 1")
        if not self.markIds:
            object.__setattr__(self, "markIds", tuple(range(len(weights))))

    @property
    def nMarks(self):
        return len(self.weights)

    @property
    def eta(self):
        return np.asarray(self.weights)

@dataclass(frozen = True)
class MarkFunction:
    """MarkFunction

    Nonnegative function a(l) on the marks.

    Members:
      values: a(l) per mark
    """
    values : tuple

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if any(not v >= 0.0 for v in values):
            raise DomainError("mark function values must be nonnegative")

    @property
    def array(self):
        return np.asarray(self.values)

def Constant(m, value = 1.0):
    """Constant

    Constant mark function on the marks of m.
    """
    return MarkFunction((value,) * m.nMarks)

def _Check(m, *fns):
    for fn in fns:
        if len(fn.values) != m.nMarks:
            raise DomainError(f"mark function has {len(fn.values)} values for {m.nMarks} marks")

# -----------------------------------------------------------------------------
# L2(eta) geometry
# -----------------------------------------------------------------------------

def InnerProduct(m, a, b):
    _Check(m, a, b)
    return float(np.dot(m.eta, a.array * b.array))

def SquaredNorm(m, a):
    return InnerProduct(m, a, a)

# -----------------------------------------------------------------------------
# Samplers
# -----------------------------------------------------------------------------

def PoissonCount(mean, rng):
    """PoissonCount

    One Poisson(mean) draw: sequential cdf inversion
    for small means, numpy's rejection sampler above.

    Args:
      mean: Poisson mean >= 0
      rng:  numpy Generator
    Returns:
      integer count
    """
    if mean < 0.0:
        raise DomainError(f"Poisson mean must be nonnegative, got {mean}")
    if mean == 0.0:
        return 0
    if mean > INVERSION_MAX_MEAN:
        return int(rng.poisson(mean))
    u    = rng.random()
    k    = 0
    prob = math.exp(-mean)
    cdf  = prob
    while u > cdf and prob > 0.0:
        k    += 1
        prob *= mean / k
        cdf  += prob
    return k

def SamplePoisson(m, t, rng):
    """SamplePoisson

    Marked Poisson sample on (0, t) x L: Poisson(lam t)
    atoms with iid uniform times and iid eta marks.

    Args:
      m:   Poisson model
      t:   horizon > 0
      rng: numpy Generator
    Returns:
      MarkedPointSet with sorted times
    """
    if not t > 0.0:
        raise DomainError(f"horizon must be positive, got {t}")
    count = PoissonCount(m.lam * t, rng)
    times = np.sort(t * rng.random(count))
    marks = rng.choice(m.nMarks, size = count, p = m.eta)
    return MarkedPointSet(t, tuple(zip(times.tolist(), marks.tolist())))

def SampleMarkCounts(m, t, n, rng):
    """SampleMarkCounts

    Per-mark atom counts of n independent samples,
    shape (n, K). Counts of distinct marks are
    independent Poisson(lam t eta(l)).
    """
    return rng.poisson(m.lam * t * m.eta, size = (int(n), m.nMarks))

def TiltedModel(m, a):
    """TiltedModel

    Poisson model of the unit family nu^(a): rate
    lam ||a||^2 and marks weighted by eta a^2.

    Args:
      m: reference model
      a: mark function with ||a|| > 0
    Returns:
      PoissonModel of nu^(a)
    """
    norm2 = SquaredNorm(m, a)
    if not norm2 > 0.0:
        raise DomainError("unit family of a null mark function is the empty set")
    weights = m.eta * a.array ** 2 / norm2
    weights = weights / weights.sum()
    return PoissonModel(m.lam * norm2, tuple(weights.tolist()), m.markIds)

def SampleUnitFamily(m, a, t, rng):
    """SampleUnitFamily

    Exact sample of nu_t^(a) through its tilted
    intensity lam a^2 eta.
    """
    if SquaredNorm(m, a) == 0.0:
        return MarkedPointSet(t)
    return SamplePoisson(TiltedModel(m, a), t, rng)

# -----------------------------------------------------------------------------
# Closed forms
# -----------------------------------------------------------------------------

def VoidProbability(m, t, intervalLen, markSubsetWeight):
    """VoidProbability

    Probability that no atom lies in I x G:
    exp(-lam t Leb(I) eta(G)).

    Args:
      m:                Poisson model
      t:                horizon
      intervalLen:      Leb(I), 0 <= Leb(I) <= t
      markSubsetWeight: eta(G) in [0, 1]
    Returns:
      void probability
    """
    if not (0.0 <= intervalLen <= t) or not (0.0 <= markSubsetWeight <= 1.0):
        raise DomainError(f"void probability arguments out of range: Leb(I) = {intervalLen}, eta(G) = {markSubsetWeight}")
    return math.exp(-m.lam * t * intervalLen * markSubsetWeight)

def UnitDensity(m, a, t, z):
    """UnitDensity

    Density of nu_t^(a) against the model law:
    exp(lam t (1 - ||a||^2)) prod_{atoms} a(l)^2.

    Args:
      m: Poisson model
      a: mark function
      t: horizon
      z: MarkedPointSet sampled at horizon t
    Returns:
      density value
    """
    _Check(m, a)
    value = math.exp(m.lam * t * (1.0 - SquaredNorm(m, a)))
    for _, mark in z.atoms:
        value *= a.values[mark] ** 2
    return value

def UnitDensityFromCounts(m, a, t, counts):
    """UnitDensityFromCounts

    UnitDensity evaluated on an (n, K) array of
    per-mark counts.
    """
    _Check(m, a)
    logNorm = m.lam * t * (1.0 - SquaredNorm(m, a))
    return np.exp(logNorm) * np.prod(a.array ** (2 * counts), axis = 1)

def UnitInnerProduct(m, a, b, t):
    """UnitInnerProduct

    <u_t^(a), u_t^(b)> = exp(-(lam t / 2) ||a - b||^2).
    """
    _Check(m, a, b)
    diff = a.array - b.array
    return math.exp(-0.5 * m.lam * t * float(np.dot(m.eta, diff * diff)))

def CovarianceKernel(m, a, b):
    """CovarianceKernel

    lam (<a, b> - ||a||^2 / 2 - ||b||^2 / 2); the
    log inner product per unit time.
    """
    return m.lam * (InnerProduct(m, a, b) - 0.5 * SquaredNorm(m, a) - 0.5 * SquaredNorm(m, b))

def IndexGram(m, fns):
    """IndexGram

    Gram matrix G_ij = lam <a_i - 1, a_j - 1>.

    Args:
      m:   Poisson model
      fns: list of mark functions
    Returns:
      symmetric numpy array
    """
    if len(fns) == 0:
        raise DomainError("IndexGram needs at least one mark function")
    _Check(m, *fns)
    shifted = np.array([fn.array - 1.0 for fn in fns])
    return m.lam * (shifted * m.eta) @ shifted.T

def GramRank(gram, tol = 1e-9):
    """GramRank

    Numerical rank: singular values above tol times
    the largest one.
    """
    sv = np.linalg.svd(np.asarray(gram, dtype = float), compute_uv = False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol * sv[0]))

def PoissonIndex(m):
    """PoissonIndex

    Dimension of L2(L, eta): number of marks with
    positive weight.
    """
    return int(np.sum(m.eta > 0.0))

# -----------------------------------------------------------------------------
# Cox-Poisson mixture
# -----------------------------------------------------------------------------

def _LogCoxFactor(lam, t, n):
    """log(1/2 + 1/2 e^{-lam t} 2^n)"""
    return math.log(0.5) + np.logaddexp(0.0, -lam * t + n * math.log(2.0))

def CoxDensity(lam, t, n):
    """CoxDensity

    Density 1/2 + 1/2 e^{-lam t} 2^N of the count law of
    the mixture (P_lam + P_2lam) / 2 against P_lam.
    """
    return np.exp(_LogCoxFactor(lam, t, np.asarray(n, dtype = float)))

def CoxDelta(lam, s, t, n1, n2):
    """CoxDelta

    Radon-Nikodym cocycle of the Cox-Poisson mixture:
    product of the densities at s and t over the
    density at s + t.

    Args:
      lam: base intensity
      s:   left horizon
      t:   right horizon
      n1:  atom count in the left block
      n2:  atom count in the right block
    Returns:
      Delta_{s,t}(n1, n2)
    """
    n1 = np.asarray(n1, dtype = float)
    n2 = np.asarray(n2, dtype = float)
    if np.any(n1 < 0) or np.any(n2 < 0):
        raise DomainError("counts must be nonnegative")
    logDelta = _LogCoxFactor(lam, s, n1) + _LogCoxFactor(lam, t, n2) - _LogCoxFactor(lam, s + t, n1 + n2)
    delta = np.exp(logDelta)
    return float(delta) if delta.ndim == 0 else delta

def SampleCoxPoisson(lam, weights, t, rng):
    """SampleCoxPoisson

    Sample of the mixture of Poisson(lam) and
    Poisson(2 lam) set laws, chosen by a fair coin.
    """
    rate = lam if rng.random() < 0.5 else 2.0 * lam
    return SamplePoisson(PoissonModel(rate, weights), t, rng)

def SampleCoxCounts(lam, t, n, rng):
    """SampleCoxCounts

    Total counts of n independent Cox-Poisson samples.
    """
    rates = np.where(rng.random(int(n)) < 0.5, lam, 2.0 * lam)
    return rng.poisson(rates * t)

def CoxCountCdf(lam, t, k):
    """CoxCountCdf

    P(N <= k) under the Cox-Poisson mixture.
    """
    return 0.5 * stats.poisson.cdf(k, lam * t) + 0.5 * stats.poisson.cdf(k, 2.0 * lam * t)

# end =========================================================================
