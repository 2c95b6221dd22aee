# =============================================================================
## @file    SpecFun.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Special functions and singularity-aware
#    adaptive Gauss-Kronrod quadrature behind the
#    closed-form densities of the Brownian seed.
# =============================================================================

from dataclasses import dataclass
from typing import Callable
import heapq
import logging
import math

import numpy as np
from scipy import special

from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import QuadratureError

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# Density descriptor
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class Density1D:
    """Density1D

    One-dimensional density with its support and
    the endpoint behavior quadrature has to know
    about.

    Members:
      name:       label used in logs and reports
      lo:         left end of the support
      hi:         right end of the support (may be inf)
      evaluate:   vectorized pointwise density
      singularLo: inverse-square-root blowup at lo
      singularHi: inverse-square-root blowup at hi
      logScale:   density spans many decades (plots use log axes)
    """
    name       : str
    lo         : float
    hi         : float
    evaluate   : Callable
    singularLo : bool = False
    singularHi : bool = False
    logScale   : bool = False

    def __call__(self, x):
        return self.evaluate(x)

def _Return(values, scalar):
    return float(values) if scalar else values

# -----------------------------------------------------------------------------
# Normal distribution
# -----------------------------------------------------------------------------

def NormalCdf(x):
    """NormalCdf

    Standard normal cdf computed from erfc, so
    both tails keep full relative precision.

    Args:
      x: point(s) to evaluate
    Returns:
      Phi(x)
    """
    return 0.5 * special.erfc(-np.asarray(x, dtype = float) / math.sqrt(2.0))

# -----------------------------------------------------------------------------
# Modified Bessel function I0
# -----------------------------------------------------------------------------

BESSEL_CROSSOVER = 15.0

def _BesselSeries(x):
    """sum_k (x/2)^{2k} / (k!)^2"""
    q     = 0.25 * x * x
    term  = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 500):
        term  = term * q / (k * k)
        total = total + term
        if np.all(term <= 1e-18 * total):
            break
    return total

def _BesselAsymptotic(x):
    """sum_k a_k with I0(x) ~ e^x / sqrt(2 pi x) * sum_k a_k"""
    term   = np.ones_like(x)
    total  = np.ones_like(x)
    active = np.ones(x.shape, dtype = bool)
    for k in range(1, 200):
        nextTerm = term * (2 * k - 1) ** 2 / (8.0 * k * x)
        active  &= (nextTerm < term) & (nextTerm > 1e-17 * total)
        if not np.any(active):
            break
        total = np.where(active, total + nextTerm, total)
        term  = np.where(active, nextTerm, term)
    return total

def _BesselArgs(x):
    arr = np.asarray(x, dtype = float)
    if np.any(arr < 0.0) or np.any(np.isnan(arr)):
        raise DomainError("BesselI0 requires x >= 0")
    return np.atleast_1d(arr), arr.ndim == 0

def BesselI0(x):
    """BesselI0

    Modified Bessel function of the first kind
    of order zero. Power series up to x = 15,
    asymptotic expansion above.

    Args:
      x: nonnegative argument(s)
    Returns:
      I0(x)
    """
    arr, scalar = _BesselArgs(x)
    out   = np.empty_like(arr)
    small = arr <= BESSEL_CROSSOVER
    if np.any(small):
        out[small] = _BesselSeries(arr[small])
    if np.any(~small):
        big = arr[~small]
        with np.errstate(over = "ignore"):
            out[~small] = np.exp(big) / np.sqrt(2.0 * np.pi * big) * _BesselAsymptotic(big)
    return _Return(out[0] if scalar else out, scalar)

def BesselI0e(x):
    """BesselI0e

    Exponentially scaled e^{-x} I0(x), finite
    for every x >= 0.
    """
    arr, scalar = _BesselArgs(x)
    out   = np.empty_like(arr)
    small = arr <= BESSEL_CROSSOVER
    if np.any(small):
        out[small] = _BesselSeries(arr[small]) * np.exp(-arr[small])
    if np.any(~small):
        big = arr[~small]
        out[~small] = _BesselAsymptotic(big) / np.sqrt(2.0 * np.pi * big)
    return _Return(out[0] if scalar else out, scalar)

# -----------------------------------------------------------------------------
# Closed-form laws of the Brownian seed
# -----------------------------------------------------------------------------

def HittingDensity(a, x):
    """HittingDensity

    Density of the first hitting time of 0 for
    Brownian motion started at a > 0.

    Args:
      a: starting point
      x: time(s) > 0
    Returns:
      a / sqrt(2 pi) x^{-3/2} exp(-a^2 / (2x))
    """
    arr = np.asarray(x, dtype = float)
    if not a > 0.0 or np.any(arr <= 0.0):
        raise DomainError(f"HittingDensity needs a > 0 and x > 0 (a = {a})")
    vals = a / math.sqrt(2.0 * math.pi) * arr ** -1.5 * np.exp(-a * a / (2.0 * arr))
    return _Return(vals, arr.ndim == 0)

def LogHittingDensity(a, x):
    """LogHittingDensity

    log of HittingDensity; finite where the density
    itself underflows (x << a^2).
    """
    arr = np.asarray(x, dtype = float)
    if not a > 0.0 or np.any(arr <= 0.0):
        raise DomainError(f"LogHittingDensity needs a > 0 and x > 0 (a = {a})")
    vals = math.log(a) - 0.5 * math.log(2.0 * math.pi) - 1.5 * np.log(arr) - a * a / (2.0 * arr)
    return _Return(vals, arr.ndim == 0)

def HittingSurvival(a, t):
    """HittingSurvival

    P_a(T0 > t) = 2 Phi(a / sqrt(t)) - 1.
    """
    if not a > 0.0 or not t > 0.0:
        raise DomainError(f"HittingSurvival needs a > 0 and t > 0 (a = {a}, t = {t})")
    return float(special.erf(a / math.sqrt(2.0 * t)))

def ArcsineDensity(g, T):
    """ArcsineDensity

    1 / (pi sqrt(g (T - g))) on (0, T).
    """
    g = np.asarray(g, dtype = float)
    with np.errstate(divide = "ignore", invalid = "ignore"):
        vals = 1.0 / (np.pi * np.sqrt(g * (T - g)))
    return np.where((g > 0.0) & (g < T), vals, 0.0)

def ArcsineCdf(g, T):
    """ArcsineCdf

    (2 / pi) arcsin sqrt(g / T), clipped to [0, 1].
    """
    r = np.clip(np.asarray(g, dtype = float) / T, 0.0, 1.0)
    return 2.0 / np.pi * np.arcsin(np.sqrt(r))

def ArcsinePhi(c, T):
    """ArcsinePhi

    Laplace transform of the arcsine law on (0, T):
    E[e^{-c g}] = e^{-cT/2} I0(cT/2), evaluated through
    the scaled Bessel function.

    Args:
      c: tilt rate(s) >= 0
      T: horizon > 0
    Returns:
      Phi_c(T) in (0, 1]
    """
    cArr = np.asarray(c, dtype = float)
    if np.any(cArr < 0.0) or not np.all(np.asarray(T) > 0.0):
        raise DomainError("ArcsinePhi needs c >= 0 and T > 0")
    return BesselI0e(0.5 * cArr * T)

def GammaHalfDensity(c, g):
    """GammaHalfDensity

    Gamma(1/2, rate c) density sqrt(c/pi) g^{-1/2} e^{-cg}.
    """
    g = np.asarray(g, dtype = float)
    with np.errstate(divide = "ignore"):
        vals = math.sqrt(c / math.pi) * np.exp(-c * g) / np.sqrt(g)
    return np.where(g > 0.0, vals, 0.0)

def GammaHalfSurvival(c, S):
    """GammaHalfSurvival

    Mass of Gamma(1/2, rate c) beyond S: erfc(sqrt(cS)).
    """
    return float(special.erfc(math.sqrt(c * S)))

def RayleighDensity(A, y):
    """RayleighDensity

    (y / A) exp(-y^2 / (2A)) on (0, inf).
    """
    y = np.asarray(y, dtype = float)
    return np.where(y > 0.0, y / A * np.exp(-y * y / (2.0 * A)), 0.0)

def ArcsineLaw(T):
    return Density1D("arcsine", 0.0, T, lambda g: ArcsineDensity(g, T), True, True)

def GammaHalfLaw(c):
    return Density1D("gamma-half", 0.0, math.inf, lambda g: GammaHalfDensity(c, g), True, False)

def RayleighLaw(A):
    return Density1D("rayleigh", 0.0, math.inf, lambda y: RayleighDensity(A, y))

def HittingLaw(a):
    """HittingLaw

    Density1D of the hitting time; zero at the
    origin, so no flagged singularity.
    """
    def Evaluate(x):
        x = np.asarray(x, dtype = float)
        safe = np.where(x > 0.0, x, 1.0)
        return np.where(x > 0.0, HittingDensity(a, safe), 0.0)
    return Density1D("hitting", 0.0, math.inf, Evaluate, logScale = True)

# -----------------------------------------------------------------------------
# Gauss-Kronrod quadrature
# -----------------------------------------------------------------------------

# 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327
])

_NODES  = np.concatenate([-_XGK[:7], [0.0], _XGK[:7][::-1]])
_KRONW  = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[:7][::-1]])
_GAUSSW = np.zeros(15)
_GAUSSW[[1, 3, 5]]   = _WG[:3]
_GAUSSW[7]           = _WG[3]
_GAUSSW[[13, 11, 9]] = _WG[:3]

ABS_TOL   = 1e-10
REL_TOL   = 1e-9
MAX_LEVEL = 20
MAX_SUBINTERVALS = 5000

def _GK15(fn, a, b):
    """GK15

    Kronrod estimate and |Kronrod - Gauss| on [a, b].
    """
    half   = 0.5 * (b - a)
    points = 0.5 * (a + b) + half * _NODES
    vals   = fn(points)
    kron   = half * np.dot(_KRONW, vals)
    gauss  = half * np.dot(_GAUSSW, vals)
    return kron, abs(kron - gauss)

def _Substitution(lo, hi, singularLo, singularHi):
    """Substitution

    Map from v in (0, 1) onto (lo, hi) removing
    inverse-square-root endpoint behavior, plus
    its Jacobian.
    """
    if math.isinf(hi):
        def Map(v):
            w = v / (1.0 - v)
            return lo + w * w, 2.0 * v / (1.0 - v) ** 3
        return Map
    span = hi - lo
    if singularLo and singularHi:
        def Map(v):
            s = np.sin(0.5 * np.pi * v)
            return lo + span * s * s, span * 0.5 * np.pi * np.sin(np.pi * v)
    elif singularLo:
        def Map(v):
            return lo + span * v * v, 2.0 * span * v
    elif singularHi:
        def Map(v):
            return hi - span * v * v, 2.0 * span * v
    else:
        def Map(v):
            return lo + span * v, np.full_like(v, span)
    return Map

def Integrate(fn, lo, hi, singularLo = False, singularHi = False,
              absTol = ABS_TOL, relTol = REL_TOL, maxLevel = MAX_LEVEL):
    """Integrate

    Adaptive 15-point Gauss-Kronrod integration of a
    vectorized integrand after an endpoint substitution.
    The subinterval with the largest error estimate is
    bisected until max(absTol, relTol |I|) is met.

    Args:
      fn:         vectorized integrand
      lo:         lower limit
      hi:         upper limit (may be inf)
      singularLo: integrand has an integrable blowup at lo
      singularHi: integrand has an integrable blowup at hi
      absTol:     absolute tolerance
      relTol:     relative tolerance
      maxLevel:   maximum bisection depth
    Returns:
      value of the integral
    """
    if not lo < hi:
        if lo == hi:
            return 0.0
        raise DomainError(f"integration limits reversed: [{lo}, {hi}]")
    Map = _Substitution(lo, hi, singularLo, singularHi)

    def Transformed(v):
        x, jac = Map(v)
        with np.errstate(divide = "ignore", invalid = "ignore", over = "ignore"):
            vals = np.asarray(fn(x), dtype = float) * jac
        # endpoints reached through rounding carry no mass
        edge = (x <= lo) | (x >= hi)
        return np.where(edge, 0.0, vals)

    value, error = _GK15(Transformed, 0.0, 1.0)
    heap  = [(-error, 0.0, 1.0, value, 0)]
    total = value
    errSum = error
    while errSum > max(absTol, relTol * abs(total)):
        if not np.isfinite(total):
            raise QuadratureError(f"non-finite integral on [{lo}, {hi}]")
        negErr, a, b, val, level = heapq.heappop(heap)
        if level >= maxLevel or len(heap) >= MAX_SUBINTERVALS:
            logger.warning(f"quadrature on [{lo}, {hi}] stalled at error {errSum:.3e}")
            raise QuadratureError(f"tolerance not met on [{lo}, {hi}] (error {errSum:.3e})")
        mid = 0.5 * (a + b)
        leftVal, leftErr   = _GK15(Transformed, a, mid)
        rightVal, rightErr = _GK15(Transformed, mid, b)
        total  += leftVal + rightVal - val
        errSum += leftErr + rightErr + negErr
        heapq.heappush(heap, (-leftErr, a, mid, leftVal, level + 1))
        heapq.heappush(heap, (-rightErr, mid, b, rightVal, level + 1))
    # re-sum to drop accumulated rounding from the running updates
    return float(math.fsum(item[3] for item in heap))

def QuadSingular(d, lo = None, hi = None, **kwargs):
    """QuadSingular

    Integral of a Density1D over [lo, hi] (defaults to the
    full support), removing flagged endpoint singularities.

    Args:
      d:  density descriptor
      lo: lower limit within the support
      hi: upper limit within the support
    Returns:
      integral of d over [lo, hi]
    """
    lo = d.lo if lo is None else lo
    hi = d.hi if hi is None else hi
    if lo < d.lo or hi > d.hi:
        raise DomainError(f"[{lo}, {hi}] not inside the support of {d.name}")
    return Integrate(
        d.evaluate,
        lo,
        hi,
        singularLo = d.singularLo and lo == d.lo,
        singularHi = d.singularHi and hi == d.hi,
        **kwargs
    )

# end =========================================================================
