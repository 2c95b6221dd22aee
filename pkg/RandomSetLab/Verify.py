# =============================================================================
## @file    Verify.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Numerical checks of every quantitative
#    ingredient of the type-III construction: tilted
#    arcsine bounds, bridge bound, block weights,
#    Hellinger smallness, Kakutani divergence, linear
#    vacuum overlap, diameter tails and the Poisson
#    kernel/factorization identities.
# =============================================================================

from dataclasses import dataclass
from dataclasses import field
import logging
import math
import time

import numpy as np
from scipy import stats

from RandomSetLab import Distance
from RandomSetLab import Poisson
from RandomSetLab import SpecFun
from RandomSetLab import Streams
from RandomSetLab import Tilt
from RandomSetLab.Brownian import BrownianZeroSummary
from RandomSetLab.Brownian import EmptySummary
from RandomSetLab.Brownian import SeedParams
from RandomSetLab.Brownian import SampleZeroSummaryBatch
from RandomSetLab.ClosedSet import ConcatMarked
from RandomSetLab.ClosedSet import MarkCounts
from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import FitError
from RandomSetLab.Errors import RandomSetLabError
from RandomSetLab.Errors import UnknownCheckError

logger = logging.getLogger(__name__)

# bound constants of the tilted arcsine / bridge estimates
C1  = 1.0
C2  = 1.0
C3  = 2.0
C4  = 6.0
C5  = 7.0
C6  = 8.0
C7  = 9.0
C9  = 25.0

MIN_R2 = 0.95

# -----------------------------------------------------------------------------
# Report types
# -----------------------------------------------------------------------------

@dataclass
class SlopeFit:
    """SlopeFit

    Least-squares line through (log x, log y).

    Members:
      xs:        abscissae, strictly decreasing toward 0
      ys:        positive values
      slope:     fitted slope
      intercept: fitted intercept
      r2:        coefficient of determination
    """
    xs        : list
    ys        : list
    slope     : float
    intercept : float
    r2        : float

    @property
    def constant(self):
        """C in y ~ C x^slope"""
        return math.exp(self.intercept)

def FitSlope(xs, ys, minR2 = None):
    """FitSlope

    Ordinary least squares of log y on log x.

    Args:
      xs:    at least four positive abscissae
      ys:    positive values
      minR2: raise FitError below this r2
    Returns:
      SlopeFit
    """
    order = np.argsort(xs)[::-1]
    xs = np.asarray(xs, dtype = float)[order]
    ys = np.asarray(ys, dtype = float)[order]
    if xs.size < 4:
        raise FitError(f"slope fit needs >= 4 points, got {xs.size}")
    if np.any(np.diff(xs) >= 0.0) or np.any(xs <= 0.0):
        raise FitError("fit abscissae must be distinct and positive")
    if np.any(~np.isfinite(ys)) or np.any(ys <= 0.0):
        raise FitError("fit values must be finite and positive")
    fit = stats.linregress(np.log(xs), np.log(ys))
    result = SlopeFit(xs.tolist(), ys.tolist(), float(fit.slope), float(fit.intercept), float(fit.rvalue ** 2))
    if minR2 is not None and result.r2 < minR2:
        raise FitError(f"degenerate fit: r2 = {result.r2:.4f} < {minR2}")
    return result

@dataclass
class BoundReport:
    """BoundReport

    Per-point outcome of one check.

    Members:
      checkId:    registered check id
      citation:   statement being checked
      params:     parameter point (dict) per row
      bound:      bound per row
      actual:     computed value per row
      stderr:     MC standard error per row (0 if exact)
      passed:     pass flag per row
      tol:        relative tolerance of actual <= bound (1 + tol)
      fits:       named slope fits
      gates:      named global conditions (name -> passed)
      extra:      check specific scalars
      errors:     messages of failed numerical points
      seed:       run seed
      n:          MC sample size (0 if analytic)
      wallTimeMs: run time
    """
    checkId    : str
    citation   : str = ""
    params     : list = field(default_factory = list)
    bound      : list = field(default_factory = list)
    actual     : list = field(default_factory = list)
    stderr     : list = field(default_factory = list)
    passed     : list = field(default_factory = list)
    tol        : float = 0.0
    fits       : dict = field(default_factory = dict)
    gates      : dict = field(default_factory = dict)
    extra      : dict = field(default_factory = dict)
    errors     : list = field(default_factory = list)
    seed       : int = 0
    n          : int = 0
    wallTimeMs : float = 0.0

    def AddPoint(self, params, bound, actual, stderr = 0.0, passed = None):
        """AddPoint

        Adds a row; by default it passes iff
        actual <= bound (1 + tol).
        """
        if passed is None:
            passed = bool(actual <= bound * (1.0 + self.tol))
        self.params.append(dict(params))
        self.bound.append(float(bound))
        self.actual.append(float(actual))
        self.stderr.append(float(stderr))
        self.passed.append(bool(passed))

    def AddFailure(self, params, bound, error):
        """AddFailure

        Flags a point whose computation failed.
        """
        logger.warning(f"[{self.checkId}] point {params} failed: {error}")
        self.errors.append(f"{params}: {error}")
        self.AddPoint(params, bound, math.nan, 0.0, False)

    def AddGate(self, name, ok):
        self.gates[name] = bool(ok)

    @property
    def allPassed(self):
        return all(self.passed) and all(self.gates.values())

    @property
    def worstMargin(self):
        margins = [b * (1.0 + self.tol) - a for b, a in zip(self.bound, self.actual) if math.isfinite(a)]
        return min(margins) if margins else math.nan

# -----------------------------------------------------------------------------
# Shared pieces
# -----------------------------------------------------------------------------

def _Timed(report, start):
    report.wallTimeMs = 1000.0 * (time.perf_counter() - start)
    logger.info(f"[{report.checkId}] {sum(report.passed)}/{len(report.passed)} points pass, worst margin {report.worstMargin:.6g}")
    return report

def GammaHalfTv(c, S):
    """GammaHalfTv

    TV distance between the tilted arcsine law on
    (0, S) and Gamma(1/2, rate c) on (0, inf), with the
    Gamma mass beyond S counted.
    """
    law   = Tilt.TiltedArcsine(S, c)
    gamma = SpecFun.GammaHalfLaw(c)
    inner = SpecFun.Integrate(lambda g: np.abs(law.density(g) - gamma(g)), 0.0, S, True, True)
    return min(1.0, 0.5 * (inner + SpecFun.GammaHalfSurvival(c, S)))

def BridgeTerms(u1, u):
    """BridgeTerms

    The two averaged integrals of the bridge bound,
    with the position dependent rate c(x).

    Args:
      u1: left block length in (0, 1)
      u:  total length
    Returns:
      tuple (first term, second term)
    """
    def First(x):
        x = np.asarray(x, dtype = float)
        return np.where(x > 0.0, x * x / (np.abs(np.log(np.maximum(x, 1e-300))) * u), 0.0)

    def Second(x):
        x = np.asarray(x, dtype = float)
        safe = np.maximum(x, 1e-300)
        return 1.0 / (1.0 + np.abs(np.log(safe)) / (safe * safe) * (u1 - x))

    return SpecFun.Integrate(First, 0.0, u1) / u1, SpecFun.Integrate(Second, 0.0, u1) / u1

def BridgeClosedForm(u1):
    """BridgeClosedForm

    (u1 / |ln u1|) ln(1 + |ln u1| / u1): second term with
    the rate frozen at c(u1).
    """
    logU = abs(math.log(u1))
    return u1 / logU * math.log1p(logU / u1)

def FrozenSecondTerm(u1):
    """second term integrated with the rate frozen at c(u1)"""
    rate = Tilt.LogRate(u1)
    return SpecFun.Integrate(lambda x: 1.0 / (1.0 + rate * (u1 - x)), 0.0, u1) / u1

def BridgeConstant(s, t):
    """BridgeConstant

    Largest of the bound constants, C11 = C1 C9 (s + t) / t.
    """
    c10 = (s + t) / t
    return max(C1, C2, C3, C4, C5, C6, C7, C9, c10, C1 * C9 * c10)

def StabilityConstant(s, t):
    """2 (s + t) max(1/s, 1/t)"""
    return 2.0 * (s + t) * max(1.0 / s, 1.0 / t)

@dataclass(frozen = True)
class BlockEstimate:
    """BlockEstimate

    Block weights of the seed at horizon u = u1 + u2
    (p) and of the product of the seeds at u1 and u2
    (q).

    Members:
      lam:      scale
      u1:       left block length
      u2:       right block length
      p:        dict block -> weight under the seed at u
      q:        dict block -> weight under the product
      straddle: MC estimate of P(alpha <= u1 < gLast | nonempty)
    """
    lam      : float
    u1       : float
    u2       : float
    p        : dict
    q        : dict
    straddle : Distance.MCEstimate

    @property
    def u(self):
        return self.u1 + self.u2

    def Stderr(self, block):
        """stderr of p[block]"""
        if block in ("10", "11"):
            return (1.0 - math.exp(-self.p["beta"] * self.u)) * self.straddle.stderr
        return 0.0

def _StraddleEvent(p, s, t, lam):
    """(sampler, predicate, keys) of the straddle event at scale lam"""
    u1 = lam * s
    u  = u1 + lam * t
    if not u <= 1.0:
        raise DomainError(f"block horizon {u} exceeds 1")

    def Sampler(count, rng):
        return Tilt.SampleSeedBatch(p, u, count, rng, nonempty = True)

    def Straddles(empty, alpha, dm):
        return (alpha <= u1) & (alpha + dm > u1)

    return Sampler, Straddles, ("blocks", repr(p), repr(s), repr(t), repr(lam))

def _BlocksFromStraddle(p, s, t, lam, straddle):
    u1   = lam * s
    u2   = lam * t
    u    = u1 + u2
    beta = p.beta
    nonempty = 1.0 - math.exp(-beta * u)
    pw = {
        "00"   : math.exp(-beta * u),
        "10"   : nonempty * (u1 / u - straddle.value),
        "01"   : nonempty * u2 / u,
        "11"   : nonempty * straddle.value,
        "beta" : beta
    }
    qw = {
        "00" : math.exp(-beta * u1) * math.exp(-beta * u2),
        "10" : (1.0 - math.exp(-beta * u1)) * math.exp(-beta * u2),
        "01" : math.exp(-beta * u1) * (1.0 - math.exp(-beta * u2)),
        "11" : (1.0 - math.exp(-beta * u1)) * (1.0 - math.exp(-beta * u2))
    }
    logger.debug(f"blocks at lam = {lam}: p = {pw}, q = {qw}")
    return BlockEstimate(lam, u1, u2, pw, qw, straddle)

def EstimateBlocks(p, s, t, lam, n, seed, nWorkers = 8, jobs = 1):
    """EstimateBlocks

    Block weights of E00 (empty), E10 (inside the left
    block), E01 (anchor in the right block) and E11
    (straddling the seam). The anchor of a nonempty
    seed is uniform, so only the straddle probability
    is sampled.

    Args:
      p:        SeedParams
      s:        left time
      t:        right time
      lam:      scale, lam (s + t) <= 1
      n:        MC draws of nonempty seeds
      seed:     run seed
      nWorkers: number of substreams
      jobs:     joblib workers
    Returns:
      BlockEstimate
    """
    return EstimateBlocksGrid(p, s, t, [lam], n, seed, nWorkers, jobs)[0]

def EstimateBlocksGrid(p, s, t, lambdas, n, seed, nWorkers = 8, jobs = 1):
    """EstimateBlocksGrid

    EstimateBlocks over a scale grid, with the straddle
    draws of every scale sent to joblib together.
    """
    events = [_StraddleEvent(p, s, t, lam) for lam in lambdas]
    straddles = Distance.McEventProbGrid(events, n, seed, nWorkers, jobs)
    return [_BlocksFromStraddle(p, s, t, lam, est) for lam, est in zip(lambdas, straddles)]

# -----------------------------------------------------------------------------
# Checks of the tilted arcsine law
# -----------------------------------------------------------------------------

def CheckTvGammaBound(grid):
    """CheckTvGammaBound

    TV(tilted arcsine on (0, S), Gamma(1/2, c)) against
    min{1, C4 / (cS)} on a grid of (c, S).

    Args:
      grid: list of (c, S) pairs
    Returns:
      BoundReport
    """
    start  = time.perf_counter()
    report = BoundReport("tv-gamma", CITATIONS["tv-gamma"], tol = 1e-9)
    for c, S in grid:
        bound = min(1.0, C4 / (c * S))
        try:
            actual = GammaHalfTv(c, S)
        except RandomSetLabError as err:
            report.AddFailure({"c" : c, "S" : S}, bound, err)
            continue
        report.AddPoint({"c" : c, "S" : S, "bound_c5" : C5 / (1.0 + c * S)}, bound, actual)
    return _Timed(report, start)

def CheckTailBound(grid):
    """CheckTailBound

    Tilted arcsine tail P(G > r) against
    min{1, C6 / (cr)} on a grid of (c, T, r).
    """
    start  = time.perf_counter()
    report = BoundReport("tail", CITATIONS["tail"], tol = 1e-9)
    for c, T, r in grid:
        bound = 1.0 if c * r == 0.0 else min(1.0, C6 / (c * r))
        point = {"c" : c, "T" : T, "r" : r}
        if not (0.0 < r < T):
            report.AddFailure(point, bound, DomainError(f"need 0 < r < T, got r = {r}, T = {T}"))
            continue
        try:
            actual = Tilt.TiltedArcsineTail(Tilt.TiltedArcsine(T, c), r)
        except RandomSetLabError as err:
            report.AddFailure(point, bound, err)
            continue
        point["bound_c7"] = C7 / (1.0 + c * r)
        report.AddPoint(point, bound, actual)
    return _Timed(report, start)

def CheckArcsineLaplace(cGrid, tGrid):
    """CheckArcsineLaplace

    Quadrature of the tilted arcsine integral against
    e^{-cT/2} I0(cT/2), relative error <= 1e-8.
    """
    start  = time.perf_counter()
    report = BoundReport("arcsine-laplace", CITATIONS["arcsine-laplace"])
    for c in cGrid:
        for T in tGrid:
            point = {"c" : c, "T" : T}
            try:
                closed = float(SpecFun.ArcsinePhi(c, T))
                quad   = Tilt.TiltedArcsine(T, c).normalizer
            except RandomSetLabError as err:
                report.AddFailure(point, 1e-8, err)
                continue
            point["closed_form"] = closed
            point["quadrature"]  = quad
            report.AddPoint(point, 1e-8, abs(quad - closed) / closed)
    return _Timed(report, start)

# -----------------------------------------------------------------------------
# Bridge, blocks and Hellinger smallness
# -----------------------------------------------------------------------------

def CheckBridgeBound(s, t, lambdas):
    """CheckBridgeBound

    Averaged bridge bound over a lambda grid: each RHS
    must sit below its frozen-rate closed form, the
    log-log slope against u must be >= 0.9, and the
    closed-form second term must match quadrature to
    1e-6.

    Args:
      s:       left time
      t:       right time
      lambdas: scales with lam (s + t) < 1
    Returns:
      BoundReport with a "rhs" fit
    """
    start  = time.perf_counter()
    report = BoundReport("bridge", CITATIONS["bridge"], tol = 1e-9)
    us     = []
    rhs    = []
    worstIdentity = 0.0
    for lam in lambdas:
        u1 = lam * s
        u  = lam * (s + t)
        point = {"lambda" : lam, "u" : u}
        try:
            first, second = BridgeTerms(u1, u)
            closed        = BridgeClosedForm(u1)
            frozen        = FrozenSecondTerm(u1)
        except RandomSetLabError as err:
            report.AddFailure(point, math.nan, err)
            continue
        worstIdentity = max(worstIdentity, abs(frozen - closed))
        point.update({"first" : first, "second" : second, "closed_second" : closed, "first_over_u" : first / u})
        bound = u1 * u1 / (abs(math.log(u1)) * u) + closed
        report.AddPoint(point, bound, first + second)
        us.append(u)
        rhs.append(first + second)
    constant = BridgeConstant(s, t)
    report.extra.update({"constant" : constant, "identity_error" : worstIdentity})
    report.AddGate("closed_form_identity", worstIdentity <= 1e-6)
    try:
        fit = FitSlope(us, rhs)
        report.fits["rhs"] = fit
        report.AddGate("slope", fit.slope >= 0.9 and fit.r2 >= MIN_R2)
    except FitError as err:
        report.errors.append(str(err))
        report.AddGate("slope", False)
    return _Timed(report, start)

def BridgeRhs(s, t, lam):
    """BridgeRhs

    Bare bridge RHS (without the constant) at scale lam.
    """
    first, second = BridgeTerms(lam * s, lam * (s + t))
    return first + second

def CheckBlockWeights(p, s, t, lambdas, n, seed, nWorkers = 8, jobs = 1):
    """CheckBlockWeights

    One-block weight matching: |p10 - q10| and |p01 - q01|
    are O(u^2) (log-log slope in [1.7, 2.5]) and the
    vacuum blocks agree.

    Args:
      p:        SeedParams
      s:        left time
      t:        right time
      lambdas:  scale grid
      n:        nonempty seed draws per scale
      seed:     run seed
      nWorkers: substreams per scale
      jobs:     joblib workers
    Returns:
      BoundReport with fits "10" and "01"
    """
    start  = time.perf_counter()
    report = BoundReport("block-weights", CITATIONS["block-weights"], seed = seed, n = n)
    diffs  = {"10" : [], "01" : []}
    us     = []
    vacuum = 0.0
    for lam, est in zip(lambdas, EstimateBlocksGrid(p, s, t, lambdas, n, seed, nWorkers, jobs)):
        u   = est.u
        vacuum = max(vacuum, abs(est.p["00"] - est.q["00"]))
        bound = 0.25 * (p.beta ** 2 + p.beta) * u * u
        for block in ("10", "01"):
            diff   = abs(est.p[block] - est.q[block])
            stderr = est.Stderr(block)
            point  = {"lambda" : lam, "u" : u, "block" : block, "p" : est.p[block], "q" : est.q[block]}
            report.AddPoint(point, bound, diff, stderr, diff <= bound + 5.0 * stderr)
            diffs[block].append(diff)
        us.append(u)
    report.extra["vacuum_difference"] = vacuum
    # e^{-beta u} against e^{-beta u1} e^{-beta u2}: equal up to rounding
    report.AddGate("vacuum", vacuum <= 4.0 * np.finfo(float).eps)
    for block in ("10", "01"):
        try:
            fit = FitSlope(us, diffs[block])
            report.fits[block] = fit
            report.AddGate(f"slope_{block}", 1.7 <= fit.slope <= 2.5)
        except FitError as err:
            report.errors.append(f"block {block}: {err}")
            report.AddGate(f"slope_{block}", False)
    return _Timed(report, start)

def CheckTwoBlockOverlap(p, s, t, lambdas, n, seed, nWorkers = 8, jobs = 1):
    """CheckTwoBlockOverlap

    Straddle weight nu_u(E11) is quadratic in u up to
    a logarithm: log-log slope >= 1.7.
    """
    start  = time.perf_counter()
    report = BoundReport("two-block", CITATIONS["two-block"], seed = seed, n = n)
    us     = []
    p11    = []
    for lam, est in zip(lambdas, EstimateBlocksGrid(p, s, t, lambdas, n, seed, nWorkers, jobs)):
        stderr = est.Stderr("11")
        report.AddPoint({"lambda" : lam, "u" : est.u, "q11" : est.q["11"]}, est.u ** 2, est.p["11"], stderr,
                        est.p["11"] <= est.u ** 2 + 5.0 * stderr)
        us.append(est.u)
        p11.append(est.p["11"])
    try:
        fit = FitSlope(us, p11)
        report.fits["p11"] = fit
        report.AddGate("slope", fit.slope >= 1.7 and fit.r2 >= MIN_R2)
    except FitError as err:
        report.errors.append(str(err))
        report.AddGate("slope", False)
    return _Timed(report, start)

def HellingerChain(est, s, t, bridgeConstant = 1.0):
    """HellingerChain

    Computable upper bound on the squared Hellinger
    distance between the seed at u and the product of
    the seeds at u1 and u2: vacuum term, both straddle
    weights, and the one-block terms with conditional
    affinity 1 - (stability + bridge).

    Args:
      est:            BlockEstimate
      s:              left time
      t:              right time
      bridgeConstant: factor on the bare bridge RHS
    Returns:
      tuple (total, dict of terms)
    """
    u    = est.u
    stab = StabilityConstant(s, t) * u
    brg  = bridgeConstant * BridgeRhs(s, t, est.lam)
    affinity = 1.0 - min(1.0, stab + brg)
    terms = {
        "vacuum"  : Distance.HellingerWeighted(est.p["00"], est.q["00"], 1.0),
        "p11"     : est.p["11"],
        "q11"     : est.q["11"],
        "block10" : Distance.HellingerWeighted(max(est.p["10"], 0.0), est.q["10"], affinity),
        "block01" : Distance.HellingerWeighted(est.p["01"], est.q["01"], affinity),
        "stability" : stab,
        "bridge"    : brg
    }
    total = terms["vacuum"] + terms["p11"] + terms["q11"] + terms["block10"] + terms["block01"]
    return total, terms

def HellingerSmallnessSlope(p, s, t, lambdas, n, seed, bridgeConstant = 1.0, nWorkers = 8, jobs = 1):
    """HellingerSmallnessSlope

    Fits the assembled Hellinger upper bound against
    lambda; the deficit is O(lambda^2) when the slope is
    >= 1.8.

    Args:
      p:              SeedParams
      s:              left time
      t:              right time
      lambdas:        at least five log-spaced scales
      n:              nonempty seed draws per scale
      seed:           run seed
      bridgeConstant: factor on the bare bridge RHS
      nWorkers:       substreams per scale
      jobs:           joblib workers
    Returns:
      tuple (SlopeFit, BoundReport)
    """
    if len(lambdas) < 5:
        raise FitError(f"Hellinger slope needs >= 5 scales, got {len(lambdas)}")
    start  = time.perf_counter()
    report = BoundReport("hellinger-slope", CITATIONS["hellinger-slope"], seed = seed, n = n)
    totals = []
    rows   = []
    for lam, est in zip(lambdas, EstimateBlocksGrid(p, s, t, lambdas, n, seed, nWorkers, jobs)):
        total, terms = HellingerChain(est, s, t, bridgeConstant)
        rows.append((lam, total, terms, est))
        totals.append(total)
    fit = FitSlope([row[0] for row in rows], totals, minR2 = MIN_R2)
    report.fits["total"] = fit
    for lam, total, terms, est in rows:
        point = {"lambda" : lam, "total" : total}
        point.update(terms)
        # the chain is informative while stability + bridge < 1
        report.AddPoint(point, 1.0, terms["stability"] + terms["bridge"], 2.0 * est.Stderr("11"))
    report.extra.update({"bridge_constant" : bridgeConstant, "fitted_constant_lambda2" : max(tot / lam ** 2 for lam, tot, _, _ in rows)})
    report.AddGate("slope", fit.slope >= 1.8)
    return fit, _Timed(report, start)

# -----------------------------------------------------------------------------
# Kakutani product and vacuum overlap
# -----------------------------------------------------------------------------

DILATIONS = {
    "harmonic"   : lambda n: 1.0 / n,
    "power-0.75" : lambda n: n ** -0.75
}

def _Dilation(dilation):
    if callable(dilation):
        return dilation
    if dilation not in DILATIONS:
        raise DomainError(f"unknown dilation '{dilation}', choose from {sorted(DILATIONS)}")
    return DILATIONS[dilation]

@dataclass(frozen = True)
class KakutaniResult:
    """KakutaniResult

    Members:
      partialProducts: prod_{n <= N} m(a_n t) for N = 1..N
      logProducts:     their logarithms
      divergentSum:    sum_{n <= N} (1 - m(a_n t))
      expectedNonempty: sum_{n <= N} (1 - e^{-beta a_n t})
    """
    partialProducts  : np.ndarray
    logProducts      : np.ndarray
    divergentSum     : float
    expectedNonempty : float

def KakutaniProduct(beta, t, dilation, N):
    """KakutaniProduct

    Partial products of the vacuum overlaps of the
    dilated seeds and the divergent Kakutani sum.

    Args:
      beta:     vacuum rate
      t:        horizon
      dilation: name in DILATIONS or callable n -> a_n
      N:        number of factors
    Returns:
      KakutaniResult
    """
    if N < 1:
        raise DomainError(f"need N >= 1, got {N}")
    an   = _Dilation(dilation)(np.arange(1, int(N) + 1, dtype = float))
    if np.any(an <= 0.0):
        raise DomainError("dilation factors must be positive")
    logs = -0.5 * beta * t * np.cumsum(an)
    return KakutaniResult(
        np.exp(logs),
        logs,
        math.fsum(-np.expm1(-0.5 * beta * t * an)),
        math.fsum(-np.expm1(-beta * t * an))
    )

def KakutaniThreshold(beta, t, dilation, level = 1e-3, chunk = 1 << 20, nMax = 1 << 30):
    """KakutaniThreshold

    Smallest N whose partial product falls below level,
    ie. sum a_n > (2 / (beta t)) ln(1 / level).
    """
    target = 2.0 / (beta * t) * math.log(1.0 / level)
    an     = _Dilation(dilation)
    total  = 0.0
    first  = 1
    while first <= nMax:
        sums = total + np.cumsum(an(np.arange(first, first + chunk, dtype = float)))
        hit  = np.flatnonzero(sums > target)
        if hit.size > 0:
            return int(first + hit[0])
        total = float(sums[-1])
        first += chunk
    raise DomainError(f"product stays above {level} up to N = {nMax}")

def SampleMarkedProduct(p, t, dilation, N, rng):
    """SampleMarkedProduct

    First N coordinates of the marked infinite product:
    coordinate n is a seed at horizon a_n t dilated back
    onto [0, t].

    Args:
      p:        SeedParams
      t:        horizon
      dilation: name in DILATIONS or callable
      N:        number of coordinates
      rng:      numpy Generator
    Returns:
      list of BrownianZeroSummary on horizon t
    """
    an  = _Dilation(dilation)
    out = []
    for n in range(1, int(N) + 1):
        factor = float(an(float(n)))
        z = Tilt.SampleSeed(p, factor * t, rng)
        if z.empty:
            out.append(EmptySummary(t))
        else:
            out.append(BrownianZeroSummary(t, False, min(z.alpha / factor, t), min(z.gLast / factor, t)))
    return out

def CheckKakutani(beta, t, dilation, N):
    """CheckKakutani

    Partial products against exp(-(beta t / 2) sum a_n),
    monotone decrease, and the divergent sum.
    """
    start  = time.perf_counter()
    report = BoundReport("kakutani", CITATIONS["kakutani"])
    result = KakutaniProduct(beta, t, dilation, N)
    an     = _Dilation(dilation)(np.arange(1, int(N) + 1, dtype = float))
    checkpoints = sorted({1, 10, 100, int(N)} & set(range(1, int(N) + 1)))
    for k in checkpoints:
        closed = math.exp(-0.5 * beta * t * math.fsum(an[:k]))
        report.AddPoint({"N" : k, "product" : float(result.partialProducts[k - 1])}, 1e-9,
                        abs(result.partialProducts[k - 1] - closed))
    decreasing = bool(np.all(np.diff(result.partialProducts) < 0.0))
    logError   = float(np.max(np.abs(result.logProducts + 0.5 * beta * t * np.cumsum(an))))
    threshold  = KakutaniThreshold(beta, t, dilation)
    report.extra.update({
        "divergent_sum"     : result.divergentSum,
        "expected_nonempty" : result.expectedNonempty,
        "log_error"         : logError,
        "threshold_N"       : threshold
    })
    report.AddGate("decreasing", decreasing)
    report.AddGate("log_identity", logError <= 1e-12)
    return _Timed(report, start)

def CheckLinearOverlap(beta, tGrid):
    """CheckLinearOverlap

    1 - e^{-beta t / 2} >= beta t / 4 for t in (0, 2 / beta].
    """
    start  = time.perf_counter()
    report = BoundReport("overlap", CITATIONS["overlap"])
    for t in tGrid:
        if not (0.0 < t <= 2.0 / beta):
            report.AddFailure({"t" : t}, math.nan, DomainError(f"t = {t} outside (0, 2/beta]"))
            continue
        gap    = 1.0 - Tilt.VacuumOverlap(beta, t)
        linear = 0.25 * beta * t
        report.AddPoint({"t" : t, "ratio" : gap / linear}, gap, linear)
    return _Timed(report, start)

# -----------------------------------------------------------------------------
# Seed checks
# -----------------------------------------------------------------------------

def CheckDiamTail(p, uGrid, n, seed, nWorkers = 8, jobs = 1):
    """CheckDiamTail

    nu_u(dm >= u^2 | nonempty) <= u + 5 stderr.

    Args:
      p:     SeedParams
      uGrid: horizons in (0, 1]
      n:     nonempty draws per horizon
      seed:  run seed
    Returns:
      BoundReport
    """
    start  = time.perf_counter()
    report = BoundReport("diam-tail", CITATIONS["diam-tail"], seed = seed, n = n)
    sampled = [u for u in uGrid if u < 1.0]
    events  = [(_DiamSampler(p, u), _DiamWide(u), ("diam-tail", repr(u))) for u in sampled]
    estimates = dict(zip(sampled, Distance.McEventProbGrid(events, n, seed, nWorkers, jobs))) if events else {}
    for u in uGrid:
        if u >= 1.0:
            # dm < u - alpha <= 1 <= u^2
            report.AddPoint({"u" : u}, u, 0.0)
            continue
        est = estimates[u]
        report.AddPoint({"u" : u}, u, est.value, est.stderr, est.value <= u + 5.0 * est.stderr)
    return _Timed(report, start)

def _DiamSampler(p, u):
    def Sampler(count, rng):
        return Tilt.SampleSeedBatch(p, u, count, rng, nonempty = True)
    return Sampler

def _DiamWide(u):
    def Wide(empty, alpha, dm):
        return dm >= u * u
    return Wide

def CheckSeed(p, t, n, seed):
    """CheckSeed

    Vacuum mass, uniform conditional anchor (KS) and
    E_mu[f_t] = 1 for the seed at horizon t.
    """
    start  = time.perf_counter()
    report = BoundReport("seed", CITATIONS["seed"], seed = seed, n = n)
    rng    = Streams.MakeGenerator(seed, "seed", "direct")
    empty, alpha, dm = Tilt.SampleSeedBatch(p, t, n, rng)

    vacuum = Distance.ProportionEstimate(int(np.count_nonzero(empty)), n, seed)
    target = math.exp(-p.beta * t)
    report.AddPoint({"quantity" : "vacuum", "target" : target}, 3.0 * vacuum.stderr,
                    abs(vacuum.value - target), vacuum.stderr)

    anchors = alpha[~empty]
    ks = stats.kstest(anchors / t, "uniform")
    report.AddPoint({"quantity" : "anchor_ks", "pvalue" : float(ks.pvalue)},
                    max(0.002, 1.63 / math.sqrt(anchors.size)), float(ks.statistic))

    ref = Streams.MakeGenerator(seed, "seed", "reference")
    bEmpty, bAlpha, bLast = SampleZeroSummaryBatch(p.a, t, n, ref)
    weights = Tilt.SeedDensityBatch(p, t, bEmpty, bAlpha, bLast - bAlpha)
    norm = Distance.MCMean(weights, seed)
    report.AddPoint({"quantity" : "density_normalization", "target" : 1.0}, 3.0 * norm.stderr,
                    abs(norm.value - 1.0), norm.stderr)
    return _Timed(report, start)

# -----------------------------------------------------------------------------
# Poisson checks
# -----------------------------------------------------------------------------

def DefaultKernelCases():
    """DefaultKernelCases

    (label, model, a, b, t) grid of the covariance
    kernel check.
    """
    single = Poisson.PoissonModel(1.0, (1.0,))
    pair   = Poisson.PoissonModel(2.0, (0.5, 0.5))
    triple = Poisson.PoissonModel(1.5, (0.2, 0.3, 0.5))
    MF     = Poisson.MarkFunction
    return [
        ("a1_b3", single, MF((1.0,)), MF((3.0,)), 1.0),
        ("a12_b205", pair, MF((1.0, 2.0)), MF((2.0, 0.5)), 0.5),
        ("a_ramp_b1", triple, MF((0.5, 1.0, 1.5)), MF((1.0, 1.0, 1.0)), 1.0)
    ]

def CheckPoissonKernel(cases, n, seed):
    """CheckPoissonKernel

    MC estimate of E[sqrt(f_a f_b)] against
    exp(-(lam t / 2) ||a - b||^2) within 3 stderr.

    Args:
      cases: list of (label, model, a, b, t)
      n:     draws per case
      seed:  run seed
    Returns:
      BoundReport
    """
    start  = time.perf_counter()
    report = BoundReport("poisson-kernel", CITATIONS["poisson-kernel"], seed = seed, n = n)
    for label, m, a, b, t in cases:
        rng    = Streams.MakeGenerator(seed, "poisson-kernel", label)
        counts = Poisson.SampleMarkCounts(m, t, n, rng)
        values = np.sqrt(Poisson.UnitDensityFromCounts(m, a, t, counts) * Poisson.UnitDensityFromCounts(m, b, t, counts))
        est    = Distance.MCMean(values, seed)
        exact  = Poisson.UnitInnerProduct(m, a, b, t)
        kernel = Poisson.CovarianceKernel(m, a, b)
        point  = {
            "mark-function-id-a" : label.split("_")[0],
            "mark-function-id-b" : label.split("_")[1],
            "t"                  : t,
            "analytic"           : exact,
            "mc_estimate"        : est.value,
            "mc_stderr"          : est.stderr,
            "n"                  : n,
            "kernel"             : kernel
        }
        report.AddPoint(point, 3.0 * est.stderr, abs(est.value - exact), est.stderr)
        report.AddGate(f"exp_identity_{label}", abs(exact - math.exp(t * kernel)) <= 1e-12 * exact)
    return _Timed(report, start)

def CheckPoissonFactorization(m, a, s, t, n, seed, nBins = 20):
    """CheckPoissonFactorization

    Concatenated samples of the unit family at s and t
    against direct samples at s + t: chi-square on the
    count distribution (p > 0.001) and per-mark means
    within 3 combined stderr.
    """
    start  = time.perf_counter()
    report = BoundReport("poisson-factorization", CITATIONS["poisson-factorization"], seed = seed, n = n)
    rngA   = Streams.MakeGenerator(seed, "poisson-factorization", "concat")
    rngB   = Streams.MakeGenerator(seed, "poisson-factorization", "direct")
    concat = []
    direct = []
    for _ in range(int(n)):
        joined = ConcatMarked(Poisson.SampleUnitFamily(m, a, s, rngA), Poisson.SampleUnitFamily(m, a, t, rngA))
        concat.append(MarkCounts(joined, m.nMarks))
        direct.append(MarkCounts(Poisson.SampleUnitFamily(m, a, s + t, rngB), m.nMarks))
    concat = np.asarray(concat)
    direct = np.asarray(direct)

    tableA = np.bincount(np.minimum(concat.sum(axis = 1), nBins - 1), minlength = nBins)
    tableB = np.bincount(np.minimum(direct.sum(axis = 1), nBins - 1), minlength = nBins)
    keep   = (tableA + tableB) > 0
    chi2   = stats.chi2_contingency(np.vstack([tableA[keep], tableB[keep]]))
    report.AddPoint({"quantity" : "count_chi2", "bins" : int(keep.sum())},
                    1.0, 0.001, passed = bool(chi2.pvalue > 0.001))
    report.extra["chi2_pvalue"] = float(chi2.pvalue)

    for mark in range(m.nMarks):
        meanA = Distance.MCMean(concat[:, mark], seed)
        meanB = Distance.MCMean(direct[:, mark], seed)
        combined = math.hypot(meanA.stderr, meanB.stderr)
        report.AddPoint({"quantity" : f"mean_mark_{mark}", "concat" : meanA.value, "direct" : meanB.value},
                        3.0 * combined, abs(meanA.value - meanB.value), combined)
    return _Timed(report, start)

# -----------------------------------------------------------------------------
# Registry
# -----------------------------------------------------------------------------

CITATIONS = {
    "tv-gamma"              : "tilted arcsine vs Gamma(1/2, c): TV <= min{1, 6/(cS)} <= 7/(1+cS)",
    "tail"                  : "tilted arcsine tail: P(G > r) <= min{1, 8/(cr)} <= 9/(1+cr)",
    "bridge"                : "bridge bound (C/u1) int_0^u1 (1/(c(x)u) + 1/(1+c(x)(u1-x))) dx = O(u)",
    "block-weights"         : "one-block weights match to second order: |p - q| = O(u^2)",
    "hellinger-slope"       : "Hellinger deficit of the seed is O(lambda^2)",
    "kakutani"              : "Kakutani: prod m(a_n t) = 0 for a_n = 1/n",
    "overlap"               : "linear vacuum overlap: 1 - e^{-beta t/2} >= beta t/4 on (0, 2/beta]",
    "diam-tail"             : "diameter control: nu_u(dm >= u^2 | Z nonempty) <= u",
    "poisson-kernel"        : "Poisson units: <u^(a), u^(b)> = exp(-(lam t/2) ||a-b||^2)",
    "poisson-factorization" : "Poisson unit families factorize exactly under concatenation",
    "arcsine-laplace"       : "arcsine Laplace transform: E[e^{-cg}] = e^{-cT/2} I0(cT/2)",
    "seed"                  : "seed: vacuum mass e^{-beta t}, uniform anchor, E_mu[f_t] = 1",
    "two-block"             : "two-block overlap: nu_u(E11) = O(u^2) up to a log"
}

LAMBDAS = [2.0 ** -k for k in range(4, 10)]

def DefaultGrids():
    """DefaultGrids

    Default parameters of every registered check;
    configuration/run.config carries the same values.
    """
    cs = np.logspace(-1, 2, 7).tolist()
    Ss = np.logspace(-2, 1, 7).tolist()
    return {
        "tv-gamma"              : {"c" : cs, "S" : Ss},
        "tail"                  : {"c" : cs, "T" : Ss, "rFractions" : [0.25, 0.5, 0.75]},
        "bridge"                : {"s" : 1.0, "t" : 1.0, "lambdas" : LAMBDAS},
        "block-weights"         : {"s" : 1.0, "t" : 1.0, "lambdas" : LAMBDAS, "n" : 10000000},
        "hellinger-slope"       : {"s" : 1.0, "t" : 1.0, "lambdas" : LAMBDAS, "n" : 10000000},
        "kakutani"              : {"t" : 1.0, "dilation" : "harmonic", "N" : 1000},
        "overlap"               : {"tFractions" : [1e-4, 1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0]},
        "diam-tail"             : {"u" : [0.02, 0.05, 0.1, 0.2, 0.4], "n" : 1000000},
        "poisson-kernel"        : {"n" : 1000000},
        "poisson-factorization" : {"lam" : 2.0, "weights" : [0.3, 0.7], "a" : [1.2, 0.8], "s" : 0.4, "t" : 0.6, "n" : 100000},
        "arcsine-laplace"       : {"c" : [0.1, 0.5, 2.0, 10.0, 50.0], "T" : [0.1, 0.5, 1.0, 2.0, 5.0]},
        "seed"                  : {"a" : 0.1, "t" : 0.5, "n" : 1000000},
        "two-block"             : {"s" : 1.0, "t" : 1.0, "lambdas" : LAMBDAS, "n" : 10000000}
    }

def _Grid(config, checkId):
    grid = DefaultGrids()[checkId]
    grid.update(config.Grid(checkId))
    return grid

def _Seed(config, grid):
    return SeedParams(float(grid.get("a", config.a)), float(grid.get("beta", config.beta)))

def _RunTvGamma(config):
    grid = _Grid(config, "tv-gamma")
    return CheckTvGammaBound([(c, S) for c in grid["c"] for S in grid["S"]])

def _RunTail(config):
    grid = _Grid(config, "tail")
    return CheckTailBound([(c, T, f * T) for c in grid["c"] for T in grid["T"] for f in grid["rFractions"]])

def _RunBridge(config):
    grid = _Grid(config, "bridge")
    return CheckBridgeBound(grid["s"], grid["t"], grid["lambdas"])

def _RunBlockWeights(config):
    grid = _Grid(config, "block-weights")
    return CheckBlockWeights(_Seed(config, grid), grid["s"], grid["t"], grid["lambdas"], int(grid["n"]),
                             config.seed, config.workers, config.jobs)

def _RunHellinger(config):
    grid = _Grid(config, "hellinger-slope")
    constant = float(grid.get("bridgeConstant", config.bridgeConstant))
    _, report = HellingerSmallnessSlope(_Seed(config, grid), grid["s"], grid["t"], grid["lambdas"], int(grid["n"]),
                                        config.seed, constant, config.workers, config.jobs)
    return report

def _RunKakutani(config):
    grid = _Grid(config, "kakutani")
    return CheckKakutani(float(grid.get("beta", config.beta)), grid["t"], grid["dilation"], int(grid["N"]))

def _RunOverlap(config):
    grid = _Grid(config, "overlap")
    beta = float(grid.get("beta", config.beta))
    tGrid = grid.get("t", [f * 2.0 / beta for f in grid["tFractions"]])
    return CheckLinearOverlap(beta, tGrid)

def _RunDiamTail(config):
    grid = _Grid(config, "diam-tail")
    return CheckDiamTail(_Seed(config, grid), grid["u"], int(grid["n"]), config.seed, config.workers, config.jobs)

def _RunPoissonKernel(config):
    grid = _Grid(config, "poisson-kernel")
    return CheckPoissonKernel(DefaultKernelCases(), int(grid["n"]), config.seed)

def _RunPoissonFactorization(config):
    grid = _Grid(config, "poisson-factorization")
    m = Poisson.PoissonModel(grid["lam"], tuple(grid["weights"]))
    a = Poisson.MarkFunction(tuple(grid["a"]))
    return CheckPoissonFactorization(m, a, grid["s"], grid["t"], int(grid["n"]), config.seed)

def _RunArcsineLaplace(config):
    grid = _Grid(config, "arcsine-laplace")
    return CheckArcsineLaplace(grid["c"], grid["T"])

def _RunSeed(config):
    grid = _Grid(config, "seed")
    return CheckSeed(_Seed(config, grid), grid["t"], int(grid["n"]), config.seed)

def _RunTwoBlock(config):
    grid = _Grid(config, "two-block")
    return CheckTwoBlockOverlap(_Seed(config, grid), grid["s"], grid["t"], grid["lambdas"], int(grid["n"]),
                                config.seed, config.workers, config.jobs)

CHECKS = {
    "tv-gamma"              : _RunTvGamma,
    "tail"                  : _RunTail,
    "bridge"                : _RunBridge,
    "block-weights"         : _RunBlockWeights,
    "hellinger-slope"       : _RunHellinger,
    "kakutani"              : _RunKakutani,
    "overlap"               : _RunOverlap,
    "diam-tail"             : _RunDiamTail,
    "poisson-kernel"        : _RunPoissonKernel,
    "poisson-factorization" : _RunPoissonFactorization,
    "arcsine-laplace"       : _RunArcsineLaplace,
    "seed"                  : _RunSeed,
    "two-block"             : _RunTwoBlock
}

def RunCheck(checkId, config):
    """RunCheck

    Runs a registered check with the configured
    parameters, stamping seed and sample size on the
    report.

    Args:
      checkId: id in CHECKS
      config:  RunConfig
    Returns:
      BoundReport
    """
    if checkId not in CHECKS:
        raise UnknownCheckError(f"unknown check '{checkId}', choose from {sorted(CHECKS)}")
    logger.info(f"running check '{checkId}' (seed {config.seed})")
    report = CHECKS[checkId](config)
    report.seed = config.seed
    if report.n == 0 and "n" in DefaultGrids()[checkId]:
        report.n = int(_Grid(config, checkId)["n"])
    return report

# end =========================================================================
