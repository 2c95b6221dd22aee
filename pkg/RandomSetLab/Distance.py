# =============================================================================
## @file    Distance.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Hellinger and total-variation machinery:
#    distances between 1-D densities by quadrature,
#    block-decomposition accounting and Monte Carlo
#    estimates with standard errors.
# =============================================================================

from dataclasses import dataclass
from dataclasses import field
import logging
import math

import numpy as np

from RandomSetLab import SpecFun
from RandomSetLab import Streams
from RandomSetLab.Errors import DomainError

logger = logging.getLogger(__name__)

BLOCKS = ("00", "10", "01", "11")

# -----------------------------------------------------------------------------
# Monte Carlo estimates
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class MCEstimate:
    """MCEstimate

    Monte Carlo value with its standard error.

    Members:
      value:  estimate
      stderr: sample std / sqrt(n)
      n:      number of draws
      seed:   run seed the draws came from
    """
    value  : float
    stderr : float
    n      : int
    seed   : int = 0

    def __post_init__(self):
        if self.n < 1 or self.stderr < 0.0:
            raise DomainError(f"invalid estimate: n = {self.n}, stderr = {self.stderr}")

    def Agrees(self, target, nSigma = 3.0, slack = 0.0):
        """Agrees

        |value - target| <= nSigma stderr + slack.
        """
        return abs(self.value - target) <= nSigma * self.stderr + slack

def MCMean(values, seed = 0):
    """MCMean

    Sample mean of iid values as an MCEstimate.
    """
    values = np.asarray(values, dtype = float)
    n = values.size
    if n < 1:
        raise DomainError("no samples to average")
    std = float(values.std(ddof = 1)) if n > 1 else 0.0
    return MCEstimate(float(values.mean()), std / math.sqrt(n), n, seed)

def MCWeightedMean(values, weights, seed = 0):
    """MCWeightedMean

    Importance-sampling estimate E[w f] from draws of
    the proposal law.

    Args:
      values:  f at the draws
      weights: density ratio at the draws
      seed:    run seed
    Returns:
      MCEstimate
    """
    return MCMean(np.asarray(values, dtype = float) * np.asarray(weights, dtype = float), seed)

def ProportionEstimate(hits, n, seed = 0):
    """ProportionEstimate

    Binomial proportion with stderr sqrt(p (1 - p) / n).
    """
    if n < 1:
        raise DomainError("proportion of zero draws")
    prob = hits / n
    return MCEstimate(prob, math.sqrt(max(prob * (1.0 - prob), 0.0) / n), int(n), seed)

def McEventProb(sampler, predicate, n, rng, seed = 0):
    """McEventProb

    Probability of an event by direct sampling.

    Args:
      sampler:   function rng -> sample
      predicate: function sample -> bool
      n:         number of draws >= 100
      rng:       numpy Generator
      seed:      run seed recorded in the estimate
    Returns:
      MCEstimate
    """
    if n < 100:
        raise DomainError(f"event probabilities need n >= 100, got {n}")
    hits = sum(1 for _ in range(int(n)) if predicate(sampler(rng)))
    return ProportionEstimate(hits, int(n), seed)

def _CountHits(task):
    batchSampler, predicate, n, seed, keys = task
    rng = Streams.MakeGenerator(seed, *keys)
    return int(np.count_nonzero(predicate(*batchSampler(n, rng))))

def McEventProbSplit(batchSampler, predicate, n, seed, keys = (), nWorkers = 1, jobs = 1):
    """McEventProbSplit

    Event probability with the draws split over
    independent substreams; hit counts are summed in
    worker order, so the result only depends on
    (seed, keys, n, nWorkers).

    Args:
      batchSampler: function (n, rng) -> tuple of arrays
      predicate:    vectorized function of those arrays
      n:            total draws
      seed:         run seed
      keys:         stream path of this estimate
      nWorkers:     number of substreams
      jobs:         joblib worker count
    Returns:
      MCEstimate
    """
    return McEventProbGrid([(batchSampler, predicate, keys)], n, seed, nWorkers, jobs)[0]

def McEventProbGrid(events, n, seed, nWorkers = 1, jobs = 1):
    """McEventProbGrid

    McEventProbSplit for a whole grid of events in one
    joblib fan-out: every (event, substream) pair is a
    task, and each event's hits are summed in worker
    order afterwards.

    Args:
      events:   list of (batchSampler, predicate, keys)
      n:        draws per event
      seed:     run seed
      nWorkers: substreams per event
      jobs:     joblib worker count
    Returns:
      list of MCEstimate, one per event
    """
    if n < 100:
        raise DomainError(f"event probabilities need n >= 100, got {n}")
    counts = Streams.SplitCounts(n, nWorkers)
    tasks  = [(batchSampler, predicate, count, seed, tuple(keys) + (iWorker,))
              for batchSampler, predicate, keys in events
              for iWorker, count in enumerate(counts)]
    hits   = Streams.RunParallel(_CountHits, tasks, jobs)
    estimates = []
    for iEvent in range(len(events)):
        total = 0
        for h in hits[iEvent * len(counts):(iEvent + 1) * len(counts)]:
            total += h
        estimates.append(ProportionEstimate(total, int(n), seed))
    return estimates

# -----------------------------------------------------------------------------
# Distances between 1-D densities
# -----------------------------------------------------------------------------

def _Window(d1, d2, lo, hi):
    lo = max(d1.lo, d2.lo) if lo is None else lo
    hi = min(d1.hi, d2.hi) if hi is None else hi
    singLo = (d1.singularLo and lo == d1.lo) or (d2.singularLo and lo == d2.lo)
    singHi = (d1.singularHi and hi == d1.hi) or (d2.singularHi and hi == d2.hi)
    return lo, hi, singLo, singHi

def TvDensities(d1, d2, lo = None, hi = None):
    """TvDensities

    Total variation 1/2 int |d1 - d2| over [lo, hi]
    by singular quadrature.

    Args:
      d1: first density
      d2: second density
      lo: left end of the common window
      hi: right end of the common window
    Returns:
      TV value
    """
    lo, hi, singLo, singHi = _Window(d1, d2, lo, hi)
    if not lo < hi:
        raise DomainError(f"empty comparison window [{lo}, {hi}]")
    value = 0.5 * SpecFun.Integrate(lambda x: np.abs(d1(x) - d2(x)), lo, hi, singLo, singHi)
    return min(max(value, 0.0), 1.0)

def HellingerDensities(d1, d2, lo = None, hi = None):
    """HellingerDensities

    Hellinger affinity int sqrt(d1 d2) over the common
    support; 0 for disjoint supports.
    """
    lo, hi, singLo, singHi = _Window(d1, d2, lo, hi)
    if not lo < hi:
        return 0.0
    value = SpecFun.Integrate(lambda x: np.sqrt(d1(x) * d2(x)), lo, hi, singLo, singHi)
    return min(max(value, 0.0), 1.0)

def HellingerWeighted(p, q, condAffinity):
    """HellingerWeighted

    Squared Hellinger distance of p mu and q nu
    from the block weights and the conditional
    affinity: (sqrt p - sqrt q)^2 + 2 sqrt(pq) (1 - H).
    """
    if p < 0.0 or q < 0.0 or not (0.0 <= condAffinity <= 1.0):
        raise DomainError(f"need p, q >= 0 and H in [0, 1] (p = {p}, q = {q}, H = {condAffinity})")
    return (math.sqrt(p) - math.sqrt(q)) ** 2 + 2.0 * math.sqrt(p * q) * (1.0 - condAffinity)

def HellingerDistanceSq(p, q):
    """HellingerDistanceSq

    sum (sqrt p_i - sqrt q_i)^2 for discrete laws.
    """
    p = np.asarray(p, dtype = float)
    q = np.asarray(q, dtype = float)
    return float(np.sum((np.sqrt(p) - np.sqrt(q)) ** 2))

# -----------------------------------------------------------------------------
# Block decompositions
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class BlockTerm:
    """BlockTerm

    Members:
      p:            block weight under the first law
      q:            block weight under the second law
      condAffinity: affinity of the conditional laws
      stderr:       MC error of p (0 if exact)
    """
    p            : float
    q            : float
    condAffinity : float = 1.0
    stderr       : float = 0.0

    @property
    def distanceSq(self):
        return HellingerWeighted(self.p, self.q, self.condAffinity)

@dataclass(frozen = True)
class BlockDecomposition:
    """BlockDecomposition

    Block weights and conditional affinities of two
    laws on a partition E00, E10, E01, E11 (or any
    named partition).

    Members:
      blocks: mapping block name -> BlockTerm
    """
    blocks : dict = field(default_factory = dict)

    def Validate(self, tol = 1e-12):
        """Validate

        Block weights of each law sum to 1 within tol
        plus 4 combined stderr.
        """
        slack = tol + 4.0 * math.sqrt(sum(term.stderr ** 2 for term in self.blocks.values()))
        sumP = math.fsum(term.p for term in self.blocks.values())
        sumQ = math.fsum(term.q for term in self.blocks.values())
        return abs(sumP - 1.0) <= slack and abs(sumQ - 1.0) <= slack

    def Total(self):
        """Total

        Partition sum of the weighted block distances.
        """
        return math.fsum(term.distanceSq for term in self.blocks.values())

def BlockHellinger(rho, eta, partition):
    """BlockHellinger

    Block decomposition of two discrete laws over a
    partition of their atoms.

    Args:
      rho:       first law (probability vector)
      eta:       second law (probability vector)
      partition: mapping block name -> list of atom indices
    Returns:
      BlockDecomposition
    """
    rho = np.asarray(rho, dtype = float)
    eta = np.asarray(eta, dtype = float)
    blocks = {}
    for name, atoms in partition.items():
        idx = np.asarray(atoms, dtype = int)
        p = float(rho[idx].sum())
        q = float(eta[idx].sum())
        if p > 0.0 and q > 0.0:
            affinity = float(np.sum(np.sqrt(rho[idx] / p * eta[idx] / q)))
        else:
            affinity = 0.0
        blocks[name] = BlockTerm(p, q, min(affinity, 1.0))
    return BlockDecomposition(blocks)

# end =========================================================================
