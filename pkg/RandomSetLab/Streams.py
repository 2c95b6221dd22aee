# =============================================================================
## @file    Streams.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Deterministic random streams and the joblib
#    fan-out used by every Monte Carlo driver.
# =============================================================================

import hashlib
import logging

from joblib import Parallel
from joblib import delayed
import numpy as np

logger = logging.getLogger(__name__)

def StreamKey(name):
    """StreamKey

    Stable 32-bit key for a named stream.

    Args:
      name: stream name (eg. check id)
    Returns:
      integer key
    """
    if isinstance(name, (int, np.integer)):
        return int(name)
    if not name:
        raise ValueError("stream name must be non-empty")
    digest = hashlib.sha256(str(name).encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big", signed = False)

def MakeGenerator(seed, *keys):
    """MakeGenerator

    Independent numpy Generator derived from the run
    seed and a path of stream keys (names or ints).

    Args:
      seed: 64-bit run seed
      keys: stream path, eg. ("block-weights", 3, 0)
    Returns:
      numpy.random.Generator
    """
    spawnKey = tuple(StreamKey(k) for k in keys)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key = spawnKey)))

def SplitCounts(n, nWorkers):
    """SplitCounts

    Deterministic split of n draws over workers;
    the first n % nWorkers workers take one extra.
    """
    nWorkers = max(1, min(int(nWorkers), int(n)))
    base, extra = divmod(int(n), nWorkers)
    return [base + (1 if i < extra else 0) for i in range(nWorkers)]

def ResolveJobs(jobs):
    """ResolveJobs

    None or nonpositive means all logical cores.
    """
    if jobs is None or jobs <= 0:
        return -1
    return int(jobs)

def RunParallel(fn, items, jobs = 1):
    """RunParallel

    Apply fn to each item through joblib, keeping the
    input order in the output.

    Args:
      fn:    function of one item
      items: list of items
      jobs:  worker count (1 runs inline)
    Returns:
      list of results
    """
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"dispatching {len(items)} tasks to {jobs} joblib workers")
    return Parallel(n_jobs = ResolveJobs(jobs))(delayed(fn)(item) for item in items)

# end =========================================================================
