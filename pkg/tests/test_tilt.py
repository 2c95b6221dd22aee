# =============================================================================
## @file    test_tilt.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Tests of the localization, Palm
#    uniformization and the seed built from them.
# =============================================================================

import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import numpy as np
import pytest
from scipy import stats

from RandomSetLab import Brownian as bm
from RandomSetLab import Distance
from RandomSetLab import SpecFun
from RandomSetLab import Tilt as tl
from RandomSetLab.Errors import DegenerateTiltError
from RandomSetLab.Errors import DomainError

# -----------------------------------------------------------------------------
# Localization
# -----------------------------------------------------------------------------

def test_localization_weight():
    assert tl.LocalizationWeight(0.5, 0.3, 0.0) == 1.0
    alpha = math.exp(-1.0)
    assert tl.LocalizationWeight(0.5, alpha, alpha * alpha) == pytest.approx(0.367879441, abs = 1e-9)
    assert tl.LocalizationWeight(0.5, empty = True) == 1.0
    with pytest.raises(DomainError):
        tl.LocalizationWeight(1.0, 0.5, 0.1)
    with pytest.raises(DomainError):
        tl.LocalizationWeight(0.5, 0.7, 0.1)

@pytest.mark.parametrize("alpha, dm", [(0.01, 0.0), (0.2, 0.1), (0.49, 0.01)])
def test_localization_weight_in_unit_interval(alpha, dm):
    assert 0.0 < tl.LocalizationWeight(0.5, alpha, dm) <= 1.0

def test_log_rate_domain():
    assert tl.LogRate(1.0) == 0.0
    with pytest.raises(DomainError):
        tl.LogRate(0.0)
    with pytest.raises(DomainError):
        tl.LogRate(1.5)

# -----------------------------------------------------------------------------
# Tilted arcsine
# -----------------------------------------------------------------------------

def test_tilted_arcsine_normalizer():
    assert tl.TiltedArcsine(1.0, 0.0).normalizer == pytest.approx(1.0, abs = 1e-9)
    assert tl.TiltedArcsine(1.0, 2.0).normalizer == pytest.approx(0.465759608, abs = 1e-8)

@pytest.mark.parametrize("c, T", [(2.0, 1.0), (10.0, 1.0), (100.0, 0.5), (40.0, 3.0)])
def test_tilted_arcsine_mean_bound(c, T):
    law = tl.TiltedArcsine(T, c)
    assert tl.TiltedArcsineMean(law) <= 8.0 / c
    assert tl.TiltedArcsineCdf(law, 0.5 * T) + tl.TiltedArcsineTail(law, 0.5 * T) == pytest.approx(1.0, abs = 1e-9)

def test_untilted_law_is_arcsine():
    law = tl.TiltedArcsine(1.0, 0.0)
    assert tl.TiltedArcsineCdf(law, 0.25) == pytest.approx(float(SpecFun.ArcsineCdf(0.25, 1.0)), abs = 1e-9)
    assert Distance.TvDensities(SpecFun.ArcsineLaw(1.0), law.density) == pytest.approx(0.0, abs = 1e-9)

def _MaxCdfGap(draws, law):
    # evaluated at the sample percentiles
    points = np.quantile(draws, np.linspace(0.01, 0.99, 99))
    ecdf = np.searchsorted(np.sort(draws), points, side = "right") / draws.size
    return max(abs(e - tl.TiltedArcsineCdf(law, g)) for e, g in zip(ecdf, points))

def test_tilted_sampler_cdf(make_rng):
    law = tl.TiltedArcsine(1.0, 2.0)
    rng = make_rng("tilted", "cdf")
    draws = np.array([tl.SampleTiltedArcsine(1.0, 2.0, rng) for _ in range(100000)])
    # 1% critical value of the KS statistic
    assert _MaxCdfGap(draws, law) < 1.63 / math.sqrt(draws.size)

@pytest.mark.slow
def test_tilted_sampler_cdf_full(make_rng):
    law = tl.TiltedArcsine(1.0, 2.0)
    rng = make_rng("tilted", "cdf-full")
    draws = tl._SampleTiltedArray(np.ones(1000000), np.full(1000000, 2.0), rng)
    assert _MaxCdfGap(draws, law) < 0.002

def test_tilted_sampler_acceptance_rate(make_rng):
    rng = make_rng("tilted", "acceptance")
    proposals = [tl.SampleTiltedArcsineCounted(1.0, 2.0, rng)[1] for _ in range(50000)]
    assert Distance.MCMean(proposals).Agrees(1.0 / float(SpecFun.ArcsinePhi(2.0, 1.0)))
    assert tl.SampleTiltedArcsineCounted(1.0, 0.0, rng)[1] == 1

def test_deep_tilt_matches_quadrature(make_rng):
    c, T = 10000.0, 1.0
    assert SpecFun.ArcsinePhi(c, T) < tl.DEEP_TILT
    law = tl.TiltedArcsine(T, c)
    draws = tl._SampleTiltedArray(np.full(200000, T), np.full(200000, c), make_rng("tilted", "deep"))
    assert Distance.MCMean(draws).Agrees(tl.TiltedArcsineMean(law))
    assert _MaxCdfGap(draws, law) < 1.63 / math.sqrt(draws.size)

def test_degenerate_tilt_raises(rng):
    with pytest.raises(DegenerateTiltError):
        tl.SampleTiltedArcsine(1.0, 1e26, rng)

# -----------------------------------------------------------------------------
# Palm uniformization
# -----------------------------------------------------------------------------

@pytest.mark.parametrize("a, t", [(1.0, 0.5), (0.1, 0.5), (1.0, 0.9)])
def test_palm_uniformization(a, t):
    palm = tl.PalmDensityH(bm.SeedParams(a), t)
    # h dkappa = Leb on (0, t)
    def Product(x):
        k = palm.kappa(x)
        with np.errstate(invalid = "ignore", over = "ignore"):
            return np.where(k > 0.0, palm.h(x) * k, 1.0)
    assert SpecFun.Integrate(Product, 0.0, t) == pytest.approx(t, abs = 1e-6)
    assert SpecFun.Integrate(palm.kappa, 0.0, t) == pytest.approx(1.0 - palm.pLoc, abs = 1e-9)
    assert palm.constant == palm.pLoc + t
    xs = np.linspace(0.05, t, 20)
    assert np.all(palm.h(xs) > 0.0)

# -----------------------------------------------------------------------------
# Seed density and sampler
# -----------------------------------------------------------------------------

def test_seed_density_empty_value(seed_params):
    assert tl.SeedDensity(seed_params, 1.0, bm.EmptySummary(1.0)) == pytest.approx(0.538872, abs = 1e-6)

def test_seed_density_batch_matches_scalar(small_seed_params, make_rng):
    p, t = small_seed_params, 0.5
    rng = make_rng("seed", "batch")
    summaries = [bm.SampleZeroSummary(p.a, t, rng) for _ in range(50)]
    empty = np.array([z.empty for z in summaries])
    alpha = np.array([np.nan if z.empty else z.alpha for z in summaries])
    dm    = np.array([np.nan if z.empty else z.dm for z in summaries])
    batch = tl.SeedDensityBatch(p, t, empty, alpha, dm)
    for z, value in zip(summaries, batch):
        assert value == pytest.approx(tl.SeedDensity(p, t, z), rel = 1e-10)

def test_seed_density_at_horizon_anchor(seed_params):
    z = bm.BrownianZeroSummary(0.5, False, 0.5, 0.5)
    assert math.isfinite(tl.SeedDensity(seed_params, 0.5, z))

def test_seed_density_small_anchor_overflows(seed_params):
    # log f_t ~ a^2 / (2 alpha) = 5000 is past the float range
    z = bm.BrownianZeroSummary(0.5, False, 1e-4, 1e-4)
    assert tl.SeedDensity(seed_params, 0.5, z) == math.inf
    batch = tl.SeedDensityBatch(seed_params, 0.5, np.array([False]), np.array([1e-4]), np.array([0.0]))
    assert batch[0] == math.inf

@pytest.mark.parametrize("alpha", [1e-3, 3e-4, 1e-4, 3e-5, 1e-5])
def test_seed_density_small_anchor_finite(small_seed_params, alpha):
    p, t = small_seed_params, 0.5
    z = bm.BrownianZeroSummary(t, False, alpha, alpha)
    value = tl.SeedDensity(p, t, z)
    assert math.isfinite(value) and value > 0.0
    rate = tl.LogRate(alpha)
    logValue = (math.log1p(-math.exp(-p.beta * t)) - math.log(t)
                - SpecFun.LogHittingDensity(p.a, alpha) - math.log(SpecFun.ArcsinePhi(rate, t - alpha)))
    assert math.log(value) == pytest.approx(logValue, rel = 1e-10)

@settings(max_examples = 50, deadline = None)
@given(logAlpha = st.floats(min_value = math.log(1e-6), max_value = math.log(0.5)),
       frac = st.floats(min_value = 0.0, max_value = 1.0))
def test_seed_density_batch_matches_scalar_small_anchors(logAlpha, frac):
    p, t = bm.SeedParams(a = 1.0, beta = 1.0), 0.5
    alpha = min(math.exp(logAlpha), t)
    dm = frac * min(1.0 / tl.LogRate(alpha), t - alpha)
    z = bm.BrownianZeroSummary(t, False, alpha, min(alpha + dm, t))
    scalar = tl.SeedDensity(p, t, z)
    batch  = tl.SeedDensityBatch(p, t, np.array([False]), np.array([alpha]), np.array([z.dm]))[0]
    assert scalar > 0.0 and not math.isnan(scalar)
    assert batch == pytest.approx(scalar, rel = 1e-10) or (batch == scalar == math.inf)

def test_seed_density_on_seed_draws(seed_params, make_rng):
    p, t = seed_params, 0.5
    empty, alpha, dm = tl.SampleSeedBatch(p, t, 20000, make_rng("seed", "own-draws"), nonempty = True)
    dens = tl.SeedDensityBatch(p, t, empty, alpha, dm)
    assert not np.any(np.isnan(dens))
    assert np.all(dens > 0.0)
    # anchors with a^2 / (2 alpha) past the float range give +inf, never 0
    assert np.all(np.isinf(dens[alpha < 5e-4]))
    for i in np.argsort(alpha)[:5]:
        z = bm.BrownianZeroSummary(t, False, float(alpha[i]), float(min(alpha[i] + dm[i], t)))
        assert tl.SeedDensity(p, t, z) == math.inf

def _BrownianWeights(p, t, n, rng):
    empty, alpha, gLast = bm.SampleZeroSummaryBatch(p.a, t, n, rng)
    return empty, alpha, gLast - alpha, tl.SeedDensityBatch(p, t, empty, alpha, gLast - alpha)

def test_seed_density_normalized(small_seed_params, make_rng):
    p, t = small_seed_params, 0.5
    empty, _, _, weights = _BrownianWeights(p, t, 200000, make_rng("seed", "norm"))
    assert Distance.MCMean(weights).Agrees(1.0)
    assert Distance.MCWeightedMean(empty.astype(float), weights).Agrees(math.exp(-p.beta * t))

@pytest.mark.slow
def test_seed_density_normalized_full(small_seed_params, make_rng):
    p, t = small_seed_params, 0.5
    _, _, _, weights = _BrownianWeights(p, t, 1000000, make_rng("seed", "norm-full"))
    assert Distance.MCMean(weights).Agrees(1.0)

def test_seed_importance_sampling_consistency(small_seed_params, make_rng):
    p, t, n = small_seed_params, 0.5, 200000
    # P(nonempty, dm < 0.001) directly and through the density
    sEmpty, _, sDm = tl.SampleSeedBatch(p, t, n, make_rng("seed", "direct"))
    direct = Distance.MCMean(~sEmpty & (np.nan_to_num(sDm, nan = 1.0) < 0.001))
    bEmpty, _, bDm, weights = _BrownianWeights(p, t, n, make_rng("seed", "weighted"))
    weighted = Distance.MCWeightedMean(~bEmpty & (np.nan_to_num(bDm, nan = 1.0) < 0.001), weights)
    assert abs(direct.value - weighted.value) <= 4.0 * math.hypot(direct.stderr, weighted.stderr)

def test_seed_vacuum_and_anchor(make_rng):
    p, t = bm.SeedParams(1.0, 1.0), 0.5
    empty, alpha, dm = tl.SampleSeedBatch(p, t, 100000, make_rng("seed", "sampler"))
    assert Distance.ProportionEstimate(int(empty.sum()), empty.size).Agrees(0.606531, slack = 1e-6)
    anchors = alpha[~empty]
    assert stats.kstest(anchors / t, "uniform").pvalue > 0.001
    assert np.all(dm[~empty] >= 0.0)
    assert np.all(anchors + dm[~empty] <= t + 1e-12)

@pytest.mark.slow
def test_seed_anchor_ks_full(make_rng):
    p, t = bm.SeedParams(1.0, 1.0), 0.5
    empty, alpha, _ = tl.SampleSeedBatch(p, t, 2000000, make_rng("seed", "sampler-full"))
    assert stats.kstest(alpha[~empty] / t, "uniform").statistic < 0.002

def test_seed_scalar_sampler(seed_params, make_rng):
    rng = make_rng("seed", "scalar")
    n = 20000
    draws = [tl.SampleSeed(seed_params, 1.0, rng) for _ in range(n)]
    empties = sum(1 for z in draws if z.empty)
    assert Distance.ProportionEstimate(empties, n).Agrees(math.exp(-1.0))
    assert all(z.horizon == 1.0 for z in draws)

def test_seed_horizon_domain(seed_params, rng):
    with pytest.raises(DomainError):
        tl.SampleSeed(seed_params, 1.5, rng)
    with pytest.raises(DomainError):
        tl.SeedDensity(seed_params, 0.0, bm.EmptySummary(1.0))

def test_seeds_frame_columns(seed_params, make_rng):
    empty, alpha, dm = tl.SampleSeedBatch(seed_params, 0.5, 10, make_rng("seed", "frame"))
    frame = tl.SeedsToFrame(seed_params, 0.5, empty, alpha, dm)
    assert list(frame.columns) == ["t", "beta", "a", "empty", "alpha", "dm"]

# -----------------------------------------------------------------------------
# Vacuum overlap
# -----------------------------------------------------------------------------

def test_vacuum_overlap():
    assert tl.VacuumOverlap(1.0, 1.0) == pytest.approx(0.606530660, abs = 1e-9)
    assert 1.0 - tl.VacuumOverlap(1.0, 2.0) == pytest.approx(0.632121, abs = 1e-6)
    for t in (1e-3, 1e-4):
        assert (1.0 - tl.VacuumOverlap(1.0, t)) / (0.5 * t) == pytest.approx(1.0, abs = 1e-3)

# end =========================================================================
