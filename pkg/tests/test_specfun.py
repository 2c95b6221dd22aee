# =============================================================================
## @file    test_specfun.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Tests of the special functions and the
#    singular Gauss-Kronrod quadrature.
# =============================================================================

import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import numpy as np
import pytest
from scipy import special

from RandomSetLab import SpecFun as sf
from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import QuadratureError

# -----------------------------------------------------------------------------
# Normal cdf and Bessel
# -----------------------------------------------------------------------------

def test_normal_cdf():
    assert sf.NormalCdf(0.0) == 0.5
    assert sf.NormalCdf(1.0) == pytest.approx(0.841344746, abs = 1e-9)
    for x in (0.3, 1.7, 4.2):
        assert sf.NormalCdf(-x) == pytest.approx(1.0 - sf.NormalCdf(x), abs = 1e-15)

@pytest.mark.parametrize("x, expected", [(0.0, 1.0), (1.0, 1.266065878), (10.0, 2815.716628)])
def test_bessel_i0_values(x, expected):
    assert sf.BesselI0(x) == pytest.approx(expected, rel = 1e-9)

def test_bessel_i0_against_scipy():
    xs = np.array([0.0, 0.5, 3.0, 14.9, 15.0, 15.1, 40.0, 300.0])
    assert np.allclose(sf.BesselI0e(xs), special.i0e(xs), rtol = 1e-12, atol = 0.0)

def test_bessel_crossover_continuous():
    below = sf.BesselI0e(np.nextafter(sf.BESSEL_CROSSOVER, 0.0))
    above = sf.BesselI0e(np.nextafter(sf.BESSEL_CROSSOVER, np.inf))
    assert abs(below - above) / above < 1e-11

def test_bessel_rejects_negative():
    with pytest.raises(DomainError):
        sf.BesselI0(-1.0)

# -----------------------------------------------------------------------------
# Closed-form laws
# -----------------------------------------------------------------------------

def test_hitting_density():
    assert sf.HittingDensity(1.0, 1.0) == pytest.approx(0.241970725, abs = 1e-9)
    assert sf.HittingSurvival(1.0, 1.0) == pytest.approx(0.682689492, abs = 1e-9)
    with pytest.raises(DomainError):
        sf.HittingDensity(0.0, 1.0)
    with pytest.raises(DomainError):
        sf.HittingDensity(1.0, -1.0)

def test_log_hitting_density():
    xs = np.array([0.05, 0.3, 1.0, 4.0])
    np.testing.assert_allclose(sf.LogHittingDensity(1.0, xs), np.log(sf.HittingDensity(1.0, xs)), rtol = 1e-12)
    # density underflows here, its log does not
    assert sf.HittingDensity(1.0, 1e-4) == 0.0
    assert sf.LogHittingDensity(1.0, 1e-4) == pytest.approx(-0.5 * math.log(2.0 * math.pi) + 6.0 * math.log(10.0) - 5000.0, rel = 1e-12)
    with pytest.raises(DomainError):
        sf.LogHittingDensity(1.0, 0.0)

@pytest.mark.parametrize("a", [0.1, 1.0, 3.0])
def test_hitting_density_normalized(a):
    # x = a^2 / y^2 turns f_a into the half-normal density
    def Pulled(y):
        y = np.asarray(y, dtype = float)
        x = a * a / (y * y)
        return np.where(y > 0.0, sf.HittingDensity(a, np.maximum(x, 1e-300)) * 2.0 * a * a / y ** 3, 0.0)
    assert sf.Integrate(Pulled, 0.0, math.inf) == pytest.approx(1.0, abs = 1e-10)

def test_arcsine_phi():
    assert sf.ArcsinePhi(0.0, 3.0) == 1.0
    assert sf.ArcsinePhi(2.0, 1.0) == pytest.approx(0.465759608, abs = 1e-9)
    assert sf.ArcsinePhi(4.0, 0.5) == sf.ArcsinePhi(2.0, 1.0)

@settings(max_examples = 50, deadline = None)
@given(st.floats(min_value = 0.0, max_value = 500.0), st.floats(min_value = 0.0, max_value = 500.0))
def test_arcsine_phi_decreasing(x, y):
    lo, hi = sorted((x, y))
    assert 0.0 < sf.ArcsinePhi(hi, 1.0) <= sf.ArcsinePhi(lo, 1.0) * (1.0 + 1e-12)
    assert sf.ArcsinePhi(lo, 1.0) <= 1.0

def test_arcsine_cdf():
    assert sf.ArcsineCdf(0.5, 1.0) == pytest.approx(0.5, abs = 1e-15)
    assert sf.ArcsineCdf(2.0, 1.0) == 1.0

def test_gamma_half_survival():
    assert sf.GammaHalfSurvival(2.0, 0.5) == pytest.approx(special.erfc(1.0), rel = 1e-14)

# -----------------------------------------------------------------------------
# Quadrature
# -----------------------------------------------------------------------------

@pytest.mark.parametrize("law", [sf.ArcsineLaw(1.0), sf.ArcsineLaw(0.3), sf.GammaHalfLaw(1.0),
                                 sf.GammaHalfLaw(25.0), sf.RayleighLaw(2.0), sf.HittingLaw(0.5)])
def test_densities_normalized(law):
    assert sf.QuadSingular(law) == pytest.approx(1.0, abs = 1e-9)

@pytest.mark.parametrize("c, T", [(0.1, 1.0), (2.0, 1.0), (30.0, 0.5), (400.0, 2.0)])
def test_quadrature_matches_laplace_identity(c, T):
    value = sf.Integrate(lambda s: np.exp(-c * s) * sf.ArcsineDensity(s, T), 0.0, T, True, True)
    assert value == pytest.approx(float(sf.ArcsinePhi(c, T)), rel = 1e-8)

def test_integrate_polynomial_and_limits():
    assert sf.Integrate(lambda x: x * x, 0.0, 3.0) == pytest.approx(9.0, rel = 1e-13)
    assert sf.Integrate(lambda x: x, 1.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        sf.Integrate(lambda x: x, 1.0, 0.0)

def test_integrate_non_integrable_raises():
    with pytest.raises(QuadratureError):
        sf.Integrate(lambda x: 1.0 / np.maximum(x, 1e-300) ** 1.5, 0.0, 1.0, True, False)

# end =========================================================================
