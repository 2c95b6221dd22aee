# =============================================================================
## @file    test_closedset.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Tests of the closed-set and marked point set
#    calculus.
# =============================================================================

import importlib
import math

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import pytest

import RandomSetLab
from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import InvalidWindowError

# the package re-exports the ClosedSet class under the module name
cs = importlib.import_module("RandomSetLab.ClosedSet")

# -----------------------------------------------------------------------------
# Strategies
# -----------------------------------------------------------------------------

@st.composite
def closed_sets(draw, horizon = None, interior = False):
    """random sets whose endpoints avoid 0 and the horizon when interior"""
    t = horizon if horizon is not None else draw(st.sampled_from([0.25, 0.5, 1.0, 2.0]))
    cuts = draw(st.lists(st.integers(min_value = 1, max_value = 63), max_size = 8, unique = True))
    cuts = sorted(cuts)
    if len(cuts) % 2 == 1:
        cuts.append(cuts[-1])
    ivs = []
    for lo, hi in zip(cuts[::2], cuts[1::2]):
        if ivs and ivs[-1][1] >= lo * t / 64.0:
            continue
        ivs.append((lo * t / 64.0, hi * t / 64.0))
    if not interior and draw(st.booleans()):
        ivs = [(0.0, 0.0)] + ivs if not ivs or ivs[0][0] > 0.0 else ivs
    return cs.ClosedSet(t, tuple(ivs))

@st.composite
def edge_sets(draw, horizon = None):
    """random sets on an arbitrary float horizon with endpoints at 0 and t"""
    t = horizon if horizon is not None else draw(st.floats(min_value = 1e-3, max_value = 1e3))
    fracs = draw(st.lists(st.floats(min_value = 0.0, max_value = 1.0), max_size = 8))
    values = sorted({0.0, t} | {u * t for u in fracs})
    if len(values) % 2 == 1:
        values.append(values[-1])
    return cs.ClosedSet(t, tuple(zip(values[::2], values[1::2])))

# -----------------------------------------------------------------------------
# Package layout
# -----------------------------------------------------------------------------

def test_package_exports_class_and_module():
    assert RandomSetLab.ClosedSet is cs.ClosedSet
    assert cs.__name__ == "RandomSetLab.ClosedSet"
    assert RandomSetLab.Concat is cs.Concat

# -----------------------------------------------------------------------------
# Anchor, spread, sup
# -----------------------------------------------------------------------------

def test_anchor_and_diam():
    z = cs.ClosedSet(1.0, ((0.2, 0.2), (0.5, 0.7)))
    assert cs.Anchor(z) == 0.2
    assert cs.Diam(z) == pytest.approx(0.5, abs = 1e-15)
    assert cs.Sup(z) == 0.7
    assert cs.Anchor(cs.Empty(1.0)) == 0.0
    assert cs.Diam(cs.Empty(1.0)) == 0.0
    assert cs.Anchor(cs.ClosedSet(1.0, ((0.9, 1.0),))) == 0.9
    assert cs.Diam(cs.ClosedSet(1.0, ((0.3, 0.3),))) == 0.0

def test_validation():
    with pytest.raises(DomainError):
        cs.ClosedSet(1.0, ((0.5, 0.4),))
    with pytest.raises(DomainError):
        cs.ClosedSet(1.0, ((0.1, 0.5), (0.4, 0.6)))
    with pytest.raises(DomainError):
        cs.ClosedSet(1.0, ((0.1, 1.5),))
    with pytest.raises(DomainError):
        cs.ClosedSet(0.0)

# -----------------------------------------------------------------------------
# Concatenation, restriction, scaling
# -----------------------------------------------------------------------------

def test_concat_examples():
    z = cs.Concat(cs.ClosedSet(0.5, ((0.1, 0.2),)), cs.ClosedSet(0.5, ((0.3, 0.4),)))
    assert z.horizon == 1.0
    assert z.intervals == ((0.1, 0.2), (0.8, 0.9))
    assert cs.Concat(cs.Empty(0.5), cs.Empty(0.5)).empty
    merged = cs.Concat(cs.ClosedSet(0.5, ((0.4, 0.5),)), cs.ClosedSet(0.5, ((0.0, 0.1),)))
    assert merged.intervals == ((0.4, 0.6),)

def test_restrict_examples():
    z = cs.Restrict(cs.ClosedSet(1.0, ((0.1, 0.6),)), 0.25, 0.75)
    assert z.horizon == 0.5
    assert z.intervals == ((0.0, 0.35),)
    assert cs.Restrict(cs.Empty(1.0), 0.2, 0.4).empty
    assert cs.Restrict(cs.ClosedSet(1.0, ((0.2, 0.2),)), 0.3, 0.9).empty

@pytest.mark.parametrize("a, b", [(0.5, 0.5), (0.6, 0.4), (-0.1, 0.5), (0.2, 1.5)])
def test_restrict_rejects_bad_windows(a, b):
    with pytest.raises(InvalidWindowError):
        cs.Restrict(cs.ClosedSet(1.0, ((0.1, 0.6),)), a, b)

def test_scale_examples():
    z = cs.Scale(cs.ClosedSet(1.0, ((0.5, 1.0),)), 2.0)
    assert z.intervals == ((1.0, 2.0),)
    assert cs.Scale(cs.Empty(1.0), 3.0).empty

def test_dilate_maps_back_onto_horizon():
    z = cs.Dilate(cs.ClosedSet(0.25, ((0.05, 0.1),)), 0.25)
    assert z.horizon == 1.0
    assert z.intervals[0] == pytest.approx((0.2, 0.4))

def test_scale_keeps_horizon_point():
    z = cs.Scale(cs.ClosedSet(3.0, ((3.0, 3.0),)), 1.9000000000000001)
    assert z.intervals == ((1.9000000000000001, 1.9000000000000001),)
    z = cs.Scale(cs.ClosedSet(3.0, ((0.0, 1.0), (2.0, 3.0))), 1.9000000000000001)
    assert cs.Sup(z) <= z.horizon

def test_concat_merges_seam_after_rounding():
    # 1e-17 + 1.0 rounds to the seam
    z = cs.Concat(cs.ClosedSet(1.0, ((0.5, 1.0),)), cs.ClosedSet(1.0, ((1e-17, 0.5),)))
    assert z.intervals == ((0.5, 1.5),)
    z = cs.Concat(cs.ClosedSet(1.0, ((0.5, 0.75),)), cs.ClosedSet(1.0, ((0.0, 1e-17), (2e-17, 0.5))))
    assert z.intervals == ((0.5, 0.75), (1.0, 1.5))

@settings(max_examples = 200, deadline = None)
@given(edge_sets(), edge_sets())
def test_concat_at_edges(z1, z2):
    z = cs.Concat(z1, z2)
    assert z.horizon == z1.horizon + z2.horizon
    assert cs.Anchor(z) == 0.0
    assert cs.Sup(z) == z.horizon
    assert cs.Restrict(z, 0.0, z1.horizon) == z1

@settings(max_examples = 200, deadline = None)
@given(edge_sets(), st.floats(min_value = 1e-3, max_value = 1e3))
def test_scale_at_edges(z, newHorizon):
    scaled = cs.Scale(z, newHorizon)
    assert scaled.horizon == newHorizon
    assert cs.Anchor(scaled) == 0.0
    assert cs.Sup(scaled) == pytest.approx(newHorizon, rel = 1e-15)
    assert cs.Anchor(scaled) + cs.Diam(scaled) <= newHorizon

@settings(max_examples = 200, deadline = None)
@given(closed_sets(), closed_sets(), closed_sets())
def test_concat_associative(z1, z2, z3):
    left  = cs.Concat(cs.Concat(z1, z2), z3)
    right = cs.Concat(z1, cs.Concat(z2, z3))
    assert left.horizon == right.horizon
    assert left.intervals == right.intervals

@settings(max_examples = 200, deadline = None)
@given(closed_sets(interior = True), closed_sets(interior = True))
def test_restrict_inverts_concat(z1, z2):
    z = cs.Concat(z1, z2)
    s = z1.horizon
    assert cs.Restrict(z, 0.0, s) == z1
    assert cs.Restrict(z, s, s + z2.horizon) == z2
    if not z1.empty:
        assert cs.Anchor(z) == cs.Anchor(z1)

@settings(max_examples = 200, deadline = None)
@given(closed_sets())
def test_anchor_diam_within_horizon(z):
    assert cs.Diam(z) <= z.horizon
    assert cs.Anchor(z) + cs.Diam(z) <= z.horizon

@settings(max_examples = 100, deadline = None)
@given(closed_sets())
def test_scale_round_trip(z):
    back = cs.Scale(cs.Scale(z, 2.0 * z.horizon), z.horizon)
    for (lo, hi), (blo, bhi) in zip(z.intervals, back.intervals):
        assert blo == pytest.approx(lo, abs = 2.0 * math.ulp(z.horizon))
        assert bhi == pytest.approx(hi, abs = 2.0 * math.ulp(z.horizon))

# -----------------------------------------------------------------------------
# Text format
# -----------------------------------------------------------------------------

def test_format_examples():
    assert cs.FormatClosedSet(cs.Empty(1.0)) == "t=1;EMPTY"
    assert cs.FormatClosedSet(cs.ClosedSet(1.0, ((0.5, 0.75),))) == "t=1;[0.5,0.75]"

@settings(max_examples = 100, deadline = None)
@given(closed_sets())
def test_parse_inverts_format(z):
    assert cs.ParseClosedSet(cs.FormatClosedSet(z)) == z

def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        cs.ParseClosedSet("[0.1,0.2]")
    with pytest.raises(DomainError):
        cs.ParseClosedSet("t=1;(0.1,0.2)")

# -----------------------------------------------------------------------------
# Marked point sets
# -----------------------------------------------------------------------------

def test_marked_point_set_ops():
    z1 = cs.MarkedPointSet(0.5, ((0.1, 0), (0.3, 1)))
    z2 = cs.MarkedPointSet(0.5, ((0.2, 1),))
    z  = cs.ConcatMarked(z1, z2)
    assert z.horizon == 1.0
    assert z.times == (0.1, 0.3, 0.7)
    assert cs.MarkCounts(z, 2) == [1, 2]
    right = cs.RestrictMarked(z, 0.5, 1.0)
    assert right.times == pytest.approx((0.2,))
    assert right.marks == (1,)
    assert cs.SliceMark(z, 1).intervals == ((0.3, 0.3), (0.7, 0.7))

def test_marked_point_set_validation():
    with pytest.raises(DomainError):
        cs.MarkedPointSet(1.0, ((0.0, 0),))
    with pytest.raises(DomainError):
        cs.MarkedPointSet(1.0, ((0.5, 0), (0.4, 0)))
    with pytest.raises(DomainError):
        cs.MarkedPointSet(1.0, ((1.0, 0),))

# end =========================================================================
