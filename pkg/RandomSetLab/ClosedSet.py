# =============================================================================
## @file    ClosedSet.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Exact finite representations of closed subsets
#    of [0,t] (and of marked point sets on (0,t) x L)
#    plus the anchor/spread maps and the restriction,
#    concatenation and scaling calculus.
# =============================================================================

from dataclasses import dataclass
from dataclasses import field
import re

from RandomSetLab.Errors import DomainError
from RandomSetLab.Errors import InvalidWindowError

# -----------------------------------------------------------------------------
# Closed sets
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class ClosedSet:
    """ClosedSet

    Finite union of disjoint closed intervals in
    [0, horizon]. Points are degenerate intervals
    and an empty tuple is the empty set.

    Members:
      horizon:   right end t > 0 of the ambient window
      intervals: sorted tuple of (lo, hi) pairs
    """
    horizon   : float
    intervals : tuple = field(default = ())

    def __post_init__(self):
        ivs = tuple((float(lo), float(hi)) for lo, hi in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        if not self.horizon > 0.0:
            raise DomainError(f"horizon must be positive, got {self.horizon}")
        prevHi = None
        for lo, hi in ivs:
            if not (0.0 <= lo <= hi <= self.horizon):
                raise DomainError(f"interval [{lo}, {hi}] outside [0, {self.horizon}]")
            if prevHi is not None and not prevHi < lo:
                raise DomainError(f"intervals overlap or are unsorted near {lo}")
            prevHi = hi

    @property
    def empty(self):
        return len(self.intervals) == 0

    def __len__(self):
        return len(self.intervals)

def Empty(horizon):
    """Empty

    Empty set over [0, horizon].
    """
    return ClosedSet(horizon)

def Anchor(z):
    """Anchor

    First point of the set, 0 for the
    empty set.

    Args:
      z: set to evaluate
    Returns:
      inf of z (or 0)
    """
    return 0.0 if z.empty else z.intervals[0][0]

def Sup(z):
    """Sup

    Last point of the set, 0 for the
    empty set.
    """
    return 0.0 if z.empty else z.intervals[-1][1]

def Diam(z):
    """Diam

    Spread sup - inf of the set, 0 for
    the empty set.

    Args:
      z: set to evaluate
    Returns:
      diameter of z
    """
    return Sup(z) - Anchor(z)

def _MergeTouching(ivs):
    """sorted intervals with those that touch after rounding merged"""
    merged = []
    for lo, hi in ivs:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
        else:
            merged.append((lo, hi))
    return tuple(merged)

def Concat(z1, z2):
    """Concat

    Concatenation z1 u (s + z2) on horizon s + t,
    where s and t are the horizons of z1 and z2.
    Intervals touching at the seam are merged.

    Args:
      z1: left set (horizon s)
      z2: right set (horizon t)
    Returns:
      concatenated set
    """
    s     = z1.horizon
    right = [(lo + s, hi + s) for lo, hi in z2.intervals]
    return ClosedSet(s + z2.horizon, _MergeTouching(list(z1.intervals) + right))

def Restrict(z, a, b):
    """Restrict

    Restriction-translate map: (z n [a, b]) - a
    on horizon b - a.

    Args:
      z: set to restrict
      a: left end of the window
      b: right end of the window
    Returns:
      restricted set
    """
    if not (0.0 <= a < b <= z.horizon):
        raise InvalidWindowError(f"window [{a}, {b}] not inside (0, {z.horizon}]")
    clipped = []
    for lo, hi in z.intervals:
        cLo = max(lo, a)
        cHi = min(hi, b)
        if cLo <= cHi:
            clipped.append((cLo - a, cHi - a))
    return ClosedSet(b - a, _MergeTouching(clipped))

def Scale(z, newHorizon):
    """Scale

    Scaling homeomorphism from [0, t] onto
    [0, newHorizon].

    Args:
      z:          set to scale
      newHorizon: target horizon
    Returns:
      scaled set
    """
    if not newHorizon > 0.0:
        raise DomainError(f"newHorizon must be positive, got {newHorizon}")
    ratio = newHorizon / z.horizon
    ivs   = [(min(lo * ratio, newHorizon), min(hi * ratio, newHorizon)) for lo, hi in z.intervals]
    return ClosedSet(newHorizon, _MergeTouching(ivs))

def Dilate(z, factor):
    """Dilate

    Time dilation: a set sampled on horizon
    factor * t is mapped back onto horizon t.
    """
    if not factor > 0.0:
        raise DomainError(f"dilation factor must be positive, got {factor}")
    return Scale(z, z.horizon / factor)

# -----------------------------------------------------------------------------
# Text serialization
# -----------------------------------------------------------------------------

_INTERVAL = re.compile(r"^\[([^,\]]+),([^\]]+)\]$")

def FormatFloat(x):
    return f"{x:.17g}"

def FormatClosedSet(z):
    """FormatClosedSet

    One-line text form "t=<h>;[lo,hi];..." or
    "t=<h>;EMPTY".
    """
    head = "t=" + FormatFloat(z.horizon)
    if z.empty:
        return head + ";EMPTY"
    body = ";".join(f"[{FormatFloat(lo)},{FormatFloat(hi)}]" for lo, hi in z.intervals)
    return head + ";" + body

def ParseClosedSet(line):
    """ParseClosedSet

    Inverse of FormatClosedSet.

    Args:
      line: text line to parse
    Returns:
      parsed ClosedSet
    """
    parts = line.strip().split(";")
    if not parts[0].startswith("t="):
        raise DomainError(f"missing horizon in '{line}'")
    horizon = float(parts[0][2:])
    if len(parts) == 2 and parts[1] == "EMPTY":
        return ClosedSet(horizon)
    ivs = []
    for part in parts[1:]:
        match = _INTERVAL.match(part)
        if match is None:
            raise DomainError(f"malformed interval '{part}'")
        ivs.append((float(match.group(1)), float(match.group(2))))
    return ClosedSet(horizon, tuple(ivs))

# -----------------------------------------------------------------------------
# Marked point sets
# -----------------------------------------------------------------------------

@dataclass(frozen = True)
class MarkedPointSet:
    """MarkedPointSet

    Atoms (time, mark) of a point process on
    (0, horizon) x L, with marks indexed 0..K-1.

    Members:
      horizon: right end of the time window
      atoms:   tuple of (time, mark), times strictly increasing
    """
    horizon : float
    atoms   : tuple = field(default = ())

    def __post_init__(self):
        atoms = tuple((float(r), int(m)) for r, m in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not self.horizon > 0.0:
            raise DomainError(f"horizon must be positive, got {self.horizon}")
        prev = 0.0
        for r, _ in atoms:
            if not (prev < r < self.horizon):
                raise DomainError(f"atom time {r} not strictly increasing inside (0, {self.horizon})")
            prev = r

    @property
    def count(self):
        return len(self.atoms)

    @property
    def times(self):
        return tuple(r for r, _ in self.atoms)

    @property
    def marks(self):
        return tuple(m for _, m in self.atoms)

def MarkCounts(z, nMarks):
    """MarkCounts

    Number of atoms carrying each mark.

    Args:
      z:      marked point set
      nMarks: number of marks K
    Returns:
      list of K counts
    """
    counts = [0] * nMarks
    for _, m in z.atoms:
        counts[m] += 1
    return counts

def ConcatMarked(z1, z2):
    """ConcatMarked

    Concatenation of marked point sets on
    horizon s + t.
    """
    s     = z1.horizon
    atoms = z1.atoms + tuple((r + s, m) for r, m in z2.atoms)
    return MarkedPointSet(s + z2.horizon, atoms)

def RestrictMarked(z, a, b):
    """RestrictMarked

    Atoms with time in (a, b), translated by -a.
    """
    if not (0.0 <= a < b <= z.horizon):
        raise InvalidWindowError(f"window [{a}, {b}] not inside (0, {z.horizon}]")
    atoms = tuple((r - a, m) for r, m in z.atoms if a < r < b)
    return MarkedPointSet(b - a, atoms)

def SliceMark(z, mark = None):
    """SliceMark

    Support of the atoms (optionally of one mark)
    as a ClosedSet of degenerate intervals.
    """
    times = [r for r, m in z.atoms if mark is None or m == mark]
    return ClosedSet(z.horizon, tuple((r, r) for r in times))

# end =========================================================================
