"""Two-sided hyperbolic density bounds from boundary data.

For a plane domain, the density of the hyperbolic metric (normalized so the
unit disk has density 1/(1 - |z|^2)) is pinned between two explicit
expressions in d, the distance from z to the boundary, and L, the log-scale
distance from d to the set of achievable distances |a - b| where a is a
nearest boundary point and b ranges over the whole boundary:

    1 / (2*sqrt(2) * d * (kappa + L))  <=  density  <=  (kappa + pi/4) / (d * (kappa + L))

with the absolute constant kappa = 4 + ln(3 + 2*sqrt(2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .geometry import DistanceSet, DomainSpec, distance_set, nearest_boundary

KAPPA = 4.0 + math.log(3.0 + 2.0 * math.sqrt(2.0))
TWO_ROOT_TWO = 2.0 * math.sqrt(2.0)


class EmptySet(ValueError):
    """Every achievable-distance interval is degenerate at zero."""


def kappa() -> float:
    """Absolute constant of the two-sided density estimate."""
    return KAPPA


@dataclass(frozen=True)
class BPBounds:
    """L with its witnesses; lower/upper filled in by bp_bounds."""

    L: float
    d: float
    witness_a: complex
    witness_s: float
    lower: float | None = None
    upper: float | None = None


def log_distance_to_set(d: float, s: DistanceSet) -> tuple[float, float]:
    """Log-scale distance from d > 0 to the achievable-distance set.

    Returns (value, witness_s): witness_s is the clamp of d into the
    minimizing interval, so value = |ln(d / witness_s)|.  Intervals
    degenerate at 0 are skipped; they correspond to the base point itself.
    """
    if d <= 0.0:
        raise ValueError("d must be positive")
    best: float | None = None
    best_s = 0.0
    for lo, hi in s.intervals:
        if hi <= 0.0:
            continue
        if d < lo:
            val, sd = math.log(lo / d), lo
        elif d > hi:
            val, sd = math.log(d / hi), hi
        else:
            val, sd = 0.0, d
        if best is None or val < best:
            best, best_s = val, sd
    if best is None:
        raise EmptySet("no positive achievable distances from the base point")
    return best, best_s


def compute_L(spec: DomainSpec, z: complex) -> BPBounds:
    """L(z): the minimum over nearest-boundary witnesses a of the log-scale
    distance from d to the achievable-distance set of a.  Bounds are left
    unset; bp_bounds fills them."""
    nb = nearest_boundary(spec, z)
    best: tuple[float, complex, float] | None = None
    for _, a in nb.witnesses:
        val, sd = log_distance_to_set(nb.d, distance_set(spec, a))
        if best is None or val < best[0]:
            best = (val, a, sd)
    val, wa, ws = best
    return BPBounds(L=val, d=nb.d, witness_a=wa, witness_s=ws)


def bp_bounds(spec: DomainSpec, z: complex) -> BPBounds:
    """Two-sided density bounds at z, with L and its witnesses."""
    r = compute_L(spec, z)
    denom = r.d * (KAPPA + r.L)
    lower = 1.0 / (TWO_ROOT_TWO * denom)
    upper = (KAPPA + math.pi / 4.0) / denom
    assert lower <= upper
    return replace(r, lower=lower, upper=upper)
