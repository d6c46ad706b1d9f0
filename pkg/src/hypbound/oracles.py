"""Closed-form hyperbolic densities on reference domains.

These serve as ground truth when auditing the two-sided bounds: the unit
disk and the punctured unit disk both have elementary density formulas
under the 1/(1 - |z|^2) normalization.
"""

from __future__ import annotations

import math
from enum import Enum

from .geometry import DomainSpec


class OutOfDomain(ValueError):
    """The query point is outside the oracle's domain."""


def disk_density(z: complex) -> float:
    """Density of the hyperbolic metric of the unit disk: 1/(1 - |z|^2)."""
    r = abs(z)
    if r >= 1.0:
        raise OutOfDomain(f"|z| = {r} is not inside the unit disk")
    return 1.0 / (1.0 - r * r)


def punctured_disk_density(z: complex) -> float:
    """Density of the hyperbolic metric of the punctured unit disk.

    Equals 1 / (2 |z| ln(1/|z|)); the covering map w -> e^w from the left
    half-plane transports the half-plane density onto this formula.
    """
    r = abs(z)
    if r <= 0.0 or r >= 1.0:
        raise OutOfDomain(f"|z| = {r} is not inside the punctured unit disk")
    return 1.0 / (2.0 * r * math.log(1.0 / r))


class OracleDomain(Enum):
    UNIT_DISK = "disk"
    PUNCTURED_DISK = "punctured"


def oracle_density(kind: OracleDomain, z: complex) -> float:
    if kind is OracleDomain.UNIT_DISK:
        return disk_density(z)
    return punctured_disk_density(z)


def oracle_fixture(kind: OracleDomain) -> DomainSpec:
    """Obstacle-free and origin-only fixtures matching the oracle domains."""
    if kind is OracleDomain.UNIT_DISK:
        return DomainSpec.bare()
    return DomainSpec.bare(include_origin=True)
