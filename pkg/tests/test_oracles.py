"""Ground-truth density formulas, validated independently before any other
test relies on them.  The punctured-disk formula is cross-checked against a
numeric covering-map pullback with finite-difference derivatives, so no hand
algebra is trusted."""

import cmath
import math
import random

import pytest

from hypbound import OutOfDomain, disk_density, punctured_disk_density
from hypbound.oracles import OracleDomain, oracle_density, oracle_fixture


def density_by_covering_pullback(z: complex, h: float = 1e-6) -> float:
    """Punctured-disk density computed through the universal cover w -> e^w.

    The left half-plane carries the pullback of the disk density through the
    Mobius map m(w) = (1+w)/(1-w); both derivative magnitudes come from
    central differences, keeping this oracle independent of the closed form.
    """
    w = cmath.log(z)
    assert w.real < 0.0

    def m(u: complex) -> complex:
        return (1.0 + u) / (1.0 - u)

    dm = abs((m(w + h) - m(w - h)) / (2.0 * h))
    lam_left = disk_density(m(w)) * dm
    dF = abs((cmath.exp(w + h) - cmath.exp(w - h)) / (2.0 * h))
    return lam_left / dF


class TestPuncturedFormulaObligation:
    def test_covering_pullback_at_twenty_points(self):
        rng = random.Random(42)
        for _ in range(20):
            z = cmath.rect(rng.uniform(0.02, 0.95), rng.uniform(-math.pi, math.pi))
            lam = punctured_disk_density(z)
            ref = density_by_covering_pullback(z)
            assert abs(lam - ref) <= 1e-8 * max(1.0, abs(ref))


class TestDiskDensity:
    def test_center(self):
        assert disk_density(0j) == 1.0

    def test_half(self):
        assert abs(disk_density(0.5 + 0j) - 4.0 / 3.0) < 1e-15

    def test_rotation_invariant(self):
        rng = random.Random(7)
        for _ in range(50):
            z = cmath.rect(rng.uniform(0.0, 0.99), rng.uniform(-math.pi, math.pi))
            rot = cmath.rect(1.0, rng.uniform(-math.pi, math.pi))
            assert abs(disk_density(z) - disk_density(z * rot)) <= 1e-12 * disk_density(z)

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            disk_density(1.0 + 0j)
        with pytest.raises(OutOfDomain):
            disk_density(2.0 + 1.0j)


class TestPuncturedDensity:
    def test_value_at_half(self):
        assert abs(punctured_disk_density(0.5 + 0j) - 1.4426950408889634) < 1e-12

    def test_value_at_inverse_e(self):
        # at |z| = 1/e the formula collapses to e/2
        assert abs(punctured_disk_density(complex(1.0 / math.e, 0.0)) - math.e / 2.0) < 1e-12

    def test_rotation_invariant(self):
        rng = random.Random(11)
        for _ in range(50):
            z = cmath.rect(rng.uniform(0.01, 0.99), rng.uniform(-math.pi, math.pi))
            rot = cmath.rect(1.0, rng.uniform(-math.pi, math.pi))
            lam = punctured_disk_density(z)
            assert abs(lam - punctured_disk_density(z * rot)) <= 1e-12 * lam

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            punctured_disk_density(0j)
        with pytest.raises(OutOfDomain):
            punctured_disk_density(1.0 + 0j)

    def test_dominates_disk_density(self):
        # removing the origin shrinks the domain, so the density can only grow
        rng = random.Random(13)
        for _ in range(500):
            z = cmath.rect(rng.uniform(0.01, 0.99), rng.uniform(-math.pi, math.pi))
            assert punctured_disk_density(z) >= disk_density(z)

    def test_edge_behavior_near_circle(self):
        # near |z| = 1 the density tracks 1/(2(1 - |z|)) and exceeds the disk value
        z = complex(0.99, 0.0)
        lam = punctured_disk_density(z)
        assert abs(lam / (1.0 / (2.0 * (1.0 - 0.99))) - 1.0) < 0.01
        assert lam > disk_density(z)


class TestOracleFixtures:
    def test_kinds_round_trip(self):
        assert OracleDomain("disk") is OracleDomain.UNIT_DISK
        assert OracleDomain("punctured") is OracleDomain.PUNCTURED_DISK

    def test_fixture_shapes(self):
        disk = oracle_fixture(OracleDomain.UNIT_DISK)
        punct = oracle_fixture(OracleDomain.PUNCTURED_DISK)
        assert len(disk.primitives) == 1
        assert len(punct.primitives) == 2
        assert oracle_density(OracleDomain.UNIT_DISK, 0j) == 1.0
        assert oracle_density(OracleDomain.PUNCTURED_DISK, 0.5 + 0j) == punctured_disk_density(0.5)
