import cmath
import json
import math
import random

import numpy as np
import pytest

from hypbound import DomainSpec, ObstacleDisk, Segment, SequenceSpec, SinglePoint


def battery_domain(delta: float, ratio: float, count: int = 60) -> DomainSpec:
    """Point-sequence domain on the positive real axis."""
    return DomainSpec.build([], SequenceSpec.geometric(delta, ratio, count))


def battery_json(delta: float, ratio: float, count: int = 60) -> dict:
    return {
        "primitives": [],
        "sequence": {"type": "geometric", "delta": delta, "ratio": ratio, "count": count},
    }


def write_spec(tmp_path, obj, name="spec.json") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def mixed_domain() -> DomainSpec:
    """Segment, disk and a 12-point sequence in one domain."""
    return DomainSpec.build(
        [
            Segment(complex(0.3, 0.3), complex(0.5, 0.2)),
            ObstacleDisk(complex(-0.4, 0.1), 0.12),
        ],
        SequenceSpec.geometric(0.25, 0.5, 12),
    )


def boundary_points(spec: DomainSpec, count: int, seed: int) -> list[complex]:
    """Random points on the boundary of G, drawn across all primitives."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        prim = spec.primitives[i % len(spec.primitives)]
        if isinstance(prim, SinglePoint):
            out.append(prim.p)
        elif isinstance(prim, Segment):
            out.append(prim.p + rng.random() * (prim.q - prim.p))
        elif isinstance(prim, ObstacleDisk):
            out.append(prim.center + cmath.rect(prim.radius, rng.uniform(0, math.tau)))
        else:
            out.append(cmath.rect(1.0, rng.uniform(0, math.tau)))
    return out


def primitive_samples(prim, m: int) -> np.ndarray:
    """Dense sample of one primitive as a complex array, endpoints included."""
    if isinstance(prim, SinglePoint):
        return np.array([prim.p])
    if isinstance(prim, Segment):
        t = np.linspace(0.0, 1.0, m)
        return prim.p + t * (prim.q - prim.p)
    if isinstance(prim, ObstacleDisk):
        th = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
        return prim.center + prim.radius * np.exp(1j * th)
    th = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
    return np.exp(1j * th)


def boundary_cloud(spec: DomainSpec, m: int) -> np.ndarray:
    """About m samples over the whole boundary of G."""
    curves = sum(1 for p in spec.primitives if not isinstance(p, SinglePoint))
    per = max(m // max(curves, 1), 8)
    chunks = [
        primitive_samples(p, 1 if isinstance(p, SinglePoint) else per)
        for p in spec.primitives
    ]
    return np.concatenate(chunks)


@pytest.fixture
def std_domain():
    return battery_domain(0.5, 0.5)
