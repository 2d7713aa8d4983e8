"""Seeded synthetic ensembles: jittered circle shells, single or offset pair.

Reproducibility contract: the stream is CPython's ``random.Random`` (Mersenne
Twister) seeded with the integer seed. Single circle draws, per point, u1 for
the angle (theta = 2*pi*u1) then u2 for the radial offset (r = radius +
jitter*(2*u2 - 1)). Dual circles draw, per candidate, u1 for the side (left
if u1 < 0.5), u2 for the angle, u3 for the radial offset; candidates closer
than radius - jitter to the other circle's center are rejected and redrawn.
Known-answer tests pin both streams.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InvalidSpec
from .geom import PointCloud

KINDS = ("single-circle", "dual-circles")


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    n: int = 200
    radius: float = 1.0
    jitter: float = 0.05
    offset_factor: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.n < 3:
            raise InvalidSpec("n must be >= 3")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InvalidSpec("radius must be positive and finite")
        if not (0 <= self.jitter < self.radius):
            raise InvalidSpec("jitter must satisfy 0 <= jitter < radius")
        if not (0 <= self.offset_factor < 2):
            raise InvalidSpec("offset_factor must satisfy 0 <= offset_factor < 2")
        if self.seed < 0 or self.seed >= 2**64:
            raise InvalidSpec("seed must be an unsigned 64-bit integer")


def generate(spec: EnsembleSpec) -> PointCloud:
    if spec.kind == "single-circle":
        return gen_single_circle(spec)
    return gen_dual_circles(spec)


def gen_single_circle(spec: EnsembleSpec) -> PointCloud:
    """n points at uniform angles on a circle with uniform radial jitter."""
    if spec.kind != "single-circle":
        raise InvalidSpec(f"expected single-circle spec, got {spec.kind!r}")
    rng = random.Random(spec.seed)
    pts = []
    for _ in range(spec.n):
        theta = 2.0 * math.pi * rng.random()
        r = spec.radius + spec.jitter * (2.0 * rng.random() - 1.0)
        pts.append((r * math.cos(theta), r * math.sin(theta)))
    return PointCloud(pts)


def gen_dual_circles(spec: EnsembleSpec, max_attempts: int | None = None) -> PointCloud:
    """n points on two congruent jittered circles whose centers sit
    offset_factor*radius apart; candidates inside the other circle's inner
    boundary are rejected, leaving the union interior empty."""
    if spec.kind != "dual-circles":
        raise InvalidSpec(f"expected dual-circles spec, got {spec.kind!r}")
    rng = random.Random(spec.seed)
    half = spec.offset_factor * spec.radius / 2.0
    centers = (-half, half)
    inner = spec.radius - spec.jitter
    budget = 100 * spec.n if max_attempts is None else max_attempts
    pts = []
    attempts = 0
    while len(pts) < spec.n:
        attempts += 1
        if attempts > budget:
            raise InvalidSpec(
                f"rejection sampling exceeded {budget} attempts "
                f"({len(pts)}/{spec.n} accepted)"
            )
        side = 0 if rng.random() < 0.5 else 1
        theta = 2.0 * math.pi * rng.random()
        r = spec.radius + spec.jitter * (2.0 * rng.random() - 1.0)
        x = centers[side] + r * math.cos(theta)
        y = r * math.sin(theta)
        dx = x - centers[1 - side]
        if math.sqrt(dx * dx + y * y) < inner:
            continue
        pts.append((x, y))
    return PointCloud(pts)
