"""Stage 1: score hull-pair segments and pick the point deepest in the void.

Every unordered hull pair gets a voidness score (mean distance from the
segment to all non-hull points; lower means the segment more likely crosses
the void). The best segment is then sampled at k+1 uniform positions and the
clearance-maximizing sample becomes the starting point for stage 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import EmptyInterior
from .geom import Point2, PointCloud, Segment, convex_hull
from .triangulation import ClearanceField

START_POLICIES = ("all-pairs", "single-start", "random-start")


@dataclass(frozen=True)
class ScoredSegment:
    i: int  # smaller cloud id
    j: int  # larger cloud id
    segment: Segment
    mds: float


@dataclass(frozen=True)
class LocatorConfig:
    start_policy: str = "all-pairs"
    start_vertex: int | None = None  # hull cloud id, single-start only
    start_seed: int | None = None  # random-start only
    top_m: int = 10

    def __post_init__(self):
        if self.start_policy not in START_POLICIES:
            raise ValueError(f"unknown start policy {self.start_policy!r}")
        if self.start_policy == "single-start" and self.start_vertex is None:
            raise ValueError("single-start needs a start vertex")
        if self.start_policy == "random-start" and self.start_seed is None:
            raise ValueError("random-start needs a seed")
        if self.top_m < 1:
            raise ValueError("top_m must be >= 1")


def _score_key(s: ScoredSegment):
    return (s.mds, s.i, s.j)


def interior_points(cloud: PointCloud, hull) -> list[int]:
    """All cloud identifiers not on the hull, ascending."""
    on_hull = set(hull)
    interior = [i for i in range(len(cloud)) if i not in on_hull]
    if not interior:
        raise EmptyInterior("every point is a hull vertex")
    return interior


def mds_score(segment: Segment, interior, cloud: PointCloud) -> float:
    """Mean distance from the segment to every interior point."""
    idx = sorted(interior)
    if not idx:
        raise EmptyInterior("no interior points to score against")
    segs = np.array(
        [[segment.a.x, segment.a.y, segment.b.x, segment.b.y]], dtype=np.float64
    )
    ids = np.asarray(idx, dtype=np.intp)
    total = _kernels.impl.mds_sums(
        segs,
        np.ascontiguousarray(cloud.xs[ids]),
        np.ascontiguousarray(cloud.ys[ids]),
    )[0]
    return float(total) / len(idx)


def _policy_pairs(hull, config: LocatorConfig) -> list[tuple[int, int]]:
    ids = sorted(hull)
    if config.start_policy == "all-pairs":
        return list(combinations(ids, 2))
    if config.start_policy == "single-start":
        v = config.start_vertex
        if v not in set(hull):
            raise ValueError(f"start vertex {v} is not a hull vertex")
    else:  # random-start: pick an index into the ccw hull order
        rng = random.Random(config.start_seed)
        v = hull[rng.randrange(len(hull))]
    return [(min(v, u), max(v, u)) for u in ids if u != v]


def enumerate_hull_segments(
    hull, cloud: PointCloud, config: LocatorConfig | None = None, _interior=None
) -> list[ScoredSegment]:
    """Score the policy's hull pairs; ascending by (mds, (i, j))."""
    config = config or LocatorConfig()
    interior = interior_points(cloud, hull) if _interior is None else list(_interior)
    if not interior:
        raise EmptyInterior("no interior points to score against")
    pairs = _policy_pairs(hull, config)
    segs = np.empty((len(pairs), 4), dtype=np.float64)
    pts = cloud.coords
    for r, (i, j) in enumerate(pairs):
        segs[r, 0] = pts[i, 0]
        segs[r, 1] = pts[i, 1]
        segs[r, 2] = pts[j, 0]
        segs[r, 3] = pts[j, 1]
    ids = np.asarray(sorted(interior), dtype=np.intp)
    sums = _kernels.impl.mds_sums(
        segs,
        np.ascontiguousarray(cloud.xs[ids]),
        np.ascontiguousarray(cloud.ys[ids]),
    )
    scored = [
        ScoredSegment(i, j, Segment(cloud[i], cloud[j]), float(s) / len(ids))
        for (i, j), s in zip(pairs, sums)
    ]
    scored.sort(key=_score_key)
    return scored


def best_segment(scored) -> ScoredSegment:
    """Minimum-score entry; ties go to the smaller (i, j)."""
    if not scored:
        raise ValueError("no scored segments")
    return min(scored, key=_score_key)


@dataclass(frozen=True)
class DvPoint:
    point: Point2
    clearance: float
    step_index: int


def dv_point(best: ScoredSegment, field: ClearanceField, k: int) -> DvPoint:
    """Clearance-maximizing sample among the k+1 uniform positions s/k along
    the best segment; ties prefer the sample nearest t=0.5, then smaller s."""
    if k < 3:
        raise ValueError("k must be >= 3")
    a = best.segment.a
    b = best.segment.b
    winner = None
    for s in range(k + 1):
        t = s / k
        p = Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        c = field.clearance(p)
        key = (-c, abs(t - 0.5), s)
        if winner is None or key < winner[0]:
            winner = (key, p, c, s)
    return DvPoint(winner[1], winner[2], winner[3])


@dataclass(frozen=True)
class VoidLocation:
    """Everything stage 1 hands to stage 2 and the report."""

    hull: tuple[int, ...]
    interior: tuple[int, ...]
    scored: tuple[ScoredSegment, ...]
    best: ScoredSegment
    dv: DvPoint


def locate_void(
    cloud: PointCloud,
    field: ClearanceField,
    config: LocatorConfig | None = None,
    k: int = 3,
) -> VoidLocation:
    hull = convex_hull(cloud)
    interior = interior_points(cloud, hull)
    scored = enumerate_hull_segments(hull, cloud, config, _interior=interior)
    best = best_segment(scored)
    dv = dv_point(best, field, k)
    return VoidLocation(tuple(hull), tuple(interior), tuple(scored), best, dv)
