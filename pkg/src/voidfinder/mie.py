"""Stage 2: grow the void envelope by expanding-circle sweeps.

A sweep slides a center along a segment in k+1 uniform steps; at each step
an imaginary circle grows until it first touches a point that is neither a
member nor already found, i.e. a nearest-non-excluded query (with a tie
tolerance). Orders repeat the sweep over all member pairs until an order
adds nothing; the members, sorted by angle around their centroid, form the
void polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import TooFewVertices
from .geom import DEFAULT_BOUNDARY_TOL, PointCloud, Polygon, Segment, polygon_is_simple
from .locator import DvPoint, ScoredSegment, VoidLocation, _score_key

INITIAL_SCOPES = ("best-only", "all-from-best-endpoint", "top-m")


@dataclass(frozen=True)
class SweepConfig:
    k: int
    tie_tol: float = 1e-9
    max_order: int | None = None  # None caps at the cloud size

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("k must be >= 3")
        if self.tie_tol < 0:
            raise ValueError("tie_tol must be >= 0")
        if self.max_order is not None and self.max_order < 1:
            raise ValueError("max_order must be >= 1")


@dataclass(frozen=True)
class MieState:
    """Envelope members in insertion order plus the per-order size history."""

    members: tuple[int, ...]
    order: int
    history: tuple[tuple[int, int], ...]  # (order, member count after it)


@dataclass(frozen=True)
class VoidResult:
    polygon: Polygon
    polygon_ids: tuple[int, ...]
    converged: bool
    orders_used: int
    history: tuple[tuple[int, int], ...]
    members: tuple[int, ...]
    simple: bool
    interior_violations: int


def _sweep_mask(ax, ay, bx, by, cloud, mask, cfg) -> list[int]:
    """Sweep one segment, mutating ``mask`` with finds; discovery order."""
    xs = cloud.xs
    ys = cloud.ys
    found: list[int] = []
    nearest = _kernels.impl.nearest_masked
    k = cfg.k
    for s in range(k + 1):
        t = s / k
        res = nearest(
            ax + t * (bx - ax), ay + t * (by - ay), xs, ys, mask, cfg.tie_tol
        )
        if res is None:
            break  # everything excluded; later centers see the same mask
        for i in res[1]:
            mask[i] = 1
            found.append(int(i))
    return found


def _member_mask(members, n) -> np.ndarray:
    mask = np.zeros(n, dtype=np.uint8)
    if members:
        mask[np.fromiter(members, dtype=np.int64)] = 1
    return mask


def sweep_segment(segment: Segment, cloud: PointCloud, excluded, cfg: SweepConfig):
    """Newly found identifiers from one segment sweep, ascending."""
    mask = _member_mask(excluded, len(cloud))
    found = _sweep_mask(
        segment.a.x, segment.a.y, segment.b.x, segment.b.y, cloud, mask, cfg
    )
    return tuple(sorted(found))


def initial_mie(
    scored,
    dv: DvPoint | None,
    cloud: PointCloud,
    cfg: SweepConfig,
    scope: str = "all-from-best-endpoint",
    top_m: int = 10,
) -> MieState:
    """Seed the member set (order 1) by sweeping the in-scope segments.

    best-only sweeps just the best segment; all-from-best-endpoint (default)
    sweeps every scored segment sharing the best segment's smaller endpoint;
    top-m sweeps the top_m best. Segments are swept best-score-first and each
    segment's finds are appended in ascending identifier order.
    """
    scored = sorted(scored, key=_score_key)
    if not scored:
        raise ValueError("no scored segments to sweep")
    if scope not in INITIAL_SCOPES:
        raise ValueError(f"unknown initial scope {scope!r}")
    best = scored[0]
    if scope == "best-only":
        chosen = [best]
    elif scope == "top-m":
        chosen = scored[:top_m]
    else:
        chosen = [s for s in scored if s.i == best.i or s.j == best.i]
    mask = _member_mask((), len(cloud))
    members: list[int] = []
    for seg in chosen:
        found = _sweep_mask(
            seg.segment.a.x,
            seg.segment.a.y,
            seg.segment.b.x,
            seg.segment.b.y,
            cloud,
            mask,
            cfg,
        )
        members.extend(sorted(found))
    return MieState(tuple(members), 1, ((1, len(members)),))


def grow_order(state: MieState, cloud: PointCloud, cfg: SweepConfig) -> MieState:
    """One growth order: sweep all member pairs in (i, j) order, excluding the
    order-start members plus everything found earlier in the order."""
    if len(state.members) < 2:
        raise ValueError("growth needs at least 2 members")
    n = len(cloud)
    pts = cloud.coords
    mask = _member_mask(state.members, n)
    remaining = n - len(state.members)
    ms = sorted(state.members)
    new_members: list[int] = []
    for a_pos in range(len(ms)):
        if remaining == 0:
            break
        i = ms[a_pos]
        ax = pts[i, 0]
        ay = pts[i, 1]
        for b_pos in range(a_pos + 1, len(ms)):
            if remaining == 0:
                break
            j = ms[b_pos]
            found = _sweep_mask(ax, ay, pts[j, 0], pts[j, 1], cloud, mask, cfg)
            if found:
                new_members.extend(sorted(found))
                remaining -= len(found)
    members = state.members + tuple(new_members)
    order = state.order + 1
    return MieState(members, order, state.history + ((order, len(members)),))


def run_to_convergence(
    cloud: PointCloud,
    location: VoidLocation,
    cfg: SweepConfig,
    scope: str = "all-from-best-endpoint",
    top_m: int = 10,
) -> VoidResult:
    """Grow order by order until an order adds no members (converged) or the
    order cap is hit (not converged), then assemble the polygon."""
    state = initial_mie(location.scored, location.dv, cloud, cfg, scope, top_m)
    cap = cfg.max_order if cfg.max_order is not None else len(cloud)
    converged = False
    while state.order < cap:
        grown = grow_order(state, cloud, cfg)
        stalled = len(grown.members) == len(state.members)
        state = grown
        if stalled:
            converged = True
            break
    assembled = assemble_polygon(state, cloud)
    return VoidResult(
        polygon=assembled.polygon,
        polygon_ids=assembled.vertex_ids,
        converged=converged,
        orders_used=state.order,
        history=state.history,
        members=state.members,
        simple=assembled.simple,
        interior_violations=assembled.interior_violations,
    )


@dataclass(frozen=True)
class AssembledPolygon:
    polygon: Polygon
    vertex_ids: tuple[int, ...]
    simple: bool
    interior_violations: int


def assemble_polygon(state: MieState, cloud: PointCloud) -> AssembledPolygon:
    """Members ordered by polar angle around their centroid (ties by radius,
    then identifier). Simplicity is reported, not enforced; the violation
    count is the number of cloud points strictly inside the polygon."""
    members = state.members
    if len(members) < 3:
        raise TooFewVertices(f"need >= 3 members, have {len(members)}")
    pts = cloud.coords
    sel = np.fromiter(members, dtype=np.int64)
    cx = float(pts[sel, 0].mean())
    cy = float(pts[sel, 1].mean())

    def sort_key(i):
        dx = pts[i, 0] - cx
        dy = pts[i, 1] - cy
        return (math.atan2(dy, dx), dx * dx + dy * dy, i)

    ordered = tuple(sorted(members, key=sort_key))
    polygon = Polygon([cloud[i] for i in ordered])
    simple = polygon_is_simple(polygon)
    codes = _kernels.impl.pip_classify(
        cloud.xs, cloud.ys, polygon.coords(), DEFAULT_BOUNDARY_TOL
    )
    return AssembledPolygon(polygon, ordered, simple, int((codes == 1).sum()))
