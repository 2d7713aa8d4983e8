"""2D primitives: points, clouds, segments, polygons, and their measures.

All predicates route through the sign-exact tests in ``predicates``; metric
computations (distances, areas, circumcircles) use plain binary64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateInput, NonFiniteCoordinate
from .predicates import orient as _orient_raw

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"

DEFAULT_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinate(f"non-finite coordinate ({self.x}, {self.y})")


@dataclass(frozen=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self):
        if self.a.x == self.b.x and self.a.y == self.b.y:
            raise DegenerateInput("zero-length segment")


class Polygon:
    """Ordered vertex ring, implicitly closed (last connects to first)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point2]):
        verts = tuple(vertices)
        if len(verts) < 3:
            raise DegenerateInput("polygon needs at least 3 vertices")
        for u, v in zip(verts, verts[1:] + verts[:1]):
            if u.x == v.x and u.y == v.y:
                raise DegenerateInput("consecutive polygon vertices coincide")
        self.vertices = verts

    def __len__(self):
        return len(self.vertices)

    def coords(self) -> np.ndarray:
        return np.array([(v.x, v.y) for v in self.vertices], dtype=np.float64)


class PointCloud:
    """Immutable indexed collection of 2D points; index = stable identifier."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable):
        arr = np.array(coords, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("expected an (n, 2) array of coordinates")
        if arr.shape[0] < 1:
            raise ValueError("point cloud is empty")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteCoordinate("cloud contains non-finite coordinates")
        arr.setflags(write=False)
        self._coords = arr

    def __len__(self) -> int:
        return self._coords.shape[0]

    def __getitem__(self, i: int) -> Point2:
        x, y = self._coords[i]
        return Point2(float(x), float(y))

    @property
    def coords(self) -> np.ndarray:
        """Read-only (n, 2) float64 view of the coordinates."""
        return self._coords

    @property
    def xs(self) -> np.ndarray:
        return self._coords[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self._coords[:, 1]


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """+1 if c is strictly left of the directed line a->b, -1 right, 0 collinear."""
    return _orient_raw(a.x, a.y, b.x, b.y, c.x, c.y)


def point_segment_distance(p: Point2, s: Segment) -> float:
    return _seg_dist(p.x, p.y, s.a.x, s.a.y, s.b.x, s.b.y)


def _seg_dist(px, py, ax, ay, bx, by) -> float:
    # Shared closed-form: perpendicular foot clamped to the segment. The
    # kernels implement the identical expression so results match bit for bit.
    dx = bx - ax
    dy = by - ay
    t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    ex = ax + t * dx - px
    ey = ay + t * dy - py
    return math.sqrt(ex * ex + ey * ey)


def convex_hull(cloud: PointCloud) -> list[int]:
    """Identifiers of strict hull vertices in counterclockwise order.

    Collinear boundary points are dropped. Raises DegenerateInput when all
    points are collinear.
    """
    n = len(cloud)
    if n < 3:
        raise DegenerateInput("need at least 3 points")
    pts = cloud.coords
    order = sorted(range(n), key=lambda i: (pts[i, 0], pts[i, 1]))

    def build(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2:
                a, b = chain[-2], chain[-1]
                if (
                    _orient_raw(
                        pts[a, 0], pts[a, 1], pts[b, 0], pts[b, 1], pts[i, 0], pts[i, 1]
                    )
                    <= 0
                ):
                    chain.pop()
                else:
                    break
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return hull


def polygon_area(poly: Polygon) -> float:
    """Absolute shoelace area."""
    verts = poly.vertices
    acc = 0.0
    for u, v in zip(verts, verts[1:] + verts[:1]):
        acc += u.x * v.y - v.x * u.y
    return abs(acc) * 0.5


def circumcircle(a: Point2, b: Point2, c: Point2) -> tuple[Point2, float]:
    """Center and radius of the unique circle through three non-collinear points."""
    if orient(a, b, c) == 0:
        raise DegenerateInput("collinear points have no circumcircle")
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    a2 = a.x * a.x + a.y * a.y
    b2 = b.x * b.x + b.y * b.y
    c2 = c.x * c.x + c.y * c.y
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d
    r = math.hypot(a.x - ux, a.y - uy)
    return Point2(ux, uy), r


def _on_segment_collinear(px, py, ax, ay, bx, by) -> bool:
    # assumes p collinear with a-b; checks the bounding range
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool:
    """True if the closed segments share any point (cross, touch or overlap)."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_segment_collinear(p1.x, p1.y, q1.x, q1.y, q2.x, q2.y):
        return True
    if d2 == 0 and _on_segment_collinear(p2.x, p2.y, q1.x, q1.y, q2.x, q2.y):
        return True
    if d3 == 0 and _on_segment_collinear(q1.x, q1.y, p1.x, p1.y, p2.x, p2.y):
        return True
    if d4 == 0 and _on_segment_collinear(q2.x, q2.y, p1.x, p1.y, p2.x, p2.y):
        return True
    return False


def _adjacent_edges_clean(u: Point2, v: Point2, w: Point2) -> bool:
    """Edges (u,v) and (v,w) must meet only at v: no collinear backtrack."""
    if orient(u, v, w) != 0:
        return True
    # collinear: the edges overlap iff u and w are on the same side of v
    return (u.x - v.x) * (w.x - v.x) + (u.y - v.y) * (w.y - v.y) < 0


def polygon_is_simple(poly: Polygon) -> bool:
    """True iff no two non-adjacent edges intersect and adjacent edges meet
    only at their shared vertex."""
    verts = poly.vertices
    m = len(verts)
    for i in range(m):
        if not _adjacent_edges_clean(verts[i - 1], verts[i], verts[(i + 1) % m]):
            return False
    from . import _kernels  # deferred: geom must import without kernels ready

    coords = poly.coords()
    for i, j in _kernels.impl.crossing_candidates(coords):
        if segments_intersect(
            verts[i], verts[(i + 1) % m], verts[j], verts[(j + 1) % m]
        ):
            return False
    return True


def point_in_polygon(
    p: Point2, poly: Polygon, boundary_tol: float = DEFAULT_BOUNDARY_TOL
) -> str:
    """Classify p against a simple polygon: INSIDE, BOUNDARY or OUTSIDE.

    Boundary means within ``boundary_tol`` of some edge (absolute distance).
    """
    verts = poly.vertices
    m = len(verts)
    for i in range(m):
        a = verts[i]
        b = verts[(i + 1) % m]
        if _seg_dist(p.x, p.y, a.x, a.y, b.x, b.y) <= boundary_tol:
            return BOUNDARY
    inside = False
    for i in range(m):
        a = verts[i]
        b = verts[(i + 1) % m]
        if (a.y > p.y) != (b.y > p.y):
            xint = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x
            if p.x < xint:
                inside = not inside
    return INSIDE if inside else OUTSIDE
