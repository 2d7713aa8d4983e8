"""Delaunay triangulation, Voronoi dual, and nearest-point queries.

Construction is incremental Bowyer-Watson over a scaffold triangle whose
three vertices live symbolically at infinity (see ``predicates``), inserted
in cloud index order, so the result is deterministic and the finite
triangles tile the convex hull exactly. Cocircular ties resolve through the
exact predicates: a point exactly on a circumcircle counts as outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DegenerateInput, NoCandidate
from .geom import Point2, PointCloud, circumcircle
from .predicates import incircle_sym, orient_sym


class Triangulation:
    """Delaunay triangles (ccw vertex triples) with per-edge adjacency.

    ``neighbors[t][k]`` is the triangle across the edge opposite local
    vertex k of triangle t, or -1 on the hull.
    """

    __slots__ = ("cloud", "triangles", "neighbors", "_vertex_adj")

    def __init__(self, cloud, triangles, neighbors):
        self.cloud = cloud
        self.triangles = triangles
        self.neighbors = neighbors
        self._vertex_adj = None

    def __len__(self):
        return len(self.triangles)

    def vertex_adjacency(self) -> list[list[int]]:
        """Sorted Delaunay neighbors of every cloud point."""
        if self._vertex_adj is None:
            adj = [set() for _ in range(len(self.cloud))]
            for a, b, c in self.triangles:
                adj[a].update((b, c))
                adj[b].update((a, c))
                adj[c].update((a, b))
            self._vertex_adj = [sorted(s) for s in adj]
        return self._vertex_adj


class _Builder:
    """Bowyer-Watson incremental state over the scaffold triangle."""

    def __init__(self, pts: np.ndarray):
        self.pts = pts
        self.n = pts.shape[0]
        # vertex handles: 0..n-1 real, n..n+2 scaffold
        self.tri: list[list[int]] = [[self.n, self.n + 1, self.n + 2]]
        self.adj: list[list[int]] = [[-1, -1, -1]]
        self.alive = [True]
        self.hint = 0

    def _p(self, v: int):
        if v >= self.n:
            return v - self.n  # scaffold direction index for the predicates
        return (self.pts[v, 0], self.pts[v, 1])

    def _locate(self, q) -> int:
        cur = self.hint
        if not self.alive[cur]:
            cur = next(t for t in range(len(self.tri)) if self.alive[t])
        steps = 0
        limit = 4 * len(self.tri) + 16
        while True:
            verts = self.tri[cur]
            moved = False
            for k in range(3):
                ea = verts[(k + 1) % 3]
                eb = verts[(k + 2) % 3]
                if orient_sym(self._p(ea), self._p(eb), q) < 0:
                    cur = self.adj[cur][k]
                    moved = True
                    break
            if not moved:
                return cur
            steps += 1
            if steps > limit:
                return self._locate_linear(q)

    def _locate_linear(self, q) -> int:
        for t in range(len(self.tri)):
            if not self.alive[t]:
                continue
            a, b, c = self.tri[t]
            if (
                orient_sym(self._p(a), self._p(b), q) >= 0
                and orient_sym(self._p(b), self._p(c), q) >= 0
                and orient_sym(self._p(c), self._p(a), q) >= 0
            ):
                return t
        raise DegenerateInput("point not located in any triangle")

    def insert(self, v: int) -> None:
        q = self._p(v)
        t0 = self._locate(q)

        cavity = {t0}
        stack = [t0]
        while stack:
            t = stack.pop()
            for nb in self.adj[t]:
                if nb == -1 or nb in cavity or not self.alive[nb]:
                    continue
                a, b, c = self.tri[nb]
                if incircle_sym(self._p(a), self._p(b), self._p(c), q) > 0:
                    cavity.add(nb)
                    stack.append(nb)

        # directed boundary edges (ccw around the cavity) with outside triangle
        boundary = []
        for t in cavity:
            verts = self.tri[t]
            for k in range(3):
                nb = self.adj[t][k]
                if nb not in cavity or nb == -1:
                    boundary.append((verts[(k + 1) % 3], verts[(k + 2) % 3], nb, t))

        by_start: dict[int, int] = {}
        by_end: dict[int, int] = {}
        created = []
        for a, b, nb, dead in boundary:
            nt = len(self.tri)
            self.tri.append([a, b, v])
            self.adj.append([-1, -1, nb])
            self.alive.append(True)
            if nb != -1:
                slots = self.adj[nb]
                slots[slots.index(dead)] = nt
            by_start[a] = nt
            by_end[b] = nt
            created.append(nt)
        for nt in created:
            a, b, _ = self.tri[nt]
            self.adj[nt][0] = by_start[b]  # across edge (b, v)
            self.adj[nt][1] = by_end[a]  # across edge (v, a)
        for t in cavity:
            self.alive[t] = False
        self.hint = created[0]

    def finish(self):
        tris = []
        for t, ok in enumerate(self.alive):
            if ok and all(u < self.n for u in self.tri[t]):
                tris.append(tuple(self.tri[t]))
        return tris


def _canonical(tris):
    out = []
    for a, b, c in tris:
        if a <= b and a <= c:
            out.append((a, b, c))
        elif b <= a and b <= c:
            out.append((b, c, a))
        else:
            out.append((c, a, b))
    out.sort()
    return out


def delaunay(cloud: PointCloud) -> Triangulation:
    """Delaunay triangulation; deterministic for a fixed input ordering.

    Raises DegenerateInput when all points are collinear or any two points
    coincide exactly.
    """
    n = len(cloud)
    if n < 3:
        raise DegenerateInput("need at least 3 points")
    pts = cloud.coords
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    srt = pts[order]
    dup = np.all(srt[1:] == srt[:-1], axis=1)
    if dup.any():
        i = int(np.argmax(dup))
        raise DegenerateInput(
            f"duplicate points (ids {order[i]} and {order[i + 1]})"
        )

    builder = _Builder(pts)
    for v in range(n):
        builder.insert(v)
    tris = builder.finish()
    if not tris:
        raise DegenerateInput("all points are collinear")

    tris = _canonical(tris)
    edge_map: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for t, (a, b, c) in enumerate(tris):
        for k, (u, v) in enumerate(((b, c), (c, a), (a, b))):
            key = (u, v) if u < v else (v, u)
            edge_map.setdefault(key, []).append((t, k))
    neighbors = [[-1, -1, -1] for _ in tris]
    for users in edge_map.values():
        if len(users) == 2:
            (t1, k1), (t2, k2) = users
            neighbors[t1][k1] = t2
            neighbors[t2][k2] = t1
    return Triangulation(cloud, tris, [tuple(r) for r in neighbors])


@dataclass
class VoronoiDiagram:
    """Dual of a Delaunay triangulation.

    Every cell vertex is the circumcenter of one Delaunay triangle;
    ``cell_triangles`` records that triangle per cell vertex. Bounded cells
    are closed convex polygons in ccw order around their site; unbounded
    cells (hull sites) carry their ordered open chain and bounded=False.
    """

    sites: PointCloud
    circumcenters: list[Point2]
    cells: list[list[Point2]] = field(default_factory=list)
    cell_triangles: list[list[int]] = field(default_factory=list)
    bounded: list[bool] = field(default_factory=list)


def voronoi_from_delaunay(tri: Triangulation) -> VoronoiDiagram:
    cloud = tri.cloud
    n = len(cloud)
    centers = []
    for a, b, c in tri.triangles:
        center, _ = circumcircle(cloud[a], cloud[b], cloud[c])
        centers.append(center)

    # one incident (triangle, local index) per vertex
    seat: list[tuple[int, int] | None] = [None] * n
    for t, verts in enumerate(tri.triangles):
        for i, v in enumerate(verts):
            if seat[v] is None:
                seat[v] = (t, i)

    diagram = VoronoiDiagram(cloud, centers)
    for v in range(n):
        start = seat[v]
        if start is None:  # can only happen for degenerate inputs
            diagram.cells.append([])
            diagram.cell_triangles.append([])
            diagram.bounded.append(False)
            continue
        chain = [start[0]]
        closed = True
        t, i = start
        while True:  # rotate ccw
            nxt = tri.neighbors[t][(i + 1) % 3]
            if nxt == -1:
                closed = False
                break
            if nxt == start[0]:
                break
            t, i = nxt, tri.triangles[nxt].index(v)
            chain.append(t)
        if not closed:
            t, i = start
            while True:  # extend cw to the other hull edge
                prv = tri.neighbors[t][(i + 2) % 3]
                if prv == -1:
                    break
                t, i = prv, tri.triangles[prv].index(v)
                chain.insert(0, t)
        diagram.cells.append([centers[t] for t in chain])
        diagram.cell_triangles.append(chain)
        diagram.bounded.append(closed)
    return diagram


def nearest_points(
    query: Point2,
    cloud: PointCloud,
    excluded=frozenset(),
    tie_tol: float = 0.0,
):
    """Minimum distance from query to any non-excluded cloud point plus all
    identifiers within tie_tol of that minimum, ascending.

    Raises NoCandidate when every point is excluded.
    """
    if tie_tol < 0:
        raise ValueError("tie_tol must be >= 0")
    mask = np.zeros(len(cloud), dtype=np.uint8)
    if excluded:
        mask[np.fromiter(excluded, dtype=np.int64)] = 1
    res = _kernels.impl.nearest_masked(
        query.x, query.y, cloud.xs, cloud.ys, mask, tie_tol
    )
    if res is None:
        raise NoCandidate("all cloud points are excluded")
    d, ids = res
    return d, tuple(int(i) for i in ids)


_NO_MASK_CACHE: dict[int, np.ndarray] = {}


class ClearanceField:
    """Distance-to-nearest-cloud-point queries over a fixed cloud.

    When built with a triangulation, scalar queries run a greedy descent on
    the Delaunay graph (move to any strictly closer neighbor until none
    exists); without one they fall back to a linear scan. Both paths return
    identical values and are cross-checked in the tests.
    """

    def __init__(self, cloud: PointCloud, triangulation: Triangulation | None = None):
        self.cloud = cloud
        self._adj = (
            triangulation.vertex_adjacency() if triangulation is not None else None
        )
        self._zeros = np.zeros(len(cloud), dtype=np.uint8)

    def clearance(self, query: Point2) -> float:
        """Distance from query to its nearest cloud point (0 at cloud points)."""
        if self._adj is None:
            return self._scan(query)
        return self._walk(query)

    def local_density(self, query: Point2) -> float:
        """Inverse squared clearance; +inf exactly at cloud points."""
        c = self.clearance(query)
        if c == 0.0:
            return math.inf
        return 1.0 / (c * c)

    def _scan(self, query: Point2) -> float:
        res = _kernels.impl.nearest_masked(
            query.x, query.y, self.cloud.xs, self.cloud.ys, self._zeros, 0.0
        )
        return res[0]

    def _walk(self, query: Point2) -> float:
        xs = self.cloud.xs
        ys = self.cloud.ys
        qx, qy = query.x, query.y
        cur = 0
        dx = xs[0] - qx
        dy = ys[0] - qy
        d2cur = dx * dx + dy * dy
        while True:
            best = cur
            d2best = d2cur
            for nb in self._adj[cur]:
                dx = xs[nb] - qx
                dy = ys[nb] - qy
                d2 = dx * dx + dy * dy
                if d2 < d2best:
                    best = nb
                    d2best = d2
            if best == cur:
                return math.sqrt(d2cur)
            cur = best
            d2cur = d2best
