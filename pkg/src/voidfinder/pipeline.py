"""End-to-end run: hull, triangulation, scoring, DV point, growth, report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _kernels
from .geom import PointCloud, convex_hull, polygon_area
from .locator import (
    LocatorConfig,
    VoidLocation,
    best_segment,
    dv_point,
    enumerate_hull_segments,
    interior_points,
)
from .mie import SweepConfig, run_to_convergence
from .report import Report
from .triangulation import ClearanceField, delaunay


@dataclass(frozen=True)
class RunConfig:
    k: int = 3
    max_order: int | None = None
    tie_tol: float = 1e-9
    locator: LocatorConfig = field(default_factory=LocatorConfig)
    scope: str = "all-from-best-endpoint"


def run_pipeline(cloud: PointCloud, cfg: RunConfig, source: dict | None = None) -> Report:
    """Run both stages on a cloud and assemble the report.

    ``source`` is echoed into the report config so a saved report can be
    re-rendered later (the cloud is re-derived from it).
    """
    n = len(cloud)
    if not (3 <= cfg.k <= n):
        raise ValueError(f"k must be within [3, {n}] for this cloud, got {cfg.k}")
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    hull = convex_hull(cloud)
    interior = interior_points(cloud, hull)
    timings["hull"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    tri = delaunay(cloud)
    clearance_field = ClearanceField(cloud, tri)
    timings["triangulate"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    scored = enumerate_hull_segments(hull, cloud, cfg.locator, _interior=interior)
    best = best_segment(scored)
    timings["score"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    dv = dv_point(best, clearance_field, cfg.k)
    timings["dv"] = time.perf_counter() - t0

    location = VoidLocation(tuple(hull), tuple(interior), tuple(scored), best, dv)
    sweep_cfg = SweepConfig(k=cfg.k, tie_tol=cfg.tie_tol, max_order=cfg.max_order)
    t0 = time.perf_counter()
    result = run_to_convergence(
        cloud, location, sweep_cfg, cfg.scope, cfg.locator.top_m
    )
    timings["grow"] = time.perf_counter() - t0
    timings["total"] = sum(timings.values())

    history_rows = []
    prev = 0
    for order, members in result.history:
        history_rows.append(
            {"order": order, "members": members, "new_members": members - prev}
        )
        prev = members

    pts = cloud.coords
    config_echo = {
        "source": source or {},
        "k": cfg.k,
        "max_order": cfg.max_order,
        "tie_tol": cfg.tie_tol,
        "policy": cfg.locator.start_policy,
        "start_vertex": cfg.locator.start_vertex,
        "start_seed": cfg.locator.start_seed,
        "top_m": cfg.locator.top_m,
        "scope": cfg.scope,
        "backend": _kernels.backend_name(),
    }
    return Report(
        config=config_echo,
        n=n,
        hull=list(hull),
        segment_count=len(scored),
        top_segments=[
            {"i": s.i, "j": s.j, "mds": s.mds}
            for s in scored[: cfg.locator.top_m]
        ],
        best={"i": best.i, "j": best.j, "mds": best.mds},
        dv={
            "x": dv.point.x,
            "y": dv.point.y,
            "clearance": dv.clearance,
            "step_index": dv.step_index,
        },
        history=history_rows,
        converged=result.converged,
        orders_used=result.orders_used,
        polygon=[
            {"id": i, "x": float(pts[i, 0]), "y": float(pts[i, 1])}
            for i in result.polygon_ids
        ],
        polygon_area=polygon_area(result.polygon),
        diagnostics={
            "simple": result.simple,
            "interior_violations": result.interior_violations,
        },
        timings=timings,
    )
