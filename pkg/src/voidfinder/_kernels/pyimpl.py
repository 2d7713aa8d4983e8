"""numpy implementations of the hot kernels (fallback backend).

Per-element arithmetic matches the compiled twins expression for expression,
so distances and classifications agree bit for bit across backends; only
reduction order (sums) may differ in the last ulp.
"""

from __future__ import annotations

import numpy as np

_EPS = 1.1102230246251565e-16
_CCW_ERR = (3.0 + 16.0 * _EPS) * _EPS

name = "python"


def mds_sums(segs: np.ndarray, px: np.ndarray, py: np.ndarray) -> np.ndarray:
    """Sum of point-to-segment distances for each row [ax, ay, bx, by]."""
    out = np.empty(segs.shape[0], dtype=np.float64)
    chunk = max(1, int(4_000_000 // max(1, px.shape[0])))
    for lo in range(0, segs.shape[0], chunk):
        hi = min(lo + chunk, segs.shape[0])
        ax = segs[lo:hi, 0:1]
        ay = segs[lo:hi, 1:2]
        dx = segs[lo:hi, 2:3] - ax
        dy = segs[lo:hi, 3:4] - ay
        len2 = dx * dx + dy * dy
        t = ((px[None, :] - ax) * dx + (py[None, :] - ay) * dy) / len2
        np.clip(t, 0.0, 1.0, out=t)
        ex = ax + t * dx - px[None, :]
        ey = ay + t * dy - py[None, :]
        out[lo:hi] = np.sqrt(ex * ex + ey * ey).sum(axis=1)
    return out


def nearest_masked(qx, qy, px, py, excluded, tie_tol):
    """Nearest non-excluded point: (distance, ascending ids within tie_tol).

    ``excluded`` is a uint8 mask (1 = skip). Returns None when every point
    is excluded.
    """
    dx = px - qx
    dy = py - qy
    d = np.sqrt(dx * dx + dy * dy)
    if excluded is not None:
        d = np.where(excluded != 0, np.inf, d)
    dmin = d[int(np.argmin(d))]
    if not np.isfinite(dmin):
        return None
    ids = np.nonzero(d <= dmin + tie_tol)[0]
    return float(dmin), ids


def pip_classify(px, py, poly, tol):
    """Classify points against a polygon: 0 boundary, 1 inside, -1 outside."""
    x1 = np.ascontiguousarray(poly[:, 0])
    y1 = np.ascontiguousarray(poly[:, 1])
    x2 = np.roll(x1, -1)
    y2 = np.roll(y1, -1)
    dx = x2 - x1
    dy = y2 - y1
    len2 = dx * dx + dy * dy
    out = np.empty(px.shape[0], dtype=np.int8)
    chunk = max(1, int(4_000_000 // max(1, poly.shape[0])))
    for lo in range(0, px.shape[0], chunk):
        hi = min(lo + chunk, px.shape[0])
        qx = px[lo:hi, None]
        qy = py[lo:hi, None]
        t = ((qx - x1) * dx + (qy - y1) * dy) / len2
        np.clip(t, 0.0, 1.0, out=t)
        ex = x1 + t * dx - qx
        ey = y1 + t * dy - qy
        onb = np.sqrt((ex * ex + ey * ey).min(axis=1)) <= tol
        cond = (y1 > qy) != (y2 > qy)
        with np.errstate(divide="ignore", invalid="ignore"):
            xint = dx * (qy - y1) / dy + x1
        inside = (cond & (qx < xint)).sum(axis=1) % 2 == 1
        out[lo:hi] = np.where(onb, 0, np.where(inside, 1, -1)).astype(np.int8)
    return out


def _cert_signs(ax, ay, bx, by, cx, cy):
    detl = (ax - cx) * (by - cy)
    detr = (ay - cy) * (bx - cx)
    det = detl - detr
    bound = _CCW_ERR * (np.abs(detl) + np.abs(detr))
    return det > bound, det < -bound


def crossing_candidates(poly):
    """Pairs (i, j) of non-adjacent polygon edges that the filtered float test
    cannot certify as disjoint; callers must verify each pair exactly."""
    m = poly.shape[0]
    x1 = np.ascontiguousarray(poly[:, 0])
    y1 = np.ascontiguousarray(poly[:, 1])
    x2 = np.roll(x1, -1)
    y2 = np.roll(y1, -1)
    minx = np.minimum(x1, x2)
    maxx = np.maximum(x1, x2)
    miny = np.minimum(y1, y2)
    maxy = np.maximum(y1, y2)
    rows = []
    for i in range(m - 2):
        jlo = i + 2
        jhi = m - 1 if i == 0 else m
        if jlo >= jhi:
            continue
        js = np.arange(jlo, jhi)
        cand = ~(
            (maxx[js] < minx[i])
            | (minx[js] > maxx[i])
            | (maxy[js] < miny[i])
            | (miny[js] > maxy[i])
        )
        if cand.any():
            js = js[cand]
            p1, p2 = _cert_signs(x1[js], y1[js], x2[js], y2[js], x1[i], y1[i])
            p3, p4 = _cert_signs(x1[js], y1[js], x2[js], y2[js], x2[i], y2[i])
            q1, q2 = _cert_signs(x1[i], y1[i], x2[i], y2[i], x1[js], y1[js])
            q3, q4 = _cert_signs(x1[i], y1[i], x2[i], y2[i], x2[js], y2[js])
            sep = (p1 & p3) | (p2 & p4) | (q1 & q3) | (q2 & q4)
            js = js[~sep]
        else:
            js = js[cand]
        if js.size:
            rows.append(np.stack([np.full(js.size, i, dtype=np.int64), js], axis=1))
    if not rows:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(rows, axis=0)
