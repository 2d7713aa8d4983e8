# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the numpy kernels.

Per-element arithmetic mirrors pyimpl expression for expression (the build
disables FP contraction), so distances and classifications agree bit for bit
with the fallback; only summation order differs.
"""

import numpy as np

from libc.math cimport sqrt, INFINITY

name = "native"

_EPS = 1.1102230246251565e-16
cdef double CCW_ERR = (3.0 + 16.0 * _EPS) * _EPS


def mds_sums(double[:, ::1] segs, double[::1] px, double[::1] py):
    cdef Py_ssize_t s, i
    cdef Py_ssize_t ns = segs.shape[0]
    cdef Py_ssize_t n = px.shape[0]
    out_arr = np.empty(ns, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double ax, ay, dx, dy, len2, t, ex, ey, acc
    for s in range(ns):
        ax = segs[s, 0]
        ay = segs[s, 1]
        dx = segs[s, 2] - ax
        dy = segs[s, 3] - ay
        len2 = dx * dx + dy * dy
        acc = 0.0
        for i in range(n):
            t = ((px[i] - ax) * dx + (py[i] - ay) * dy) / len2
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            ex = ax + t * dx - px[i]
            ey = ay + t * dy - py[i]
            acc += sqrt(ex * ex + ey * ey)
        out[s] = acc
    return out_arr


def nearest_masked(double qx, double qy, double[::1] px, double[::1] py,
                   excluded, double tie_tol):
    cdef Py_ssize_t i, n = px.shape[0], count
    cdef const unsigned char[::1] mask = excluded
    cdef double dmin = INFINITY
    cdef double dx, dy, d, lim
    for i in range(n):
        if mask[i]:
            continue
        dx = px[i] - qx
        dy = py[i] - qy
        d = sqrt(dx * dx + dy * dy)
        if d < dmin:
            dmin = d
    if dmin == INFINITY:
        return None
    lim = dmin + tie_tol
    ids_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] ids = ids_arr
    count = 0
    for i in range(n):
        if mask[i]:
            continue
        dx = px[i] - qx
        dy = py[i] - qy
        d = sqrt(dx * dx + dy * dy)
        if d <= lim:
            ids[count] = i
            count += 1
    return dmin, ids_arr[:count].copy()


def pip_classify(double[::1] px, double[::1] py, double[:, ::1] poly, double tol):
    cdef Py_ssize_t p, i
    cdef Py_ssize_t n = px.shape[0]
    cdef Py_ssize_t m = poly.shape[0]
    out_arr = np.empty(n, dtype=np.int8)
    cdef signed char[::1] out = out_arr
    cdef double qx, qy, x1, y1, x2, y2, dx, dy, t, ex, ey, d2, best, xint
    cdef bint inside
    for p in range(n):
        qx = px[p]
        qy = py[p]
        best = INFINITY
        for i in range(m):
            x1 = poly[i, 0]
            y1 = poly[i, 1]
            x2 = poly[(i + 1) % m, 0]
            y2 = poly[(i + 1) % m, 1]
            dx = x2 - x1
            dy = y2 - y1
            t = ((qx - x1) * dx + (qy - y1) * dy) / (dx * dx + dy * dy)
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            ex = x1 + t * dx - qx
            ey = y1 + t * dy - qy
            d2 = ex * ex + ey * ey
            if d2 < best:
                best = d2
        if sqrt(best) <= tol:
            out[p] = 0
            continue
        inside = 0
        for i in range(m):
            x1 = poly[i, 0]
            y1 = poly[i, 1]
            x2 = poly[(i + 1) % m, 0]
            y2 = poly[(i + 1) % m, 1]
            if (y1 > qy) != (y2 > qy):
                xint = (x2 - x1) * (qy - y1) / (y2 - y1) + x1
                if qx < xint:
                    inside = not inside
        out[p] = 1 if inside else -1
    return out_arr


cdef inline int _cert_sign(double ax, double ay, double bx, double by,
                           double cx, double cy) nogil:
    # +1/-1 when the float orientation is certified, 0 when uncertain
    cdef double detl = (ax - cx) * (by - cy)
    cdef double detr = (ay - cy) * (bx - cx)
    cdef double det = detl - detr
    cdef double bound = CCW_ERR * (abs(detl) + abs(detr))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    return 0


def crossing_candidates(double[:, ::1] poly):
    cdef Py_ssize_t m = poly.shape[0]
    cdef Py_ssize_t i, j, jhi, count = 0
    cdef double ax, ay, bx, by, cx, cy, ddx, ddy
    cdef double iminx, imaxx, iminy, imaxy
    cdef int s1, s2, s3, s4
    out_arr = np.empty((m * 4 + 16, 2), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    pairs = []
    for i in range(m - 2):
        ax = poly[i, 0]
        ay = poly[i, 1]
        bx = poly[i + 1, 0]
        by = poly[i + 1, 1]
        iminx = ax if ax < bx else bx
        imaxx = ax if ax > bx else bx
        iminy = ay if ay < by else by
        imaxy = ay if ay > by else by
        jhi = m - 1 if i == 0 else m
        for j in range(i + 2, jhi):
            cx = poly[j, 0]
            cy = poly[j, 1]
            ddx = poly[(j + 1) % m, 0]
            ddy = poly[(j + 1) % m, 1]
            if (cx < iminx and ddx < iminx) or (cx > imaxx and ddx > imaxx) \
                    or (cy < iminy and ddy < iminy) or (cy > imaxy and ddy > imaxy):
                continue
            s1 = _cert_sign(ax, ay, bx, by, cx, cy)
            s2 = _cert_sign(ax, ay, bx, by, ddx, ddy)
            if s1 != 0 and s1 == s2:
                continue
            s3 = _cert_sign(cx, cy, ddx, ddy, ax, ay)
            s4 = _cert_sign(cx, cy, ddx, ddy, bx, by)
            if s3 != 0 and s3 == s4:
                continue
            if count < out.shape[0]:
                out[count, 0] = i
                out[count, 1] = j
            else:
                pairs.append((i, j))
            count += 1
    if count <= out.shape[0]:
        return out_arr[:count].copy()
    extra = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    return np.concatenate([out_arr, extra], axis=0)
