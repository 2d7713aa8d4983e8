"""Sign-exact orientation and incircle predicates.

Each predicate is evaluated in floating point first with a forward error
bound (Shewchuk's static filter); when the bound cannot certify the sign the
determinant is recomputed in exact rational arithmetic, so the returned sign
is always the true sign for representable inputs.

The triangulation's scaffold vertices are handled symbolically: they behave
as points at infinity along fixed integer directions, and their predicate
signs are limits of determinants that are polynomials in the scaffold scale.
"""

from __future__ import annotations

from fractions import Fraction

_EPS = 1.1102230246251565e-16  # half machine epsilon for binary64
CCW_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
INCIRCLE_ERRBOUND = (10.0 + 96.0 * _EPS) * _EPS

# Directions of the three scaffold ("far") vertices. Integer-valued so the
# symbolic determinants stay exact; ordered counterclockwise.
SUPER_DIRS = ((0, 1), (-1, -1), (1, -1))


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def orient(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> int:
    """Sign of the turn a->b->c: +1 left/ccw, -1 right/cw, 0 collinear."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright

    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)

    errbound = CCW_ERRBOUND * detsum
    if det >= errbound or -det >= errbound:
        return _sign(det)
    return _orient_exact(ax, ay, bx, by, cx, cy)


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    ax, ay, bx, by, cx, cy = (Fraction(v) for v in (ax, ay, bx, by, cx, cy))
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def incircle(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """Sign of the lifted 4x4 incircle determinant.

    For a counterclockwise triangle (a, b, c): +1 means d lies strictly
    inside the circumcircle, -1 strictly outside, 0 exactly on it.
    """
    adx = ax - dx
    bdx = bx - dx
    cdx = cx - dx
    ady = ay - dy
    bdy = by - dy
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady

    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy

    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (
        alift * (bdxcdy - cdxbdy)
        + blift * (cdxady - adxcdy)
        + clift * (adxbdy - bdxady)
    )

    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    errbound = INCIRCLE_ERRBOUND * permanent
    if det > errbound or -det > errbound:
        return _sign(det)
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    ax, ay, bx, by, cx, cy, dx, dy = (
        Fraction(v) for v in (ax, ay, bx, by, cx, cy, dx, dy)
    )
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(det)


# --- symbolic limits for scaffold vertices -------------------------------
#
# A scaffold vertex with direction u sits at M*u for an arbitrarily large
# scale M. Determinant entries become polynomials in M; the sign of the
# predicate is the sign of the highest-degree nonzero coefficient. All
# coefficients are exact Fractions, so the limit sign is exact.

_ZERO = (Fraction(0),)


def _poly_add(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def _poly_sub(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)
    )


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return tuple(out)


def _poly_det(rows):
    """Exact determinant of a square matrix of polynomials (Laplace)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return _poly_sub(
            _poly_mul(rows[0][0], rows[1][1]), _poly_mul(rows[0][1], rows[1][0])
        )
    total = _ZERO
    for col in range(n):
        entry = rows[0][col]
        if all(c == 0 for c in entry):
            continue
        minor = [
            [row[c] for c in range(n) if c != col] for row in rows[1:]
        ]
        term = _poly_mul(entry, _poly_det(minor))
        total = _poly_add(total, term) if col % 2 == 0 else _poly_sub(total, term)
    return total


def _limit_sign(poly) -> int:
    for coeff in reversed(poly):
        if coeff != 0:
            return 1 if coeff > 0 else -1
    return 0


def _const(v):
    return (Fraction(v),)


def _orient_row(pt):
    """Row (x, y, 1) with scaffold points expanded as (ux*M, uy*M, 1)."""
    if isinstance(pt, int):
        ux, uy = SUPER_DIRS[pt]
        return [(Fraction(0), Fraction(ux)), (Fraction(0), Fraction(uy)), _const(1)]
    x, y = pt
    return [_const(x), _const(y), _const(1)]


def _incircle_row(pt):
    """Row (x, y, x^2+y^2, 1); scaffold lift is |u|^2 * M^2."""
    if isinstance(pt, int):
        ux, uy = SUPER_DIRS[pt]
        uu = Fraction(ux * ux + uy * uy)
        return [
            (Fraction(0), Fraction(ux)),
            (Fraction(0), Fraction(uy)),
            (Fraction(0), Fraction(0), uu),
            _const(1),
        ]
    x, y = pt
    fx, fy = Fraction(x), Fraction(y)
    return [_const(x), _const(y), (fx * fx + fy * fy,), _const(1)]


def orient_sym(pa, pb, pc) -> int:
    """orient() where each argument is (x, y) or a scaffold index 0..2."""
    if not (isinstance(pa, int) or isinstance(pb, int) or isinstance(pc, int)):
        return orient(pa[0], pa[1], pb[0], pb[1], pc[0], pc[1])
    return _limit_sign(_poly_det([_orient_row(pa), _orient_row(pb), _orient_row(pc)]))


def incircle_sym(pa, pb, pc, pd) -> int:
    """incircle() where each argument is (x, y) or a scaffold index 0..2."""
    if not (
        isinstance(pa, int)
        or isinstance(pb, int)
        or isinstance(pc, int)
        or isinstance(pd, int)
    ):
        return incircle(pa[0], pa[1], pb[0], pb[1], pc[0], pc[1], pd[0], pd[1])
    rows = [_incircle_row(p) for p in (pa, pb, pc, pd)]
    return _limit_sign(_poly_det(rows))
