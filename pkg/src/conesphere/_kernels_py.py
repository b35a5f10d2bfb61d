"""Pure-Python numeric kernels.

The compiled twin in `_kernels_cy.pyx` mirrors these functions statement for
statement; both must produce bit-identical results (same IEEE operations in
the same order), so edit the two files together.
"""

from math import acos, sqrt

BACKEND = "python"


def corner_angle(opp: float, b: float, c: float) -> float:
    """Angle at the corner where sides b and c meet, opposite the side opp.

    The law-of-cosines argument is clamped to [-1, 1] so rounding just outside
    the domain cannot produce NaN.
    """
    r = (b * b + c * c - opp * opp) / (2.0 * b * c)
    if r > 1.0:
        r = 1.0
    elif r < -1.0:
        r = -1.0
    return acos(r)


def triangle_area(a: float, b: float, c: float) -> float:
    """Stable Heron area; returns -1.0 when the sides violate the triangle inequality."""
    # sort so that a >= b >= c
    if a < b:
        a, b = b, a
    if b < c:
        b, c = c, b
    if a < b:
        a, b = b, a
    p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    if p < 0.0:
        return -1.0
    return 0.25 * sqrt(p)


def place_apex(ax: float, ay: float, bx: float, by: float,
               da: float, db: float, side: float) -> tuple:
    """Planar point at distance da from A and db from B.

    side=+1.0 places it to the left of A->B (positive cross product), -1.0 to
    the right. Off-axis distance is clamped at zero for flat configurations.
    """
    ux = bx - ax
    uy = by - ay
    d2 = ux * ux + uy * uy
    d = sqrt(d2)
    x = (d2 + da * da - db * db) / (2.0 * d)
    h2 = da * da - x * x
    if h2 > 0.0:
        h = sqrt(h2)
    else:
        h = 0.0
    inv = 1.0 / d
    ex = ux * inv
    ey = uy * inv
    return (ax + x * ex - side * h * ey, ay + x * ey + side * h * ex)


def point_segment_distance(px: float, py: float, ax: float, ay: float,
                           bx: float, by: float) -> float:
    ux = bx - ax
    uy = by - ay
    wx = px - ax
    wy = py - ay
    d2 = ux * ux + uy * uy
    if d2 <= 0.0:
        return sqrt(wx * wx + wy * wy)
    t = (wx * ux + wy * uy) / d2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    dx = wx - t * ux
    dy = wy - t * uy
    return sqrt(dx * dx + dy * dy)


def clip_wedge(lox: float, loy: float, hix: float, hiy: float,
               ax: float, ay: float, bx: float, by: float,
               slack: float) -> tuple:
    """Clip segment A->B to the wedge of directions between lo and hi.

    The wedge is the set of points P with cross(lo, P) >= -slack and
    cross(P, hi) >= -slack, i.e. counterclockwise from lo to hi as seen from
    the origin (opening angle < pi). Returns the parameter interval (t0, t1)
    of the surviving sub-segment; empty when t0 > t1.
    """
    dx = bx - ax
    dy = by - ay
    t0 = 0.0
    t1 = 1.0
    # f(t) = cross(lo, A + t*(B-A)) >= -slack
    f0 = lox * ay - loy * ax
    f1 = lox * dy - loy * dx
    if f1 > 0.0:
        t = (-slack - f0) / f1
        if t > t0:
            t0 = t
    elif f1 < 0.0:
        t = (-slack - f0) / f1
        if t < t1:
            t1 = t
    elif f0 < -slack:
        return (1.0, 0.0)
    # g(t) = cross(A + t*(B-A), hi) >= -slack
    g0 = ax * hiy - ay * hix
    g1 = dx * hiy - dy * hix
    if g1 > 0.0:
        t = (-slack - g0) / g1
        if t > t0:
            t0 = t
    elif g1 < 0.0:
        t = (-slack - g0) / g1
        if t < t1:
            t1 = t
    elif g0 < -slack:
        return (1.0, 0.0)
    return (t0, t1)


def segment_intersection_params(px: float, py: float, qx: float, qy: float,
                                ax: float, ay: float, bx: float, by: float) -> tuple:
    """Line-line intersection parameters (t on A->B, s on P->Q); (-1, -1) if parallel."""
    rx = qx - px
    ry = qy - py
    sx = bx - ax
    sy = by - ay
    denom = rx * sy - ry * sx
    if denom == 0.0:
        return (-1.0, -1.0)
    wx = ax - px
    wy = ay - py
    s = (wx * sy - wy * sx) / denom
    t = (wx * ry - wy * rx) / denom
    return (t, s)
