# cython: language_level=3
"""Compiled numeric kernels; statement-for-statement twin of `_kernels_py`.

Compiled without fast-math so every arithmetic operation keeps IEEE semantics
and results stay bit-identical to the pure-Python fallback.
"""

from libc.math cimport acos, sqrt

BACKEND = "cython"


cpdef double corner_angle(double opp, double b, double c):
    """Angle at the corner where sides b and c meet, opposite the side opp."""
    cdef double r = (b * b + c * c - opp * opp) / (2.0 * b * c)
    if r > 1.0:
        r = 1.0
    elif r < -1.0:
        r = -1.0
    return acos(r)


cpdef double triangle_area(double a, double b, double c):
    """Stable Heron area; returns -1.0 when the sides violate the triangle inequality."""
    cdef double t
    cdef double p
    if a < b:
        t = a; a = b; b = t
    if b < c:
        t = b; b = c; c = t
    if a < b:
        t = a; a = b; b = t
    p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    if p < 0.0:
        return -1.0
    return 0.25 * sqrt(p)


cpdef tuple place_apex(double ax, double ay, double bx, double by,
                       double da, double db, double side):
    """Planar point at distance da from A and db from B; side=+1 is left of A->B."""
    cdef double ux = bx - ax
    cdef double uy = by - ay
    cdef double d2 = ux * ux + uy * uy
    cdef double d = sqrt(d2)
    cdef double x = (d2 + da * da - db * db) / (2.0 * d)
    cdef double h2 = da * da - x * x
    cdef double h
    if h2 > 0.0:
        h = sqrt(h2)
    else:
        h = 0.0
    cdef double inv = 1.0 / d
    cdef double ex = ux * inv
    cdef double ey = uy * inv
    return (ax + x * ex - side * h * ey, ay + x * ey + side * h * ex)


cpdef double point_segment_distance(double px, double py, double ax, double ay,
                                    double bx, double by):
    cdef double ux = bx - ax
    cdef double uy = by - ay
    cdef double wx = px - ax
    cdef double wy = py - ay
    cdef double d2 = ux * ux + uy * uy
    cdef double t
    cdef double dx
    cdef double dy
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


cpdef tuple clip_wedge(double lox, double loy, double hix, double hiy,
                       double ax, double ay, double bx, double by,
                       double slack):
    """Clip segment A->B to the wedge between directions lo and hi (see python twin)."""
    cdef double dx = bx - ax
    cdef double dy = by - ay
    cdef double t0 = 0.0
    cdef double t1 = 1.0
    cdef double t
    cdef double f0 = lox * ay - loy * ax
    cdef double f1 = lox * dy - loy * dx
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
    cdef double g0 = ax * hiy - ay * hix
    cdef double g1 = dx * hiy - dy * hix
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


cpdef tuple segment_intersection_params(double px, double py, double qx, double qy,
                                        double ax, double ay, double bx, double by):
    """Line-line intersection parameters (t on A->B, s on P->Q); (-1, -1) if parallel."""
    cdef double rx = qx - px
    cdef double ry = qy - py
    cdef double sx = bx - ax
    cdef double sy = by - ay
    cdef double denom = rx * sy - ry * sx
    if denom == 0.0:
        return (-1.0, -1.0)
    cdef double wx = ax - px
    cdef double wy = ay - py
    cdef double s = (wx * sy - wy * sx) / denom
    cdef double t = (wx * ry - wy * rx) / denom
    return (t, s)
