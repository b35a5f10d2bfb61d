"""Small 2D helpers shared by builders, retriangulation, and exporters.

Everything here works on plain (x, y) tuples. Hot per-expansion math lives in
`kernels`; these are setup/validation helpers that run a handful of times per
operation.
"""

from conesphere import kernels


def polygon_signed_area(pts) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def polygon_scale(pts) -> float:
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return max(max(xs) - min(xs), max(ys) - min(ys), 1e-300)


def is_strictly_convex(pts, rel_tol: float = 1e-12) -> bool:
    """True when every corner of the CCW polygon turns strictly left."""
    n = len(pts)
    if n < 3:
        return False
    eps = rel_tol * polygon_scale(pts) ** 2
    for i in range(n):
        x0, y0 = pts[i - 1]
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        cross = (x1 - x0) * (y2 - y1) - (y1 - y0) * (x2 - x1)
        if cross <= eps:
            return False
    return True


def is_simple_polygon(pts, rel_tol: float = 1e-12) -> bool:
    """Quadratic proper-intersection scan; fine for desk-scale polygons."""
    n = len(pts)
    eps = rel_tol * polygon_scale(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # shares a vertex
            c, d = pts[j], pts[(j + 1) % n]
            if segments_properly_intersect(a, b, c, d, eps):
                return False
    return True


def segments_properly_intersect(p, q, a, b, eps: float = 0.0) -> bool:
    """True when open segments PQ and AB cross at a single interior point."""
    t, s = kernels.segment_intersection_params(p[0], p[1], q[0], q[1],
                                               a[0], a[1], b[0], b[1])
    if t < 0.0 and s < 0.0:
        return False  # parallel
    lo, hi = eps, 1.0 - eps
    return lo < t < hi and lo < s < hi


def point_in_triangle(p, a, b, c, eps: float = 0.0) -> bool:
    """Inclusive point-in-triangle test for a CCW triangle (eps widens it)."""
    for (x0, y0), (x1, y1) in ((a, b), (b, c), (c, a)):
        cross = (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0)
        if cross < -eps:
            return False
    return True


def ear_clip(pts, diagonal_ok=None, rel_tol: float = 1e-12):
    """Triangulate a simple CCW polygon by ear clipping.

    Returns triangles as index triples into `pts`. `diagonal_ok(i, j)` may veto
    a would-be diagonal (used to avoid duplicating edges that already exist in
    a surrounding complex). Among valid ears the one with the shortest new
    diagonal is clipped first, ties broken by smallest index, which makes the
    output deterministic. Raises ValueError when no valid ear remains.
    """
    n = len(pts)
    if n < 3:
        raise ValueError("polygon needs at least 3 vertices")
    scale = polygon_scale(pts)
    area_eps = rel_tol * scale * scale
    inside_eps = rel_tol * scale
    active = list(range(n))
    triangles = []
    while len(active) > 3:
        best = None
        m = len(active)
        for k in range(m):
            ip, ic, inx = active[k - 1], active[k], active[(k + 1) % m]
            a, b, c = pts[ip], pts[ic], pts[inx]
            cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            if cross <= area_eps:
                continue  # reflex or degenerate corner
            if diagonal_ok is not None and not diagonal_ok(ip, inx):
                continue
            blocked = False
            for other in active:
                if other in (ip, ic, inx):
                    continue
                if point_in_triangle(pts[other], a, b, c, inside_eps):
                    blocked = True
                    break
            if blocked:
                continue
            diag = (c[0] - a[0]) ** 2 + (c[1] - a[1]) ** 2
            cand = (diag, ic)
            if best is None or cand < best[0]:
                best = (cand, k, ip, ic, inx)
        if best is None:
            raise ValueError("no valid ear (conflicting diagonals or degenerate polygon)")
        _, k, ip, ic, inx = best
        triangles.append((ip, ic, inx))
        del active[k]
    triangles.append(tuple(active))
    return triangles
