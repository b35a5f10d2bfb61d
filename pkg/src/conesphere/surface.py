"""Core data model: triangulated sphere metrics and their curvature reports.

A Triangulation is pure combinatorics (a closed oriented simplicial sphere);
a ConeMetric adds positive edge lengths under which every face is a planar
triangle. Both are immutable and validated on construction, so any value that
exists is safe to share between threads and to feed to the other modules.
"""

from dataclasses import dataclass
from functools import cached_property
from math import pi
from typing import Mapping, NamedTuple

from conesphere import kernels
from conesphere.config import DEFAULT, RunConfig
from conesphere.errors import (
    DegenerateFace,
    InvalidInputError,
    MissingLength,
    NonManifold,
    NotSphere,
    TriangleInequalityViolation,
)

EdgeKey = tuple


def edge_key(a: int, b: int) -> EdgeKey:
    """Canonical unordered edge key (smaller index first)."""
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Triangulation:
    """Closed oriented triangulated sphere.

    triangles are ordered vertex triples with consistent (counterclockwise)
    orientation. Construction validates: every edge shared by exactly two
    faces with opposite traversal directions, Euler characteristic 2, and a
    single link cycle at every vertex.
    """

    vertex_count: int
    triangles: tuple

    def __post_init__(self):
        object.__setattr__(self, "triangles",
                           tuple(tuple(int(v) for v in t) for t in self.triangles))
        object.__setattr__(self, "vertex_count", int(self.vertex_count))
        self._validate()

    # -- validation ------------------------------------------------------------

    def _validate(self):
        nv = self.vertex_count
        if nv < 3:
            raise InvalidInputError(f"vertex_count {nv} < 3")
        directed = {}
        for fi, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise InvalidInputError(f"face {fi} is not a triple")
            a, b, c = tri
            if len({a, b, c}) != 3:
                raise NonManifold(f"face {fi} repeats a vertex: {tri}")
            for v in tri:
                if not 0 <= v < nv:
                    raise InvalidInputError(f"face {fi} references vertex {v} out of range")
            for u, v in ((a, b), (b, c), (c, a)):
                if (u, v) in directed:
                    raise NonManifold(
                        f"directed edge {u}->{v} used twice (faces {directed[(u, v)]}, {fi}); "
                        "surface is non-manifold or inconsistently oriented")
                directed[(u, v)] = fi
        for (u, v), fi in directed.items():
            if (v, u) not in directed:
                raise NonManifold(f"edge {u}-{v} has only one incident face ({fi})")
        edges = sorted({edge_key(u, v) for (u, v) in directed})
        euler = nv - len(edges) + len(self.triangles)
        if euler != 2:
            raise NotSphere(f"V - E + F = {euler}, expected 2")
        # Link of every vertex must be a single cycle.
        links = {}
        succ = [dict() for _ in range(nv)]
        for a, b, c in self.triangles:
            for v, x, y in ((a, b, c), (b, c, a), (c, a, b)):
                if x in succ[v]:
                    raise NonManifold(f"vertex {v} has a branching link")
                succ[v][x] = y
        for v in range(nv):
            out = succ[v]
            if not out:
                raise NonManifold(f"vertex {v} is isolated")
            start = min(out)
            cycle = [start]
            cur = out[start]
            while cur != start:
                if cur not in out or len(cycle) > len(out):
                    raise NonManifold(f"link of vertex {v} is not a closed cycle")
                cycle.append(cur)
                cur = out[cur]
            if len(cycle) != len(out):
                raise NonManifold(f"link of vertex {v} is not a single cycle")
            links[v] = tuple(cycle)
        object.__setattr__(self, "_directed", directed)
        object.__setattr__(self, "_edges", tuple(edges))
        object.__setattr__(self, "_links", links)

    # -- derived structure -------------------------------------------------------

    @property
    def face_count(self) -> int:
        return len(self.triangles)

    @property
    def edges(self) -> tuple:
        return self._edges

    def link(self, v: int) -> tuple:
        """Link vertices of v as one CCW cycle."""
        return self._links[v]

    @cached_property
    def edge_faces(self) -> dict:
        """Canonical edge key -> (face index, face index)."""
        out = {}
        for (u, v), fi in self._directed.items():
            k = edge_key(u, v)
            if k in out:
                out[k] = (min(out[k][0], fi), max(out[k][0], fi))
            else:
                out[k] = (fi,)
        return out

    @cached_property
    def face_across(self) -> dict:
        """(face, canonical edge) -> the neighbouring face across that edge."""
        out = {}
        for k, pair in self.edge_faces.items():
            f, g = pair
            out[(f, k)] = g
            out[(g, k)] = f
        return out

    def star_faces(self, v: int) -> tuple:
        """Faces around v in link order; face i spans (v, link[i], link[i+1])."""
        link = self._links[v]
        lookup = {}
        for fi, (a, b, c) in enumerate(self.triangles):
            for vv, x, y in ((a, b, c), (b, c, a), (c, a, b)):
                if vv == v:
                    lookup[x] = fi
        return tuple(lookup[link[i]] for i in range(len(link)))

    def apex(self, face: int, edge: EdgeKey) -> int:
        """The vertex of `face` not on `edge`."""
        a, b, c = self.triangles[face]
        for v in (a, b, c):
            if v != edge[0] and v != edge[1]:
                return v
        raise ValueError(f"edge {edge} spans face {face}")


@dataclass(frozen=True)
class ConeMetric:
    """A Triangulation plus positive edge lengths (abstract length units)."""

    triangulation: Triangulation
    lengths: Mapping

    def __post_init__(self):
        object.__setattr__(self, "lengths",
                           {edge_key(*k): float(v) for k, v in self.lengths.items()})

    @property
    def vertex_count(self) -> int:
        return self.triangulation.vertex_count

    @cached_property
    def face_sides(self) -> tuple:
        """Per face: lengths of the sides opposite vertices 0, 1, 2 of the triple."""
        out = []
        for a, b, c in self.triangulation.triangles:
            out.append((self.lengths[edge_key(b, c)],
                        self.lengths[edge_key(c, a)],
                        self.lengths[edge_key(a, b)]))
        return tuple(out)

    @cached_property
    def face_angles(self) -> tuple:
        """Per face: corner angles at vertices 0, 1, 2 of the triple."""
        out = []
        for sa, sb, sc in self.face_sides:
            out.append((kernels.corner_angle(sa, sb, sc),
                        kernels.corner_angle(sb, sc, sa),
                        kernels.corner_angle(sc, sa, sb)))
        return tuple(out)

    @cached_property
    def face_areas(self) -> tuple:
        return tuple(kernels.triangle_area(*sides) for sides in self.face_sides)

    @cached_property
    def total_area(self) -> float:
        return sum(self.face_areas)

    @cached_property
    def angle_sums(self) -> tuple:
        sums = [0.0] * self.vertex_count
        for tri, angles in zip(self.triangulation.triangles, self.face_angles):
            for v, ang in zip(tri, angles):
                sums[v] += ang
        return tuple(sums)

    @cached_property
    def face_coords(self) -> tuple:
        """Canonical planar layout per face: v0 at origin, v1 on +x, v2 above."""
        out = []
        for (sa, sb, sc) in self.face_sides:
            # side c = |v0 v1|, b = |v0 v2|, a = |v1 v2|
            p2 = kernels.place_apex(0.0, 0.0, sc, 0.0, sb, sa, 1.0)
            out.append(((0.0, 0.0), (sc, 0.0), p2))
        return tuple(out)

    @cached_property
    def diameter_hint(self) -> float:
        """Largest edge length; the scale used for relative tolerances."""
        return max(self.lengths.values())

    def corner_angle_at(self, face: int, vertex: int) -> float:
        tri = self.triangulation.triangles[face]
        return self.face_angles[face][tri.index(vertex)]


class PsiResult(NamedTuple):
    ok: bool
    offender: int | None


@dataclass(frozen=True)
class CurvatureReport:
    """Per-vertex angle sums, deficits, and essential flags."""

    theta: tuple
    deficit: tuple
    essential: tuple
    eps_angle: float

    @property
    def essential_vertices(self) -> tuple:
        return tuple(v for v, e in enumerate(self.essential) if e)

    @property
    def essential_count(self) -> int:
        return sum(self.essential)

    @property
    def total_deficit(self) -> float:
        return sum(self.deficit)


def build_cone_metric(triangulation, lengths, config: RunConfig = DEFAULT) -> ConeMetric:
    """Validate and assemble a ConeMetric.

    Raises MissingLength, TriangleInequalityViolation, DegenerateFace (and the
    Triangulation errors if `triangulation` is given as raw data). The total
    angle deficit is checked against 4*pi rather than assumed.
    """
    if not isinstance(triangulation, Triangulation):
        raise TypeError("triangulation must be a Triangulation")
    clean = {}
    for k, v in lengths.items():
        key = edge_key(*k)
        if key in clean:
            raise InvalidInputError(f"duplicate length for edge {key}")
        clean[key] = float(v)
    for e in triangulation.edges:
        if e not in clean:
            raise MissingLength(f"no length for edge {e[0]}-{e[1]}")
        if not clean[e] > 0.0:
            raise InvalidInputError(f"length of edge {e[0]}-{e[1]} must be positive")
    extra = set(clean) - set(triangulation.edges)
    if extra:
        raise InvalidInputError(f"lengths given for non-edges: {sorted(extra)[:3]}")
    metric = ConeMetric(triangulation, clean)
    for fi, (sa, sb, sc) in enumerate(metric.face_sides):
        if sb + sc <= sa or sc + sa <= sb or sa + sb <= sc:
            raise TriangleInequalityViolation(
                f"face {fi} {triangulation.triangles[fi]} has sides "
                f"({sa:.17g}, {sb:.17g}, {sc:.17g})")
        area = kernels.triangle_area(sa, sb, sc)
        if area < config.area_floor * max(sa, sb, sc) ** 2:
            raise DegenerateFace(
                f"face {fi} {triangulation.triangles[fi]} has near-zero area {area:.3e}")
    total = 2.0 * pi * metric.vertex_count - sum(metric.angle_sums)
    if abs(total - 4.0 * pi) > 1e-9:
        raise InvalidInputError(
            f"total angle deficit {total!r} differs from 4*pi; inconsistent metric")
    return metric


def angle_sum(metric: ConeMetric, vertex: int) -> float:
    """Total corner angle around `vertex` (law of cosines over incident faces)."""
    if not 0 <= vertex < metric.vertex_count:
        raise IndexError(f"vertex {vertex} out of range")
    return metric.angle_sums[vertex]


def curvature_report(metric: ConeMetric, config: RunConfig = DEFAULT) -> CurvatureReport:
    theta = metric.angle_sums
    deficit = tuple(2.0 * pi - t for t in theta)
    essential = tuple(d > config.eps_angle for d in deficit)
    return CurvatureReport(theta, deficit, essential, config.eps_angle)


def is_admissible(metric: ConeMetric, config: RunConfig = DEFAULT) -> PsiResult:
    """Whether every angle sum is at most 2*pi (+eps); reports the first offender."""
    for v, t in enumerate(metric.angle_sums):
        if t > 2.0 * pi + config.eps_angle:
            return PsiResult(False, v)
    return PsiResult(True, None)


# -- local subdivision (flat Steiner vertices) ----------------------------------

def split_face(metric: ConeMetric, face: int, bary=(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
               config: RunConfig = DEFAULT) -> ConeMetric:
    """Insert a flat vertex inside `face` at the given barycentric coordinates."""
    if min(bary) <= 0.0:
        raise ValueError("barycentric coordinates must be strictly positive")
    s = sum(bary)
    w = [x / s for x in bary]
    tri = metric.triangulation.triangles[face]
    pa, pb, pc = metric.face_coords[face]
    px = w[0] * pa[0] + w[1] * pb[0] + w[2] * pc[0]
    py = w[0] * pa[1] + w[1] * pb[1] + w[2] * pc[1]
    nv = metric.vertex_count
    lengths = dict(metric.lengths)
    for v, (x, y) in zip(tri, (pa, pb, pc)):
        lengths[edge_key(v, nv)] = ((px - x) ** 2 + (py - y) ** 2) ** 0.5
    triangles = [t for i, t in enumerate(metric.triangulation.triangles) if i != face]
    a, b, c = tri
    triangles += [(a, b, nv), (b, c, nv), (c, a, nv)]
    return build_cone_metric(Triangulation(nv + 1, triangles), lengths, config)


def split_edge(metric: ConeMetric, edge, t: float = 0.5,
               config: RunConfig = DEFAULT) -> ConeMetric:
    """Insert a flat vertex on `edge` at parameter t (measured from the smaller index)."""
    key = edge_key(*edge)
    if key not in metric.lengths:
        raise InvalidInputError(f"{key} is not an edge")
    if not 0.0 < t < 1.0:
        raise ValueError("t must be strictly inside (0, 1)")
    tri = metric.triangulation
    nv = metric.vertex_count
    ell = metric.lengths[key]
    lengths = dict(metric.lengths)
    del lengths[key]
    lengths[edge_key(key[0], nv)] = t * ell
    lengths[edge_key(key[1], nv)] = (1.0 - t) * ell
    new_faces = []
    for fi, face in enumerate(tri.triangles):
        if key[0] not in face or key[1] not in face:
            new_faces.append(face)
            continue
        a, b, c = face
        # rotate so the split edge is (a, b) in traversal order
        while edge_key(a, b) != key:
            a, b, c = b, c, a
        frac = t if a == key[0] else 1.0 - t
        coords = metric.face_coords[fi]
        tri_rot = metric.triangulation.triangles[fi]
        pa = coords[tri_rot.index(a)]
        pb = coords[tri_rot.index(b)]
        pc = coords[tri_rot.index(c)]
        mx = pa[0] + frac * (pb[0] - pa[0])
        my = pa[1] + frac * (pb[1] - pa[1])
        lengths[edge_key(c, nv)] = ((mx - pc[0]) ** 2 + (my - pc[1]) ** 2) ** 0.5
        new_faces += [(a, nv, c), (nv, b, c)]
    return build_cone_metric(Triangulation(nv + 1, new_faces), lengths, config)
