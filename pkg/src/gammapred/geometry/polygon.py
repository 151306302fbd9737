"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import List, Sequence

import math

from scipy.spatial import ConvexHull, QhullError

import numpy as np

from .constants import GEOM_TOL, MEMBERSHIP_TOL, POINT_FOOTPRINT_EPS
from .halfplane import HalfPlane


class InvalidGeometryError(ValueError):
    pass


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def _signed_area(pts: np.ndarray) -> float:
    nxt = np.roll(pts, -1, axis=0)
    return 0.5 * float(np.sum(pts[:, 0] * nxt[:, 1] - nxt[:, 0] * pts[:, 1]))


def _normalize(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise InvalidGeometryError("Polygon vertices must be finite")
    keep: List[np.ndarray] = []
    for p in pts:
        if not keep or np.linalg.norm(p - keep[-1]) > GEOM_TOL:
            keep.append(p)
    while len(keep) > 1 and np.linalg.norm(keep[0] - keep[-1]) <= GEOM_TOL:
        keep.pop()
    if len(keep) < 3:
        raise InvalidGeometryError(
            f"Polygon needs at least 3 distinct vertices, got {len(keep)}")
    pts = np.array(keep)
    area = _signed_area(pts)
    if abs(area) <= GEOM_TOL ** 2:
        raise InvalidGeometryError("Polygon has no area")
    if area < 0:
        pts = pts[::-1].copy()

    while True:
        e_in = pts - np.roll(pts, 1, axis=0)
        e_out = np.roll(pts, -1, axis=0) - pts
        turn = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
        scale = np.linalg.norm(e_in, axis=1) * np.linalg.norm(e_out, axis=1)
        flat = np.abs(turn) <= GEOM_TOL * scale
        if np.any(turn < -GEOM_TOL * scale):
            raise InvalidGeometryError("Polygon is not convex")
        if not np.any(flat):
            break
        pts = pts[~flat]
        if len(pts) < 3:
            raise InvalidGeometryError("Polygon vertices are collinear")

    # a star polygon turns left everywhere but winds more than once
    e_in = pts - np.roll(pts, 1, axis=0)
    e_out = np.roll(pts, -1, axis=0) - pts
    winding = np.sum(np.arctan2(
        e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0],
        np.sum(e_in * e_out, axis=1)))
    if abs(winding - 2 * math.pi) > 1e-6:
        raise InvalidGeometryError("Polygon is self-intersecting")
    return pts


class ConvexPolygon:
    """Strictly convex polygon with counter-clockwise vertices."""
    __slots__ = ('_vertices',)

    def __init__(self, vertices) -> None:
        pts = _normalize(vertices)
        pts.setflags(write=False)
        self._vertices = pts

    @classmethod
    def _unchecked(cls, pts: np.ndarray) -> 'ConvexPolygon':
        # vertices already counter-clockwise and strictly convex, e.g. a
        # rigid motion of a validated polygon
        if not np.all(np.isfinite(pts)):
            raise InvalidGeometryError("Polygon vertices must be finite")
        polygon = cls.__new__(cls)
        pts.setflags(write=False)
        polygon._vertices = pts
        return polygon

    @classmethod
    def rectangle(cls, length: float, width: float) -> 'ConvexPolygon':
        """Body-frame box, length along the body x-axis."""
        hl, hw = 0.5 * length, 0.5 * width
        return cls([(-hl, -hw), (hl, -hw), (hl, hw), (-hl, hw)])

    @classmethod
    def regular(cls, radius: float, n: int = 16,
                center: Sequence[float] = (0.0, 0.0)) -> 'ConvexPolygon':
        angles = 2 * np.pi * np.arange(n) / n
        return cls(np.column_stack([center[0] + radius * np.cos(angles),
                                    center[1] + radius * np.sin(angles)]))

    @classmethod
    def point(cls, eps: float = POINT_FOOTPRINT_EPS) -> 'ConvexPolygon':
        return cls.regular(eps, 3)

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __repr__(self) -> str:
        pts = ', '.join(f"({x:.4g}, {y:.4g})" for x, y in self._vertices)
        return f"ConvexPolygon([{pts}])"

    def edges(self) -> np.ndarray:
        return np.roll(self._vertices, -1, axis=0) - self._vertices

    @property
    def area(self) -> float:
        return _signed_area(self._vertices)

    def centroid(self) -> np.ndarray:
        v = self._vertices
        nxt = np.roll(v, -1, axis=0)
        w = v[:, 0] * nxt[:, 1] - nxt[:, 0] * v[:, 1]
        a = 3.0 * np.sum(w)
        return np.array([np.sum((v[:, 0] + nxt[:, 0]) * w) / a,
                         np.sum((v[:, 1] + nxt[:, 1]) * w) / a])

    def circumradius(self, center=None) -> float:
        c = np.zeros(2) if center is None else np.asarray(center, float)
        return float(np.max(np.linalg.norm(self._vertices - c, axis=1)))

    def translated(self, offset) -> 'ConvexPolygon':
        return ConvexPolygon._unchecked(
            self._vertices + np.asarray(offset, float))

    def rotated(self, theta: float) -> 'ConvexPolygon':
        return ConvexPolygon._unchecked(self._vertices @ rotation(theta).T)

    def transformed(self, position, heading: float) -> 'ConvexPolygon':
        """Body frame to world frame."""
        return ConvexPolygon._unchecked(
            self._vertices @ rotation(heading).T +
            np.asarray(position, float))

    def negated(self) -> 'ConvexPolygon':
        return ConvexPolygon._unchecked(-self._vertices)

    def _edge_offsets(self, point) -> np.ndarray:
        # signed distance of point to each edge line, positive outside
        e = self.edges()
        lengths = np.linalg.norm(e, axis=1)
        rel = np.asarray(point, float) - self._vertices
        return -(e[:, 0] * rel[:, 1] - e[:, 1] * rel[:, 0]) / lengths

    def contains(self, point, tol: float = MEMBERSHIP_TOL) -> bool:
        return bool(np.all(self._edge_offsets(point) <= tol))

    def closest_point(self, point) -> np.ndarray:
        """Closest point of the boundary."""
        p = np.asarray(point, float)
        a = self._vertices
        d = self.edges()
        t = np.clip(np.sum((p - a) * d, axis=1) / np.sum(d * d, axis=1),
                    0.0, 1.0)
        q = a + t[:, None] * d
        return q[int(np.argmin(np.linalg.norm(q - p, axis=1)))]

    def signed_distance(self, point) -> float:
        """Distance to the boundary, negative inside."""
        offsets = self._edge_offsets(point)
        if np.all(offsets <= 0.0):
            return float(np.max(offsets))
        return float(np.linalg.norm(
            self.closest_point(point) - np.asarray(point, float)))

    def bounding_disc(self, n: int = 16) -> 'ConvexPolygon':
        """Regular n-gon containing the smallest centroid-centred disc."""
        center = self.centroid()
        radius = self.circumradius(center)
        return ConvexPolygon.regular(radius / math.cos(math.pi / n), n, center)

    def edge_half_planes(self) -> List[HalfPlane]:
        """Inward half-planes whose intersection is the polygon."""
        e = self.edges()
        normals = np.column_stack([-e[:, 1], e[:, 0]]) / \
            np.linalg.norm(e, axis=1)[:, None]
        return [HalfPlane.unit(v, n) for v, n in zip(self._vertices, normals)]

    def allclose(self, other: 'ConvexPolygon', atol: float = 1e-9) -> bool:
        if len(self) != len(other):
            return False
        for shift in range(len(other)):
            if np.allclose(self._vertices,
                           np.roll(other.vertices, shift, axis=0),
                           atol=atol, rtol=0.0):
                return True
        return False


def convex_hull(points) -> ConvexPolygon:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise InvalidGeometryError("Hull points must be finite")
    pts = np.unique(pts, axis=0)
    if len(pts) < 3:
        raise InvalidGeometryError(
            f"Convex hull needs at least 3 distinct points, got {len(pts)}")
    try:
        hull = ConvexHull(pts)
    except QhullError as e:
        raise InvalidGeometryError("Hull points are collinear") from e
    return ConvexPolygon(pts[hull.vertices])


def _from_bottom(vertices: np.ndarray) -> np.ndarray:
    # lowest vertex, leftmost among ties, first
    start = int(np.lexsort((vertices[:, 0], vertices[:, 1]))[0])
    return np.roll(vertices, -start, axis=0)


def minkowski_sum(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon:
    P = _from_bottom(p.vertices)
    Q = _from_bottom(q.vertices)
    edges = np.vstack([np.roll(P, -1, axis=0) - P,
                       np.roll(Q, -1, axis=0) - Q])
    # from the bottom vertex each edge sequence is sorted by polar angle in
    # [0, 2pi); a stable sort of the concatenation merges the two sequences
    angles = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), 2 * np.pi)
    merged = edges[np.argsort(angles, kind='stable')]
    path = np.vstack([np.zeros((1, 2)), np.cumsum(merged[:-1], axis=0)])
    pts = P[0] + Q[0] + path
    # parallel edges of p and q leave flat vertices behind
    e_in = pts - np.roll(pts, 1, axis=0)
    e_out = np.roll(pts, -1, axis=0) - pts
    turn = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    scale = np.linalg.norm(e_in, axis=1) * np.linalg.norm(e_out, axis=1)
    corners = pts[turn > GEOM_TOL * scale]
    if len(corners) < 3:
        return ConvexPolygon(pts)
    return ConvexPolygon._unchecked(corners)


def minkowski_difference(b: ConvexPolygon, a: ConvexPolygon) -> ConvexPolygon:
    """B (+) (-A) = {b - a}: B inflated by A, A reduced to a point."""
    if len(b) < 3 or len(a) < 3:
        raise InvalidGeometryError("Minkowski difference needs polygons")
    return minkowski_sum(b, a.negated())
