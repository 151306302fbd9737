"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Tuple

import numpy as np

from .constants import GEOM_TOL, MEMBERSHIP_TOL
from .halfplane import HalfPlane
from .polygon import ConvexPolygon


class OverlapError(ValueError):
    pass


class VelocityObstacle:
    """Relative velocities that reach the relative geometry within tau.

    The region is the tangent cone of the relative geometry cut off by its
    origin-facing vertex chain scaled by 1/tau. The boundary is walked with
    the region on its left: in along the left leg, over the cutoff chain
    (left tangent point to right tangent point), out along the right leg.
    """
    __slots__ = ('leg_left', 'leg_right', 'cutoff_chain', 'tau')

    def __init__(self, leg_left, leg_right, cutoff_chain, tau: float) -> None:
        self.leg_left = np.asarray(leg_left, float)
        self.leg_right = np.asarray(leg_right, float)
        self.cutoff_chain = np.asarray(cutoff_chain, float).reshape(-1, 2)
        self.tau = float(tau)
        for arr in (self.leg_left, self.leg_right, self.cutoff_chain):
            arr.setflags(write=False)

    def _chain_normals(self) -> np.ndarray:
        d = np.diff(self.cutoff_chain, axis=0)
        n = np.column_stack([d[:, 1], -d[:, 0]])
        return n / np.linalg.norm(n, axis=1)[:, None]

    def contains(self, v, tol: float = MEMBERSHIP_TOL) -> bool:
        v = np.asarray(v, float)
        if self.leg_right[0] * v[1] - self.leg_right[1] * v[0] < -tol:
            return False
        if v[0] * self.leg_left[1] - v[1] * self.leg_left[0] < -tol:
            return False
        if len(self.cutoff_chain) < 2:
            return True
        offsets = np.sum((v - self.cutoff_chain[:-1]) *
                         self._chain_normals(), axis=1)
        return bool(np.all(offsets <= tol))

    def _boundary_candidates(self, v: np.ndarray
                             ) -> Tuple[np.ndarray, np.ndarray]:
        chain = self.cutoff_chain
        first, last = chain[0], chain[-1]
        points = []
        normals = []

        t = max(0.0, float(np.dot(v - first, self.leg_left)))
        points.append(first + t * self.leg_left)
        normals.append(np.array([-self.leg_left[1], self.leg_left[0]]))

        if len(chain) >= 2:
            a = chain[:-1]
            d = np.diff(chain, axis=0)
            s = np.clip(np.sum((v - a) * d, axis=1) /
                        np.sum(d * d, axis=1), 0.0, 1.0)
            points.extend(a + s[:, None] * d)
            normals.extend(self._chain_normals())

        t = max(0.0, float(np.dot(v - last, self.leg_right)))
        points.append(last + t * self.leg_right)
        normals.append(np.array([self.leg_right[1], -self.leg_right[0]]))
        return np.array(points), np.array(normals)

    def distance_to_boundary(self, v) -> float:
        v = np.asarray(v, float)
        points, _ = self._boundary_candidates(v)
        return float(np.min(np.linalg.norm(points - v, axis=1)))

    def closest_boundary_point(self, v_rel) -> Tuple[np.ndarray, np.ndarray]:
        return closest_boundary_point(self, v_rel)


def build_velocity_obstacle(rel_geometry: ConvexPolygon,
                            tau: float) -> VelocityObstacle:
    if not tau > 0:
        raise ValueError(f"Velocity obstacle horizon must be positive: {tau}")
    if rel_geometry.contains(np.zeros(2), tol=GEOM_TOL):
        raise OverlapError("Agents overlap: origin inside B (-) A")
    v = rel_geometry.vertices
    c = rel_geometry.centroid()
    # angles relative to the centroid direction; the geometry subtends less
    # than pi from outside so these never wrap
    angles = np.arctan2(c[0] * v[:, 1] - c[1] * v[:, 0], v @ c)
    norms = np.linalg.norm(v, axis=1)

    def tangent(extreme: float) -> int:
        ties = np.flatnonzero(np.abs(angles - extreme) <= 1e-12)
        return int(ties[np.argmax(norms[ties])])

    left = tangent(np.max(angles))
    right = tangent(np.min(angles))
    n = len(v)
    chain = [v[left]]
    i = left
    while i != right:
        i = (i + 1) % n
        chain.append(v[i])
    return VelocityObstacle(leg_left=v[left] / norms[left],
                            leg_right=v[right] / norms[right],
                            cutoff_chain=np.array(chain) / tau,
                            tau=tau)


def closest_boundary_point(vo: VelocityObstacle,
                           v_rel) -> Tuple[np.ndarray, np.ndarray]:
    """Closest point of the boundary and the outward normal there.

    Outside the region the normal points from the boundary point to v_rel,
    which makes the resulting half-plane a supporting one.
    """
    v = np.asarray(v_rel, float)
    points, normals = vo._boundary_candidates(v)
    distances = np.linalg.norm(points - v, axis=1)
    k = int(np.argmin(distances))
    point = points[k]
    if distances[k] > GEOM_TOL and not vo.contains(v, tol=0.0):
        return point, (v - point) / distances[k]
    return point, normals[k]


def responsibility_half_plane(v_opt_a, v_opt_b, vo: VelocityObstacle,
                              alpha: float) -> HalfPlane:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"Responsibility must lie in [0, 1]: {alpha}")
    v_opt_a = np.asarray(v_opt_a, float)
    v_rel = v_opt_a - np.asarray(v_opt_b, float)
    point, normal = closest_boundary_point(vo, v_rel)
    u = point - v_rel
    return HalfPlane(v_opt_a + alpha * u, normal)


def escape_half_plane(rel_geometry: ConvexPolygon, v_opt_a, v_opt_b,
                      alpha: float, dt: float) -> HalfPlane:
    """Constraint for agents that already overlap.

    The relative velocity has to carry the origin across the nearest edge of
    B (-) A within one time step.
    """
    if not dt > 0:
        raise ValueError(f"Time step must be positive: {dt}")
    v_opt_a = np.asarray(v_opt_a, float)
    v_rel = v_opt_a - np.asarray(v_opt_b, float)
    verts = rel_geometry.vertices
    edges = rel_geometry.edges()
    lengths = np.linalg.norm(edges, axis=1)
    outward = np.column_stack([edges[:, 1], -edges[:, 0]]) / lengths[:, None]
    depth = np.sum(outward * verts, axis=1)
    k = int(np.argmin(depth))
    normal = outward[k]
    needed = max(float(depth[k]), 0.0) / dt
    u = max(0.0, needed - float(np.dot(normal, v_rel))) * normal
    return HalfPlane(v_opt_a + alpha * u, normal)

