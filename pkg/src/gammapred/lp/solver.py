"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import List, Optional, Sequence, Tuple

import math

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np

from ..geometry.constants import LP_BISECTION_TOL, LP_PARALLEL_TOL, LP_TOL
from ..geometry import ConvexPolygon, HalfPlane

# bisection steps of the infeasible fallback are capped at this many
MAX_BISECTION_STEPS = 100


class KinematicConfigurationError(ValueError):
    pass


@dataclass(frozen=True, config=ConfigDict(arbitrary_types_allowed=True))
class VelocityProgram:
    """argmin ||v - target|| over the geometric half-planes and K."""
    target: np.ndarray
    half_planes: List[HalfPlane]
    kinematic_polygon: Optional[ConvexPolygon]

    def kinematic_half_planes(self) -> List[HalfPlane]:
        if self.kinematic_polygon is None or \
                self.kinematic_polygon.area <= 0.0:
            raise KinematicConfigurationError(
                "Velocity program needs a non-empty kinematic polygon")
        return self.kinematic_polygon.edge_half_planes()

    def max_violation(self, v) -> float:
        """Largest geometric violation, zero or negative when satisfied."""
        if not self.half_planes:
            return -math.inf
        return max(hp.violation(v) for hp in self.half_planes)


def _solve_on_line(lines: Sequence[HalfPlane], i: int,
                   target: np.ndarray) -> Optional[np.ndarray]:
    """Closest point to target on the boundary of lines[i] within lines[:i]."""
    p, n = lines[i].point, lines[i].normal
    d = np.array([-n[1], n[0]])
    t_left, t_right = -math.inf, math.inf
    for j in range(i):
        pj, nj = lines[j].point, lines[j].normal
        a = d[0] * nj[0] + d[1] * nj[1]
        b = (pj[0] - p[0]) * nj[0] + (pj[1] - p[1]) * nj[1]
        if abs(a) <= LP_PARALLEL_TOL:
            if b > LP_TOL:
                return None
            continue
        t = b / a
        if a > 0:
            t_left = max(t_left, t)
        else:
            t_right = min(t_right, t)
        if t_left > t_right + LP_TOL:
            return None
    t = d[0] * (target[0] - p[0]) + d[1] * (target[1] - p[1])
    t = min(max(t, t_left), t_right)
    if t_left > t_right:
        t = 0.5 * (t_left + t_right)
    return p + t * d


def _incremental(lines: Sequence[HalfPlane],
                 target: np.ndarray) -> Tuple[np.ndarray, bool]:
    result = np.array(target, dtype=float)
    for i, hp in enumerate(lines):
        if hp.violation(result) > LP_TOL:
            point = _solve_on_line(lines, i, target)
            if point is None:
                return result, False
            result = point
    return result, True


def _relaxed(kinematic: List[HalfPlane], geometric: Sequence[HalfPlane],
             level: float, target: np.ndarray) -> Tuple[np.ndarray, bool]:
    return _incremental(
        kinematic + [hp.shifted(level) for hp in geometric], target)


def solve(program: VelocityProgram) -> Tuple[np.ndarray, bool]:
    """Minimum-norm point of the constraint set, or a min-max fallback.

    Kinematic half-planes are processed first, then the geometric ones in
    the given order. When the set is empty the kinematic constraints stay
    hard and every geometric half-plane is relaxed by the same level; the
    smallest level with a solution is found by bisection and the closest
    point to the target at that level is returned with feasible = False.
    """
    target = np.asarray(program.target, dtype=float)
    kinematic = program.kinematic_half_planes()
    geometric = list(program.half_planes)
    v, feasible = _incremental(kinematic + geometric, target)
    if feasible:
        return v, True
    inner, ok = _incremental(kinematic, target)
    if not ok:
        raise KinematicConfigurationError(
            "Kinematic polygon constraints are inconsistent")
    # the centroid of K satisfies the kinematics strictly
    center = program.kinematic_polygon.centroid()
    hi = max(program.max_violation(center), 0.0) + LP_TOL
    lo = 0.0
    best, ok = _relaxed(kinematic, geometric, hi, target)
    if not ok:
        best = inner
    for _ in range(MAX_BISECTION_STEPS):
        if hi - lo <= LP_BISECTION_TOL * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        candidate, ok = _relaxed(kinematic, geometric, mid, target)
        if ok:
            hi, best = mid, candidate
        else:
            lo = mid
    return best, False


def solve_velocity(target, half_planes: Sequence[HalfPlane],
                   kinematic_polygon: ConvexPolygon
                   ) -> Tuple[np.ndarray, bool]:
    return solve(VelocityProgram(target=np.asarray(target, float),
                                 half_planes=list(half_planes),
                                 kinematic_polygon=kinematic_polygon))
