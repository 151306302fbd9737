"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

import math

import numpy as np

from ..behavior import BehaviorConstraints, Intention, attention_geometry, \
    in_attention, normalize_pair, preferred_velocity, responsibility
from ..geometry.constants import GEOM_TOL, HEADING_SPEED_THRESHOLD
from ..geometry import ConvexPolygon, HalfPlane, build_velocity_obstacle, \
    closest_boundary_point, escape_half_plane
from ..kinematics import Pose, track_velocity
from ..lp import VelocityProgram, solve
from .state import WorldState

# obstacles closer than this many footprint circumradii are always attended
OBSTACLE_ATTENTION_FACTOR = 1.5
# responsibility a neighbor takes when its behavior is unknown
UNKNOWN_RESPONSIBILITY = 0.5


class StepResult(NamedTuple):
    velocity: np.ndarray
    pose: Pose
    feasible: bool

    @property
    def position(self) -> np.ndarray:
        return np.array([self.pose.x, self.pose.y])


class _Neighbor(NamedTuple):
    index: int
    static: bool
    center_distance: float
    distance: float
    frontal: bool
    normal: np.ndarray
    # correction of the relative velocity toward the obstacle boundary
    u: np.ndarray
    alpha: float


def _neighbor_alpha(behavior: Optional[BehaviorConstraints],
                    distance: float) -> float:
    if behavior is None:
        return UNKNOWN_RESPONSIBILITY
    return responsibility(distance, behavior.c1, behavior.c2)


class AgentContext:
    """Candidate-independent part of one agent's step in one snapshot.

    Velocity obstacles, closest boundary points, attention distances and
    the world-frame trackable set are computed once; evaluating a behavior
    then only filters neighbors, scales corrections and solves.
    """

    def __init__(self, world: WorldState, agent_id: int,
                 neighbor_behaviors: Optional[
                     Mapping[int, BehaviorConstraints]] = None,
                 reference_offset=None,
                 max_radius: float = math.inf) -> None:
        self.world = world
        self.agent = agent = world.agent(agent_id)
        self.reference_offset = None if reference_offset is None \
            else np.asarray(reference_offset, float)
        self.neighbors: List[_Neighbor] = list()
        self._v_pref: Dict[Intention, np.ndarray] = dict()
        self._cache: Dict[tuple, StepResult] = dict()
        if agent.is_static:
            self.kinematic = None
            return
        self.kinematic = agent.profile.world_trackable_set(agent.heading)
        self.v_opt = agent.velocity
        self.reach = OBSTACLE_ATTENTION_FACTOR * agent.footprint.circumradius()
        behaviors = neighbor_behaviors or dict()

        candidates: List[Tuple[float, int, object, ConvexPolygon,
                               np.ndarray, bool,
                               Optional[BehaviorConstraints]]] = list()
        for other in world.agents:
            if other.id == agent.id:
                continue
            behavior = behaviors.get(other.id)
            if behavior is None and other.behavior is not None:
                behavior = other.behavior.map_candidate
            d = float(np.linalg.norm(other.position - agent.position))
            limit = max(max_radius, self.reach) if other.is_static \
                else max_radius
            if d - other.footprint.circumradius() > limit:
                continue
            candidates.append((d, len(candidates), other.id,
                               other.world_footprint, other.velocity,
                               other.is_static, behavior))
        for k, polygon in enumerate(world.obstacles):
            d = float(np.linalg.norm(polygon.centroid() - agent.position))
            candidates.append((d, len(candidates), ('obstacle', k), polygon,
                               np.zeros(2), True, None))
        candidates.sort(key=lambda c: (c[0], c[1]))

        for d, index, key, polygon, velocity, static, behavior in \
                candidates:
            distance, frontal = attention_geometry(
                agent.position, agent.heading, polygon)
            limit = max(max_radius, self.reach) if static else max_radius
            if distance > limit:
                continue
            normal, u = self._correction(
                world.relative_geometry(agent, key, polygon), velocity)
            self.neighbors.append(_Neighbor(
                index=index, static=static, center_distance=d,
                distance=distance, frontal=frontal, normal=normal, u=u,
                alpha=0.0 if static else _neighbor_alpha(behavior, d)))

    def _correction(self, rel: ConvexPolygon, velocity: np.ndarray
                    ) -> Tuple[np.ndarray, np.ndarray]:
        if rel.contains(np.zeros(2), tol=GEOM_TOL):
            hp = escape_half_plane(rel, self.v_opt, velocity, 1.0,
                                   self.world.dt)
            return hp.normal, hp.point - self.v_opt
        vo = build_velocity_obstacle(rel, self.world.tau)
        v_rel = self.v_opt - velocity
        point, normal = closest_boundary_point(vo, v_rel)
        return normal, point - v_rel

    def preferred_velocity(self, intention: Intention) -> np.ndarray:
        if intention not in self._v_pref:
            self._v_pref[intention] = preferred_velocity(
                self.agent.history, intention, self.world.horizon,
                self.reference_offset)
        return self._v_pref[intention]

    def half_planes(self, behavior: BehaviorConstraints
                    ) -> Tuple[List[HalfPlane], tuple]:
        """Constraints of the attended neighbors, nearest first."""
        planes = list()
        key = list()
        for nb in self.neighbors:
            if nb.static:
                if nb.distance > self.reach and not in_attention(
                        nb.distance, nb.frontal, behavior.r_front,
                        behavior.r_rear):
                    continue
                alpha = 1.0
            else:
                if not in_attention(nb.distance, nb.frontal,
                                    behavior.r_front, behavior.r_rear):
                    continue
                alpha, _ = normalize_pair(
                    responsibility(nb.center_distance, behavior.c1,
                                   behavior.c2), nb.alpha)
            planes.append(HalfPlane(self.v_opt + alpha * nb.u, nb.normal))
            key.append((nb.index, alpha))
        return planes, tuple(key)

    def step(self, behavior: BehaviorConstraints) -> StepResult:
        agent = self.agent
        if agent.is_static:
            return StepResult(np.zeros(2), agent.pose, True)
        planes, key = self.half_planes(behavior)
        key = (behavior.intention, key)
        if key in self._cache:
            return self._cache[key]
        v_new, feasible = solve(VelocityProgram(
            target=self.preferred_velocity(behavior.intention),
            half_planes=planes, kinematic_polygon=self.kinematic))
        trajectory, _ = track_velocity(agent.profile, agent.pose, v_new,
                                       self.world.dt,
                                       self.world.controller_dt)
        pose = trajectory[-1]
        if agent.profile.turns_freely:
            heading = agent.heading
            if math.hypot(v_new[0], v_new[1]) > HEADING_SPEED_THRESHOLD:
                heading = math.atan2(v_new[1], v_new[0])
            pose = Pose(pose.x, pose.y, heading, pose.speed)
        result = StepResult(v_new, pose, feasible)
        self._cache[key] = result
        return result


def step_agent(world: WorldState, agent_id: int,
               behavior: BehaviorConstraints,
               reference_offset=None) -> Tuple[np.ndarray, Pose]:
    """One constrained velocity choice and one controller step."""
    context = AgentContext(world, agent_id,
                           reference_offset=reference_offset,
                           max_radius=behavior.r_front)
    result = context.step(behavior)
    return result.velocity, result.pose
