from typing import Dict, List, Optional, Sequence
from functools import lru_cache

import math

import numpy as np
import pytest

from shapely.geometry import Polygon

from gammapred.behavior import AgentHistory
from gammapred.config import EngineConfig
from gammapred.engine import AgentState, WorldBuilder, WorldState
from gammapred.geometry import ConvexPolygon, convex_hull
from gammapred.kinematics import AgentType, CarLikeModel, HolonomicModel, \
    KinematicProfile, estimate_trackable_set, holonomic_disc


def fail_if(boolean):
    if boolean:
        pytest.fail()


def pedestrian_profile(s_max: float = 1.8) -> KinematicProfile:
    return KinematicProfile(type_tag=AgentType.PEDESTRIAN,
                            model=HolonomicModel(s_max=s_max),
                            epsilon_max=0.2, tau=1.0,
                            trackable_set=holonomic_disc(s_max))


def history(p0: Sequence[float], v: Sequence[float], n: int = 3,
            dt: float = 0.4, a: Optional[Sequence[float]] = None
            ) -> AgentHistory:
    """n frames ending at step 0 with constant velocity / acceleration."""
    p0, v = np.asarray(p0, float), np.asarray(v, float)
    a = np.zeros(2) if a is None else np.asarray(a, float)
    frames = list(range(-n + 1, 1))
    return AgentHistory(frames, [p0 + v * k * dt + 0.5 * a * (k * dt) ** 2
                                 for k in frames], dt)


def builder(config: Optional[EngineConfig] = None,
            profiles: Optional[Dict] = None) -> WorldBuilder:
    return WorldBuilder(config or EngineConfig(), profiles)


def agent(b: WorldBuilder, agent_id: int, p0, v,
          type_tag: AgentType = AgentType.PEDESTRIAN, **kwargs) -> AgentState:
    return b.agent(agent_id, type_tag,
                   history(p0, v, dt=b.config.dt), **kwargs)


def world(b: WorldBuilder, agents: List[AgentState],
          obstacles: Optional[List[ConvexPolygon]] = None) -> WorldState:
    return b.world(agents, obstacles)


def random_convex(rng: np.random.Generator, center, radius: float,
                  n: int = 6) -> ConvexPolygon:
    """Random convex polygon from sorted angles on a jittered circle."""
    angles = np.sort(rng.uniform(0, 2 * math.pi, n))
    radii = radius * rng.uniform(0.6, 1.0, n)
    pts = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
    return convex_hull(pts + np.asarray(center, float))


def shapely_polygon(polygon: ConvexPolygon):
    return Polygon(polygon.vertices)


def overlap_area(a: ConvexPolygon, b: ConvexPolygon) -> float:
    return shapely_polygon(a).intersection(shapely_polygon(b)).area


@lru_cache(maxsize=1)
def car_profile() -> KinematicProfile:
    """Small car on a coarse grid, trackable set estimated."""
    profile = KinematicProfile(
        type_tag=AgentType.CAR,
        model=CarLikeModel(wheelbase=2.5, max_steer=0.6, s_max=6.0,
                           a_max=3.0),
        epsilon_max=0.5, tau=1.0, grid_ds=0.5, grid_dphi=15.0)
    return profile.with_trackable_set(estimate_trackable_set(profile))


def small_profiles() -> Dict[AgentType, KinematicProfile]:
    return {AgentType.PEDESTRIAN: pedestrian_profile(),
            AgentType.CAR: car_profile(),
            AgentType.STATIC_OBSTACLE: KinematicProfile(
                type_tag=AgentType.STATIC_OBSTACLE,
                model=HolonomicModel(s_max=0.0), epsilon_max=0.0, tau=1.0)}
