"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, List, Optional, Tuple

from ..behavior import AgentHistory, BehaviorPosterior, CandidateGrid
from ..config import EngineConfig
from ..geometry import ConvexPolygon
from ..kinematics import AgentType, HolonomicModel, KinematicProfile, \
    cached_profiles, holonomic_disc
from .state import AgentState, WorldState

# length x width (m) of agents whose dataset rows carry no dimensions
DEFAULT_DIMENSIONS: Dict[AgentType, Tuple[float, float]] = {
    AgentType.PEDESTRIAN: (0.5, 0.5),
    AgentType.GYRO_SCOOTER: (0.8, 0.5),
    AgentType.BICYCLE: (1.8, 0.6),
    AgentType.MOTORBIKE: (2.2, 0.8),
    AgentType.CAR: (4.5, 1.8),
    AgentType.VAN: (5.0, 2.0),
    AgentType.BUS: (11.0, 2.5),
    AgentType.TRUCK: (9.0, 2.5),
    AgentType.STATIC_OBSTACLE: (1.0, 1.0),
}
# vertex count of the disc polygons used without polygon footprints
DISC_FOOTPRINT_VERTICES = 16


def footprint_for(type_tag: AgentType, length: Optional[float] = None,
                  width: Optional[float] = None) -> ConvexPolygon:
    default_length, default_width = DEFAULT_DIMENSIONS[type_tag]
    return ConvexPolygon.rectangle(
        length if length is not None else default_length,
        width if width is not None else default_width)


class WorldBuilder:
    """Turns observations into agents and worlds, ablations applied."""

    def __init__(self, config: EngineConfig,
                 profiles: Optional[Dict[AgentType, KinematicProfile]] = None
                 ) -> None:
        self.config = config
        if profiles is None:
            profiles = cached_profiles(config.profiles)
        if not config.use_kinematics:
            profiles = {tag: self._holonomic(p) for tag, p in profiles.items()}
        self.profiles = profiles
        self._grids: Dict[AgentType, CandidateGrid] = dict()
        self._footprints: Dict[tuple, ConvexPolygon] = dict()

    @classmethod
    def with_period(cls, config: EngineConfig, dt: float,
                    profiles: Optional[Dict[AgentType,
                                            KinematicProfile]] = None
                    ) -> 'WorldBuilder':
        """Builder whose worlds step dt seconds, the data's frame period."""
        if config.dt != dt:
            config = config.replace(
                dt=dt, controller_dt=min(config.controller_dt, dt))
        return cls(config, profiles)

    @staticmethod
    def _holonomic(profile: KinematicProfile) -> KinematicProfile:
        if profile.is_static:
            return profile
        s_max = profile.model.s_max
        return KinematicProfile(
            type_tag=profile.type_tag, model=HolonomicModel(s_max=s_max),
            epsilon_max=profile.epsilon_max, tau=profile.tau,
            trackable_set=holonomic_disc(s_max))

    def profile(self, type_tag: AgentType) -> KinematicProfile:
        try:
            profile = self.profiles[type_tag]
        except KeyError:
            raise KeyError(f"No kinematic profile for '{type_tag}'") from None
        if profile.trackable_set is None and not profile.is_static:
            raise ValueError(f"Profile '{type_tag}' has no trackable set")
        return profile

    def grid(self, type_tag: AgentType) -> CandidateGrid:
        if type_tag not in self._grids:
            self._grids[type_tag] = self.config.grid(type_tag)
        return self._grids[type_tag]

    def footprint(self, type_tag: AgentType, length: Optional[float] = None,
                  width: Optional[float] = None) -> ConvexPolygon:
        """Body-frame footprint.

        Without polygon footprints, and for agents that turn freely, this is
        the disc around every heading of the box.
        """
        key = (type_tag, length, width)
        if key not in self._footprints:
            polygon = footprint_for(type_tag, length, width)
            profile = self.profiles.get(type_tag)
            if not self.config.use_polygons or \
                    (profile is not None and profile.turns_freely):
                polygon = polygon.bounding_disc(DISC_FOOTPRINT_VERTICES)
            self._footprints[key] = polygon
        return self._footprints[key]

    def agent(self, agent_id: int, type_tag: AgentType,
              history: AgentHistory, heading: Optional[float] = None,
              length: Optional[float] = None, width: Optional[float] = None,
              behavior: Optional[BehaviorPosterior] = None) -> AgentState:
        if heading is None:
            heading = history.heading()
        return AgentState(
            id=agent_id, type_tag=type_tag, position=history.position,
            velocity=history.velocity(), heading=heading,
            footprint=self.footprint(type_tag, length, width),
            profile=self.profile(type_tag), history=history,
            behavior=behavior)

    def world(self, agents: List[AgentState],
              obstacles: Optional[List[ConvexPolygon]] = None) -> WorldState:
        return WorldState(agents=agents, obstacles=list(obstacles or []),
                          dt=self.config.dt, tau=self.config.tau,
                          t_pred_steps=self.config.t_pred_steps,
                          controller_dt=self.config.controller_dt)
