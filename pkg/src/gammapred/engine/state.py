"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, List, Optional, Tuple
from functools import cached_property

import math

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np

from ..behavior import AgentHistory, BehaviorPosterior
from ..geometry import ConvexPolygon, minkowski_difference
from ..kinematics import AgentType, KinematicProfile, Pose

_ARBITRARY = ConfigDict(arbitrary_types_allowed=True)


@dataclass(frozen=True, config=_ARBITRARY)
class AgentState:
    """One agent at one instant.

    velocity is the realized velocity of the last history step and serves
    as the optimization velocity; footprint is in the body frame.
    """
    id: int
    type_tag: AgentType
    position: np.ndarray
    velocity: np.ndarray
    heading: float
    footprint: ConvexPolygon
    profile: KinematicProfile
    history: AgentHistory
    behavior: Optional[BehaviorPosterior] = None

    def __post_init__(self):
        if not math.isfinite(self.heading):
            raise ValueError(f"Agent {self.id}: heading must be finite")
        if not (np.all(np.isfinite(self.position)) and
                np.all(np.isfinite(self.velocity))):
            raise ValueError(f"Agent {self.id}: non-finite state")

    @property
    def is_static(self) -> bool:
        return self.profile.is_static

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))

    @property
    def pose(self) -> Pose:
        return Pose(float(self.position[0]), float(self.position[1]),
                    self.heading, self.speed)

    @cached_property
    def world_footprint(self) -> ConvexPolygon:
        """Footprint in the world frame.

        Agents that turn freely carry a heading-independent disc, which is
        only translated; the constraint built from it still holds after the
        heading changes.
        """
        if self.profile.turns_freely:
            return self.footprint.translated(self.position)
        return self.footprint.transformed(self.position, self.heading)

    def moved(self, frame: int, position: np.ndarray,
              heading: float) -> 'AgentState':
        """Commit one step: history grows, velocity is the realized one."""
        history = self.history.appended(frame, position)
        return AgentState(id=self.id, type_tag=self.type_tag,
                          position=np.asarray(position, float),
                          velocity=history.velocity(), heading=heading,
                          footprint=self.footprint, profile=self.profile,
                          history=history, behavior=self.behavior)


@dataclass(frozen=True, config=_ARBITRARY)
class WorldState:
    agents: List[AgentState]
    obstacles: List[ConvexPolygon]
    dt: float = 0.4
    tau: float = 1.0
    t_pred_steps: int = 12
    controller_dt: float = 0.05

    def __post_init__(self):
        if self.dt <= 0 or self.tau <= 0:
            raise ValueError("World dt and tau must be positive")
        if self.t_pred_steps < 1:
            raise ValueError("World t_pred_steps must be at least 1")
        ids = [a.id for a in self.agents]
        if len(set(ids)) != len(ids):
            raise ValueError("Agent ids must be unique within a world")

    @property
    def horizon(self) -> float:
        return self.dt * self.t_pred_steps

    def agent(self, agent_id: int) -> AgentState:
        for a in self.agents:
            if a.id == agent_id:
                return a
        raise KeyError(f"No agent {agent_id} in world")

    def by_id(self) -> Dict[int, AgentState]:
        return {a.id: a for a in self.agents}

    def with_agents(self, agents: List[AgentState]) -> 'WorldState':
        return WorldState(agents=agents, obstacles=self.obstacles,
                          dt=self.dt, tau=self.tau,
                          t_pred_steps=self.t_pred_steps,
                          controller_dt=self.controller_dt)

    @cached_property
    def _relative(self) -> Dict[Tuple[int, object], ConvexPolygon]:
        return dict()

    def relative_geometry(self, agent: AgentState, key: object,
                          polygon: ConvexPolygon) -> ConvexPolygon:
        """polygon (-) agent's footprint, shared by this snapshot's steps.

        key names polygon: another agent's id or ('obstacle', index). The
        pair of two agents is computed once and negated for the other one.
        """
        cached = self._relative.get((agent.id, key))
        if cached is not None:
            return cached
        if isinstance(key, int) and (key, agent.id) in self._relative:
            rel = self._relative[(key, agent.id)].negated()
        else:
            rel = minkowski_difference(polygon, agent.world_footprint)
        self._relative[(agent.id, key)] = rel
        return rel
