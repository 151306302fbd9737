"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Collection, Dict, List, Mapping, Optional, Sequence

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np

from ..behavior import AgentHistory, BehaviorConstraints, \
    BehaviorPosterior, Intention, bayes_update
from ..geometry import ConvexPolygon
from ..kinematics import AgentType
from .state import WorldState
from .step import AgentContext
from .world import WorldBuilder

# behavior of agents without a posterior
DEFAULT_BEHAVIOR = BehaviorConstraints(
    intention=Intention.KEEP_VELOCITY, r_front=8.0, r_rear=2.0, c1=0.0,
    c2=0.5)


@dataclass(frozen=True, config=ConfigDict(arbitrary_types_allowed=True))
class AgentTrack:
    """Everything observed about one agent, at step indices."""
    id: int
    type_tag: AgentType
    history: AgentHistory
    headings: Optional[Dict[int, float]] = None
    length: Optional[float] = None
    width: Optional[float] = None

    def present(self, step: int) -> bool:
        return bool(np.any(self.history.frames == step))

    def position(self, step: int) -> np.ndarray:
        match = np.flatnonzero(self.history.frames == step)
        if len(match) == 0:
            raise KeyError(f"Agent {self.id} not observed at step {step}")
        return self.history.positions[int(match[0])]

    def heading_at(self, step: int) -> Optional[float]:
        if self.headings is None:
            return None
        return self.headings.get(step)


def world_at(builder: WorldBuilder, tracks: Mapping[int, AgentTrack],
             step: int, obstacles: Sequence[ConvexPolygon] = (),
             posteriors: Optional[Mapping[int, BehaviorPosterior]] = None
             ) -> WorldState:
    """Snapshot of every agent observed at step, histories cut there."""
    agents = list()
    posteriors = posteriors or dict()
    for agent_id in sorted(tracks):
        track = tracks[agent_id]
        if not track.present(step):
            continue
        history = track.history.until(step)
        agents.append(builder.agent(
            agent_id, track.type_tag, history,
            heading=track.heading_at(step), length=track.length,
            width=track.width, behavior=posteriors.get(agent_id)))
    return builder.world(agents, list(obstacles))


def frozen_behaviors(world: WorldState,
                     behaviors: Optional[
                         Mapping[int, BehaviorConstraints]] = None
                     ) -> Dict[int, BehaviorConstraints]:
    out = dict()
    for agent in world.agents:
        if behaviors is not None and agent.id in behaviors:
            out[agent.id] = behaviors[agent.id]
        elif agent.behavior is not None:
            out[agent.id] = agent.behavior.map_candidate
        else:
            out[agent.id] = DEFAULT_BEHAVIOR
    return out


def advance(world: WorldState, behaviors: Mapping[int, BehaviorConstraints],
            offsets: Optional[Mapping[int, np.ndarray]] = None,
            agent_ids: Optional[Collection[int]] = None) -> WorldState:
    """One Jacobi step: every agent reads the same snapshot."""
    offsets = offsets or dict()
    moves = list()
    for agent in world.agents:
        if agent.is_static:
            moves.append((agent.position, agent.heading))
        elif agent_ids is not None and agent.id not in agent_ids:
            moves.append((agent.position + agent.velocity * world.dt,
                          agent.heading))
        else:
            behavior = behaviors[agent.id]
            context = AgentContext(world, agent.id,
                                   neighbor_behaviors=behaviors,
                                   reference_offset=offsets.get(agent.id),
                                   max_radius=behavior.r_front)
            result = context.step(behavior)
            moves.append((result.position, result.pose.heading))
    agents = [agent.moved(agent.history.last_frame + 1, position, heading)
              for agent, (position, heading) in zip(world.agents, moves)]
    return world.with_agents(agents)


def predict(world: WorldState, horizon_steps: Optional[int] = None,
            behaviors: Optional[Mapping[int, BehaviorConstraints]] = None,
            offsets: Optional[Mapping[int, np.ndarray]] = None,
            agent_ids: Optional[Collection[int]] = None
            ) -> Dict[int, np.ndarray]:
    """Roll every agent forward with its behavior frozen.

    Agents outside agent_ids, when given, keep their current velocity.
    Returns one (horizon_steps, 2) array of positions per agent.
    """
    steps = world.t_pred_steps if horizon_steps is None else horizon_steps
    frozen = frozen_behaviors(world, behaviors)
    out: Dict[int, List[np.ndarray]] = {a.id: list() for a in world.agents}
    state = world
    for _ in range(steps):
        state = advance(state, frozen, offsets, agent_ids)
        for agent in state.agents:
            out[agent.id].append(agent.position)
    return {k: np.array(v).reshape(-1, 2) for k, v in out.items()}


def filter_posteriors(builder: WorldBuilder,
                      tracks: Mapping[int, AgentTrack],
                      steps: Sequence[int],
                      obstacles: Sequence[ConvexPolygon] = (),
                      posteriors: Optional[
                          Mapping[int, BehaviorPosterior]] = None
                      ) -> Dict[int, BehaviorPosterior]:
    """Bayesian behavior filtering over observed steps.

    For every step k each agent observed at k - 1 and k with at least two
    frames of history gets one update: every candidate behavior is stepped
    from the observed k - 1 snapshot and scored against the position seen
    at k. Passing the posteriors of an earlier call continues the filter.
    """
    sigma = builder.config.sigma
    current: Dict[int, BehaviorPosterior] = dict(posteriors or dict())
    for step in steps:
        world = world_at(builder, tracks, step - 1, obstacles, current)
        maps = {agent_id: p.map_candidate
                for agent_id, p in current.items()}
        updated = dict()
        for agent in world.agents:
            track = tracks[agent.id]
            if agent.is_static or len(agent.history) < 2 or \
                    not track.present(step):
                continue
            posterior = current.get(agent.id)
            if posterior is None:
                posterior = BehaviorPosterior.uniform(
                    builder.grid(agent.type_tag).candidates())
            max_radius = max(c.r_front for c in posterior.candidates)
            context = AgentContext(world, agent.id, neighbor_behaviors=maps,
                                   max_radius=max_radius)
            predictions = [context.step(c).position
                           for c in posterior.candidates]
            updated[agent.id] = bayes_update(
                posterior, predictions, track.position(step), sigma)
        current.update(updated)
    return current


def horizon_times(world: WorldState, horizon_steps: int) -> np.ndarray:
    return world.dt * np.arange(1, horizon_steps + 1)
