"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, Iterator, List, Optional

import numpy as np

from tqdm import tqdm

from ..behavior import AgentHistory, BehaviorConstraints
from ..config import EngineConfig
from ..data import Observation, TrajectoryDataset
from ..kinematics import AgentType, KinematicProfile
from ..utils.logging import logger, progress_disabled
from .rollout import DEFAULT_BEHAVIOR, advance
from .scenario import Scenario, lead_in
from .state import WorldState
from .world import DEFAULT_DIMENSIONS, WorldBuilder

# frames before the first emitted one, so both intentions have a history
LEAD_IN_FRAMES = (-2, -1, 0)


def scenario_builder(scenario: Scenario,
                     config: Optional[EngineConfig] = None,
                     profiles: Optional[Dict[AgentType,
                                             KinematicProfile]] = None
                     ) -> WorldBuilder:
    return WorldBuilder.with_period(config or EngineConfig(), scenario.dt,
                                    profiles)


def initial_world(scenario: Scenario, builder: WorldBuilder) -> WorldState:
    agents = list()
    for a in sorted(scenario.agents, key=lambda a: a.id):
        history = AgentHistory(LEAD_IN_FRAMES,
                               lead_in(a, scenario.dt, LEAD_IN_FRAMES),
                               scenario.dt)
        agents.append(builder.agent(a.id, a.type_tag, history,
                                    heading=a.heading, length=a.length,
                                    width=a.width))
    return builder.world(agents, list(scenario.obstacles))


def true_behaviors(scenario: Scenario) -> Dict[int, BehaviorConstraints]:
    return {a.id: a.behavior if a.behavior is not None else DEFAULT_BEHAVIOR
            for a in scenario.agents}


def rollout(scenario: Scenario, n_steps: int,
            builder: WorldBuilder) -> Iterator[WorldState]:
    """The world at frame 0 and after each of n_steps committed steps."""
    world = initial_world(scenario, builder)
    behaviors = true_behaviors(scenario)
    yield world
    for _ in tqdm(range(n_steps), disable=progress_disabled(),
                  desc='simulate'):
        world = advance(world, behaviors)
        yield world


def simulate(scenario: Scenario, n_steps: int, seed: Optional[int] = None,
             config: Optional[EngineConfig] = None,
             profiles: Optional[Dict[AgentType, KinematicProfile]] = None,
             name: str = 'simulated') -> TrajectoryDataset:
    """Forward simulation with true behaviors, frames 0..n_steps.

    Position noise (std scenario.noise) is drawn per frame for moving
    agents in id order from a generator seeded by seed, or by the
    scenario's own seed when seed is None.
    """
    if n_steps < 0:
        raise ValueError(f"n_steps must be non-negative: {n_steps}")
    builder = scenario_builder(scenario, config, profiles)
    rng = np.random.default_rng(seed if seed is not None else scenario.seed)
    dims = {a.id: (a.length, a.width) for a in scenario.agents}
    frames: Dict[int, List[Observation]] = dict()
    for frame, world in enumerate(rollout(scenario, n_steps, builder)):
        observations = list()
        for agent in world.agents:
            position = agent.position
            if scenario.noise > 0 and not agent.is_static:
                position = position + rng.normal(0.0, scenario.noise, 2)
            length, width = dims[agent.id]
            default_length, default_width = DEFAULT_DIMENSIONS[
                agent.type_tag]
            observations.append(Observation(
                agent_id=agent.id, type_tag=agent.type_tag,
                position=np.array(position, dtype=float),
                heading=float(agent.heading),
                length=length if length is not None else default_length,
                width=width if width is not None else default_width))
        if observations:
            frames[frame] = observations
    logger.info(f"Simulate: {len(scenario.agents)} agents, {n_steps} " +
                f"steps, noise {scenario.noise}")
    return TrajectoryDataset(frames, frame_period=scenario.dt,
                             obstacles=list(scenario.obstacles), name=name)
