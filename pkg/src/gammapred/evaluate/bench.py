"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, Optional, Union
from pathlib import Path

import math
import time

import numpy as np
import pandas as pd

from tqdm import tqdm

from ..behavior import AgentHistory, BehaviorConstraints, Intention
from ..config import EngineConfig
from ..engine import WorldBuilder, WorldState, predict
from ..kinematics import AgentType, KinematicProfile
from ..utils.logging import logger, progress_disabled

EGO_ID = 0
RING_RADIUS = 4.0
EGO_SPEED = 1.3
NEIGHBOR_SPEED = 0.5
# attends all around, so every neighbor on the ring constrains the ego
BENCH_BEHAVIOR = BehaviorConstraints(
    intention=Intention.KEEP_VELOCITY, r_front=2 * RING_RADIUS,
    r_rear=2 * RING_RADIUS, c1=0.0, c2=0.5)


def bench_world(builder: WorldBuilder, neighbors: int, seed: int,
                type_tag: AgentType = AgentType.PEDESTRIAN) -> WorldState:
    """An ego at the origin walking +x, neighbors on a ring around it."""
    rng = np.random.default_rng(seed)
    dt = builder.config.dt
    frames = [-2, -1, 0]

    def history(p0: np.ndarray, v: np.ndarray) -> AgentHistory:
        return AgentHistory(frames, [p0 + v * k * dt for k in frames], dt)

    agents = [builder.agent(EGO_ID, type_tag, history(
        np.zeros(2), np.array([EGO_SPEED, 0.0])))]
    for i in range(neighbors):
        angle = 2 * math.pi * (i + 0.5) / neighbors
        position = RING_RADIUS * np.array([math.cos(angle), math.sin(angle)])
        tangent = np.array([-math.sin(angle), math.cos(angle)])
        velocity = NEIGHBOR_SPEED * tangent + rng.normal(0.0, 0.05, 2)
        agents.append(builder.agent(i + 1, AgentType.PEDESTRIAN,
                                    history(position, velocity)))
    return builder.world(agents)


def bench_speed(config: EngineConfig, neighbors: int = 20,
                repeats: int = 50,
                type_tag: AgentType = AgentType.PEDESTRIAN,
                profiles: Optional[Dict[AgentType, KinematicProfile]] = None
                ) -> Dict[str, Union[str, int, float]]:
    """Wall time of one agent's full-horizon prediction among neighbors.

    Neighbors keep their velocity; only the ego runs the optimization.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1: {repeats}")
    builder = WorldBuilder(config, profiles)
    world = bench_world(builder, neighbors, config.seed, type_tag)
    behaviors = {EGO_ID: BENCH_BEHAVIOR}
    timings = list()
    for _ in tqdm(range(repeats), disable=progress_disabled(),
                  desc='bench-speed'):
        start = time.perf_counter()
        predict(world, config.t_pred_steps, behaviors=behaviors,
                agent_ids={EGO_ID})
        timings.append(time.perf_counter() - start)
    timings = np.array(timings)
    result = {
        'type_tag': type_tag.value, 'neighbors': neighbors,
        'steps': config.t_pred_steps, 'repeats': repeats,
        'median_s': float(np.median(timings)),
        'mean_s': float(timings.mean()), 'min_s': float(timings.min())}
    logger.info(f"Bench: {neighbors} neighbors, {config.t_pred_steps} " +
                f"steps: median {result['median_s'] * 1e3:.3f} ms per " +
                "trajectory")
    return result


def save_bench(result: Dict[str, Union[str, int, float]],
               path: Union[str, Path]) -> None:
    pd.DataFrame([result]).to_csv(path, sep="\t", index=False,
                                  encoding="utf-8")
