"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, List, Optional

from pydantic.dataclasses import dataclass

from ..config import EngineConfig
from ..data import TrajectoryDataset
from ..engine import WorldBuilder, horizon_times, predict
from ..evaluate.harness import observe
from ..kinematics import AgentType, KinematicProfile
from ..utils.logging import logger


@dataclass(frozen=True)
class Prediction:
    scene: str
    frame: int
    agent_id: int
    type_tag: str
    # seconds after frame, one per predicted position
    times: List[float]
    predicted: List[List[float]]


def predict_frame(dataset: TrajectoryDataset, frame: int,
                  config: EngineConfig,
                  profiles: Optional[Dict[AgentType,
                                          KinematicProfile]] = None
                  ) -> List[Prediction]:
    """Predict every moving agent seen at frame.

    Behaviors are filtered over the last obs_len frames up to frame.
    """
    if frame not in dataset.frames:
        raise KeyError(f"Frame {frame} not in {dataset.name or 'dataset'}")
    ids = dataset.frame_ids
    index = ids.index(frame)
    frames = ids[max(0, index - config.obs_len + 1):index + 1]
    if config.threads > 1:
        logger.warning("Predict: one frame runs in one process, " +
                       f"threads={config.threads} is ignored")
    builder = WorldBuilder.with_period(config, dataset.frame_period,
                                       profiles)
    world = observe(builder, dataset, frames)
    trajectories = predict(world, config.t_pred_steps)
    times = horizon_times(world, config.t_pred_steps).tolist()
    out = [Prediction(scene=dataset.name, frame=frame, agent_id=a.id,
                      type_tag=a.type_tag.value, times=times,
                      predicted=trajectories[a.id].tolist())
           for a in world.agents if not a.is_static]
    logger.info(f"Predict: frame {frame}: {len(out)} agents, " +
                f"{config.t_pred_steps} steps from {len(frames)} " +
                "observed frames")
    return out
