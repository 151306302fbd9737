"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, List, Optional, Sequence, Tuple
from concurrent.futures import ProcessPoolExecutor

import re
import time

from pydantic.dataclasses import dataclass

import numpy as np

from tqdm import tqdm

from ..behavior import AgentHistory
from ..config import EngineConfig
from ..data import EvalWindow, TrajectoryDataset
from ..engine import AgentTrack, WorldBuilder, WorldState, \
    filter_posteriors, predict, world_at
from ..kinematics import AgentType, KinematicProfile
from ..utils.logging import logger, mp_logger, progress_disabled, \
    worker_logger
from .metrics import ade_fde, best_of
from .report import SceneSummary, Trace

DETERMINISTIC = 'det'
_BEST_OF = re.compile(r'^best(\d*)$')


@dataclass(frozen=True)
class EvalMode:
    """Deterministic (n = 1, no noise) or best-of-n sampling with noisy reference positions."""
    n: int = 1
    sigma_s: float = 0.0

    @property
    def name(self) -> str:
        return DETERMINISTIC if self.is_deterministic else f"best{self.n}"

    @property
    def is_deterministic(self) -> bool:
        return self.n == 1 and self.sigma_s == 0.0


def parse_mode(mode: str, config: EngineConfig) -> EvalMode:
    """'det', 'best' (config.best_of_n samples) or 'best<N>'."""
    if mode == DETERMINISTIC:
        return EvalMode()
    match = _BEST_OF.match(mode)
    if match is None:
        raise ValueError(f"Unknown mode '{mode}' (expected det or bestN)")
    n = int(match.group(1)) if match.group(1) else config.best_of_n
    if n < 1:
        raise ValueError(f"Best-of-n needs at least one sample: {mode}")
    return EvalMode(n=n, sigma_s=config.sigma_s)


def window_tracks(dataset: TrajectoryDataset, frames: Sequence[int]
                  ) -> Dict[int, AgentTrack]:
    """Every agent seen in the frames, at dataset step indices."""
    observed: Dict[int, List] = dict()
    for frame in frames:
        for o in dataset.frames.get(frame, []):
            observed.setdefault(o.agent_id, list()).append(
                (dataset.step_index(frame), o))
    tracks = dict()
    for agent_id, rows in observed.items():
        first = rows[0][1]
        headings = {step: o.heading for step, o in rows
                    if o.heading is not None}
        history = AgentHistory([step for step, _ in rows],
                               [o.position for _, o in rows],
                               dataset.frame_period)
        if history.has_gaps:
            logger.warning(
                f"Data: {dataset.name}: agent {agent_id} has frame gaps " +
                f"between steps {int(history.frames[0])} and " +
                f"{int(history.frames[-1])}")
        tracks[agent_id] = AgentTrack(
            id=agent_id, type_tag=first.type_tag, history=history,
            headings=headings or None, length=first.length,
            width=first.width)
    return tracks


def observe(builder: WorldBuilder, dataset: TrajectoryDataset,
            frames: Sequence[int]) -> WorldState:
    """World at the last of the frames, behaviors filtered over all."""
    tracks = window_tracks(dataset, frames)
    steps = [dataset.step_index(f) for f in frames[1:]]
    posteriors = filter_posteriors(builder, tracks, steps, dataset.obstacles)
    return world_at(builder, tracks, dataset.step_index(frames[-1]),
                    dataset.obstacles, posteriors)


def sample_offsets(seed: int, start_frame: int, agent_ids: Sequence[int],
                   n: int, sigma_s: float) -> List[Dict[int, np.ndarray]]:
    """Reference-position noise, one mapping per sample.

    Draws are taken sample by sample, agents in id order, from a generator
    seeded by (seed, start_frame), so the first k samples are the same for
    every n >= k.
    """
    rng = np.random.default_rng([seed, start_frame])
    out = list()
    for _ in range(n):
        out.append({agent_id: rng.normal(0.0, sigma_s, 2)
                    for agent_id in sorted(agent_ids)})
    return out


class WindowEvaluator:
    """Filter then predict one window; holds everything windows share."""

    def __init__(self, dataset: TrajectoryDataset, config: EngineConfig,
                 mode: EvalMode,
                 profiles: Optional[Dict[AgentType,
                                         KinematicProfile]] = None) -> None:
        self.dataset = dataset
        self.config = config
        self.mode = mode
        self.builder = WorldBuilder.with_period(config, dataset.frame_period,
                                                profiles)

    def __call__(self, window: EvalWindow) -> List[Trace]:
        world = observe(self.builder, self.dataset, window.observed_frames)
        horizon = len(window.future_frames)
        targets = [a for a in window.agent_ids
                   if not world.agent(a).is_static]
        offsets = sample_offsets(self.config.seed, window.start_frame,
                                 [a.id for a in world.agents], self.mode.n,
                                 self.mode.sigma_s)
        samples = [predict(world, horizon,
                           offsets=None if self.mode.is_deterministic
                           else offset)
                   for offset in offsets]
        traces = list()
        for agent_id in targets:
            truth = np.array([self.dataset.observation(f, agent_id).position
                              for f in window.future_frames])
            candidates = [s[agent_id] for s in samples]
            if len(candidates) == 1:
                index = 0
                ade, fde = ade_fde(candidates[0], truth)
            else:
                index, ade, fde = best_of(candidates, truth)
            traces.append(Trace(
                scene=self.dataset.name, start_frame=window.start_frame,
                agent_id=agent_id,
                type_tag=world.agent(agent_id).type_tag.value,
                sample=index, predicted=candidates[index].tolist(),
                truth=truth.tolist(), ade=ade, fde=fde))
        return traces


# evaluator of the current worker process
_WORKER: Optional[WindowEvaluator] = None


def _init_worker(dataset: TrajectoryDataset, config: EngineConfig,
                 mode: EvalMode, profiles, log_q, log_level: int) -> None:
    global _WORKER
    worker_logger(log_q, log_level)
    _WORKER = WindowEvaluator(dataset, config, mode, profiles)


def _run_window(window: EvalWindow) -> List[Trace]:
    return _WORKER(window)


def evaluate(dataset: TrajectoryDataset, config: EngineConfig,
             mode: EvalMode = EvalMode(),
             profiles: Optional[Dict[AgentType, KinematicProfile]] = None,
             stride: int = 1) -> Tuple[SceneSummary, List[Trace]]:
    """Sliding-window ADE/FDE of one dataset.

    Aggregates are means over agent-windows; traces come back in window
    order for any worker count.
    """
    windows = dataset.windows(config.obs_len, config.t_pred_steps, stride)
    if not windows:
        raise ValueError(
            f"{dataset.name}: no complete window of " +
            f"{config.obs_len} + {config.t_pred_steps} frames")
    logger.info(f"Evaluate: {dataset.name}: {len(windows)} windows, " +
                f"mode {mode.name}, {config.threads} worker(s)")
    start = time.perf_counter()
    if config.threads > 1:
        log_q, listener = mp_logger()
        try:
            with ProcessPoolExecutor(
                    max_workers=config.threads, initializer=_init_worker,
                    initargs=(dataset, config, mode, profiles, log_q,
                              logger.level)) as executor:
                per_window = list(tqdm(
                    executor.map(_run_window, windows),
                    total=len(windows), disable=progress_disabled(),
                    desc=f"evaluate {dataset.name}"))
        finally:
            listener.stop()
    else:
        evaluator = WindowEvaluator(dataset, config, mode, profiles)
        per_window = [evaluator(w) for w in tqdm(
            windows, disable=progress_disabled(),
            desc=f"evaluate {dataset.name}")]
    traces = [t for window_traces in per_window for t in window_traces]
    summary = SceneSummary.from_traces(
        dataset.name, mode.name, traces, windows=len(windows),
        wall_time=time.perf_counter() - start)
    logger.info(f"Evaluate: {dataset.name} {mode.name}: " +
                f"ADE {summary.ade:.3f} m, FDE {summary.fde:.3f} m over " +
                f"{summary.agent_windows} agent-windows")
    return summary, traces
