"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np

from ..geometry import ConvexPolygon
from ..kinematics import AgentType

DEFAULT_FRAME_PERIOD = 0.4
_ARBITRARY = ConfigDict(arbitrary_types_allowed=True)


@dataclass(frozen=True, config=_ARBITRARY)
class Observation:
    agent_id: int
    type_tag: AgentType
    position: np.ndarray
    heading: Optional[float] = None
    length: Optional[float] = None
    width: Optional[float] = None


@dataclass(frozen=True)
class EvalWindow:
    """obs_len observed frames followed by pred_len future frames."""
    start_frame: int
    frames: Tuple[int, ...]
    obs_len: int
    agent_ids: Tuple[int, ...]

    @property
    def observed_frames(self) -> Tuple[int, ...]:
        return self.frames[:self.obs_len]

    @property
    def future_frames(self) -> Tuple[int, ...]:
        return self.frames[self.obs_len:]

    @property
    def last_observed(self) -> int:
        return self.frames[self.obs_len - 1]


class TrajectoryDataset:
    """Frame-indexed observations of typed agents, plus obstacles."""

    def __init__(self, frames: Dict[int, List[Observation]],
                 frame_period: float = DEFAULT_FRAME_PERIOD,
                 obstacles: Optional[List[ConvexPolygon]] = None,
                 name: str = '') -> None:
        if frame_period <= 0:
            raise ValueError(f"Frame period must be positive: {frame_period}")
        self.frames: Dict[int, List[Observation]] = dict()
        for frame in sorted(frames):
            ids = [o.agent_id for o in frames[frame]]
            if len(set(ids)) != len(ids):
                raise ValueError(f"Duplicate agent in frame {frame}")
            self.frames[int(frame)] = sorted(frames[frame],
                                             key=lambda o: o.agent_id)
        self.frame_period = float(frame_period)
        self.obstacles = list(obstacles or [])
        self.name = name
        self._index: Dict[Tuple[int, int], Observation] = {
            (f, o.agent_id): o for f, obs in self.frames.items() for o in obs}

    def __len__(self) -> int:
        return len(self._index)

    def __repr__(self) -> str:
        return (f"TrajectoryDataset({self.name!r}, {len(self.frames)} " +
                f"frames, {len(self.agent_ids)} agents, " +
                f"{len(self.obstacles)} obstacles)")

    @property
    def frame_ids(self) -> List[int]:
        return list(self.frames)

    @property
    def agent_ids(self) -> List[int]:
        return sorted({o.agent_id for obs in self.frames.values()
                       for o in obs})

    @property
    def frame_step(self) -> int:
        """Most common spacing between consecutive frame ids."""
        ids = np.array(self.frame_ids)
        if len(ids) < 2:
            return 1
        values, counts = np.unique(np.diff(ids), return_counts=True)
        return int(values[np.argmax(counts)])

    def step_index(self, frame: int) -> int:
        if not self.frames:
            return 0
        return int(round((frame - self.frame_ids[0]) / self.frame_step))

    def observation(self, frame: int, agent_id: int) -> Optional[Observation]:
        return self._index.get((frame, agent_id))

    def rows(self) -> Iterator[Tuple[int, Observation]]:
        for frame, obs in self.frames.items():
            for o in obs:
                yield frame, o

    def trajectory(self, agent_id: int) -> Tuple[np.ndarray, np.ndarray]:
        frames = [f for f in self.frames if (f, agent_id) in self._index]
        positions = [self._index[(f, agent_id)].position for f in frames]
        return np.array(frames, dtype=int), \
            np.array(positions, dtype=float).reshape(-1, 2)

    def present(self, frames: Sequence[int]) -> List[int]:
        """Agents observed in every one of the frames."""
        if not frames:
            return list()
        common = {o.agent_id for o in self.frames.get(frames[0], [])}
        for f in frames[1:]:
            common &= {o.agent_id for o in self.frames.get(f, [])}
        return sorted(common)

    def windows(self, obs_len: int = 8, pred_len: int = 12,
                stride: int = 1) -> List[EvalWindow]:
        """Complete windows of consecutive frames.

        Only agents present in all obs_len + pred_len frames are kept;
        windows without such agents are dropped.
        """
        total = obs_len + pred_len
        ids = self.frame_ids
        step = self.frame_step
        out = list()
        for i in range(0, len(ids) - total + 1, stride):
            frames = tuple(ids[i:i + total])
            if any(b - a != step for a, b in zip(frames, frames[1:])):
                continue
            agents = tuple(self.present(frames))
            if agents:
                out.append(EvalWindow(start_frame=frames[0], frames=frames,
                                      obs_len=obs_len, agent_ids=agents))
        return out

    def subset(self, frames: Sequence[int]) -> 'TrajectoryDataset':
        keep = set(frames)
        return TrajectoryDataset(
            {f: obs for f, obs in self.frames.items() if f in keep},
            frame_period=self.frame_period, obstacles=self.obstacles,
            name=self.name)
