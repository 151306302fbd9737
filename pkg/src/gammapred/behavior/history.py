"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Optional, Sequence

import math

import numpy as np

from ..geometry.constants import HEADING_SPEED_THRESHOLD


class AgentHistory:
    """Observed positions of one agent at integer step indices.

    Steps are dt seconds apart; a missing step inside the history is a gap
    and the differences across it are divided by the elapsed time.
    """
    __slots__ = ('frames', 'positions', 'dt')

    def __init__(self, frames: Sequence[int], positions, dt: float) -> None:
        frames = np.asarray(frames, dtype=int).reshape(-1)
        positions = np.asarray(positions, dtype=float).reshape(-1, 2)
        if len(frames) != len(positions):
            raise ValueError("History frames and positions differ in length")
        if len(frames) > 1 and np.any(np.diff(frames) <= 0):
            raise ValueError("History frames must be strictly increasing")
        if dt <= 0:
            raise ValueError(f"History step must be positive: {dt}")
        frames.setflags(write=False)
        positions.setflags(write=False)
        self.frames = frames
        self.positions = positions
        self.dt = float(dt)

    def __len__(self) -> int:
        return len(self.frames)

    def __repr__(self) -> str:
        return f"AgentHistory({len(self)} frames, last={self.last_frame})"

    @property
    def last_frame(self) -> Optional[int]:
        return int(self.frames[-1]) if len(self.frames) else None

    @property
    def position(self) -> np.ndarray:
        return self.positions[-1]

    @property
    def has_gaps(self) -> bool:
        return bool(len(self.frames) > 1 and np.any(np.diff(self.frames) > 1))

    def _difference(self, i: int) -> np.ndarray:
        # velocity between entries i - 1 and i
        elapsed = (self.frames[i] - self.frames[i - 1]) * self.dt
        return (self.positions[i] - self.positions[i - 1]) / elapsed

    def velocity(self) -> np.ndarray:
        if len(self) < 2:
            return np.zeros(2)
        return self._difference(len(self) - 1)

    def acceleration(self) -> np.ndarray:
        if len(self) < 3:
            return np.zeros(2)
        n = len(self)
        elapsed = 0.5 * (self.frames[n - 1] - self.frames[n - 3]) * self.dt
        return (self._difference(n - 1) - self._difference(n - 2)) / elapsed

    def heading(self, default: float = 0.0) -> float:
        """Direction of the latest velocity above the rest threshold."""
        for i in range(len(self) - 1, 0, -1):
            v = self._difference(i)
            if math.hypot(v[0], v[1]) > HEADING_SPEED_THRESHOLD:
                return math.atan2(v[1], v[0])
        return default

    def appended(self, frame: int, position) -> 'AgentHistory':
        return AgentHistory(np.append(self.frames, frame),
                            np.vstack([self.positions,
                                       np.asarray(position, float)]),
                            self.dt)

    def until(self, frame: int) -> 'AgentHistory':
        keep = self.frames <= frame
        return AgentHistory(self.frames[keep], self.positions[keep], self.dt)
