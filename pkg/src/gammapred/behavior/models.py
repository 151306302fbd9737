"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Hashable, List, Sequence, Tuple

import math

import numpy as np

from ..geometry.constants import GEOM_TOL
from ..geometry import ConvexPolygon
from .constraints import Intention
from .history import AgentHistory


def reference_position(history: AgentHistory, intention: Intention,
                       horizon: float, offset=None) -> np.ndarray:
    """Where the intention puts the agent after horizon seconds."""
    p = history.position
    v = history.velocity()
    ref = p + v * horizon
    if intention == Intention.KEEP_ACCELERATION and len(history) >= 3:
        ref = ref + 0.5 * history.acceleration() * horizon ** 2
    if offset is not None:
        ref = ref + np.asarray(offset, float)
    return ref


def preferred_velocity(history: AgentHistory, intention: Intention,
                       horizon: float, offset=None) -> np.ndarray:
    """Current speed, directed at the reference position.

    Keep-acceleration falls back to keep-velocity below three frames.
    """
    if len(history) < 2:
        return np.zeros(2)
    speed = float(np.linalg.norm(history.velocity()))
    if speed <= GEOM_TOL:
        return np.zeros(2)
    direction = reference_position(history, intention, horizon, offset) - \
        history.position
    norm = float(np.linalg.norm(direction))
    if norm <= GEOM_TOL:
        return np.zeros(2)
    return speed * direction / norm


def attention_geometry(position, heading: float,
                       polygon: ConvexPolygon) -> Tuple[float, bool]:
    """Distance from the reference point to the polygon and whether the
    closest point is frontal; sideways counts as frontal."""
    p = np.asarray(position, float)
    if polygon.contains(p, tol=0.0):
        return 0.0, True
    q = polygon.closest_point(p)
    offset = q - p
    frontal = math.cos(heading) * offset[0] + \
        math.sin(heading) * offset[1] >= 0.0
    return float(np.linalg.norm(offset)), bool(frontal)


def in_attention(distance: float, frontal: bool, r_front: float,
                 r_rear: float) -> bool:
    return distance <= (r_front if frontal else r_rear)


def attention_set(agent, others: Sequence, r_front: float,
                  r_rear: float) -> List[Hashable]:
    """Ids of the others inside the agent's front and rear half circles.

    Agents are anything with id, position, heading and world_footprint.
    """
    ids = list()
    for other in others:
        if other.id == agent.id:
            continue
        d, frontal = attention_geometry(agent.position, agent.heading,
                                        other.world_footprint)
        if in_attention(d, frontal, r_front, r_rear):
            ids.append(other.id)
    return ids
