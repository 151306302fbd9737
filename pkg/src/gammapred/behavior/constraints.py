"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import List, Tuple
from enum import Enum

import itertools
import math

from pydantic.dataclasses import dataclass

from ..kinematics.models import AgentType
from .responsibility import responsibility


class Intention(str, Enum):
    KEEP_VELOCITY = 'keep_velocity'
    KEEP_ACCELERATION = 'keep_acceleration'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BehaviorConstraints:
    intention: Intention
    r_front: float
    r_rear: float
    c1: float
    c2: float

    def __post_init__(self):
        if self.r_rear < 0 or self.r_front < 0:
            raise ValueError("Attention radii must be non-negative")
        if self.r_rear > self.r_front:
            raise ValueError(
                f"r_rear ({self.r_rear}) must not exceed " +
                f"r_front ({self.r_front})")
        if not 0.0 <= self.c2 <= 1.0:
            raise ValueError(f"C2 must lie in [0, 1]: {self.c2}")
        if not math.isfinite(self.c1):
            raise ValueError(f"C1 must be finite: {self.c1}")

    def responsibility(self, distance: float) -> float:
        return responsibility(distance, self.c1, self.c2)


@dataclass(frozen=True)
class CandidateGrid:
    """Per-factor candidate values; their product is the hypothesis set."""
    intentions: Tuple[Intention, ...] = (Intention.KEEP_VELOCITY,
                                         Intention.KEEP_ACCELERATION)
    r_front: Tuple[float, ...] = (2.0, 4.0, 8.0)
    r_rear: Tuple[float, ...] = (1.0, 2.0)
    c1: Tuple[float, ...] = (-0.05, 0.0, 0.05)
    c2: Tuple[float, ...] = (0.5, 0.7)

    def __post_init__(self):
        for name in ('intentions', 'r_front', 'r_rear', 'c1', 'c2'):
            if len(getattr(self, name)) == 0:
                raise ValueError(f"Candidate set '{name}' is empty")
        if not self.radius_pairs():
            raise ValueError("No attention radius pair with r_rear <= r_front")

    def radius_pairs(self) -> List[Tuple[float, float]]:
        return [(f, r) for f in self.r_front for r in self.r_rear if r <= f]

    def candidates(self) -> List[BehaviorConstraints]:
        return [BehaviorConstraints(intention=i, r_front=f, r_rear=r,
                                    c1=c1, c2=c2)
                for i, (f, r), c1, c2 in itertools.product(
                    self.intentions, self.radius_pairs(), self.c1, self.c2)]

    def __len__(self) -> int:
        return len(self.intentions) * len(self.radius_pairs()) * \
            len(self.c1) * len(self.c2)

    def ablated(self, infer_intention: bool = True,
                infer_attention: bool = True,
                infer_responsibility: bool = True) -> 'CandidateGrid':
        return CandidateGrid(
            intentions=self.intentions if infer_intention
            else (Intention.KEEP_VELOCITY,),
            r_front=self.r_front if infer_attention else (math.inf,),
            r_rear=self.r_rear if infer_attention else (math.inf,),
            c1=self.c1 if infer_responsibility else (0.0,),
            c2=self.c2 if infer_responsibility else (0.5,))


def default_c2(type_tag: AgentType) -> Tuple[float, ...]:
    return (0.3, 0.5) if type_tag.is_vehicle else (0.5, 0.7)
