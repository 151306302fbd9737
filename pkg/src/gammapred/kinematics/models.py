"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import ClassVar, List, NamedTuple, Optional, Tuple, Union
from enum import Enum

import math

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np

from ..geometry.constants import HEADING_SPEED_THRESHOLD, MEMBERSHIP_TOL
from ..geometry import ConvexPolygon

# pure pursuit lookahead, in wheelbases
LOOKAHEAD_WHEELBASES = 1.0
# vertex count of the disc polygons standing in for trackable sets
DISC_VERTICES = 72


class AgentType(str, Enum):
    PEDESTRIAN = 'pedestrian'
    BICYCLE = 'bicycle'
    MOTORBIKE = 'motorbike'
    CAR = 'car'
    VAN = 'van'
    BUS = 'bus'
    GYRO_SCOOTER = 'gyro_scooter'
    TRUCK = 'truck'
    STATIC_OBSTACLE = 'static_obstacle'

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def tags() -> List[str]:
        return [t.value for t in AgentType]

    @classmethod
    def parse(cls, tag: str) -> 'AgentType':
        try:
            return cls(tag.strip().lower())
        except ValueError:
            raise ValueError(
                f"Unknown agent type '{tag}'. " +
                f"Valid types: {', '.join(cls.tags())}") from None

    @property
    def is_vehicle(self) -> bool:
        return self not in (AgentType.PEDESTRIAN, AgentType.GYRO_SCOOTER,
                            AgentType.STATIC_OBSTACLE)


@dataclass(frozen=True)
class HolonomicModel:
    kind: ClassVar[str] = 'holonomic'
    s_max: float
    a_max: Optional[float] = None

    def __post_init__(self):
        if self.s_max < 0:
            raise ValueError(f"s_max must be non-negative: {self.s_max}")
        if self.a_max is not None and self.a_max <= 0:
            raise ValueError(f"a_max must be positive: {self.a_max}")


@dataclass(frozen=True)
class CarLikeModel:
    kind: ClassVar[str] = 'car_like'
    wheelbase: float
    max_steer: float
    s_max: float
    a_max: float

    def __post_init__(self):
        if self.wheelbase <= 0:
            raise ValueError(f"wheelbase must be positive: {self.wheelbase}")
        if not 0 < self.max_steer < math.pi / 2:
            raise ValueError(
                f"max_steer must lie in (0, pi/2): {self.max_steer}")
        if self.s_max < 0:
            raise ValueError(f"s_max must be non-negative: {self.s_max}")
        if self.a_max <= 0:
            raise ValueError(f"a_max must be positive: {self.a_max}")

    @property
    def max_curvature(self) -> float:
        return math.tan(self.max_steer) / self.wheelbase


MotionModel = Union[HolonomicModel, CarLikeModel]


@dataclass(frozen=True, config=ConfigDict(arbitrary_types_allowed=True))
class KinematicProfile:
    type_tag: AgentType
    model: MotionModel
    epsilon_max: float
    tau: float
    # body-frame trackable velocities; None until estimated
    trackable_set: Optional[ConvexPolygon] = None
    # per-profile discretization overrides (m/s, degrees, degrees)
    grid_ds: Optional[float] = None
    grid_dphi: Optional[float] = None
    grid_phi_max: Optional[float] = None

    def __post_init__(self):
        if self.epsilon_max < 0:
            raise ValueError(
                f"epsilon_max must be non-negative: {self.epsilon_max}")
        if self.tau <= 0:
            raise ValueError(f"tau must be positive: {self.tau}")
        if self.trackable_set is not None and \
                not self.trackable_set.contains(np.zeros(2), MEMBERSHIP_TOL):
            raise ValueError(
                f"Trackable set of {self.type_tag} must contain zero velocity")

    @property
    def is_static(self) -> bool:
        return self.type_tag == AgentType.STATIC_OBSTACLE or \
            self.model.s_max == 0.0

    @property
    def turns_freely(self) -> bool:
        """Moving agent whose heading follows its velocity without limit."""
        return not self.is_static and isinstance(self.model, HolonomicModel)

    def with_trackable_set(self, polygon: ConvexPolygon) -> 'KinematicProfile':
        return KinematicProfile(
            type_tag=self.type_tag, model=self.model,
            epsilon_max=self.epsilon_max, tau=self.tau,
            trackable_set=polygon, grid_ds=self.grid_ds,
            grid_dphi=self.grid_dphi, grid_phi_max=self.grid_phi_max)

    def world_trackable_set(self, heading: float) -> ConvexPolygon:
        if self.trackable_set is None:
            raise ValueError(f"Profile {self.type_tag} has no trackable set")
        return self.trackable_set.rotated(heading)


class Pose(NamedTuple):
    x: float
    y: float
    heading: float
    speed: float = 0.0

    @property
    def position(self) -> np.ndarray:
        return np.array([self.x, self.y])


def holonomic_disc(s_max: float) -> ConvexPolygon:
    """Trackable set of an ideal holonomic agent, as a polygon."""
    return ConvexPolygon.regular(s_max, DISC_VERTICES)


def _n_steps(duration: float, dt: float) -> int:
    return max(1, int(round(duration / dt)))


def _track_holonomic(model: HolonomicModel, pose: Pose, target: np.ndarray,
                     duration: float, dt: float) -> Tuple[List[Pose], float]:
    x0, y0 = pose.x, pose.y
    x, y, h = pose.x, pose.y, pose.heading
    ux, uy = pose.speed * math.cos(h), pose.speed * math.sin(h)
    tx, ty = float(target[0]), float(target[1])
    speed = math.hypot(tx, ty)
    if speed > model.s_max and speed > 0:
        cx, cy = tx * model.s_max / speed, ty * model.s_max / speed
    else:
        cx, cy = tx, ty
    trajectory = [pose]
    max_error = 0.0
    for k in range(1, _n_steps(duration, dt) + 1):
        dx, dy = cx - ux, cy - uy
        if model.a_max is not None:
            change = math.hypot(dx, dy)
            limit = model.a_max * dt
            if change > limit:
                dx, dy = dx * limit / change, dy * limit / change
        ux, uy = ux + dx, uy + dy
        x, y = x + ux * dt, y + uy * dt
        s = math.hypot(ux, uy)
        if s > HEADING_SPEED_THRESHOLD:
            h = math.atan2(uy, ux)
        trajectory.append(Pose(x, y, h, s))
        t = k * dt
        max_error = max(max_error,
                        math.hypot(x - x0 - tx * t, y - y0 - ty * t))
    return trajectory, max_error


def _track_car(model: CarLikeModel, pose: Pose, target: np.ndarray,
               duration: float, dt: float) -> Tuple[List[Pose], float]:
    """Rear-axle kinematic bicycle under pure pursuit.

    The path is the straight reference p0 + t * target; the lookahead point
    runs one lookahead distance ahead of the current reference point.
    """
    x0, y0 = pose.x, pose.y
    x, y, h, s = pose.x, pose.y, pose.heading, max(pose.speed, 0.0)
    tx, ty = float(target[0]), float(target[1])
    norm = math.hypot(tx, ty)
    desired = min(norm, model.s_max)
    lookahead = LOOKAHEAD_WHEELBASES * model.wheelbase
    trajectory = [pose]
    max_error = 0.0
    for k in range(1, _n_steps(duration, dt) + 1):
        t_prev = (k - 1) * dt
        delta = 0.0
        if norm > 0.0:
            gx = x0 + tx * t_prev + lookahead * tx / norm
            gy = y0 + ty * t_prev + lookahead * ty / norm
            alpha = math.atan2(gy - y, gx - x) - h
            ld = math.hypot(gx - x, gy - y)
            delta = math.atan2(2.0 * model.wheelbase * math.sin(alpha), ld)
            delta = min(max(delta, -model.max_steer), model.max_steer)
        accel = min(max(desired - s, -model.a_max * dt), model.a_max * dt)
        s = max(0.0, s + accel)
        h += s * math.tan(delta) / model.wheelbase * dt
        x += s * math.cos(h) * dt
        y += s * math.sin(h) * dt
        trajectory.append(Pose(x, y, h, s))
        t = k * dt
        max_error = max(max_error,
                        math.hypot(x - x0 - tx * t, y - y0 - ty * t))
    return trajectory, max_error


def track_velocity(profile: KinematicProfile, state: Pose, target_v,
                   duration: float, dt: float) -> Tuple[List[Pose], float]:
    """Run the low-level controller of the profile's model.

    Returns the pose trajectory (initial pose first) and the largest
    deviation from the straight-line reference p0 + t * target_v.
    """
    if dt <= 0:
        raise ValueError(f"Controller step must be positive: {dt}")
    if dt > duration + 1e-12:
        raise ValueError(
            f"Controller step {dt} exceeds tracking duration {duration}")
    target = np.asarray(target_v, float)
    if isinstance(profile.model, CarLikeModel):
        return _track_car(profile.model, state, target, duration, dt)
    return _track_holonomic(profile.model, state, target, duration, dt)
