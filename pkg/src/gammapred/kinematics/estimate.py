"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import List, Optional, Tuple

import math

from pydantic.dataclasses import dataclass

import numpy as np

from ..geometry import ConvexPolygon, InvalidGeometryError, convex_hull
from .models import CarLikeModel, KinematicProfile, Pose, track_velocity

# controller integration step used offline (s)
DEFAULT_CONTROLLER_DT = 0.05


class EstimationFailedError(ValueError):
    pass


@dataclass(frozen=True)
class DiscretizationGrid:
    """Speed step (m/s) and deviation-angle step / range (rad)."""
    ds: float = 0.1
    dphi: float = math.radians(5.0)
    phi_max: float = math.pi

    def __post_init__(self):
        if self.ds <= 0 or self.dphi <= 0:
            raise ValueError("Grid steps must be positive")
        if not 0 <= self.phi_max <= math.pi:
            raise ValueError(f"phi_max must lie in [0, pi]: {self.phi_max}")

    @classmethod
    def for_profile(cls, profile: KinematicProfile) -> 'DiscretizationGrid':
        phi_max = math.pi / 2 if isinstance(profile.model, CarLikeModel) \
            else math.pi
        return cls(
            ds=profile.grid_ds if profile.grid_ds is not None else 0.1,
            dphi=math.radians(profile.grid_dphi)
            if profile.grid_dphi is not None else math.radians(5.0),
            phi_max=math.radians(profile.grid_phi_max)
            if profile.grid_phi_max is not None else phi_max)

    def speeds(self, s_max: float) -> np.ndarray:
        s = np.arange(0.0, s_max, self.ds)
        s = s[s < s_max - 1e-9]
        return np.append(s, s_max)

    def deviations(self) -> np.ndarray:
        """Phi mirrored about zero, ascending, without duplicate +-pi."""
        phi = np.arange(0.0, self.phi_max, self.dphi)
        phi = phi[phi < self.phi_max - 1e-9]
        phi = np.append(phi, self.phi_max)
        negative = -phi[1:]
        if math.isclose(self.phi_max, math.pi):
            negative = negative[:-1]
        return np.concatenate([negative[::-1], phi])


def boundary_velocity(profile: KinematicProfile, phi: float,
                      speeds: np.ndarray,
                      controller_dt: float = DEFAULT_CONTROLLER_DT
                      ) -> Optional[np.ndarray]:
    """Fastest trackable body-frame velocity along deviation phi."""
    direction = np.array([math.cos(phi), math.sin(phi)])
    best = None
    for s in speeds:
        _, error = track_velocity(profile, Pose(0.0, 0.0, 0.0, float(s)),
                                  s * direction, profile.tau, controller_dt)
        if error <= profile.epsilon_max:
            best = float(s)
    return None if best is None else best * direction


def estimate_trackable_set(profile: KinematicProfile,
                           grid: Optional[DiscretizationGrid] = None,
                           controller_dt: float = DEFAULT_CONTROLLER_DT
                           ) -> ConvexPolygon:
    """Convex hull of the fastest trackable velocity per deviation angle.

    Each candidate starts at its own speed along the body x-axis and must
    stay within epsilon_max of the straight reference for tau seconds.
    """
    if grid is None:
        grid = DiscretizationGrid.for_profile(profile)
    speeds = grid.speeds(profile.model.s_max)
    points: List[np.ndarray] = list()
    for phi in grid.deviations():
        v = boundary_velocity(profile, float(phi), speeds, controller_dt)
        if v is not None:
            points.append(v)
    if len(points) < 3:
        raise EstimationFailedError(
            f"Only {len(points)} boundary velocities for {profile.type_tag}")
    try:
        return convex_hull(np.array(points))
    except InvalidGeometryError as e:
        raise EstimationFailedError(
            f"Degenerate trackable set for {profile.type_tag}: {e}") from e


def verify_trackable_set(profile: KinematicProfile,
                         controller_dt: float = DEFAULT_CONTROLLER_DT
                         ) -> List[Tuple[np.ndarray, float]]:
    """Tracking error of every vertex, re-simulated."""
    if profile.trackable_set is None:
        raise ValueError(f"Profile {profile.type_tag} has no trackable set")
    out = list()
    for v in profile.trackable_set.vertices:
        speed = float(np.linalg.norm(v))
        _, error = track_velocity(profile, Pose(0.0, 0.0, 0.0, speed), v,
                                  profile.tau, controller_dt)
        out.append((v, error))
    return out
