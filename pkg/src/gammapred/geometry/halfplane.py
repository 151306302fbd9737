"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
import math

import numpy as np

from .constants import GEOM_TOL


class HalfPlane:
    """One linear constraint {v : (v - point) . normal >= 0}."""
    __slots__ = ('point', 'normal')

    def __init__(self, point, normal) -> None:
        point = np.asarray(point, dtype=float).reshape(2)
        normal = np.asarray(normal, dtype=float).reshape(2)
        if not (np.all(np.isfinite(point)) and np.all(np.isfinite(normal))):
            raise ValueError("Half-plane point and normal must be finite")
        length = math.hypot(normal[0], normal[1])
        if length <= GEOM_TOL:
            raise ValueError("Half-plane normal must be non-zero")
        if abs(length - 1.0) > GEOM_TOL:
            normal = normal / length
        point.setflags(write=False)
        normal.setflags(write=False)
        self.point = point
        self.normal = normal

    @classmethod
    def unit(cls, point: np.ndarray, normal: np.ndarray) -> 'HalfPlane':
        """Half-plane from a finite point and an already unit normal."""
        hp = cls.__new__(cls)
        hp.point = point
        hp.normal = normal
        return hp

    @property
    def direction(self) -> np.ndarray:
        # boundary direction with the feasible side on its left
        return np.array([-self.normal[1], self.normal[0]])

    def violation(self, v) -> float:
        """Positive when v lies outside the feasible side."""
        return float(-((v[0] - self.point[0]) * self.normal[0] +
                       (v[1] - self.point[1]) * self.normal[1]))

    def contains(self, v, tol: float = 0.0) -> bool:
        return self.violation(v) <= tol

    def shifted(self, distance: float) -> 'HalfPlane':
        """Move the boundary by distance against the normal (relaxation)."""
        return HalfPlane.unit(self.point - distance * self.normal, self.normal)

    def __repr__(self) -> str:
        return (f"HalfPlane(point=({self.point[0]:.6g}, {self.point[1]:.6g}),"
                f" normal=({self.normal[0]:.6g}, {self.normal[1]:.6g}))")
