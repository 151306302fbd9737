"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from .constants import GEOM_TOL, MEMBERSHIP_TOL
from .halfplane import HalfPlane
from .polygon import ConvexPolygon, InvalidGeometryError, convex_hull, \
    minkowski_difference, minkowski_sum
from .velocity_obstacle import OverlapError, VelocityObstacle, \
    build_velocity_obstacle, closest_boundary_point, escape_half_plane, \
    responsibility_half_plane

__all__ = [
    'GEOM_TOL', 'MEMBERSHIP_TOL', 'HalfPlane', 'ConvexPolygon',
    'InvalidGeometryError', 'convex_hull', 'minkowski_difference',
    'minkowski_sum', 'OverlapError', 'VelocityObstacle',
    'build_velocity_obstacle', 'closest_boundary_point', 'escape_half_plane',
    'responsibility_half_plane',
]
