"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com

Tolerances shared by the geometry kernel, the velocity program solver and
the engine. Every numeric tolerance of the package is defined here.
"""

# duplicate-vertex, collinearity and unit-normal tolerance (m or m/s)
GEOM_TOL = 1e-9
# analytic membership tests (point in polygon / velocity obstacle)
MEMBERSHIP_TOL = 1e-6
# constraint violation accepted by the velocity program solver
LP_TOL = 1e-9
# parallel-line test in the one-dimensional sub-problem of the solver
LP_PARALLEL_TOL = 1e-12
# stopping width of the violation-level bisection in the infeasible fallback
LP_BISECTION_TOL = 1e-10
# below this speed (m/s) a holonomic agent keeps its heading
HEADING_SPEED_THRESHOLD = 0.05
# size of the stand-in triangle for point footprints (m)
POINT_FOOTPRINT_EPS = 1e-6
