"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from .solver import KinematicConfigurationError, VelocityProgram, solve, \
    solve_velocity

__all__ = ['KinematicConfigurationError', 'VelocityProgram', 'solve',
           'solve_velocity']
