"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from .dataset import DEFAULT_FRAME_PERIOD, EvalWindow, Observation, \
    TrajectoryDataset
from .io import DatasetParseError, load_dataset, load_heterogeneous, \
    load_homogeneous, write_heterogeneous

__all__ = ['DEFAULT_FRAME_PERIOD', 'EvalWindow', 'Observation',
           'TrajectoryDataset', 'DatasetParseError', 'load_dataset',
           'load_heterogeneous', 'load_homogeneous', 'write_heterogeneous']
