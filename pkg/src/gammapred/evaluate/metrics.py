"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import List, Sequence, Tuple

import numpy as np


class MetricError(ValueError):
    pass


def displacement(predicted, truth) -> np.ndarray:
    """Pointwise Euclidean distances of two equally long trajectories."""
    predicted = np.asarray(predicted, dtype=float).reshape(-1, 2)
    truth = np.asarray(truth, dtype=float).reshape(-1, 2)
    if len(predicted) != len(truth):
        raise MetricError(
            f"Trajectory lengths differ: {len(predicted)} vs {len(truth)}")
    if len(predicted) == 0:
        raise MetricError("Trajectories must hold at least one point")
    return np.linalg.norm(predicted - truth, axis=1)


def ade_fde(predicted, truth) -> Tuple[float, float]:
    diff = displacement(predicted, truth)
    return float(diff.mean()), float(diff[-1])


def best_of(samples: Sequence, truth) -> Tuple[int, float, float]:
    """Index, ADE and FDE of the sample with the lowest ADE.

    Ties go to the earliest sample.
    """
    if not samples:
        raise MetricError("No samples to choose from")
    scores: List[Tuple[float, float]] = [ade_fde(s, truth) for s in samples]
    index = int(np.argmin([ade for ade, _ in scores]))
    return (index,) + scores[index]
