"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Tuple


def responsibility(d: float, c1: float, c2: float) -> float:
    """Share of the avoidance an agent takes at distance d, in [0, 1]."""
    if d < 0:
        raise ValueError(f"Distance must be non-negative: {d}")
    return min(max(c1 * d + c2, 0.0), 1.0)


def normalize_pair(alpha_a: float, alpha_b: float) -> Tuple[float, float]:
    total = alpha_a + alpha_b
    if total <= 0.0:
        return 0.5, 0.5
    return alpha_a / total, alpha_b / total
