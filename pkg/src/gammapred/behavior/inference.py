"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Sequence, Tuple

from scipy.special import logsumexp
from scipy.stats import norm

import numpy as np

from ..utils.logging import logger
from .constraints import BehaviorConstraints


def likelihood(observed, predicted, sigma: float) -> float:
    """Normal density of the prediction error distance."""
    if sigma <= 0:
        raise ValueError(f"Likelihood sigma must be positive: {sigma}")
    error = np.linalg.norm(np.asarray(observed, float) -
                           np.asarray(predicted, float))
    return float(norm.pdf(error, loc=0.0, scale=sigma))


class BehaviorPosterior:
    """Discrete posterior over a fixed candidate list, kept in log space."""
    __slots__ = ('candidates', 'log_weights')

    def __init__(self, candidates: Sequence[BehaviorConstraints],
                 log_weights=None) -> None:
        candidates = tuple(candidates)
        if not candidates:
            raise ValueError("Posterior needs at least one candidate")
        if log_weights is None:
            log_weights = np.full(len(candidates), -np.log(len(candidates)))
        log_weights = np.asarray(log_weights, dtype=float).reshape(-1)
        if len(log_weights) != len(candidates):
            raise ValueError("One log weight per candidate expected")
        log_weights.setflags(write=False)
        self.candidates: Tuple[BehaviorConstraints, ...] = candidates
        self.log_weights = log_weights

    @classmethod
    def uniform(cls, candidates: Sequence[BehaviorConstraints]
                ) -> 'BehaviorPosterior':
        return cls(candidates)

    def __len__(self) -> int:
        return len(self.candidates)

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    @property
    def map_index(self) -> int:
        # argmax returns the first index among ties
        return int(np.argmax(self.log_weights))

    @property
    def map_candidate(self) -> BehaviorConstraints:
        return self.candidates[self.map_index]

    def __repr__(self) -> str:
        return (f"BehaviorPosterior({len(self)} candidates, " +
                f"MAP={self.map_candidate}, " +
                f"p={self.weights[self.map_index]:.3f})")


def bayes_update(posterior: BehaviorPosterior, predictions, observed,
                 sigma: float) -> BehaviorPosterior:
    """Multiply in the likelihood of the observation and renormalize."""
    if sigma <= 0:
        raise ValueError(f"Likelihood sigma must be positive: {sigma}")
    predictions = np.asarray(predictions, dtype=float).reshape(-1, 2)
    if len(predictions) != len(posterior):
        raise ValueError(
            f"{len(predictions)} predictions for {len(posterior)} candidates")
    errors = np.linalg.norm(predictions - np.asarray(observed, float), axis=1)
    if not np.any(norm.pdf(errors, loc=0.0, scale=sigma) > 0.0):
        logger.warning("Behavior: every likelihood underflowed, " +
                       "posterior reset to uniform")
        return BehaviorPosterior.uniform(posterior.candidates)
    log_weights = posterior.log_weights + \
        norm.logpdf(errors, loc=0.0, scale=sigma)
    return BehaviorPosterior(posterior.candidates,
                             log_weights - logsumexp(log_weights))
