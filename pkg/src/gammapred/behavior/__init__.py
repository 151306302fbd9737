"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from .constraints import BehaviorConstraints, CandidateGrid, Intention, \
    default_c2
from .history import AgentHistory
from .inference import BehaviorPosterior, bayes_update, likelihood
from .models import attention_geometry, attention_set, in_attention, \
    preferred_velocity, reference_position
from .responsibility import normalize_pair, responsibility

__all__ = [
    'BehaviorConstraints', 'CandidateGrid', 'Intention', 'default_c2',
    'AgentHistory', 'BehaviorPosterior', 'bayes_update', 'likelihood',
    'attention_geometry', 'attention_set', 'in_attention',
    'preferred_velocity', 'reference_position', 'normalize_pair',
    'responsibility',
]
