"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from .rollout import DEFAULT_BEHAVIOR, AgentTrack, advance, \
    filter_posteriors, frozen_behaviors, horizon_times, predict, \
    world_at
from .scenario import Scenario, ScenarioAgent, ScenarioParseError, \
    load_scenario, parse_scenario, scenario_to_yaml
from .simulate import initial_world, rollout, scenario_builder, simulate, \
    true_behaviors
from .state import AgentState, WorldState
from .step import AgentContext, StepResult, step_agent
from .world import DEFAULT_DIMENSIONS, WorldBuilder, footprint_for

__all__ = [
    'DEFAULT_BEHAVIOR', 'AgentTrack', 'advance', 'filter_posteriors',
    'frozen_behaviors', 'horizon_times', 'predict',
    'world_at', 'Scenario', 'ScenarioAgent', 'ScenarioParseError',
    'load_scenario', 'parse_scenario', 'scenario_to_yaml', 'initial_world',
    'rollout', 'scenario_builder', 'simulate', 'true_behaviors',
    'AgentState', 'WorldState', 'AgentContext', 'StepResult', 'step_agent',
    'DEFAULT_DIMENSIONS', 'WorldBuilder', 'footprint_for',
]
