"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com

Scenario files are YAML:

    dt: 0.4                    # optional, s
    noise: 0.05                # optional, std of position noise (m)
    seed: 7                    # optional
    obstacles:                 # optional, world-frame vertex lists
      - [[0, 0], [1, 0], [1, 1], [0, 1]]
    agents:
      - id: 1
        type: car
        position: [0.0, 0.0]
        velocity: [5.0, 0.0]
        acceleration: [0.0, 0.0]   # optional
        heading: 0.0               # optional, rad
        length: 4.5                # optional, m
        width: 1.8                 # optional, m
        behavior:                  # optional, the true behavior tuple
          intention: keep_velocity
          r_front: 8.0
          r_rear: 2.0
          c1: 0.0
          c2: 0.5
"""
from typing import Any, Dict, List, Optional, Tuple, Union
from pathlib import Path

import math

from pydantic.dataclasses import dataclass
from pydantic import ConfigDict

import numpy as np
import yaml

from ..behavior import BehaviorConstraints, Intention
from ..geometry import ConvexPolygon, InvalidGeometryError
from ..kinematics import AgentType

_ARBITRARY = ConfigDict(arbitrary_types_allowed=True)
_AGENT_KEYS = {'id', 'type', 'position', 'velocity', 'acceleration',
               'heading', 'length', 'width', 'behavior'}
_SCENARIO_KEYS = {'dt', 'noise', 'seed', 'obstacles', 'agents'}
_BEHAVIOR_KEYS = ('intention', 'r_front', 'r_rear', 'c1', 'c2')


class ScenarioParseError(ValueError):
    pass


@dataclass(frozen=True, config=_ARBITRARY)
class ScenarioAgent:
    id: int
    type_tag: AgentType
    position: np.ndarray
    velocity: np.ndarray
    acceleration: np.ndarray
    heading: Optional[float] = None
    length: Optional[float] = None
    width: Optional[float] = None
    behavior: Optional[BehaviorConstraints] = None

    def position_at(self, t: float) -> np.ndarray:
        return self.position + self.velocity * t + \
            0.5 * self.acceleration * t ** 2


@dataclass(frozen=True, config=_ARBITRARY)
class Scenario:
    agents: List[ScenarioAgent]
    obstacles: List[ConvexPolygon]
    dt: float = 0.4
    noise: float = 0.0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive: {self.dt}")
        if self.noise < 0:
            raise ValueError(f"noise must be non-negative: {self.noise}")
        ids = [a.id for a in self.agents]
        if len(set(ids)) != len(ids):
            raise ValueError("agent ids must be unique")


def _vec(value: Any, where: str) -> np.ndarray:
    try:
        v = np.asarray(value, dtype=float).reshape(-1)
    except (TypeError, ValueError):
        raise ScenarioParseError(f"{where}: expected [x, y]") from None
    if v.shape != (2,) or not np.all(np.isfinite(v)):
        raise ScenarioParseError(f"{where}: expected finite [x, y]")
    return v


def _float(value: Any, where: str) -> Optional[float]:
    if value is None:
        return None
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ScenarioParseError(f"{where}: expected a number") from None
    if not math.isfinite(out):
        raise ScenarioParseError(f"{where}: expected a finite number")
    return out


def _behavior(value: Any, where: str) -> BehaviorConstraints:
    if not isinstance(value, dict):
        raise ScenarioParseError(f"{where}: expected a mapping")
    unknown = set(value) - set(_BEHAVIOR_KEYS)
    if unknown:
        raise ScenarioParseError(
            f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
    missing = [k for k in _BEHAVIOR_KEYS if k not in value]
    if missing:
        raise ScenarioParseError(
            f"{where}: missing field(s) {', '.join(missing)}")
    try:
        return BehaviorConstraints(
            intention=Intention(value['intention']),
            r_front=_float(value['r_front'], f"{where}.r_front"),
            r_rear=_float(value['r_rear'], f"{where}.r_rear"),
            c1=_float(value['c1'], f"{where}.c1"),
            c2=_float(value['c2'], f"{where}.c2"))
    except ScenarioParseError:
        raise
    except ValueError as e:
        raise ScenarioParseError(f"{where}: {e}") from None


def _agent(entry: Any, index: int) -> ScenarioAgent:
    where = f"agents[{index}]"
    if not isinstance(entry, dict):
        raise ScenarioParseError(f"{where}: expected a mapping")
    unknown = set(entry) - _AGENT_KEYS
    if unknown:
        raise ScenarioParseError(
            f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
    for key in ('id', 'type', 'position'):
        if key not in entry:
            raise ScenarioParseError(f"{where}: missing field '{key}'")
    try:
        type_tag = AgentType.parse(str(entry['type']))
    except ValueError as e:
        raise ScenarioParseError(f"{where}: {e}") from None
    if not isinstance(entry['id'], int) or isinstance(entry['id'], bool):
        raise ScenarioParseError(f"{where}: id must be an integer")
    velocity = _vec(entry.get('velocity', [0, 0]), f"{where}.velocity")
    acceleration = _vec(entry.get('acceleration', [0, 0]),
                        f"{where}.acceleration")
    if type_tag == AgentType.STATIC_OBSTACLE and (
            np.any(velocity != 0) or np.any(acceleration != 0)):
        raise ScenarioParseError(f"{where}: static obstacles cannot move")
    behavior = None
    if entry.get('behavior') is not None:
        behavior = _behavior(entry['behavior'], f"{where}.behavior")
    for key in ('length', 'width'):
        value = _float(entry.get(key), f"{where}.{key}")
        if value is not None and value <= 0:
            raise ScenarioParseError(f"{where}.{key} must be positive")
    return ScenarioAgent(
        id=entry['id'], type_tag=type_tag,
        position=_vec(entry['position'], f"{where}.position"),
        velocity=velocity, acceleration=acceleration,
        heading=_float(entry.get('heading'), f"{where}.heading"),
        length=_float(entry.get('length'), f"{where}.length"),
        width=_float(entry.get('width'), f"{where}.width"),
        behavior=behavior)


def _obstacle(entry: Any, index: int) -> ConvexPolygon:
    try:
        return ConvexPolygon(np.asarray(entry, dtype=float))
    except (TypeError, ValueError, InvalidGeometryError) as e:
        raise ScenarioParseError(f"obstacles[{index}]: {e}") from None


def parse_scenario(config: Optional[Dict[str, Any]]) -> Scenario:
    config = config or dict()
    if not isinstance(config, dict):
        raise ScenarioParseError("scenario must be a mapping")
    unknown = set(config) - _SCENARIO_KEYS
    if unknown:
        raise ScenarioParseError(
            f"unknown field(s) {', '.join(sorted(unknown))}")
    seed = config.get('seed')
    if seed is not None and (not isinstance(seed, int) or seed < 0):
        raise ScenarioParseError("seed must be a non-negative integer")
    agents = [_agent(e, i) for i, e in enumerate(config.get('agents') or [])]
    obstacles = [_obstacle(e, i) for i, e in
                 enumerate(config.get('obstacles') or [])]
    try:
        return Scenario(agents=agents, obstacles=obstacles,
                        dt=_float(config.get('dt', 0.4), 'dt'),
                        noise=_float(config.get('noise', 0.0), 'noise'),
                        seed=seed)
    except ScenarioParseError:
        raise
    except ValueError as e:
        raise ScenarioParseError(str(e)) from None


def load_scenario(path: Union[str, Path]) -> Scenario:
    with open(path, 'r') as f:
        try:
            config = yaml.load(f, Loader=yaml.SafeLoader)
        except yaml.YAMLError as e:
            raise ScenarioParseError(f"{path}: {e}") from None
    return parse_scenario(config)


def scenario_to_yaml(scenario: Scenario) -> Dict[str, Any]:
    """Plain mapping that parse_scenario reads back."""
    agents = list()
    for a in scenario.agents:
        entry: Dict[str, Any] = {
            'id': a.id, 'type': a.type_tag.value,
            'position': a.position.tolist(), 'velocity': a.velocity.tolist(),
            'acceleration': a.acceleration.tolist()}
        for key in ('heading', 'length', 'width'):
            if getattr(a, key) is not None:
                entry[key] = getattr(a, key)
        if a.behavior is not None:
            entry['behavior'] = {
                'intention': a.behavior.intention.value,
                **{k: getattr(a.behavior, k) for k in _BEHAVIOR_KEYS[1:]}}
        agents.append(entry)
    out: Dict[str, Any] = {'dt': scenario.dt, 'noise': scenario.noise,
                           'obstacles': [p.vertices.tolist()
                                         for p in scenario.obstacles],
                           'agents': agents}
    if scenario.seed is not None:
        out['seed'] = scenario.seed
    return out


def lead_in(agent: ScenarioAgent, dt: float,
            frames: Tuple[int, ...] = (-2, -1, 0)) -> np.ndarray:
    """Positions at the given frames of the constant-acceleration start."""
    return np.array([agent.position_at(k * dt) for k in frames])
