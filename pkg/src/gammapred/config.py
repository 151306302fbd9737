"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from typing import Any, Dict, List, Optional, Tuple
from argparse import Namespace
from dataclasses import fields
from pathlib import Path

from pydantic.dataclasses import dataclass

from .behavior import CandidateGrid, default_c2
from .kinematics import AgentType
from .utils.io import load_yaml

DEFAULT_CONFIG = Path(__file__).parent / 'config.yaml'

ABLATIONS = {
    'kinematics': 'use_kinematics',
    'polygons': 'use_polygons',
    'intention': 'infer_intention',
    'attention': 'infer_attention',
    'responsibility': 'infer_responsibility',
}


@dataclass(frozen=True)
class EngineConfig:
    dt: float = 0.4
    tau: float = 1.0
    t_pred_steps: int = 12
    obs_len: int = 8
    controller_dt: float = 0.05
    sigma: float = 0.1
    r_front: Tuple[float, ...] = (2.0, 4.0, 8.0)
    r_rear: Tuple[float, ...] = (1.0, 2.0)
    c1: Tuple[float, ...] = (-0.05, 0.0, 0.05)
    c2_pedestrian: Tuple[float, ...] = (0.5, 0.7)
    c2_vehicle: Tuple[float, ...] = (0.3, 0.5)
    use_kinematics: bool = True
    use_polygons: bool = True
    infer_intention: bool = True
    infer_attention: bool = True
    infer_responsibility: bool = True
    profiles: Optional[str] = None
    best_of_n: int = 20
    sigma_s: float = 0.5
    seed: int = 1000
    threads: int = 1

    def __post_init__(self):
        if self.dt <= 0 or self.tau <= 0:
            raise ValueError("dt and tau must be positive")
        if self.t_pred_steps < 1:
            raise ValueError("t_pred_steps must be at least 1")
        if self.obs_len < 2:
            raise ValueError("obs_len must be at least 2")
        if not 0 < self.controller_dt <= self.dt:
            raise ValueError("controller_dt must lie in (0, dt]")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.sigma_s < 0:
            raise ValueError("sigma_s must be non-negative")
        if self.best_of_n < 1:
            raise ValueError("best_of_n must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")

    @property
    def horizon(self) -> float:
        return self.dt * self.t_pred_steps

    @property
    def ablations(self) -> List[str]:
        return [name for name, flag in ABLATIONS.items()
                if not getattr(self, flag)]

    def grid(self, type_tag: AgentType) -> CandidateGrid:
        """Candidate grid of one agent type, ablations applied."""
        c2 = self.c2_vehicle if type_tag.is_vehicle else self.c2_pedestrian
        if not c2:
            c2 = default_c2(type_tag)
        return CandidateGrid(r_front=self.r_front, r_rear=self.r_rear,
                             c1=self.c1, c2=c2).ablated(
            infer_intention=self.infer_intention,
            infer_attention=self.infer_attention,
            infer_responsibility=self.infer_responsibility)

    def replace(self, **changes) -> 'EngineConfig':
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return EngineConfig(**values)


def parse_ablate(value: Optional[str]) -> List[str]:
    if value is None or value.strip() == '':
        return list()
    names = [v.strip() for v in value.split(',') if v.strip()]
    unknown = [n for n in names if n not in ABLATIONS]
    if unknown:
        raise ValueError(
            f"Unknown ablation(s) {', '.join(unknown)}. " +
            f"Valid: {', '.join(ABLATIONS)}")
    return names


def _snake(config: Dict[str, Any]) -> Dict[str, Any]:
    known = {f.name for f in fields(EngineConfig)}
    out = dict()
    for k, v in config.items():
        key = k.replace('-', '_')
        if key in known:
            out[key] = tuple(v) if isinstance(v, list) else v
    return out


def build_config(args: Namespace,
                 user_config: Optional[Dict[str, Any]] = None
                 ) -> EngineConfig:
    """Packaged defaults, then the user's config file, then flags."""
    values = _snake(load_yaml(DEFAULT_CONFIG))
    if user_config:
        values.update(_snake(user_config))
    for f in fields(EngineConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            values[f.name] = flag
    for name in parse_ablate(getattr(args, 'ablate', None)):
        values[ABLATIONS[name]] = False
    return EngineConfig(**values)
