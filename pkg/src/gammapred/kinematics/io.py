"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com

Profile file grammar (UTF-8, '#' starts a comment, blank lines ignored):

    type <type_tag>            starts a block
    model holonomic|car_like
    s_max <m/s>                both models
    a_max <m/s^2>              car_like (required), holonomic (optional)
    wheelbase <m>              car_like
    max_steer <rad>            car_like
    epsilon_max <m>
    tau <s>
    grid_ds <m/s>              optional estimation overrides
    grid_dphi <deg>
    grid_phi_max <deg>
    K:                         optional, followed by one 'x y' line per
    <x> <y>                    body-frame vertex (m/s)

Every key line holds exactly one value.
"""
from typing import Dict, List, Optional, Union
from pathlib import Path
from functools import lru_cache

import math

import numpy as np

from ..geometry import ConvexPolygon, InvalidGeometryError
from ..utils.logging import logger
from .estimate import DEFAULT_CONTROLLER_DT, EstimationFailedError, \
    estimate_trackable_set
from .models import AgentType, CarLikeModel, HolonomicModel, \
    KinematicProfile

DEFAULT_PROFILES = Path(__file__).parent / 'profiles.txt'

_FLOAT_KEYS = ('s_max', 'a_max', 'wheelbase', 'max_steer', 'epsilon_max',
               'tau', 'grid_ds', 'grid_dphi', 'grid_phi_max')
_REQUIRED = {
    'holonomic': ('s_max',),
    'car_like': ('wheelbase', 'max_steer', 's_max', 'a_max'),
}


class ProfileParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None,
                 field: Optional[str] = None) -> None:
        where = f"line {line}: " if line is not None else ''
        super().__init__(f"{where}{message}")
        self.line = line
        self.field = field


def _build(block: Dict[str, Union[str, float, int, list]],
           start_line: int) -> KinematicProfile:
    model_name = block.get('model')
    if model_name is None:
        raise ProfileParseError("missing required field 'model'",
                                start_line, 'model')
    if model_name not in _REQUIRED:
        raise ProfileParseError(
            f"unknown model '{model_name}' " +
            f"(expected one of {', '.join(_REQUIRED)})",
            block['_lines'].get('model', start_line), 'model')
    for key in _REQUIRED[model_name] + ('epsilon_max', 'tau'):
        if key not in block:
            raise ProfileParseError(f"missing required field '{key}'",
                                    start_line, key)
    try:
        if model_name == 'holonomic':
            model = HolonomicModel(s_max=block['s_max'],
                                   a_max=block.get('a_max'))
        else:
            model = CarLikeModel(wheelbase=block['wheelbase'],
                                 max_steer=block['max_steer'],
                                 s_max=block['s_max'], a_max=block['a_max'])
        polygon = None
        if block.get('K') is not None:
            polygon = ConvexPolygon(np.array(block['K']))
        return KinematicProfile(
            type_tag=block['type'], model=model,
            epsilon_max=block['epsilon_max'], tau=block['tau'],
            trackable_set=polygon,
            grid_ds=block.get('grid_ds'), grid_dphi=block.get('grid_dphi'),
            grid_phi_max=block.get('grid_phi_max'))
    except (ValueError, InvalidGeometryError) as e:
        raise ProfileParseError(f"invalid profile: {e}", start_line) from e


def parse_profiles(lines: List[str]) -> Dict[AgentType, KinematicProfile]:
    profiles: Dict[AgentType, KinematicProfile] = dict()
    block: Optional[dict] = None
    start = 0
    in_k = False

    def close():
        if block is None:
            return
        profile = _build(block, start)
        if profile.type_tag in profiles:
            raise ProfileParseError(
                f"duplicate profile '{profile.type_tag}'", start, 'type')
        profiles[profile.type_tag] = profile

    for number, raw in enumerate(lines, start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == 'type':
            close()
            if len(tokens) != 2:
                raise ProfileParseError("expected 'type <tag>'",
                                        number, 'type')
            try:
                tag = AgentType.parse(tokens[1])
            except ValueError as e:
                raise ProfileParseError(str(e), number, 'type') from None
            block = {'type': tag, '_lines': dict()}
            start = number
            in_k = False
            continue
        if block is None:
            raise ProfileParseError(
                f"'{key}' outside of a profile block", number, key)
        if key == 'K:':
            if len(tokens) != 1:
                raise ProfileParseError("trailing content after 'K:'",
                                        number, 'K')
            block['K'] = list()
            in_k = True
            continue
        if in_k and key not in _FLOAT_KEYS and key != 'model':
            if len(tokens) != 2:
                raise ProfileParseError(
                    f"expected 'x y' vertex, got {len(tokens)} values",
                    number, 'K')
            try:
                block['K'].append((float(tokens[0]), float(tokens[1])))
            except ValueError:
                raise ProfileParseError(f"bad vertex '{line}'",
                                        number, 'K') from None
            continue
        in_k = False
        if key not in _FLOAT_KEYS and key != 'model':
            raise ProfileParseError(f"unknown field '{key}'", number, key)
        if len(tokens) != 2:
            raise ProfileParseError(
                f"field '{key}' takes exactly one value", number, key)
        if key in block:
            raise ProfileParseError(f"duplicate field '{key}'", number, key)
        block['_lines'][key] = number
        if key == 'model':
            block[key] = tokens[1]
            continue
        try:
            block[key] = float(tokens[1])
        except ValueError:
            raise ProfileParseError(
                f"field '{key}' is not a number: '{tokens[1]}'",
                number, key) from None
    close()
    return profiles


def estimate_missing(profiles: Dict[AgentType, KinematicProfile],
                     controller_dt: float = DEFAULT_CONTROLLER_DT
                     ) -> Dict[AgentType, KinematicProfile]:
    """Fill in trackable sets not given in the file.

    Static obstacles keep no set: only zero velocity is trackable.
    """
    out = dict()
    for tag, profile in profiles.items():
        if profile.trackable_set is None and not profile.is_static:
            try:
                polygon = estimate_trackable_set(
                    profile, controller_dt=controller_dt)
                profile = profile.with_trackable_set(polygon)
            except EstimationFailedError as e:
                logger.warning(f"Kinematics: {e}")
        out[tag] = profile
    return out


def load_profiles(path: Path, estimate: bool = True
                  ) -> Dict[AgentType, KinematicProfile]:
    with open(path, 'r', encoding='utf-8') as f:
        profiles = parse_profiles(f.readlines())
    logger.info(f"Kinematics: loaded {len(profiles)} profiles from {path}")
    return estimate_missing(profiles) if estimate else profiles


@lru_cache(maxsize=8)
def cached_profiles(path: Optional[str] = None
                    ) -> Dict[AgentType, KinematicProfile]:
    """Profiles by file name, estimated once per process."""
    return load_profiles(Path(path) if path is not None
                         else DEFAULT_PROFILES)


def _fmt(x: float) -> str:
    return repr(float(x))


def format_profile(profile: KinematicProfile) -> List[str]:
    model = profile.model
    lines = [f"type {profile.type_tag}", f"model {model.kind}"]
    if isinstance(model, CarLikeModel):
        lines += [f"wheelbase {_fmt(model.wheelbase)}",
                  f"max_steer {_fmt(model.max_steer)}"]
    lines.append(f"s_max {_fmt(model.s_max)}")
    if model.a_max is not None:
        lines.append(f"a_max {_fmt(model.a_max)}")
    lines += [f"epsilon_max {_fmt(profile.epsilon_max)}",
              f"tau {_fmt(profile.tau)}"]
    for key in ('grid_ds', 'grid_dphi', 'grid_phi_max'):
        if getattr(profile, key) is not None:
            lines.append(f"{key} {_fmt(getattr(profile, key))}")
    if profile.trackable_set is not None:
        lines.append("K:")
        lines += [f"{_fmt(x)} {_fmt(y)}"
                  for x, y in profile.trackable_set.vertices]
    return lines


def save_profiles(profiles: Dict[AgentType, KinematicProfile],
                  path: Path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        for i, profile in enumerate(profiles.values()):
            if i > 0:
                f.write('\n')
            f.write('\n'.join(format_profile(profile)) + '\n')


def profiles_equal(a: Dict[AgentType, KinematicProfile],
                   b: Dict[AgentType, KinematicProfile],
                   atol: float = 1e-12) -> bool:
    if a.keys() != b.keys():
        return False
    for tag in a:
        pa, pb = a[tag], b[tag]
        if pa.model != pb.model or \
                not math.isclose(pa.epsilon_max, pb.epsilon_max) or \
                not math.isclose(pa.tau, pb.tau):
            return False
        if (pa.trackable_set is None) != (pb.trackable_set is None):
            return False
        if pa.trackable_set is not None and \
                not pa.trackable_set.allclose(pb.trackable_set, atol):
            return False
    return True
