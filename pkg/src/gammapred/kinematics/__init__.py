"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import Namespace
from pathlib import Path

from tqdm import tqdm

from ..utils.logging import logger, progress_disabled
from .estimate import DEFAULT_CONTROLLER_DT, DiscretizationGrid, \
    EstimationFailedError, boundary_velocity, estimate_trackable_set, \
    verify_trackable_set
from .io import DEFAULT_PROFILES, ProfileParseError, cached_profiles, \
    load_profiles, parse_profiles, profiles_equal, save_profiles
from .models import AgentType, CarLikeModel, HolonomicModel, \
    KinematicProfile, Pose, holonomic_disc, track_velocity

__all__ = [
    'DEFAULT_CONTROLLER_DT', 'DiscretizationGrid', 'EstimationFailedError',
    'boundary_velocity', 'estimate_trackable_set', 'verify_trackable_set',
    'DEFAULT_PROFILES', 'ProfileParseError', 'cached_profiles',
    'load_profiles', 'parse_profiles', 'profiles_equal', 'save_profiles',
    'AgentType', 'CarLikeModel', 'HolonomicModel', 'KinematicProfile',
    'Pose', 'holonomic_disc', 'track_velocity', 'main',
]


def main(args: Namespace) -> None:
    """estimate-kinematics: fill in K for every profile of a spec file."""
    spec = Path(args.spec) if args.spec is not None else DEFAULT_PROFILES
    profiles = load_profiles(spec, estimate=False)
    if not profiles:
        raise ProfileParseError(f"No profiles declared in {spec}")
    controller_dt = args.controller_dt if args.controller_dt is not None \
        else DEFAULT_CONTROLLER_DT
    failed = list()
    for tag in tqdm(list(profiles), disable=progress_disabled(),
                    desc='estimate'):
        profile = profiles[tag]
        if profile.is_static:
            continue
        try:
            polygon = estimate_trackable_set(
                profile, controller_dt=controller_dt)
        except EstimationFailedError as e:
            logger.error(f"Kinematics: {tag}: {e}")
            failed.append(str(tag))
            continue
        profiles[tag] = profile.with_trackable_set(polygon)
        logger.info(f"Kinematics: {tag}: {len(polygon)} vertices, " +
                    f"area {polygon.area:.3f} m^2/s^2")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    save_profiles(profiles, out)
    logger.info(f"Kinematics: wrote {len(profiles)} profiles to {out}")
    if failed:
        raise EstimationFailedError(
            f"Estimation failed for: {', '.join(failed)}")
