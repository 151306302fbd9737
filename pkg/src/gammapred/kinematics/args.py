"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import ArgumentParser


def estimate_kinematics_args(sub_parser: ArgumentParser) -> None:
    group = sub_parser.add_argument_group('kinematics')
    group.add_argument(
        "--spec", type=str, default=None,
        help="Profile spec file (profiles without K:). " +
        "Default = packaged profiles")
    group.add_argument(
        "--controller-dt", type=float, default=None,
        help="Controller integration step in seconds: Default = 0.05")
    group.add_argument(
        "--out", type=str, required=True,
        help="Output profile file")
