"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import ArgumentParser


def simulate_args(sub_parser: ArgumentParser) -> None:
    group = sub_parser.add_argument_group('simulate')
    group.add_argument(
        "--scenario", type=str, required=True,
        help="Scenario YAML file")
    group.add_argument(
        "--steps", type=int, default=40,
        help="Simulated steps after frame 0: Default = 40")
    group.add_argument(
        "--out", type=str, required=True,
        help="Output heterogeneous dataset file")
