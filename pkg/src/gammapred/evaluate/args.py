"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import ArgumentParser


def evaluate_args(sub_parser: ArgumentParser) -> None:
    group = sub_parser.add_argument_group('evaluate')
    group.add_argument(
        "--dataset", type=str, nargs='+', required=True,
        help="Dataset file(s), homogeneous or heterogeneous, one scene each")
    group.add_argument(
        "--mode", type=str, default='det',
        help="'det', 'best' (best-of-n from config) or 'best<N>', " +
        "e.g. best20: Default = det")
    group.add_argument(
        "--stride", type=int, default=1,
        help="Window stride in frames: Default = 1")
    group.add_argument(
        "--out", type=str, default='results',
        help="Output directory for summary.tsv and traces.jsonl: " +
        "Default = results")


def bench_speed_args(sub_parser: ArgumentParser) -> None:
    group = sub_parser.add_argument_group('bench')
    group.add_argument(
        "--neighbors", type=int, default=20,
        help="Attentive neighbors around the ego agent: Default = 20")
    group.add_argument(
        "--repeats", type=int, default=50,
        help="Timed predictions: Default = 50")
    group.add_argument(
        "--agent-type", type=str, default='pedestrian',
        help="Type of the ego agent: Default = pedestrian")
    group.add_argument(
        "--out", type=str, default=None,
        help="Optional TSV output file")
