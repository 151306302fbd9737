"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import ArgumentParser


def predict_args(sub_parser: ArgumentParser) -> None:
    group = sub_parser.add_argument_group('predict')
    group.add_argument(
        "--dataset", type=str, required=True,
        help="Dataset file, homogeneous or heterogeneous")
    group.add_argument(
        "--frame", type=int, required=True,
        help="Frame id to predict from")
    group.add_argument(
        "--out", type=str, default='predictions.jsonl',
        help="Output trace file: Default = predictions.jsonl")
