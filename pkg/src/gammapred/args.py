"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import ArgumentParser
from datetime import datetime

from .evaluate.args import bench_speed_args as _bench_speed_args
from .evaluate.args import evaluate_args as _evaluate_args
from .kinematics.args import estimate_kinematics_args as \
    _estimate_kinematics_args
from .predict.args import predict_args as _predict_args
from .simulate.args import simulate_args as _simulate_args
from .utils.logging import LogLevel

COMMANDS = ['estimate-kinematics', 'predict', 'evaluate', 'simulate',
            'bench-speed']


def general_args(parser: ArgumentParser) -> None:
    parser.add_argument('--config', '-c', default=None,
                        help="YAML config file overriding the packaged " +
                        "engine defaults")
    parser.add_argument('--profiles', type=str, default=None,
                        help="Kinematic profile file: " +
                        "Default = packaged profiles")
    parser.add_argument('--seed', type=int, default=None,
                        help="Seed of every random stream: Default = 1000")
    parser.add_argument('--threads', type=int, default=None,
                        help="Worker processes: Default = 1")
    parser.add_argument('--ablate', type=str, default=None,
                        help="Comma separated components to disable: " +
                        "kinematics,polygons,intention,attention," +
                        "responsibility")
    parser.add_argument(
        '--logs', help="Set output for log outputs",
        default="logs/gammapred_" +
        f"{datetime.now().strftime('%Y-%m-%d_%H:%M:%S')}.log")


def logging_args(parser: ArgumentParser) -> None:
    group = parser.add_argument_group("Logs")
    group.add_argument('--log-level', type=LogLevel.__getitem__,
                       default=LogLevel.INFO,
                       choices=LogLevel.__members__.values(),
                       dest='log_level',
                       help="Log level.")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='gammapred',
                            description="Heterogeneous traffic-agent motion prediction")
    parent_parser = ArgumentParser(add_help=False)
    general_args(parent_parser)
    logging_args(parent_parser)
    sub_parser = parser.add_subparsers(dest='command')
    for name, add_args in zip(COMMANDS, [
            _estimate_kinematics_args, _predict_args, _evaluate_args,
            _simulate_args, _bench_speed_args]):
        command = sub_parser.add_parser(
            name, parents=[parent_parser],
            help=f"run 'python -m gammapred {name} --help' for arguments")
        add_args(command)
    return parser
