"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import Namespace
from pathlib import Path
from typing import List, Optional

import sys

from .args import build_parser
from .config import build_config
from .evaluate import bench_main, main as evaluate_main
from .kinematics import main as estimate_kinematics_main
from .predict import main as predict_main
from .simulate import main as simulate_main
from .utils import pretty_print_namespace
from .utils.io import load_yaml
from .utils.logging import init_logger, logger

MAINS = {
    'estimate-kinematics': estimate_kinematics_main,
    'predict': predict_main,
    'evaluate': evaluate_main,
    'simulate': simulate_main,
    'bench-speed': bench_main,
}


def run(args: Namespace) -> int:
    if args.command not in MAINS:
        logger.critical(f"Unknown subcommand {args.command}. " +
                        "See 'python -m gammapred --help' for options.")
        return 2
    try:
        user_config = load_yaml(Path(args.config)) \
            if args.config is not None else None
        args.engine = build_config(args, user_config)
        pretty_print_namespace(args.command, args)
        MAINS[args.command](args)
    except (ValueError, KeyError, OSError) as e:
        message = str(e).splitlines()[0] if str(e) else type(e).__name__
        logger.error(f"{args.command}: {type(e).__name__}: {message}")
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    init_logger(Path(args.logs), log_level=args.log_level)
    return run(args)


if __name__ == '__main__':
    sys.exit(main())
