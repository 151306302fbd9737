"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import Namespace
from pathlib import Path

from ..data import write_heterogeneous
from ..engine import load_scenario, simulate
from ..utils.logging import logger


def main(args: Namespace) -> None:
    """simulate: scenario in, heterogeneous dataset out.

    --seed, when given, overrides the scenario's seed.
    """
    scenario = load_scenario(args.scenario)
    seed = args.seed if args.seed is not None else scenario.seed
    dataset = simulate(scenario, args.steps, seed=seed, config=args.engine,
                       name=Path(args.scenario).stem)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_heterogeneous(dataset, out)
    logger.info(f"Simulate: wrote {len(dataset.frames)} frames to {out}")
