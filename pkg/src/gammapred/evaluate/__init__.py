"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import Namespace
from pathlib import Path

from ..data import load_dataset
from ..kinematics import AgentType
from ..utils.io import create_dir
from ..utils.logging import logger
from .bench import bench_speed, bench_world, save_bench
from .harness import EvalMode, WindowEvaluator, evaluate, parse_mode, \
    sample_offsets, window_tracks
from .metrics import MetricError, ade_fde, best_of, displacement
from .report import SUMMARY_FIELDS, SceneSummary, Trace, load_summary_tsv, \
    load_traces, save_summary_tsv, save_traces

__all__ = [
    'bench_speed', 'bench_world', 'save_bench', 'EvalMode',
    'WindowEvaluator', 'evaluate', 'parse_mode', 'sample_offsets',
    'window_tracks', 'MetricError', 'ade_fde', 'best_of', 'displacement',
    'SUMMARY_FIELDS', 'SceneSummary', 'Trace', 'load_summary_tsv',
    'load_traces', 'save_summary_tsv', 'save_traces', 'main', 'bench_main',
]


def main(args: Namespace) -> None:
    """evaluate: sliding-window ADE/FDE per dataset."""
    config = args.engine
    mode = parse_mode(args.mode, config)
    summaries, traces = list(), list()
    for path in args.dataset:
        dataset = load_dataset(path)
        summary, scene_traces = evaluate(dataset, config, mode,
                                         stride=args.stride)
        summaries.append(summary)
        traces.extend(scene_traces)
    out = create_dir(Path(args.out))
    save_summary_tsv(summaries, out / 'summary.tsv')
    save_traces(traces, out / 'traces.jsonl')
    logger.info(f"Evaluate: wrote {out / 'summary.tsv'} and " +
                f"{out / 'traces.jsonl'}")


def bench_main(args: Namespace) -> None:
    """bench-speed: time one agent's prediction among neighbors."""
    result = bench_speed(args.engine, neighbors=args.neighbors,
                         repeats=args.repeats,
                         type_tag=AgentType.parse(args.agent_type))
    if args.out is not None:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        save_bench(result, out)
