"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com

Result files:

    summary.tsv    one row per (scene, mode):
                   scene, mode, ade, fde, windows, agent_windows, wall_time
    traces.jsonl   one record per (window, agent):
                   scene, start_frame, agent_id, type_tag, sample,
                   predicted, truth, ade, fde
"""
from typing import Dict, List, Sequence, Union
from pathlib import Path

import csv
import math

from pydantic.dataclasses import dataclass

import pandas as pd

from ..utils.io import load_jsonl_file, save_jsonl_file

SUMMARY_FIELDS = ['scene', 'mode', 'ade', 'fde', 'windows', 'agent_windows',
                  'wall_time']


@dataclass(frozen=True)
class Trace:
    scene: str
    start_frame: int
    agent_id: int
    type_tag: str
    # index of the kept sample, 0 in deterministic mode
    sample: int
    predicted: List[List[float]]
    truth: List[List[float]]
    ade: float
    fde: float


@dataclass(frozen=True)
class SceneSummary:
    scene: str
    mode: str
    ade: float
    fde: float
    windows: int
    agent_windows: int
    wall_time: float

    @staticmethod
    def from_traces(scene: str, mode: str, traces: Sequence[Trace],
                    windows: int, wall_time: float) -> 'SceneSummary':
        n = len(traces)
        return SceneSummary(
            scene=scene, mode=mode,
            ade=sum(t.ade for t in traces) / n if n else math.nan,
            fde=sum(t.fde for t in traces) / n if n else math.nan,
            windows=windows, agent_windows=n, wall_time=wall_time)

    def flatten(self) -> Dict[str, Union[str, int, float]]:
        return {k: getattr(self, k) for k in SUMMARY_FIELDS}


def save_summary_tsv(summaries: Sequence[SceneSummary],
                     path: Union[str, Path]) -> None:
    df = pd.DataFrame([s.flatten() for s in summaries],
                      columns=SUMMARY_FIELDS)
    df.to_csv(path, sep="\t", index=False, encoding="utf-8",
              quoting=csv.QUOTE_MINIMAL)


def load_summary_tsv(path: Union[str, Path]) -> pd.DataFrame:
    return pd.read_csv(path, sep="\t", encoding="utf-8")


def save_traces(traces: Sequence[Trace], path: Union[str, Path]) -> None:
    save_jsonl_file(traces, Path(path))


def load_traces(path: Union[str, Path]) -> List[Trace]:
    return list(load_jsonl_file(Path(path), Trace))
