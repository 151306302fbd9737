"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from argparse import Namespace
from pathlib import Path
from typing import List, Union

from ..data import load_dataset
from ..utils.io import load_jsonl_file, save_jsonl_file
from ..utils.logging import logger
from .predictor import Prediction, predict_frame

__all__ = ['Prediction', 'predict_frame', 'load_predictions',
           'save_predictions', 'main']


def save_predictions(predictions: List[Prediction],
                     path: Union[str, Path]) -> None:
    save_jsonl_file(predictions, Path(path))


def load_predictions(path: Union[str, Path]) -> List[Prediction]:
    return list(load_jsonl_file(Path(path), Prediction))


def main(args: Namespace) -> None:
    """predict: one horizon of positions per agent from one frame."""
    dataset = load_dataset(args.dataset)
    predictions = predict_frame(dataset, args.frame, args.engine)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    save_predictions(predictions, out)
    logger.info(f"Predict: wrote {len(predictions)} trajectories to {out}")
