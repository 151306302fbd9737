"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com

Dataset file formats ('#' starts a comment, blank lines ignored).

Homogeneous (ETH/UCY world coordinates), one row per observation:

    <frame_id> <agent_id> <x> <y>

Heterogeneous, one row per observation, 'nan' for a missing optional
value (heading in rad, length and width in m):

    <frame_id> <agent_id> <type> <x> <y> <heading> <length> <width>

plus optional header lines:

    FRAME_PERIOD <s>
    OBSTACLE                   starts a polygon block, followed by one
    <x> <y>                    'x y' line per vertex
    END
"""
from typing import Dict, List, Optional, Tuple, Union
from pathlib import Path

import math

import numpy as np
import pandas as pd

from ..geometry import ConvexPolygon, InvalidGeometryError
from ..kinematics import AgentType
from ..utils.logging import logger
from .dataset import DEFAULT_FRAME_PERIOD, Observation, TrajectoryDataset

HOMOGENEOUS_COLUMNS = ['frame', 'agent', 'x', 'y']
HETEROGENEOUS_COLUMNS = ['frame', 'agent', 'type', 'x', 'y', 'heading',
                         'length', 'width']


class DatasetParseError(ValueError):
    def __init__(self, message: str, row: Optional[int] = None) -> None:
        where = f"row {row}: " if row is not None else ''
        super().__init__(f"{where}{message}")
        self.row = row


def _lines(path: Union[str, Path]) -> List[Tuple[int, List[str]]]:
    with open(path, 'r') as f:
        out = list()
        for number, raw in enumerate(f, start=1):
            line = raw.split('#', 1)[0].strip()
            if line:
                out.append((number, line.split()))
        return out


def _number(token: str, row: int, name: str, optional: bool = False
            ) -> Optional[float]:
    if optional and token.lower() == 'nan':
        return None
    try:
        value = float(token)
    except ValueError:
        raise DatasetParseError(f"bad {name} '{token}'", row) from None
    if not math.isfinite(value):
        raise DatasetParseError(f"non-finite {name} '{token}'", row)
    return value


def _integer(token: str, row: int, name: str) -> int:
    value = _number(token, row, name)
    if value != int(value):
        raise DatasetParseError(f"{name} must be an integer: '{token}'", row)
    return int(value)


def _frames(df: pd.DataFrame, path: Union[str, Path]
            ) -> Dict[int, List[Observation]]:
    if not df['frame'].is_monotonic_increasing:
        logger.warning(f"{path}: rows not sorted by frame, sorting")
        df = df.sort_values(['frame', 'agent'], kind='stable')
    duplicated = df.duplicated(['frame', 'agent'])
    if duplicated.any():
        row = int(df.loc[duplicated, 'row'].iloc[0])
        raise DatasetParseError("duplicate (frame, agent) pair", row)
    frames: Dict[int, List[Observation]] = dict()
    for rec in df.itertuples(index=False):
        frames.setdefault(int(rec.frame), list()).append(Observation(
            agent_id=int(rec.agent), type_tag=rec.type,
            position=np.array([rec.x, rec.y], dtype=float),
            heading=rec.heading, length=rec.length, width=rec.width))
    return frames


def load_homogeneous(path: Union[str, Path],
                     frame_period: float = DEFAULT_FRAME_PERIOD
                     ) -> TrajectoryDataset:
    """Pedestrian-only dataset from 'frame agent x y' rows."""
    records = list()
    for number, tokens in _lines(path):
        if len(tokens) != 4:
            raise DatasetParseError(
                f"expected 4 fields ({' '.join(HOMOGENEOUS_COLUMNS)}), " +
                f"got {len(tokens)}", number)
        records.append({
            'row': number,
            'frame': _integer(tokens[0], number, 'frame id'),
            'agent': _integer(tokens[1], number, 'agent id'),
            'type': AgentType.PEDESTRIAN,
            'x': _number(tokens[2], number, 'x'),
            'y': _number(tokens[3], number, 'y'),
            'heading': None, 'length': None, 'width': None})
    df = pd.DataFrame.from_records(
        records, columns=['row'] + HETEROGENEOUS_COLUMNS)
    logger.info(f"Loaded {len(df)} rows from {path}")
    return TrajectoryDataset(_frames(df, path), frame_period=frame_period,
                             name=Path(path).stem)


def _type(token: str, row: int) -> AgentType:
    try:
        return AgentType.parse(token)
    except ValueError as e:
        raise DatasetParseError(str(e), row) from None


def load_heterogeneous(path: Union[str, Path]) -> TrajectoryDataset:
    """Typed agents with optional heading and dimensions, plus obstacles."""
    records = list()
    obstacles: List[ConvexPolygon] = list()
    frame_period = DEFAULT_FRAME_PERIOD
    vertices: Optional[List[List[float]]] = None
    start = 0
    for number, tokens in _lines(path):
        key = tokens[0].upper()
        if vertices is not None:
            if key == 'END':
                try:
                    obstacles.append(ConvexPolygon(np.array(vertices)))
                except (ValueError, InvalidGeometryError) as e:
                    raise DatasetParseError(f"bad obstacle: {e}",
                                            start) from None
                vertices = None
            elif len(tokens) == 2:
                vertices.append([_number(t, number, 'vertex')
                                 for t in tokens])
            else:
                raise DatasetParseError("expected 'x y' or END", number)
            continue
        if key == 'OBSTACLE':
            vertices, start = list(), number
        elif key == 'FRAME_PERIOD':
            if len(tokens) != 2:
                raise DatasetParseError("expected 'FRAME_PERIOD <s>'",
                                        number)
            frame_period = _number(tokens[1], number, 'frame period')
        elif len(tokens) != 8:
            raise DatasetParseError(
                f"expected 8 fields ({' '.join(HETEROGENEOUS_COLUMNS)}), " +
                f"got {len(tokens)}", number)
        else:
            records.append({
                'row': number,
                'frame': _integer(tokens[0], number, 'frame id'),
                'agent': _integer(tokens[1], number, 'agent id'),
                'type': _type(tokens[2], number),
                'x': _number(tokens[3], number, 'x'),
                'y': _number(tokens[4], number, 'y'),
                'heading': _number(tokens[5], number, 'heading', True),
                'length': _number(tokens[6], number, 'length', True),
                'width': _number(tokens[7], number, 'width', True)})
    if vertices is not None:
        raise DatasetParseError("OBSTACLE block without END", start)
    df = pd.DataFrame.from_records(
        records, columns=['row'] + HETEROGENEOUS_COLUMNS)
    # pandas turns missing optionals into NaN
    df = df.astype(object).where(df.notna(), None)
    logger.info(f"Loaded {len(df)} rows and {len(obstacles)} obstacles " +
                f"from {path}")
    try:
        return TrajectoryDataset(_frames(df, path),
                                 frame_period=frame_period,
                                 obstacles=obstacles, name=Path(path).stem)
    except ValueError as e:
        if isinstance(e, DatasetParseError):
            raise
        raise DatasetParseError(str(e)) from None


def _fmt(value: Optional[float]) -> str:
    return 'nan' if value is None else repr(float(value))


def write_heterogeneous(dataset: TrajectoryDataset,
                        path: Union[str, Path]) -> None:
    with open(path, 'w') as f:
        f.write(f"FRAME_PERIOD {dataset.frame_period!r}\n")
        for polygon in dataset.obstacles:
            f.write("OBSTACLE\n")
            for x, y in polygon.vertices:
                f.write(f"{float(x)!r} {float(y)!r}\n")
            f.write("END\n")
        for frame, o in dataset.rows():
            f.write(' '.join([
                str(frame), str(o.agent_id), o.type_tag.value,
                _fmt(o.position[0]), _fmt(o.position[1]), _fmt(o.heading),
                _fmt(o.length), _fmt(o.width)]) + '\n')


def load_dataset(path: Union[str, Path]) -> TrajectoryDataset:
    """Heterogeneous when rows carry a type column, else homogeneous."""
    for _, tokens in _lines(path):
        if tokens[0].upper() in ('FRAME_PERIOD', 'OBSTACLE') or \
                len(tokens) == 8:
            return load_heterogeneous(path)
        break
    return load_homogeneous(path)
