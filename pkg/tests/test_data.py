import math

import numpy as np
import pytest

from gammapred.data import DatasetParseError, Observation, \
    TrajectoryDataset, load_dataset, load_heterogeneous, load_homogeneous, \
    write_heterogeneous
from gammapred.geometry import ConvexPolygon
from gammapred.kinematics import AgentType
from support import fail_if

PED = AgentType.PEDESTRIAN


def _write(tmp_path, name: str, lines) -> str:
    path = tmp_path / name
    path.write_text('\n'.join(lines) + '\n')
    return str(path)


def _straight(n_frames: int, agents=(1, 2), step: int = 10
              ) -> TrajectoryDataset:
    frames = {k * step: [Observation(agent_id=a, type_tag=PED,
                                     position=np.array([k * 0.4, float(a)]))
                         for a in agents]
              for k in range(n_frames)}
    return TrajectoryDataset(frames, name='straight')


def test_homogeneous_two_rows(tmp_path) -> None:
    path = _write(tmp_path, 'eth.txt', ['0 1 1.5 2.0', '10 1 1.9 2.0'])
    dataset = load_homogeneous(path)
    fail_if(dataset.agent_ids != [1] or dataset.frame_ids != [0, 10])
    fail_if(dataset.name != 'eth')
    fail_if(dataset.frame_period != 0.4 or dataset.frame_step != 10)
    fail_if(dataset.observation(10, 1).type_tag != PED)
    fail_if(not np.allclose(dataset.observation(10, 1).position, (1.9, 2.0)))


def test_homogeneous_interleaved_matches_line_tally(tmp_path) -> None:
    rng = np.random.default_rng(0)
    lines, tally = list(), dict()
    for frame in range(0, 200, 10):
        for agent_id in rng.choice(8, size=4, replace=False):
            lines.append(f"{frame} {agent_id} {rng.uniform(-5, 5):.3f} " +
                         f"{rng.uniform(-5, 5):.3f}")
            tally[int(agent_id)] = tally.get(int(agent_id), 0) + 1
    dataset = load_homogeneous(_write(tmp_path, 'mixed.txt', lines))
    fail_if(dataset.agent_ids != sorted(tally))
    for agent_id, count in tally.items():
        frames, positions = dataset.trajectory(agent_id)
        fail_if(len(frames) != count or positions.shape != (count, 2))
        fail_if(np.any(np.diff(frames) <= 0))
    fail_if(len(dataset) != len(lines))


def test_homogeneous_bad_rows(tmp_path) -> None:
    with pytest.raises(DatasetParseError) as error:
        load_homogeneous(_write(tmp_path, 'a.txt',
                                ['0 1 0.0 0.0', '10 1 0.4']))
    fail_if(error.value.row != 2)
    with pytest.raises(DatasetParseError):
        load_homogeneous(_write(tmp_path, 'b.txt', ['0 1 zero 0.0']))
    with pytest.raises(DatasetParseError):
        load_homogeneous(_write(tmp_path, 'c.txt', ['0.5 1 0.0 0.0']))
    with pytest.raises(DatasetParseError) as error:
        load_homogeneous(_write(tmp_path, 'd.txt',
                                ['0 1 0.0 0.0', '0 1 1.0 0.0']))
    fail_if(error.value.row != 2)


def test_homogeneous_unsorted_rows_are_sorted(tmp_path) -> None:
    dataset = load_homogeneous(_write(
        tmp_path, 'unsorted.txt',
        ['# comment', '20 1 0.8 0.0', '0 1 0.0 0.0', '', '10 1 0.4 0.0']))
    frames, positions = dataset.trajectory(1)
    fail_if(list(frames) != [0, 10, 20])
    fail_if(not np.allclose(positions[:, 0], [0.0, 0.4, 0.8]))


def test_heterogeneous_rows_and_obstacles(tmp_path) -> None:
    path = _write(tmp_path, 'cross.txt', [
        'FRAME_PERIOD 0.5',
        'OBSTACLE', '0 0', '2 0', '2 1', '0 1', 'END',
        '0 1 car 0.0 0.0 0.0 4.5 1.8',
        '0 2 pedestrian 5.0 5.0 nan nan nan',
        '1 1 Car 2.5 0.0 0.0 4.5 1.8'])
    dataset = load_heterogeneous(path)
    fail_if(dataset.frame_period != 0.5)
    fail_if(len(dataset.obstacles) != 1 or len(dataset.obstacles[0]) != 4)
    car = dataset.observation(1, 1)
    fail_if(car.type_tag != AgentType.CAR)
    fail_if(car.length != 4.5 or car.width != 1.8 or car.heading != 0.0)
    ped = dataset.observation(0, 2)
    fail_if(ped.heading is not None or ped.length is not None)
    fail_if(load_dataset(path).obstacles[0].area != 2.0)


def test_heterogeneous_errors(tmp_path) -> None:
    with pytest.raises(DatasetParseError) as error:
        load_heterogeneous(_write(tmp_path, 'a.txt',
                                  ['0 1 tram 0 0 0 10 2']))
    fail_if('pedestrian' not in str(error.value) or error.value.row != 1)
    with pytest.raises(DatasetParseError):
        load_heterogeneous(_write(tmp_path, 'b.txt', ['OBSTACLE', '0 0']))
    with pytest.raises(DatasetParseError):
        load_heterogeneous(_write(tmp_path, 'c.txt',
                                  ['OBSTACLE', '0 0', '1 1', '2 2', 'END']))
    with pytest.raises(DatasetParseError):
        load_heterogeneous(_write(tmp_path, 'd.txt',
                                  ['FRAME_PERIOD 0', '0 1 car 0 0 0 4 2']))


def test_heterogeneous_write_and_read(tmp_path) -> None:
    frames = {
        0: [Observation(agent_id=1, type_tag=AgentType.CAR,
                        position=np.array([0.1, 1.0 / 3.0]), heading=0.25,
                        length=4.5, width=1.8),
            Observation(agent_id=7, type_tag=PED,
                        position=np.array([-2.0, 5.0]))],
        1: [Observation(agent_id=1, type_tag=AgentType.CAR,
                        position=np.array([2.1, 1.0 / 3.0]), heading=0.25,
                        length=4.5, width=1.8)]}
    dataset = TrajectoryDataset(
        frames, frame_period=0.4, name='mixed',
        obstacles=[ConvexPolygon.regular(1.0, 5, center=(3.0, 3.0))])
    path = tmp_path / 'mixed.txt'
    write_heterogeneous(dataset, path)
    back = load_dataset(path)
    fail_if(back.frame_ids != dataset.frame_ids)
    fail_if(not back.obstacles[0].allclose(dataset.obstacles[0], 0.0))
    for (frame, a), (_, b) in zip(dataset.rows(), back.rows()):
        fail_if(a.agent_id != b.agent_id or a.type_tag != b.type_tag)
        fail_if(not np.array_equal(a.position, b.position))
        fail_if((a.heading, a.length, a.width) !=
                (b.heading, b.length, b.width))


def test_dataset_rejects_duplicates() -> None:
    obs = Observation(agent_id=1, type_tag=PED, position=np.zeros(2))
    with pytest.raises(ValueError):
        TrajectoryDataset({0: [obs, obs]})
    with pytest.raises(ValueError):
        TrajectoryDataset({0: [obs]}, frame_period=0.0)


def test_windows_are_complete_and_contiguous() -> None:
    dataset = _straight(25)
    windows = dataset.windows(8, 12)
    fail_if(len(windows) != 6)
    first = windows[0]
    fail_if(first.start_frame != 0 or first.agent_ids != (1, 2))
    fail_if(len(first.observed_frames) != 8 or len(first.future_frames) != 12)
    fail_if(first.last_observed != 70 or first.future_frames[0] != 80)
    fail_if(len(dataset.windows(8, 12, stride=4)) != 2)
    long = _straight(35)
    holed = long.subset([f for f in long.frame_ids if f != 100])
    remaining = holed.windows(8, 12)
    fail_if(len(remaining) != 5 or remaining[0].start_frame != 110)
    fail_if(any(w.frames[-1] - w.frames[0] != 190 for w in remaining))


def test_windows_drop_partial_agents() -> None:
    dataset = _straight(20)
    frames = dict(dataset.frames)
    frames[30] = [o for o in frames[30] if o.agent_id != 2]
    window, = TrajectoryDataset(frames).windows(8, 12)
    fail_if(window.agent_ids != (1,))
    fail_if(TrajectoryDataset({}).windows() != [])


def test_step_index_and_period() -> None:
    dataset = _straight(5, step=6)
    fail_if(dataset.frame_step != 6)
    fail_if(dataset.step_index(24) != 4)
    fail_if(not math.isclose(dataset.frame_period, 0.4))
