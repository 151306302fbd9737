import numpy as np
import pytest
import yaml

from gammapred.data import load_heterogeneous, write_heterogeneous
from gammapred.engine import ScenarioParseError, load_scenario, \
    parse_scenario, scenario_to_yaml, simulate
from gammapred.kinematics import AgentType
from support import fail_if, small_profiles

CROSSING = {
    'noise': 0.05, 'seed': 11,
    'obstacles': [[[4.0, 4.0], [5.0, 4.0], [5.0, 5.0], [4.0, 5.0]]],
    'agents': [
        {'id': 1, 'type': 'pedestrian', 'position': [0.0, 0.0],
         'velocity': [1.0, 0.0]},
        {'id': 2, 'type': 'pedestrian', 'position': [3.0, -3.0],
         'velocity': [0.0, 1.0],
         'behavior': {'intention': 'keep_acceleration', 'r_front': 4.0,
                      'r_rear': 2.0, 'c1': 0.0, 'c2': 0.7}},
        {'id': 3, 'type': 'car', 'position': [-10.0, 5.0],
         'velocity': [4.0, 0.0], 'length': 4.0, 'width': 1.7},
        {'id': 4, 'type': 'static_obstacle', 'position': [8.0, 0.0]}]}


def test_empty_scenario() -> None:
    dataset = simulate(parse_scenario({}), 10, profiles=small_profiles())
    fail_if(len(dataset) != 0 or dataset.frame_ids != [])
    fail_if(simulate(parse_scenario(None), 0,
                     profiles=small_profiles()).agent_ids != [])


def test_lone_agent_moves_straight() -> None:
    scenario = parse_scenario({'agents': [
        {'id': 1, 'type': 'pedestrian', 'position': [0.0, 0.0],
         'velocity': [1.0, 0.0]}]})
    dataset = simulate(scenario, 10, profiles=small_profiles())
    fail_if(dataset.frame_ids != list(range(11)))
    frames, positions = dataset.trajectory(1)
    expected = np.column_stack([0.4 * frames, np.zeros(len(frames))])
    fail_if(not np.allclose(positions, expected, atol=1e-9))
    first = dataset.observation(0, 1)
    fail_if(first.heading != 0.0 or first.length is None)


def test_same_seed_same_file(tmp_path) -> None:
    scenario = parse_scenario(CROSSING)
    paths = list()
    for name in ('a', 'b'):
        dataset = simulate(scenario, 12, profiles=small_profiles())
        paths.append(tmp_path / f"{name}.txt")
        write_heterogeneous(dataset, paths[-1])
    fail_if(paths[0].read_bytes() != paths[1].read_bytes())
    other = simulate(scenario, 12, seed=12, profiles=small_profiles())
    write_heterogeneous(other, tmp_path / 'c.txt')
    fail_if((tmp_path / 'c.txt').read_bytes() == paths[0].read_bytes())


def test_simulated_dataset_reads_back(tmp_path) -> None:
    dataset = simulate(parse_scenario(CROSSING), 6,
                       profiles=small_profiles())
    path = tmp_path / 'crossing.txt'
    write_heterogeneous(dataset, path)
    back = load_heterogeneous(path)
    fail_if(back.agent_ids != [1, 2, 3, 4])
    fail_if(len(back.obstacles) != 1)
    fail_if(back.observation(0, 3).type_tag != AgentType.CAR)
    fail_if(back.observation(0, 3).length != 4.0)
    static = back.trajectory(4)[1]
    fail_if(not np.allclose(static, [(8.0, 0.0)] * 7))


def test_negative_steps() -> None:
    with pytest.raises(ValueError):
        simulate(parse_scenario({}), -1, profiles=small_profiles())


@pytest.mark.parametrize('config', [
    {'agents': [{'id': 1, 'type': 'tram', 'position': [0, 0]}]},
    {'agents': [{'id': 1, 'type': 'car'}]},
    {'agents': [{'id': 1, 'type': 'car', 'position': [0, 0],
                 'colour': 'red'}]},
    {'agents': [{'id': 1, 'type': 'car', 'position': [0, 0]},
                {'id': 1, 'type': 'car', 'position': [5, 0]}]},
    {'agents': [{'id': 1, 'type': 'static_obstacle', 'position': [0, 0],
                 'velocity': [1, 0]}]},
    {'agents': [{'id': 1, 'type': 'car', 'position': [0, 0],
                 'behavior': {'intention': 'keep_velocity'}}]},
    {'agents': [{'id': 1, 'type': 'car', 'position': [0, 0],
                 'length': -1}]},
    {'obstacles': [[[0, 0], [1, 1], [2, 2]]]},
    {'dt': 0},
    {'seed': -3},
    {'wind': 3},
])
def test_bad_scenarios(config) -> None:
    with pytest.raises(ScenarioParseError):
        parse_scenario(config)


def test_scenario_yaml_round_trip(tmp_path) -> None:
    scenario = parse_scenario(CROSSING)
    path = tmp_path / 'crossing.yaml'
    with open(path, 'w') as f:
        yaml.dump(scenario_to_yaml(scenario), f)
    back = load_scenario(path)
    fail_if(back.seed != 11 or back.noise != 0.05)
    fail_if(len(back.obstacles) != 1)
    for a, b in zip(scenario.agents, back.agents):
        fail_if(a.id != b.id or a.type_tag != b.type_tag)
        fail_if(not np.array_equal(a.velocity, b.velocity))
        fail_if(a.behavior != b.behavior or a.length != b.length)
