import math

import numpy as np
import pytest

from gammapred.behavior import BehaviorConstraints, BehaviorPosterior, \
    CandidateGrid, Intention
from gammapred.config import EngineConfig
from gammapred.engine import DEFAULT_BEHAVIOR, AgentContext, advance, \
    filter_posteriors, frozen_behaviors, horizon_times, initial_world, \
    parse_scenario, predict, rollout, scenario_builder, simulate, \
    step_agent, true_behaviors
from gammapred.evaluate.harness import window_tracks
from gammapred.geometry import ConvexPolygon, minkowski_difference
from gammapred.kinematics import AgentType, track_velocity
from support import agent, builder, car_profile, fail_if, overlap_area, \
    small_profiles, world

CAR = AgentType.CAR


def _pedestrians():
    return builder(profiles=small_profiles())


def test_lone_pedestrian_step() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (0.0, 0.0), (1.0, 0.0))])
    v, pose = step_agent(w, 0, DEFAULT_BEHAVIOR)
    fail_if(not np.allclose(v, (1.0, 0.0)))
    fail_if(not np.allclose([pose.x, pose.y], (0.4, 0.0)))
    fail_if(not math.isclose(pose.heading, 0.0, abs_tol=1e-12))


def test_head_on_pedestrians_are_mirrored() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (-1.5, -0.05), (1.5, 0.0)),
                  agent(b, 1, (1.5, 0.05), (-1.5, 0.0))])
    v_a, _ = step_agent(w, 0, DEFAULT_BEHAVIOR)
    v_b, _ = step_agent(w, 1, DEFAULT_BEHAVIOR)
    fail_if(not np.allclose(v_a, -v_b))
    # each slows down and sidesteps away from the other
    fail_if(v_a[0] >= 1.5 - 1e-3)
    fail_if(v_a[1] >= 0.0)


def test_footprint_of_pedestrian_ignores_heading() -> None:
    b = _pedestrians()
    turned = agent(b, 0, (1.0, 2.0), (0.0, 1.0))
    straight = agent(b, 1, (1.0, 2.0), (1.0, 0.0))
    fail_if(not turned.world_footprint.allclose(straight.world_footprint,
                                                atol=0.0))
    box = ConvexPolygon.rectangle(0.5, 0.5)
    for heading in np.linspace(0.0, 2 * math.pi, 13):
        for vertex in box.transformed((1.0, 2.0), heading).vertices:
            fail_if(not turned.world_footprint.contains(vertex))
    car = agent(b, 2, (0.0, 0.0), (5.0, 0.0), type_tag=CAR)
    fail_if(len(car.world_footprint) != 4)


def test_random_head_on_pairs_never_overlap() -> None:
    b = _pedestrians()
    rng = np.random.default_rng(8)
    for _ in range(40):
        speed_a, speed_b = rng.uniform(0.8, 1.6, 2)
        turn_a, turn_b = rng.normal(0.0, 0.1, 2)
        state = world(b, [
            agent(b, 0, (-3.0, rng.uniform(-0.1, 0.1)),
                  speed_a * np.array([math.cos(turn_a), math.sin(turn_a)])),
            agent(b, 1, (3.0, rng.uniform(-0.6, 0.6)),
                  -speed_b * np.array([math.cos(turn_b),
                                       math.sin(turn_b)]))])
        for _ in range(12):
            state = advance(state, frozen_behaviors(state))
            a, c = state.agents
            fail_if(overlap_area(a.world_footprint, c.world_footprint) >
                    1e-9)


def test_head_on_rollout_never_overlaps() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (-1.5, 0.0), (1.5, 0.0)),
                  agent(b, 1, (1.5, 0.05), (-1.5, 0.0))])
    state = w
    for _ in range(12):
        state = advance(state, frozen_behaviors(state))
        a, c = state.agents
        fail_if(overlap_area(a.world_footprint, c.world_footprint) >
                1e-9)


def test_car_hits_kinematic_boundary() -> None:
    profile = car_profile()
    b = builder(profiles=small_profiles())
    w = world(b, [agent(b, 0, (0.0, 0.0), (5.0, 0.0), type_tag=CAR)])
    v, _ = step_agent(w, 0, DEFAULT_BEHAVIOR, reference_offset=(0.0, 100.0))
    k_hat = profile.world_trackable_set(0.0)
    fail_if(abs(k_hat.signed_distance(v)) > 1e-6)
    poses, _ = track_velocity(profile, w.agent(0).pose, v, w.dt,
                              w.controller_dt)
    for before, after in zip(poses[:-1], poses[1:]):
        distance = math.hypot(after.x - before.x, after.y - before.y)
        if distance > 1e-9:
            fail_if(abs(after.heading - before.heading) / distance >
                    profile.model.max_curvature + 1e-6)


def test_far_apart_agents_go_straight() -> None:
    b = _pedestrians()
    starts = {0: ((0.0, 0.0), (1.0, 0.0)), 1: ((0.0, 20.0), (0.0, 1.2)),
              2: ((30.0, -30.0), (-0.5, 0.5))}
    w = world(b, [agent(b, k, p, v) for k, (p, v) in starts.items()])
    out = predict(w, 12)
    times = horizon_times(w, 12)
    fail_if(not np.allclose(times, 0.4 * np.arange(1, 13)))
    fail_if(not math.isclose(times[-1], 4.8))
    for k, (p, v) in starts.items():
        fail_if(out[k].shape != (12, 2))
        expected = np.asarray(p) + times[:, None] * np.asarray(v)
        fail_if(not np.allclose(out[k], expected, atol=1e-9))


def test_advance_ignores_agent_order() -> None:
    b = _pedestrians()
    agents = [agent(b, 0, (0.0, 0.0), (1.0, 0.0)),
              agent(b, 1, (2.5, 0.3), (-1.0, 0.0)),
              agent(b, 2, (1.0, 2.0), (0.0, -1.0))]
    behaviors = {k: DEFAULT_BEHAVIOR for k in range(3)}
    forward = advance(world(b, agents), behaviors).by_id()
    backward = advance(world(b, agents[::-1]), behaviors).by_id()
    for k in range(3):
        fail_if(not np.allclose(forward[k].position, backward[k].position))


def test_obstacle_is_never_entered() -> None:
    b = _pedestrians()
    wall = ConvexPolygon([(2.0, -1.0), (3.0, -1.0), (3.0, 1.0), (2.0, 1.0)])
    state = world(b, [agent(b, 0, (0.0, 0.0), (1.0, 0.0))], [wall])
    for _ in range(12):
        state = advance(state, frozen_behaviors(state))
        fail_if(overlap_area(state.agents[0].world_footprint, wall) > 1e-9)


def test_static_agent_stays_put() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (0.0, 0.0), (1.0, 0.0)),
                  agent(b, 1, (3.0, 0.0), (0.0, 0.0),
                        type_tag=AgentType.STATIC_OBSTACLE)])
    out = predict(w, 5)
    fail_if(not np.allclose(out[1], [(3.0, 0.0)] * 5))
    fail_if(np.max(out[0][:, 0]) >= 3.0 - 0.5)


def test_frozen_behaviors_use_map() -> None:
    b = _pedestrians()
    candidates = CandidateGrid().candidates()
    weights = np.full(len(candidates), -10.0)
    weights[5] = 0.0
    a = agent(b, 0, (0.0, 0.0), (1.0, 0.0),
              behavior=BehaviorPosterior(candidates, weights))
    w = world(b, [a, agent(b, 1, (5.0, 5.0), (0.0, 0.0))])
    frozen = frozen_behaviors(w)
    fail_if(frozen[0] != candidates[5])
    fail_if(frozen[1] != DEFAULT_BEHAVIOR)
    override = BehaviorConstraints(intention=Intention.KEEP_ACCELERATION,
                                   r_front=2.0, r_rear=1.0, c1=0.0, c2=0.5)
    fail_if(frozen_behaviors(w, {1: override})[1] != override)


def test_context_caches_identical_constraints() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (0.0, 0.0), (1.0, 0.0)),
                  agent(b, 1, (20.0, 0.0), (-1.0, 0.0))])
    context = AgentContext(w, 0, max_radius=8.0)
    near = BehaviorConstraints(intention=Intention.KEEP_VELOCITY,
                               r_front=2.0, r_rear=1.0, c1=0.0, c2=0.5)
    far = BehaviorConstraints(intention=Intention.KEEP_VELOCITY,
                              r_front=8.0, r_rear=2.0, c1=0.05, c2=0.7)
    fail_if(context.step(near) is not context.step(far))


def test_ablations_change_the_world() -> None:
    profiles = small_profiles()
    plain = builder(EngineConfig(use_kinematics=False,
                                 use_polygons=False), profiles)
    disc = plain.profile(CAR).trackable_set
    fail_if(len(disc) != 72)
    fail_if(not math.isclose(disc.circumradius(), 6.0))
    footprint = plain.footprint(CAR)
    fail_if(len(footprint) != 16)
    for vertex in ConvexPolygon.rectangle(4.5, 1.8).vertices:
        fail_if(not footprint.contains(vertex))
    full = builder(EngineConfig(), profiles)
    fail_if(len(full.footprint(CAR)) != 4)


def test_missing_profile_raises() -> None:
    b = builder(profiles=small_profiles())
    with pytest.raises(KeyError):
        b.profile(AgentType.BUS)


def _accelerating_scenario():
    return parse_scenario({'agents': [{
        'id': 1, 'type': 'pedestrian', 'position': [0.0, 0.0],
        'velocity': [1.0, 0.0], 'acceleration': [0.0, 0.3],
        'behavior': {'intention': 'keep_acceleration', 'r_front': 4.0,
                     'r_rear': 2.0, 'c1': 0.0, 'c2': 0.5}}]})


def test_filter_recovers_intention() -> None:
    profiles = small_profiles()
    dataset = simulate(_accelerating_scenario(), 8, profiles=profiles)
    frames = dataset.frame_ids
    tracks = window_tracks(dataset, frames)
    b = builder(profiles=profiles)
    posteriors = filter_posteriors(b, tracks, frames[1:])
    fail_if(posteriors[1].map_candidate.intention !=
            Intention.KEEP_ACCELERATION)
    fail_if(not math.isclose(np.sum(posteriors[1].weights), 1.0,
                             abs_tol=1e-9))


def test_filter_ranks_true_behavior_among_the_best() -> None:
    # only behaviors that move the agent differently can be told apart, so
    # the true one must tie for the maximum rather than win outright
    profiles = small_profiles()
    b = builder(profiles=profiles)
    candidates = b.grid(AgentType.PEDESTRIAN).candidates()
    rng = np.random.default_rng(21)
    tie_sizes = list()
    for _ in range(10):
        truth = candidates[int(rng.integers(len(candidates)))]
        scenario = parse_scenario({'agents': [
            {'id': 1, 'type': 'pedestrian', 'position': [0.0, 0.0],
             'velocity': [1.2, 0.0],
             'behavior': {'intention': truth.intention.value,
                          'r_front': truth.r_front, 'r_rear': truth.r_rear,
                          'c1': truth.c1, 'c2': truth.c2}},
            {'id': 2, 'type': 'pedestrian',
             'position': [6.5, float(rng.uniform(0.2, 0.8))],
             'velocity': [-1.2, 0.0]}]})
        dataset = simulate(scenario, 8, profiles=profiles)
        frames = dataset.frame_ids
        tracks = window_tracks(dataset, frames)
        posteriors = filter_posteriors(
            b, tracks, frames[1:],
            posteriors={2: BehaviorPosterior([DEFAULT_BEHAVIOR])})
        log_weights = posteriors[1].log_weights
        best = np.max(log_weights)
        fail_if(log_weights[candidates.index(truth)] < best - 1e-6)
        tie_sizes.append(int(np.sum(log_weights >= best - 1e-6)))
    fail_if(min(tie_sizes) >= len(candidates))


def test_incremental_filter_matches_full() -> None:
    profiles = small_profiles()
    scenario = parse_scenario({'agents': [
        {'id': 1, 'type': 'pedestrian', 'position': [0.0, 0.0],
         'velocity': [1.0, 0.0]},
        {'id': 2, 'type': 'pedestrian', 'position': [6.0, 0.4],
         'velocity': [-1.0, 0.0]}], 'noise': 0.02, 'seed': 3})
    dataset = simulate(scenario, 8, profiles=profiles)
    frames = dataset.frame_ids
    tracks = window_tracks(dataset, frames)
    b = builder(profiles=profiles)
    full = filter_posteriors(b, tracks, frames[1:])
    head = filter_posteriors(b, tracks, frames[1:4])
    resumed = filter_posteriors(b, tracks, frames[4:], posteriors=head)
    for agent_id in (1, 2):
        fail_if(not np.allclose(full[agent_id].log_weights,
                                resumed[agent_id].log_weights))


def test_rollout_starts_from_lead_in() -> None:
    profiles = small_profiles()
    scenario = _accelerating_scenario()
    b = scenario_builder(scenario, profiles=profiles)
    first = initial_world(scenario, b)
    fail_if(list(first.agents[0].history.frames) != [-2, -1, 0])
    worlds = list(rollout(scenario, 3, b))
    fail_if(len(worlds) != 4)
    fail_if(true_behaviors(scenario)[1].intention !=
            Intention.KEEP_ACCELERATION)


def test_mixed_traffic_is_kinematically_feasible() -> None:
    profiles = small_profiles()
    profile = car_profile()
    scenario = parse_scenario({'agents': [
        {'id': 1, 'type': 'car', 'position': [-20.0, 0.0],
         'velocity': [5.0, 0.0]},
        {'id': 2, 'type': 'car', 'position': [0.0, -20.0],
         'velocity': [0.0, 5.0], 'heading': math.pi / 2},
        {'id': 3, 'type': 'pedestrian', 'position': [-2.0, 2.0],
         'velocity': [0.8, -0.8]},
        {'id': 4, 'type': 'pedestrian', 'position': [3.0, -1.0],
         'velocity': [-1.0, 0.2]},
        {'id': 5, 'type': 'static_obstacle', 'position': [6.0, 6.0]}]})
    b = scenario_builder(scenario, profiles=profiles)
    behaviors = true_behaviors(scenario)
    for state in rollout(scenario, 15, b):
        for car in (a for a in state.agents if a.type_tag == CAR):
            context = AgentContext(state, car.id,
                                   neighbor_behaviors=behaviors,
                                   max_radius=DEFAULT_BEHAVIOR.r_front)
            result = context.step(behaviors[car.id])
            k_hat = profile.world_trackable_set(car.heading)
            fail_if(not k_hat.contains(result.velocity, tol=1e-6))
            poses, _ = track_velocity(profile, car.pose, result.velocity,
                                      state.dt, state.controller_dt)
            for before, after in zip(poses[:-1], poses[1:]):
                distance = math.hypot(after.x - before.x,
                                      after.y - before.y)
                if distance > 1e-9:
                    curvature = abs(after.heading - before.heading) / \
                        distance
                    fail_if(curvature >
                            profile.model.max_curvature + 1e-6)


def test_relative_geometry_is_shared_by_the_pair() -> None:
    b = _pedestrians()
    w = world(b, [agent(b, 0, (0.0, 0.0), (1.0, 0.0)),
                  agent(b, 1, (2.0, 0.5), (-1.0, 0.0), type_tag=CAR)])
    a, c = w.agents
    rel = w.relative_geometry(a, 1, c.world_footprint)
    fail_if(w.relative_geometry(a, 1, c.world_footprint) is not rel)
    fail_if(not rel.allclose(
        minkowski_difference(c.world_footprint, a.world_footprint)))
    back = w.relative_geometry(c, 0, a.world_footprint)
    fail_if(not back.allclose(
        minkowski_difference(a.world_footprint, c.world_footprint)))
    later = advance(w, frozen_behaviors(w))
    fail_if(later.relative_geometry(later.agents[0], 1,
                                    later.agents[1].world_footprint) is rel)
