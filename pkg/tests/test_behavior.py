import math

import numpy as np
import pytest

from scipy.integrate import quad

from gammapred.behavior import AgentHistory, BehaviorConstraints, \
    BehaviorPosterior, CandidateGrid, Intention, attention_set, \
    bayes_update, likelihood, normalize_pair, preferred_velocity, \
    responsibility
from gammapred.config import EngineConfig
from gammapred.kinematics import AgentType
from support import agent, builder, fail_if, history, pedestrian_profile

KV = Intention.KEEP_VELOCITY
KA = Intention.KEEP_ACCELERATION


def _angle(a, b) -> float:
    return abs(math.atan2(a[0] * b[1] - a[1] * b[0], float(np.dot(a, b))))


def test_history_differences() -> None:
    h = AgentHistory([0, 1, 2], [(0, 0), (0.4, 0), (0.8, 0.4)], 0.4)
    fail_if(not np.allclose(h.velocity(), (1.0, 1.0)))
    fail_if(not np.allclose(h.acceleration(), (0.0, 2.5)))
    fail_if(h.has_gaps)
    gap = AgentHistory([0, 2], [(0, 0), (0.8, 0)], 0.4)
    fail_if(not gap.has_gaps)
    fail_if(not np.allclose(gap.velocity(), (1.0, 0.0)))
    with pytest.raises(ValueError):
        AgentHistory([1, 1], [(0, 0), (1, 0)], 0.4)


def test_history_heading_survives_stop() -> None:
    h = AgentHistory([0, 1, 2], [(0, 0), (0, 0.4), (0, 0.4)], 0.4)
    fail_if(not math.isclose(h.heading(), math.pi / 2))
    fail_if(not math.isclose(
        AgentHistory([0], [(0, 0)], 0.4).heading(1.0), 1.0))


def test_preferred_velocity_straight() -> None:
    h = history((0.0, 0.0), (1.0, 0.0))
    fail_if(not np.allclose(preferred_velocity(h, KV, 4.8), (1.0, 0.0)))
    fail_if(not np.allclose(preferred_velocity(h, KA, 4.8), (1.0, 0.0)))


def test_preferred_velocity_stationary_and_short() -> None:
    fail_if(np.any(preferred_velocity(history((1, 1), (0, 0)), KV, 4.8)))
    single = AgentHistory([0], [(1.0, 1.0)], 0.4)
    fail_if(np.any(preferred_velocity(single, KV, 4.8)))
    two = history((0.0, 0.0), (0.5, 0.5), n=2)
    fail_if(not np.allclose(preferred_velocity(two, KA, 4.8),
                            preferred_velocity(two, KV, 4.8)))


def test_preferred_velocity_on_arc() -> None:
    speed, rate, dt, horizon = 1.0, 0.2, 0.4, 4.8
    radius = speed / rate
    times = dt * np.arange(-2, 1)
    h = AgentHistory([-2, -1, 0], np.column_stack(
        [radius * np.sin(rate * times),
         radius * (1.0 - np.cos(rate * times))]), dt)
    v = preferred_velocity(h, KA, horizon)
    fail_if(not math.isclose(np.linalg.norm(v), np.linalg.norm(h.velocity())))
    # tangent (1, 0) and centripetal (0, rate * speed) at t = 0
    arc = np.array([speed * horizon, 0.5 * rate * speed * horizon ** 2])
    fail_if(_angle(v, arc) > 0.1)
    fail_if(_angle(preferred_velocity(h, KV, horizon), arc) < 0.3)


def test_preferred_velocity_offset() -> None:
    h = history((0.0, 0.0), (1.0, 0.0))
    v = preferred_velocity(h, KV, 4.8, offset=(0.0, 4.8))
    fail_if(not np.allclose(v, np.array([1.0, 1.0]) / math.sqrt(2)))


def test_attention_set() -> None:
    b = builder(profiles={AgentType.PEDESTRIAN: pedestrian_profile()})
    me = agent(b, 0, (0.0, 0.0), (1.0, 0.0))
    ahead_in = agent(b, 1, (3.9 + 0.25, 0.0), (0.0, 0.0))
    ahead_out = agent(b, 2, (4.1 + 0.25, 1.0), (0.0, 0.0))
    behind = agent(b, 3, (-3.0 - 0.25, 0.0), (0.0, 0.0))
    sideways = agent(b, 4, (0.0, 3.0 + 0.25), (0.0, 0.0))
    others = [me, ahead_in, ahead_out, behind, sideways]
    fail_if(sorted(attention_set(me, others, 4.0, 2.0)) != [1, 4])
    wide = attention_set(me, others, 8.0, 4.0)
    fail_if(not set(attention_set(me, others, 4.0, 2.0)) <= set(wide))
    fail_if(sorted(wide) != [1, 2, 3, 4])


def test_responsibility() -> None:
    for d in (0.0, 1.0, 10.0):
        fail_if(not math.isclose(responsibility(d, 0.0, 0.7), 0.7))
    fail_if(responsibility(100.0, 0.05, 0.5) != 1.0)
    fail_if(responsibility(100.0, -0.05, 0.5) != 0.0)
    distances = np.linspace(0.0, 20.0, 50)
    rising = [responsibility(d, 0.05, 0.3) for d in distances]
    falling = [responsibility(d, -0.05, 0.7) for d in distances]
    fail_if(np.any(np.diff(rising) < 0) or np.any(np.diff(falling) > 0))
    with pytest.raises(ValueError):
        responsibility(-1.0, 0.0, 0.5)


def test_normalize_pair() -> None:
    fail_if(not np.allclose(normalize_pair(0.3, 0.9), (0.25, 0.75)))
    fail_if(normalize_pair(0.0, 0.0) != (0.5, 0.5))
    fail_if(normalize_pair(0.0, 0.6) != (0.0, 1.0))


def test_likelihood() -> None:
    sigma = 0.3
    mode = 1.0 / (sigma * math.sqrt(2 * math.pi))
    fail_if(not math.isclose(likelihood((1, 2), (1, 2), sigma), mode))
    fail_if(not math.isclose(likelihood((0.3, 0.0), (0.0, 0.0), sigma),
                             mode * math.exp(-0.5)))
    h = 1e-4
    area, _ = quad(lambda x: math.exp(-x * x / (2 * sigma ** 2)) /
                   (sigma * math.sqrt(2 * math.pi)), 0.6 - h, 0.6 + h)
    fail_if(not math.isclose(likelihood((0.0, 0.6), (0.0, 0.0), sigma),
                             area / (2 * h), rel_tol=1e-6))
    with pytest.raises(ValueError):
        likelihood((0, 0), (0, 0), 0.0)


def test_behavior_constraints_validation() -> None:
    with pytest.raises(ValueError):
        BehaviorConstraints(intention=KV, r_front=2.0, r_rear=4.0, c1=0.0,
                            c2=0.5)
    with pytest.raises(ValueError):
        BehaviorConstraints(intention=KV, r_front=4.0, r_rear=2.0, c1=0.0,
                            c2=1.5)


def test_candidate_grid() -> None:
    grid = CandidateGrid()
    candidates = grid.candidates()
    fail_if(len(candidates) != len(grid) or len(grid) != 72)
    fail_if(any(c.r_rear > c.r_front for c in candidates))
    fail_if(len(set(candidates)) != len(candidates))
    plain = grid.ablated(infer_intention=False, infer_attention=False,
                         infer_responsibility=False)
    only = plain.candidates()
    fail_if(len(only) != 1)
    fail_if(only[0].intention != KV or only[0].r_front != math.inf)
    fail_if(only[0].responsibility(12.0) != 0.5)


def test_config_grid_per_type() -> None:
    config = EngineConfig()
    fail_if(config.grid(AgentType.PEDESTRIAN).c2 != (0.5, 0.7))
    fail_if(config.grid(AgentType.CAR).c2 != (0.3, 0.5))
    ablated = config.replace(infer_attention=False).grid(AgentType.CAR)
    fail_if(ablated.radius_pairs() != [(math.inf, math.inf)])


def _pair() -> BehaviorPosterior:
    return BehaviorPosterior(
        [BehaviorConstraints(intention=KV, r_front=4.0, r_rear=2.0,
                             c1=0.0, c2=0.5),
         BehaviorConstraints(intention=KA, r_front=4.0, r_rear=2.0,
                             c1=0.0, c2=0.5)],
        np.log([0.9, 0.1]))


def test_bayes_update_uninformative() -> None:
    prior = _pair()
    posterior = bayes_update(prior, [(1.0, 1.0), (1.0, 1.0)], (0.0, 0.0),
                             0.5)
    fail_if(not np.allclose(posterior.weights, prior.weights))


def test_bayes_update_flips_map() -> None:
    prior = _pair()
    fail_if(prior.map_index != 0)
    posterior = bayes_update(prior, [(1.0, 0.0), (0.0, 0.0)], (0.0, 0.0),
                             0.1)
    fail_if(posterior.map_index != 1)
    fail_if(posterior.map_candidate.intention != KA)
    fail_if(not math.isclose(np.sum(posterior.weights), 1.0,
                             abs_tol=1e-9))


def test_bayes_update_scale_invariant() -> None:
    prior = _pair()
    shifted = BehaviorPosterior(prior.candidates, prior.log_weights + 5.0)
    a = bayes_update(prior, [(0.1, 0.0), (0.0, 0.2)], (0.0, 0.0), 0.1)
    b = bayes_update(shifted, [(0.1, 0.0), (0.0, 0.2)], (0.0, 0.0), 0.1)
    fail_if(not np.allclose(a.weights, b.weights))


def test_bayes_update_underflow_resets() -> None:
    posterior = bayes_update(_pair(), [(1e3, 0.0), (0.0, 1e3)], (0.0, 0.0),
                             0.1)
    fail_if(not np.allclose(posterior.weights, 0.5))
    with pytest.raises(ValueError):
        bayes_update(_pair(), [(0.0, 0.0)], (0.0, 0.0), 0.1)


def test_map_ties_take_first_candidate() -> None:
    posterior = BehaviorPosterior.uniform(CandidateGrid().candidates())
    fail_if(posterior.map_index != 0)
    fail_if(not math.isclose(np.sum(posterior.weights), 1.0))
