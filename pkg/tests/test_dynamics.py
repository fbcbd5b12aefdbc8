import random

import pytest

from chipfiring import (
    EnumerationCapExceededError,
    NegativeInputError,
    apply_script,
    c_max,
    enumerate_stable,
    fire_one,
    is_legal_sequence,
    is_stable,
    random_digraph,
    stabilize,
    stabilize_random_policy,
    stabilize_within,
    stable_count,
)
from chipfiring.linalg import weight


def test_c_max(g1, g2, g3):
    assert c_max(g1) == (1,)
    assert c_max(g2) == (4, 1, 1, 1)
    assert c_max(g3) == (1, 5)


def test_is_stable(g2, g3):
    assert is_stable(g2, (4, 0, 0, 1))
    assert not is_stable(g2, (6, 1, 1, 0))
    assert is_stable(g3, (0, 3))
    # negative entries do not make a configuration unstable
    assert is_stable(g3, (-4, -1))


def test_apply_script(g2, g3):
    assert apply_script(g2, (6, 1, 1, 0), (1, 2, 1, 1)) == (3, 1, 1, 0)
    assert apply_script(g2, (6, 1, 1, 0), (0, 0, 0, 0)) == (6, 1, 1, 0)
    assert apply_script(g3, (0, 3), (2, 1)) == (1, 1)
    # negated script reverse-fires
    assert apply_script(g3, (1, 1), (-2, -1)) == (0, 3)


def test_fire_one(g1, g2, g3):
    assert fire_one(g2, (6, 1, 1, 0), 1) == (1, 4, 1, 1)
    assert fire_one(g1, (2,), 1) == (0,)
    assert fire_one(g3, (2, 4), 1) == (0, 6)


def test_is_legal_sequence(g2):
    assert is_legal_sequence(g2, (6, 1, 1, 0), [1, 2, 2, 3, 4])
    assert not is_legal_sequence(g2, (6, 1, 1, 0), [2])
    # from a stable configuration nothing can fire
    for v in range(1, 5):
        assert not is_legal_sequence(g2, (3, 1, 1, 0), [v])


def test_stabilize_reference_traces(g2, g3):
    assert stabilize(g2, (6, 1, 1, 0)) == ((3, 1, 1, 0), (1, 2, 1, 1))
    assert stabilize(g2, (7, 1, 1, 1)) == ((4, 1, 1, 1), (1, 2, 1, 1))
    assert stabilize(g3, (2, 4)) == ((1, 4), (3, 1))


def test_stabilize_fixes_stable_inputs(g2):
    assert stabilize(g2, (3, 1, 1, 0)) == ((3, 1, 1, 0), (0, 0, 0, 0))


def test_stabilize_rejects_negative_input(g2):
    with pytest.raises(NegativeInputError):
        stabilize(g2, (1, -1, 0, 0))


def test_stabilize_result_satisfies_firing_identity(g2):
    for config in [(6, 1, 1, 0), (9, 9, 9, 9), (0, 0, 0, 7)]:
        stable, script = stabilize(g2, config)
        assert apply_script(g2, config, script) == stable
        assert is_stable(g2, stable)
        assert all(x >= 0 for x in script)


def test_stabilize_conserves_chips_up_to_sink_absorption(g2):
    # weight drop equals the chips sent into the sink by the script
    sink_arcs = {i: g2.multiplicity(i, g2.sink) for i in range(1, 5)}
    for config in [(6, 1, 1, 0), (12, 3, 3, 3)]:
        stable, script = stabilize(g2, config)
        absorbed = sum(script[i - 1] * m for i, m in sink_arcs.items())
        assert weight(config) - weight(stable) == absorbed
        assert absorbed >= 0


def test_stabilization_identities_on_fuzzed_inputs():
    rng = random.Random(7)
    for seed in range(25):
        g = random_digraph(rng.randint(1, 4), 3, seed)
        top = c_max(g)
        for _ in range(8):
            a = tuple(rng.randint(0, t + 3) for t in top)
            b = tuple(rng.randint(0, t + 3) for t in top)
            ab = tuple(x + y for x, y in zip(a, b))
            direct = stabilize(g, ab).stable
            assert direct == stabilize(g, tuple(x + y for x, y in zip(a, stabilize(g, b).stable))).stable
            assert (
                direct
                == stabilize(
                    g,
                    tuple(
                        x + y
                        for x, y in zip(stabilize(g, a).stable, stabilize(g, b).stable)
                    ),
                ).stable
            )


def test_abelian_property_random_policies():
    rng = random.Random(99)
    for seed in range(20):
        g = random_digraph(rng.randint(1, 4), 3, seed + 1000)
        top = c_max(g)
        for _ in range(10):
            config = tuple(rng.randint(0, 3 * (t + 1)) for t in top)
            expected = stabilize(g, config)
            assert stabilize_random_policy(g, config, rng) == expected


def test_stabilize_within_budget(g2):
    # enough budget: agrees with stabilize
    assert stabilize_within(g2, (6, 1, 1, 0), 100) == stabilize(g2, (6, 1, 1, 0))
    # zero budget on an unstable input does not finish
    assert stabilize_within(g2, (6, 1, 1, 0), 0) is None
    # negative entries are allowed here
    result = stabilize_within(g2, (7, -1, 0, 0), 1000)
    assert result is not None
    assert is_stable(g2, result.stable)
    assert apply_script(g2, (7, -1, 0, 0), result.script) == result.stable


def test_every_legal_stabilization_terminates_even_from_negative_inputs():
    # with a global sink the game ends from any integer start
    rng = random.Random(5)
    for seed in range(30):
        g = random_digraph(rng.randint(1, 4), 3, seed)
        top = c_max(g)
        for _ in range(5):
            config = tuple(rng.randint(-4, t + 6) for t in top)
            assert stabilize_within(g, config, 10**6) is not None


def test_enumerate_stable(g1, g2, g3):
    assert list(enumerate_stable(g1)) == [(0,), (1,)]
    all_g2 = list(enumerate_stable(g2))
    assert len(all_g2) == 40 and len(set(all_g2)) == 40
    assert all_g2 == sorted(all_g2)  # lexicographic
    assert all(is_stable(g2, a) for a in all_g2)
    assert stable_count(g3) == 12
    assert len(list(enumerate_stable(g3))) == 12


def test_enumerate_stable_cap(g2):
    with pytest.raises(EnumerationCapExceededError):
        list(enumerate_stable(g2, cap=10))
