import random

import pytest

from linerec.graphs import (
    flip_orientation,
    configuration_orientation,
    generate_graph,
    is_isomorphic,
    make_graph,
    measure,
    sample_generic_configuration,
)
from linerec.layout import normalize_congruence
from linerec.pipeline import (
    NoiseModel,
    Status,
    reconstruct_kbasis,
    reconstruct_labeled,
    reconstruct_labeled_percycle,
    reconstruct_unlabeled,
    round_real_lengths,
    verify_result,
)

from conftest import petersen


K4 = generate_graph("complete", 4)


def noisy_instance(g, bits, seed, noise="random"):
    rng = random.Random(seed)
    p = sample_generic_configuration(g, bits, rng)
    eps = NoiseModel(noise).sample(g.m, rng)
    return p, [a + b for a, b in zip(measure(g, p), eps)]


def test_unlabeled_k4_exact():
    p, l = noisy_instance(K4, 36, seed=1, noise="none")
    result = reconstruct_unlabeled(l)
    assert result.status is Status.EXACT_SUCCESS
    assert is_isomorphic(result.graph, K4)
    assert result.configuration == normalize_congruence(p)
    assert verify_result(result, l, 0)
    assert result.undetected_risk


def test_unlabeled_k4_noisy():
    # seed 2's noise vector lies mostly in the cycle space: the least-squares
    # fit legitimately moves some measured lengths by more than 1, but never
    # by more than sqrt(residual) <= sqrt(m)
    p, l = noisy_instance(K4, 36, seed=2, noise="random")
    result = reconstruct_unlabeled(l)
    assert result.status in (Status.EXACT_SUCCESS, Status.COMBINATORIAL_SUCCESS)
    assert is_isomorphic(result.graph, K4)
    assert result.residual <= K4.m
    assert verify_result(result, l, 3)
    # a typical noise draw stays within the +-1 band
    p3, l3 = noisy_instance(K4, 36, seed=3, noise="random")
    result3 = reconstruct_unlabeled(l3)
    assert verify_result(result3, l3, 1)


def test_unlabeled_path_graph_never_crashes():
    path = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    _, l = noisy_instance(path, 20, seed=3, noise="none")
    result = reconstruct_unlabeled(l)
    assert result.status in (
        Status.DETECTED_FAILURE,
        Status.NOT_GRAPHIC,
        Status.INCONSISTENT,
    ) or verify_result(result, l, 0)


def test_labeled_c5_exact():
    c5 = generate_graph("cycle", 5)
    p, l = noisy_instance(c5, 25, seed=4, noise="none")
    result = reconstruct_labeled(c5, l)
    assert result.status is Status.EXACT_SUCCESS
    assert result.configuration == normalize_congruence(p)
    assert not result.undetected_risk  # c is known in the labeled setting


def test_labeled_k4_noisy():
    p, l = noisy_instance(K4, 36, seed=5, noise="random")
    result = reconstruct_labeled(K4, l)
    assert result.status in (Status.EXACT_SUCCESS, Status.COMBINATORIAL_SUCCESS)
    truth = configuration_orientation(K4, p)
    assert result.orientation in (truth, flip_orientation(truth))


def test_labeled_wrong_graph_detected():
    # lengths measured on K4 minus an edge, but claimed to come from C5
    k4e = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    _, l = noisy_instance(k4e, 36, seed=6, noise="none")
    wrong = generate_graph("cycle", 5)
    result = reconstruct_labeled(wrong, l)
    assert not result.ok


def test_labeled_detects_wrong_dimension():
    # square lengths admit two medium relations at one bit of precision
    c4 = generate_graph("cycle", 4)
    rng = random.Random(11)
    p = sample_generic_configuration(c4, 1, rng)
    result = reconstruct_labeled(c4, measure(c4, p))
    assert result.status is Status.DETECTED_FAILURE
    assert "MediumVectorCountMismatch" in result.reason


def test_percycle_matches_labeled():
    p, l = noisy_instance(K4, 36, seed=7, noise="none")
    direct = reconstruct_labeled(K4, l)
    percycle = reconstruct_labeled_percycle(K4, l)
    assert percycle.status is Status.EXACT_SUCCESS
    assert percycle.configuration == direct.configuration


def test_percycle_single_cycle_graph():
    c6 = generate_graph("cycle", 6)
    p, l = noisy_instance(c6, 36, seed=8, noise="none")
    direct = reconstruct_labeled(c6, l)
    percycle = reconstruct_labeled_percycle(c6, l)
    assert percycle.configuration == direct.configuration


def test_percycle_low_bits_failure_isolated():
    c6 = generate_graph("cycle", 6)
    rng = random.Random(9)
    p = sample_generic_configuration(c6, 2, rng)
    result = reconstruct_labeled_percycle(c6, measure(c6, p))
    if result.status is Status.DETECTED_FAILURE:
        assert "cycle" in result.reason


def test_unlabeled_petersen():
    pet = petersen()
    p, l = noisy_instance(pet, 225, seed=10, noise="none")
    result = reconstruct_unlabeled(l)
    assert result.status is Status.EXACT_SUCCESS
    assert is_isomorphic(result.graph, pet)
    assert result.three_connected


def test_kbasis_pipeline_k6():
    k6 = generate_graph("complete", 6)
    p, l = noisy_instance(k6, 16, seed=12, noise="none")
    result = reconstruct_kbasis(l, 3)
    assert result.ok
    assert is_isomorphic(result.graph, k6)


def test_round_real_lengths():
    assert round_real_lengths([4.4, 11.2, 6.8]) == [4, 11, 7]
    assert round_real_lengths([4.5]) == [4]  # ties to even
    with pytest.raises(ValueError):
        round_real_lengths([-0.5])


def test_round_real_matches_rounded_configuration():
    p_real = [1.3, 5.1, 12.4]
    k3 = generate_graph("cycle", 3)
    l_real = measure(k3, p_real)
    rounded = round_real_lengths(l_real)
    assert rounded == [4, 11, 7]
    p_rounded = [round(x) for x in p_real]
    diff = [a - b for a, b in zip(rounded, measure(k3, p_rounded))]
    assert all(d in (-1, 0, 1) for d in diff)


def test_real_front_end_through_pipeline(rng):
    g = generate_graph("complete", 4)
    p_real = [rng.uniform(1, 2**36) for _ in range(4)]
    l = round_real_lengths(measure(g, p_real))
    result = reconstruct_unlabeled(l)
    assert result.ok
    assert verify_result(result, l, 1)


def test_verify_result_bounds():
    p, l = noisy_instance(K4, 36, seed=13, noise="none")
    result = reconstruct_unlabeled(l)
    assert verify_result(result, l, 0)
    bumped = list(l)
    bumped[0] += 1
    assert not verify_result(result, bumped, 0)
    assert verify_result(result, bumped, 1)


def test_congruence_invariance():
    # translating or reflecting the configuration leaves the lengths, and
    # hence the canonical reconstruction, unchanged
    rng = random.Random(14)
    p = sample_generic_configuration(K4, 36, rng)
    shift = [x + 12345 for x in p]
    reflect = [max(p) + 1 - x for x in p]
    results = [reconstruct_unlabeled(measure(K4, q)) for q in (p, shift, reflect)]
    assert results[0].configuration == results[1].configuration == results[2].configuration
    assert results[0].graph == results[1].graph == results[2].graph


def test_two_connected_unlabeled_verifies():
    # K4 minus an edge is 2-connected but not 3-connected: some 2-isomorphic
    # output must still reproduce the lengths exactly
    g = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    rng = random.Random(15)
    p = sample_generic_configuration(g, 30, rng)
    l = measure(g, p)
    result = reconstruct_unlabeled(l)
    assert result.ok
    assert verify_result(result, l, 0)
    assert result.three_connected is False


def test_noise_model_validation():
    with pytest.raises(ValueError):
        NoiseModel("bogus")
    with pytest.raises(ValueError):
        NoiseModel("fixed", epsilon=(0, 2))
    fixed = NoiseModel("fixed", epsilon=(1, -1, 0))
    assert fixed.sample(3, random.Random(0)) == [1, -1, 0]
    none = NoiseModel("none")
    assert none.sample(4, random.Random(0)) == [0, 0, 0, 0]
    rnd = NoiseModel("random").sample(100, random.Random(0))
    assert set(rnd) <= {-1, 0, 1}


def test_stage_timings_reported():
    _, l = noisy_instance(K4, 36, seed=16, noise="none")
    result = reconstruct_unlabeled(l)
    assert {"relations", "realize", "orient", "layout"} <= set(result.stage_seconds)
