import random

import pytest

from linerec.graphs import (
    configuration_orientation,
    flip_orientation,
    generate_graph,
    measure,
    sample_generic_configuration,
)
from linerec.orient import (
    NotACycle,
    NotSigned,
    OrientationConflict,
    canonicalize_global_flip,
    compute_orientation,
    cycle_vector_from_space,
)
from linerec.relations import CycleSpaceBasis

from conftest import petersen, prism, true_basis

K4 = generate_graph("complete", 4)
K4_BASIS = true_basis(K4, [1, 5, 12, 30])


def test_cycle_vector_k4_triangle():
    vec = cycle_vector_from_space(K4_BASIS, [0, 1, 3])  # (0,1), (0,2), (1,2)
    assert vec == [1, -1, 0, 1, 0, 0] or vec == [-1, 1, 0, -1, 0, 0]
    assert vec[0] == 1  # leading entry canonicalized positive


def test_cycle_vector_orthogonal_to_lengths():
    lengths = measure(K4, [1, 5, 12, 30])
    vec = cycle_vector_from_space(K4_BASIS, [0, 1, 3])
    assert sum(a * b for a, b in zip(vec, lengths)) == 0


def test_cycle_vector_acyclic_subset():
    with pytest.raises(NotACycle):
        cycle_vector_from_space(K4_BASIS, [0, 1, 2])  # a star is independent


def test_cycle_vector_k3():
    basis = CycleSpaceBasis(m=3, rows=((1, -1, 1),), pre_truncation=())
    assert cycle_vector_from_space(basis, [0, 1, 2]) == [1, -1, 1]


def test_cycle_vector_not_signed():
    basis = CycleSpaceBasis(m=3, rows=((1, -2, 1),), pre_truncation=())
    with pytest.raises(NotSigned):
        cycle_vector_from_space(basis, [0, 1, 2])


def test_orientation_k3_up_to_flip():
    k3 = generate_graph("cycle", 3)
    basis = CycleSpaceBasis(m=3, rows=((1, -1, 1),), pre_truncation=())
    sigma = compute_orientation(k3, basis)
    increasing = tuple((i, j) for i, j in k3.edges)
    assert sigma in (increasing, flip_orientation(increasing))


def test_orientation_k4_round_trip():
    p = [1, 5, 12, 30]
    truth = configuration_orientation(K4, p)
    sigma = compute_orientation(K4, K4_BASIS)
    assert sigma in (truth, flip_orientation(truth))


def test_orientation_conflict_on_corrupted_space():
    # flipping a fundamental cycle vector's sign on a shared tree edge makes
    # two cycles demand opposite directions there
    from linerec.graphs import cycle_space_rows

    sigma = configuration_orientation(K4, [1, 5, 12, 30])
    rows = [list(r) for r in cycle_space_rows(K4, sigma)]
    assert rows[0][0] != 0 and rows[1][0] != 0  # edge (0,1) is shared
    rows[0][0] = -rows[0][0]
    corrupted = CycleSpaceBasis(
        m=6, rows=tuple(tuple(r) for r in rows), pre_truncation=()
    )
    with pytest.raises(OrientationConflict):
        compute_orientation(K4, corrupted)


def test_orientation_invariant_under_row_operations(rng):
    base = compute_orientation(K4, K4_BASIS)
    rows = [list(r) for r in K4_BASIS.rows]
    for _ in range(5):
        mixed = [
            [
                sum(coef * rows[r][j] for r, coef in enumerate(coeffs))
                for j in range(6)
            ]
            for coeffs in [
                [1, 1, 0],
                [0, 1, 0],
                [2, 0, 1],
            ]
        ]
        alt = CycleSpaceBasis(m=6, rows=tuple(tuple(r) for r in mixed), pre_truncation=())
        assert compute_orientation(K4, alt) == base


def test_orientation_many_fixtures(rng):
    graphs = [K4, prism(), petersen(), generate_graph("cycle", 6)]
    for _ in range(25):
        g = graphs[rng.randrange(len(graphs))]
        p = sample_generic_configuration(g, 40, rng)
        truth = configuration_orientation(g, p)
        sigma = compute_orientation(g, true_basis(g, p))
        assert sigma in (truth, flip_orientation(truth))


def test_canonicalize_global_flip():
    sigma = ((1, 0), (2, 0), (2, 1))
    canon = canonicalize_global_flip(sigma)
    assert canon == ((0, 1), (0, 2), (1, 2))
    assert canonicalize_global_flip(canon) == canon
