import random

import pytest

from linerec.exact import canonical_integer_row_basis
from linerec.graphs import (
    Graph,
    configuration_orientation,
    cycle_space_rows,
    make_graph,
    sample_generic_configuration,
)
from linerec.relations import CycleSpaceBasis


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return make_graph(10, outer + spokes + inner)


def prism() -> Graph:
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k33() -> Graph:
    return make_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def cube() -> Graph:
    ring = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)]
    return make_graph(8, ring + [(0, 4), (1, 5), (2, 6), (3, 7)])


def wheel(n: int) -> Graph:
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return make_graph(n, [(0, i) for i in range(1, n)] + rim)


def moebius_ladder(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)]
    return make_graph(n, edges)


def true_basis(g: Graph, p) -> CycleSpaceBasis:
    """The exact signed cycle space of (g, p), canonicalized."""
    sigma = configuration_orientation(g, p)
    rows = canonical_integer_row_basis(cycle_space_rows(g, sigma))
    return CycleSpaceBasis(m=g.m, rows=tuple(tuple(r) for r in rows), pre_truncation=())


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random spanning tree plus extra edges; always connected."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(candidates)
    for e in candidates[:extra_edges]:
        edges.add(e)
    return make_graph(n, edges)


def sampled_instance(g: Graph, bits: int, seed: int):
    rng = random.Random(seed)
    p = sample_generic_configuration(g, bits, rng)
    return p, rng


@pytest.fixture
def rng():
    return random.Random(12345)
