"""Recovering edge orientations from the cycle space.

Each simple cycle meets the relation space in a single line spanned by its
signed cycle vector; walking the fundamental cycles of a spanning tree and
propagating those signs pins down every edge direction up to one global
flip of the whole orientation.
"""

from collections import deque

from .exact import identity, primitive_integer_row, right_kernel_basis, transpose
from .graphs import Graph, Orientation, fundamental_cycle_basis
from .relations import CycleSpaceBasis


class NotACycle(ValueError):
    """The edge set does not meet the relation space in a single line."""


class NotSigned(ValueError):
    """The relation on the cycle is not a {-1,0,1} vector."""


class OrientationConflict(ValueError):
    """Two cycles demand opposite directions for the same edge."""


class Deadlock(ValueError):
    """Remaining cycles share no oriented edge (impossible for 2-connected graphs)."""


def cycle_vector_from_space(basis: CycleSpaceBasis, cycle_edges) -> list[int]:
    """The signed cycle vector supported on ``cycle_edges``, leading entry +1."""
    inside = set(cycle_edges)
    outside = [j for j in range(basis.m) if j not in inside]
    if outside:
        restricted = [[row[j] for j in outside] for row in basis.rows]
        coeff_space = right_kernel_basis(transpose(restricted))
    else:
        coeff_space = identity(len(basis.rows))  # no constraint outside the cycle
    if len(coeff_space) != 1:
        raise NotACycle(
            f"intersection with the coordinate subspace has dimension {len(coeff_space)}"
        )
    alpha = coeff_space[0]
    vec = [sum(a * row[j] for a, row in zip(alpha, basis.rows)) for j in range(basis.m)]
    vec = primitive_integer_row(vec)
    if any(x not in (-1, 0, 1) for x in vec):
        raise NotSigned(f"cycle relation has entries outside {{-1,0,1}}: {vec}")
    if {j for j, x in enumerate(vec) if x} != inside:
        raise NotACycle("relation support does not match the requested cycle")
    return vec


def compute_orientation(g: Graph, basis: CycleSpaceBasis) -> Orientation:
    """Orient every edge consistently with the relation space.

    Fundamental cycles are processed in canonical edge order; a cycle whose
    edges are all still unoriented is deferred until it shares an oriented
    edge with the processed part.  The result equals the orientation that
    produced the space, up to one global flip.
    """
    if basis.m != g.m:
        raise ValueError("relation space and graph disagree on edge count")
    idx = g.edge_index()
    _, cycles = fundamental_cycle_basis(g)
    oriented: dict[int, tuple[int, int]] = {}

    def cycle_steps(cycle: list[int]) -> list[tuple[int, int, int]]:
        steps = []
        k = len(cycle)
        for t in range(k):
            u, v = cycle[t], cycle[(t + 1) % k]
            steps.append((u, v, idx[(min(u, v), max(u, v))]))
        return steps

    queue = deque(cycles)
    deferrals = 0
    while queue:
        cycle = queue.popleft()
        steps = cycle_steps(cycle)
        touched = [(u, v, e) for u, v, e in steps if e in oriented]
        if oriented and not touched:
            deferrals += 1
            if deferrals > len(queue):
                raise Deadlock("no remaining cycle shares an oriented edge")
            queue.append(cycle)
            continue
        deferrals = 0
        w = cycle_vector_from_space(basis, [e for _, _, e in steps])
        flip = 1
        if touched:
            votes = set()
            for u, v, e in touched:
                implied = (u, v) if w[e] == 1 else (v, u)
                votes.add(1 if oriented[e] == implied else -1)
            if len(votes) > 1:
                raise OrientationConflict(
                    "cycle agrees with some oriented edges and disagrees with others"
                )
            flip = votes.pop()
        for u, v, e in steps:
            direction = (u, v) if w[e] * flip == 1 else (v, u)
            if e in oriented and oriented[e] != direction:
                raise OrientationConflict(f"edge {g.edges[e]} assigned both directions")
            oriented[e] = direction
    # bridges lie on no cycle; any direction is consistent with the data
    sigma = []
    for e, (i, j) in enumerate(g.edges):
        sigma.append(oriented.get(e, (i, j)))
    return tuple(sigma)


def canonicalize_global_flip(sigma: Orientation) -> Orientation:
    """Flip the whole orientation if needed so edge 0 points low to high."""
    if sigma and sigma[0][0] > sigma[0][1]:
        return tuple((h, t) for t, h in sigma)
    return sigma
