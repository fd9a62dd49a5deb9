"""Rebuilding the unlabeled graph from its recovered cycle space.

The right kernel of the cycle-space matrix is the cut space, and its
{-1,0,1} vectors are exactly the signed cut vectors of the hidden graph.
We enumerate them (3^(n-1) assignments over the kernel's free coordinates,
with pruning), then search for n of them that behave like vertex stars:
every coordinate supported by exactly two chosen vectors with opposite
signs.  The assembled graph is accepted only if its cycle space equals the
input row space, so a wrong assembly can never be returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exact import rank, _rref_with_pivots, same_row_space
from .graphs import (
    Disconnected,
    Edge,
    Graph,
    cycle_space_rows,
    is_connected,
    is_k_connected,
    make_graph,
)
from .relations import CycleSpaceBasis


class NotGraphic(ValueError):
    """No graph realizes the given relation space."""


class TooLarge(ValueError):
    """The implied vertex count exceeds the enumeration bound."""


DEFAULT_MAX_VERTICES = 16
_SEARCH_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class IndependenceOracle:
    """Graphic-matroid independence queries backed by a cycle-space matrix."""

    rows: tuple[tuple[int, ...], ...]
    m: int
    c: int


def independence_oracle(basis: CycleSpaceBasis) -> IndependenceOracle:
    c = rank(basis.rows)
    if c != basis.c:
        raise ValueError("cycle-space rows must be linearly independent")
    return IndependenceOracle(rows=basis.rows, m=basis.m, c=c)


def is_independent(oracle: IndependenceOracle, edge_subset) -> bool:
    """True iff no nonzero relation is supported inside ``edge_subset``.

    dim(S  coord(E')) = c - rank(columns outside E'), so independence is
    exactly full rank on the complementary columns.
    """
    inside = set(edge_subset)
    outside = [j for j in range(oracle.m) if j not in inside]
    restricted = [[row[j] for j in outside] for row in oracle.rows]
    return rank(restricted) == oracle.c


def enumerate_star_candidates(
    basis: CycleSpaceBasis, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[tuple[int, ...]]:
    """All {-1,0,1} vectors of the cut space, sign-canonicalized and sorted.

    Kernel vectors are parameterized by their values on the free columns of
    the cycle-space matrix; we walk the 3^(n-1) assignments depth-first and
    abort a branch as soon as a pivot coordinate can no longer land in
    {-1,0,1}.
    """
    m = basis.m
    free_count = m - basis.c
    if free_count > max_vertices - 1:
        raise TooLarge(
            f"{free_count + 1} implied vertices exceed the bound {max_vertices}"
        )
    if free_count == 0:
        return []
    red, pivots = _rref_with_pivots([list(r) for r in basis.rows])
    pivot_set = set(pivots)
    free = [j for j in range(m) if j not in pivot_set]
    # pivot coordinate r of a kernel vector with free values a equals
    # -sum_f a_f * red[r][f]; clear denominators once per pivot row
    dens = []
    nums = []
    for r in range(len(pivots)):
        den = lcm(*(Fraction(red[r][f]).denominator for f in free))
        dens.append(den)
        nums.append([int(Fraction(red[r][f]) * den) for f in free])
    remaining = [
        [sum(abs(nums[r][t]) for t in range(pos, free_count)) for pos in range(free_count + 1)]
        for r in range(len(pivots))
    ]

    found: set[tuple[int, ...]] = set()
    assign = [0] * free_count
    sums = [0] * len(pivots)

    def emit() -> None:
        vec = [0] * m
        for t, f in enumerate(free):
            vec[f] = assign[t]
        for r, p in enumerate(pivots):
            q, rem = divmod(-sums[r], dens[r])
            if rem != 0 or q not in (-1, 0, 1):
                return
            vec[p] = q
        if not any(vec):
            return
        for x in vec:
            if x != 0:
                if x < 0:
                    vec = [-y for y in vec]
                break
        found.add(tuple(vec))

    def walk(pos: int) -> None:
        if pos == free_count:
            emit()
            return
        for val in (0, 1, -1):
            assign[pos] = val
            ok = True
            for r in range(len(pivots)):
                if val:
                    sums[r] += val * nums[r][pos]
                if abs(sums[r]) > dens[r] + remaining[r][pos + 1]:
                    ok = False
            if ok:
                walk(pos + 1)
            if val:
                for r in range(len(pivots)):
                    sums[r] -= val * nums[r][pos]
        assign[pos] = 0

    walk(0)
    return sorted(found, key=lambda v: (sum(1 for x in v if x), v))


def _cycle_space_matches(
    basis: CycleSpaceBasis, n: int, coord_pairs: list[tuple[int, int]]
) -> Graph | None:
    """Check that the oriented candidate graph carries the input cycle space.

    ``coord_pairs[k]`` is the (tail, head) pair read off the chosen star
    signs for coordinate k.  The signed cycle space depends on this
    orientation, so the comparison must use it.
    """
    edges = [(min(u, v), max(u, v)) for u, v in coord_pairs]
    if len(set(edges)) != len(edges):
        return None
    graph = make_graph(n, edges)
    if not is_connected(graph):
        return None
    coord_at = sorted(range(basis.m), key=lambda k: edges[k])  # edge index -> coordinate
    sigma = tuple(coord_pairs[coord_at[e]] for e in range(basis.m))
    try:
        rows_edge_order = cycle_space_rows(graph, sigma)
    except (ValueError, Disconnected):
        return None
    rows = [[0] * basis.m for _ in rows_edge_order]
    for r, row in enumerate(rows_edge_order):
        for e in range(basis.m):
            rows[r][coord_at[e]] = row[e]
    if same_row_space([list(r) for r in basis.rows], rows):
        return graph
    return None


def assemble_graph(
    candidates: list[tuple[int, ...]], m: int, n: int, basis: CycleSpaceBasis
) -> tuple[Graph, tuple[Edge, ...]]:
    """Exact-cover search for n signed cut vectors acting as vertex stars.

    Every coordinate must be supported by exactly two chosen vectors with
    opposite signs.  Accepts an assembly only if the resulting graph's cycle
    space equals the input row space; returns (graph, coordinate edges).
    """
    supports = [tuple(k for k, x in enumerate(vec) if x) for vec in candidates]
    support_sets = [set(sup) for sup in supports]
    masks = [sum(1 << k for k in sup) for sup in supports]
    by_coord: list[list[int]] = [[] for _ in range(m)]
    for idx, sup in enumerate(supports):
        for k in sup:
            by_coord[k].append(idx)
    if any(len(lst) < 2 for lst in by_coord):
        raise NotGraphic("some coordinate is supported by fewer than two cut vectors")

    count = [0] * m
    value = [0] * m  # sign at a coordinate covered exactly once
    branch_first = [-1] * m  # first coverer chosen while branching on that coordinate
    chosen: list[tuple[int, int]] = []  # (candidate index, global sign)
    undo_values: list[list[tuple[int, int]]] = []
    used = [False] * len(candidates)
    nodes = 0
    result: list[tuple[Graph, tuple[Edge, ...]]] = []

    def place(idx: int, sign: int) -> bool:
        vec = candidates[idx]
        mask = masks[idx]
        for other, _ in chosen:
            # stars of a simple graph share at most the one edge between them
            if (mask & masks[other]).bit_count() > 1:
                return False
        for k in supports[idx]:
            if count[k] == 2:
                return False
            if count[k] == 1 and value[k] == sign * vec[k]:
                return False
        saved = []
        for k in supports[idx]:
            saved.append((k, value[k]))
            count[k] += 1
            value[k] = sign * vec[k]
        chosen.append((idx, sign))
        undo_values.append(saved)
        used[idx] = True
        return True

    def unplace(idx: int) -> None:
        chosen.pop()
        used[idx] = False
        for k, old in undo_values.pop():
            count[k] -= 1
            value[k] = old

    def finish() -> bool:
        if len(chosen) != n:
            return False
        # vertex labels ordered by star support, so relabeling-equivalent
        # inputs (e.g. column sign flips) realize to the identical output
        label_order = sorted(range(n), key=lambda t: supports[chosen[t][0]])
        relabel = {chosen[label_order[t]][0]: t for t in range(n)}
        pairs = []
        for k in range(m):
            tail = head = -1
            for idx, sign in chosen:
                if k in support_sets[idx]:
                    if sign * candidates[idx][k] < 0:
                        tail = relabel[idx]
                    else:
                        head = relabel[idx]
            if tail < 0 or head < 0:
                return False
            pairs.append((tail, head))
        graph = _cycle_space_matches(basis, n, pairs)
        if graph is None:
            return False
        result.append((graph, tuple((min(u, v), max(u, v)) for u, v in pairs)))
        return True

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > _SEARCH_NODE_BUDGET:
            raise RuntimeError("assembly search budget exhausted")
        target = -1
        for k in range(m):
            if count[k] < 2:
                target = k
                break
        if target == -1:
            return finish()
        if len(chosen) == n:
            return False
        opening = count[target] == 0
        for idx in by_coord[target]:
            if used[idx]:
                continue
            if not opening:
                # if both coverers of this coordinate are picked here, force
                # increasing index order so each pair is tried exactly once
                if idx <= branch_first[target]:
                    continue
                signs = (-value[target] * candidates[idx][target],)
            elif not chosen:
                signs = (1,)  # global flip freedom
            else:
                signs = (1, -1)
            for sign in signs:
                if place(idx, sign):
                    if opening:
                        branch_first[target] = idx
                    if search():
                        return True
                    if opening:
                        branch_first[target] = -1
                    unplace(idx)
        return False

    if search():
        return result[0]
    raise NotGraphic("no vertex-star assembly realizes the relation space")


@dataclass(frozen=True)
class RealizedGraph:
    """A realization: coordinate k of the relation space is edge coord_edges[k]."""

    graph: Graph
    coord_edges: tuple[Edge, ...]
    three_connected: bool

    def coordinate_permutation(self) -> list[int]:
        """coordinate k -> index of coord_edges[k] in graph.edges."""
        idx = self.graph.edge_index()
        return [idx[e] for e in self.coord_edges]


def realize_graph(
    basis: CycleSpaceBasis, max_vertices: int = DEFAULT_MAX_VERTICES
) -> RealizedGraph:
    """Reconstruct the graph whose signed cycle space is the given row space.

    For 3-connected graphs the output is isomorphic to the original with
    coordinate k landing on edge k; otherwise some 2-isomorphic graph is
    returned and flagged via ``three_connected``.
    """
    if rank(basis.rows) != basis.c:
        raise ValueError("cycle-space rows must be linearly independent")
    n = basis.m - basis.c + 1
    if n < 3:
        raise NotGraphic(f"no simple graph on {n} vertices carries {basis.m} edges")
    candidates = enumerate_star_candidates(basis, max_vertices)
    if len(candidates) < n:
        raise NotGraphic("fewer candidate cut vectors than implied vertices")
    graph, coord_edges = assemble_graph(candidates, basis.m, n, basis)
    return RealizedGraph(
        graph=graph,
        coord_edges=coord_edges,
        three_connected=is_k_connected(graph, 3),
    )
