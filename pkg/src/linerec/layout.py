"""Placing points on the line from lengths and an orientation.

``tree_layout`` is exact and integer-only; ``least_squares_layout`` handles
noisy lengths by solving the reduced graph-Laplacian normal equations for a
small correction around the tree layout, in exact rational arithmetic, so
the answer is exact even though positions carry hundreds of bits.
"""

from collections import deque
from fractions import Fraction

from .graphs import Graph, Orientation, bfs_tree


class InconsistentLengths(ValueError):
    """A non-tree edge check failed; the data is noisy or the orientation wrong."""


def normalize_congruence(p: list) -> list:
    """Canonical representative up to translation and reflection.

    Translates the minimum to 0, then picks the lexicographically smaller of
    the vector and its reflection.
    """
    if not p:
        return []
    lo, hi = min(p), max(p)
    shifted = [x - lo for x in p]
    reflected = [hi - x for x in p]
    return min(shifted, reflected)


def _tree_positions(g: Graph, sigma: Orientation, l) -> tuple[list, list[int]]:
    """Positions from laying out a BFS spanning tree; vertex 0 pinned at 0."""
    _, tree_edges = bfs_tree(g)
    idx = g.edge_index()
    p = [None] * g.n
    p[0] = 0
    adj = g.adjacency()
    placed = [False] * g.n
    placed[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not placed[v]:
                e = idx[(min(u, v), max(u, v))]
                tail, head = sigma[e]
                if head == v:
                    p[v] = p[u] + l[e]
                else:
                    p[v] = p[u] - l[e]
                placed[v] = True
                queue.append(v)
    tree_set = set(tree_edges)
    return p, [e for e in range(g.m) if e not in tree_set]


def tree_layout(g: Graph, sigma: Orientation, l: list[int]) -> list[int]:
    """Exact noiseless layout; verifies every non-tree edge length."""
    p, non_tree = _tree_positions(g, sigma, l)
    for e in non_tree:
        i, j = g.edges[e]
        if abs(p[j] - p[i]) != l[e]:
            raise InconsistentLengths(
                f"edge {g.edges[e]}: laid-out length {abs(p[j] - p[i])} != {l[e]}"
            )
    return normalize_congruence(p)


def _solve_symmetric(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    if n == 0:
        return []
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if m[i][col] != 0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def least_squares_layout(
    g: Graph, sigma: Orientation, l: list[int]
) -> tuple[list[Fraction], Fraction]:
    """Minimize sum_e (p_head - p_tail - l_e)^2 over positions, exactly.

    Solves for the correction around the tree layout through the reduced
    Laplacian normal equations (vertex 0 pinned), so every intermediate
    quantity stays small.  Returns the normalized minimizer and the residual
    sum of squares; the minimizer is unique up to congruence for connected
    graphs.
    """
    t, _ = _tree_positions(g, sigma, l)
    r = [Fraction(l[e] - (t[h] - t[tl])) for e, (tl, h) in enumerate(sigma)]
    n = g.n
    lap = [[Fraction(0)] * n for _ in range(n)]
    rhs = [Fraction(0)] * n
    for e, (tl, h) in enumerate(sigma):
        lap[tl][tl] += 1
        lap[h][h] += 1
        lap[tl][h] -= 1
        lap[h][tl] -= 1
        rhs[h] += r[e]
        rhs[tl] -= r[e]
    reduced = [[lap[i][j] for j in range(1, n)] for i in range(1, n)]
    delta = [Fraction(0)] + _solve_symmetric(reduced, rhs[1:])
    residual = Fraction(0)
    for e, (tl, h) in enumerate(sigma):
        err = delta[h] - delta[tl] - r[e]
        residual += err * err
    p = [Fraction(t[v]) + delta[v] for v in range(n)]
    return normalize_congruence(p), residual
