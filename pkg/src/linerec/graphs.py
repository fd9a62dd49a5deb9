"""Graphs measured on a line: orientations, lengths, cycle bases, generators.

Vertices are 0-indexed internally.  Edges are unordered pairs (i, j) with
i < j, kept in lexicographic order; coordinate k of every length vector or
cycle-space matrix refers to ``edges[k]``.  The plain-text file formats are
1-indexed.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
import random

Edge = tuple[int, int]


class CoincidentEndpoints(ValueError):
    """Two endpoints of an edge sit at the same position."""


class Disconnected(ValueError):
    """Operation requires a connected graph."""


class InfeasibleFamily(ValueError):
    """No graph of the requested family exists for this vertex count."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        prev = None
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad edge ({i}, {j}) for n={self.n}")
            if prev is not None and (i, j) <= prev:
                raise ValueError("edges must be sorted and duplicate-free")
            prev = (i, j)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}


def make_graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of vertex pairs, canonicalizing order."""
    canon = sorted((min(i, j), max(i, j)) for i, j in edges)
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise ValueError(f"duplicate edge {a}")
    return Graph(n, tuple(canon))


# an orientation maps edge k to a directed pair (tail, head)
Orientation = tuple[tuple[int, int], ...]


def configuration_orientation(g: Graph, p) -> Orientation:
    """The orientation induced by point order: each edge points low to high."""
    sigma = []
    for i, j in g.edges:
        if p[i] == p[j]:
            raise CoincidentEndpoints(f"edge ({i}, {j}) has both endpoints at {p[i]}")
        sigma.append((i, j) if p[i] < p[j] else (j, i))
    return tuple(sigma)


def flip_orientation(sigma: Orientation) -> Orientation:
    return tuple((h, t) for t, h in sigma)


def incidence_matrix(g: Graph, sigma: Orientation) -> list[list[int]]:
    """Signed edge incidence matrix: row per edge, -1 at tail, +1 at head."""
    rows = []
    for t, h in sigma:
        row = [0] * g.n
        row[t] = -1
        row[h] = 1
        rows.append(row)
    return rows


def measure(g: Graph, p) -> list:
    """Edge lengths |p_j - p_i| in canonical edge order."""
    return [abs(p[j] - p[i]) for i, j in g.edges]


def oriented_lengths(g: Graph, sigma: Orientation, p) -> list:
    """Signed lengths p_head - p_tail (the linear measurement map)."""
    return [p[h] - p[t] for t, h in sigma]


def signed_cycle_vector(g: Graph, sigma: Orientation, cycle: list[int]) -> list[int]:
    """The {-1,0,+1} vector of a simple cycle given as a vertex sequence.

    Entry at edge {u,v} is +1 when the traversal u->v agrees with sigma.
    """
    idx = g.edge_index()
    vec = [0] * g.m
    k = len(cycle)
    for t in range(k):
        u, v = cycle[t], cycle[(t + 1) % k]
        e = idx[(min(u, v), max(u, v))]
        if vec[e] != 0:
            raise ValueError("cycle repeats an edge")
        vec[e] = 1 if sigma[e] == (u, v) else -1
    return vec


def bfs_tree(g: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """BFS spanning tree from ``root`` with neighbors visited in index order.

    Returns (parent vector, tree edge indices).  Raises Disconnected.
    """
    adj = g.adjacency()
    idx = g.edge_index()
    parent = [-1] * g.n
    seen = [False] * g.n
    seen[root] = True
    tree_edges = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                tree_edges.append(idx[(min(u, v), max(u, v))])
                queue.append(v)
    if not all(seen):
        raise Disconnected("graph is not connected")
    return parent, tree_edges


def _tree_path(parent: list[int], i: int, j: int) -> list[int]:
    """Vertex path from i to j inside the BFS tree."""
    anc_i = [i]
    while parent[anc_i[-1]] != -1:
        anc_i.append(parent[anc_i[-1]])
    anc_j = [j]
    while parent[anc_j[-1]] != -1:
        anc_j.append(parent[anc_j[-1]])
    seen = {v: d for d, v in enumerate(anc_i)}
    for d, v in enumerate(anc_j):
        if v in seen:
            return anc_i[: seen[v] + 1] + anc_j[:d][::-1]
    raise AssertionError("tree paths must meet at the root")


def fundamental_cycle_basis(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Spanning tree plus one simple cycle per non-tree edge.

    Returns (tree edge indices, cycles).  The cycle for non-tree edge {i, j}
    is the tree path from i to j, closed by the edge itself; it is given as
    a vertex sequence starting at i and ending at j.
    """
    parent, tree_edges = bfs_tree(g)
    in_tree = set(tree_edges)
    cycles = []
    for k, (i, j) in enumerate(g.edges):
        if k not in in_tree:
            cycles.append(_tree_path(parent, i, j))
    return tree_edges, cycles


def cycle_space_rows(g: Graph, sigma: Orientation) -> list[list[int]]:
    """Signed cycle vectors of the fundamental cycles; a basis of the cycle space."""
    _, cycles = fundamental_cycle_basis(g)
    return [signed_cycle_vector(g, sigma, c) for c in cycles]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        bfs_tree(g)
    except Disconnected:
        return False
    return True


def _connected_after_removal(g: Graph, removed: set[int]) -> bool:
    remaining = [v for v in range(g.n) if v not in removed]
    if not remaining:
        return False
    adj = g.adjacency()
    seen = {remaining[0]}
    queue = deque([remaining[0]])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in removed and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(remaining)


def is_k_connected(g: Graph, k: int) -> bool:
    """k-vertex-connectivity by cut enumeration (meant for small k)."""
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not _connected_after_removal(g, set(cut)):
                return False
    return True


def _pairing_model_graph(degrees: list[int], rng: random.Random) -> Graph | None:
    """One pairing-model draw for the degree sequence; None if not simple."""
    stubs = [v for v, d in enumerate(degrees) for _ in range(d)]
    rng.shuffle(stubs)
    edges = set()
    for a, b in zip(stubs[::2], stubs[1::2]):
        if a == b:
            return None
        e = (min(a, b), max(a, b))
        if e in edges:
            return None
        edges.add(e)
    return make_graph(len(degrees), edges)


def generate_graph(family: str, n: int, seed: int = 0) -> Graph:
    """Graphs for the three experiment families: cycle, near3regular, complete.

    The near-3-regular family draws from the pairing model on the degree
    sequence (3, ..., 3, d) with d = 4 or 5 fixed by parity, rejecting until
    the result is simple and 3-connected.
    """
    if family == "cycle":
        if n < 3:
            raise InfeasibleFamily("cycle needs n >= 3")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        if n < 3:
            raise InfeasibleFamily("complete needs n >= 3")
        return make_graph(n, combinations(range(n), 2))
    if family == "near3regular":
        if n < 4:
            raise InfeasibleFamily("near3regular needs n >= 4")
        extra = 4 if (3 * (n - 1)) % 2 == 0 else 5
        degrees = [3] * (n - 1) + [extra]
        if extra >= n:
            raise InfeasibleFamily(f"degree {extra} impossible on {n} vertices")
        rng = random.Random(seed)
        for _ in range(100_000):
            g = _pairing_model_graph(degrees, rng)
            if g is not None and is_k_connected(g, 3):
                return g
        raise InfeasibleFamily(f"no 3-connected near-3-regular graph found for n={n}")
    raise ValueError(f"unknown family {family!r}")


def sample_configuration(n: int, bits: int, seed: int = 0) -> list[int]:
    """n positions drawn independently and uniformly from {1, ..., 2^bits}."""
    if bits < 1:
        raise ValueError("bits must be >= 1")
    rng = random.Random(seed)
    return sample_configuration_rng(n, bits, rng)


def sample_configuration_rng(n: int, bits: int, rng: random.Random) -> list[int]:
    top = 1 << bits
    return [rng.randint(1, top) for _ in range(n)]


def sample_generic_configuration(g: Graph, bits: int, rng: random.Random) -> list[int]:
    """Sample until no edge has coincident endpoints (negligible rejection rate)."""
    for _ in range(100_000):
        p = sample_configuration_rng(g.n, bits, rng)
        if all(p[i] != p[j] for i, j in g.edges):
            return p
    raise CoincidentEndpoints(
        f"no generic configuration found at {bits} bits for this graph"
    )


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test, adequate for the desk-scale graphs here."""
    if g.n != h.n or g.m != h.m:
        return False
    adj_g = [set(nb) for nb in g.adjacency()]
    adj_h = [set(nb) for nb in h.adjacency()]
    deg_g = sorted(len(s) for s in adj_g)
    deg_h = sorted(len(s) for s in adj_h)
    if deg_g != deg_h:
        return False
    # map vertices of g in decreasing-degree order to prune early
    order = sorted(range(g.n), key=lambda v: -len(adj_g[v]))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == g.n:
            return True
        u = order[pos]
        for v in range(h.n):
            if used[v] or len(adj_h[v]) != len(adj_g[u]):
                continue
            ok = True
            for w in adj_g[u]:
                mw = mapping[w]
                if mw != -1 and mw not in adj_h[v]:
                    ok = False
                    break
            if ok:
                for w in range(g.n):
                    mw = mapping[w]
                    if mw != -1 and w not in adj_g[u] and mw in adj_h[v]:
                        ok = False
                        break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(pos + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return extend(0)


# --- plain-text serialization (1-indexed vertices) ---


def write_graph(g: Graph, path) -> None:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{i + 1} {j + 1}" for i, j in g.edges]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_graph(path) -> Graph:
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise ValueError("graph file needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges, found {(len(tokens) - 2) // 2}")
    pairs = [
        (int(tokens[2 + 2 * k]) - 1, int(tokens[3 + 2 * k]) - 1) for k in range(m)
    ]
    return make_graph(n, pairs)


def write_values(values, path) -> None:
    with open(path, "w") as fh:
        fh.write("\n".join(str(int(v)) for v in values) + "\n")


def read_values(path) -> list[int]:
    with open(path) as fh:
        return [int(tok) for tok in fh.read().split()]
