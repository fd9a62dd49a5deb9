"""End-to-end reconstruction: lengths in, graph and positions out.

The unlabeled pipeline chains relation recovery, graph realization,
orientation recovery and layout; the labeled variants skip realization.
Failures surface as statuses, never exceptions, so harnesses can count
outcomes.
"""

import enum
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Edge, Graph, Orientation, fundamental_cycle_basis, measure
from .layout import InconsistentLengths, least_squares_layout, tree_layout
from .orient import (
    Deadlock,
    NotACycle,
    NotSigned,
    OrientationConflict,
    canonicalize_global_flip,
    compute_orientation,
)
from .realize import DEFAULT_MAX_VERTICES, NotGraphic, realize_graph
from .relations import (
    CycleSpaceBasis,
    NoMediumVectors,
    NoRelationsFound,
    compute_relations,
    kbasis_relations,
)


class Status(enum.Enum):
    EXACT_SUCCESS = "ExactSuccess"
    COMBINATORIAL_SUCCESS = "CombinatorialSuccess"
    DETECTED_FAILURE = "DetectedFailure"
    NOT_GRAPHIC = "NotGraphic"
    INCONSISTENT = "Inconsistent"


_SUCCESS = (Status.EXACT_SUCCESS, Status.COMBINATORIAL_SUCCESS)


@dataclass(frozen=True)
class NoiseModel:
    """Per-coordinate {-1,0,1} measurement error."""

    mode: str = "none"  # none | random | fixed
    epsilon: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.mode not in ("none", "random", "fixed"):
            raise ValueError(f"unknown noise mode {self.mode!r}")
        if self.mode == "fixed":
            if self.epsilon is None or any(e not in (-1, 0, 1) for e in self.epsilon):
                raise ValueError("fixed noise needs an epsilon vector over {-1,0,1}")

    def sample(self, m: int, rng: random.Random) -> list[int]:
        if self.mode == "none":
            return [0] * m
        if self.mode == "fixed":
            if len(self.epsilon) != m:
                raise ValueError("epsilon length does not match edge count")
            return list(self.epsilon)
        return [rng.choice((-1, 0, 1)) for _ in range(m)]


@dataclass
class ReconstructionResult:
    status: Status
    reason: str | None = None
    graph: Graph | None = None
    orientation: Orientation | None = None
    configuration: list | None = None
    residual: Fraction | None = None
    coord_edges: tuple[Edge, ...] | None = None  # input coordinate k -> edge of graph
    relation_count: int | None = None
    three_connected: bool | None = None
    undetected_risk: bool = False
    stage_seconds: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in _SUCCESS


class _StageFailure(Exception):
    def __init__(self, status: Status, reason: str):
        self.status = status
        self.reason = reason
        super().__init__(reason)


def _permute_to_graph(basis: CycleSpaceBasis, l, coord_edges, graph):
    """Reindex lengths and relation columns from input coordinates to graph edges."""
    idx = graph.edge_index()
    perm = [idx[e] for e in coord_edges]  # coordinate k -> edge index
    l_g = [0] * graph.m
    for k, e in enumerate(perm):
        l_g[e] = l[k]
    rows_g = []
    for row in basis.rows:
        new = [0] * graph.m
        for k, e in enumerate(perm):
            new[e] = row[k]
        rows_g.append(tuple(new))
    return CycleSpaceBasis(m=graph.m, rows=tuple(rows_g), pre_truncation=()), l_g


def _orient_and_lay_out(
    graph: Graph, basis: CycleSpaceBasis, l_g, result: ReconstructionResult
) -> ReconstructionResult:
    t0 = time.perf_counter()
    try:
        sigma = canonicalize_global_flip(compute_orientation(graph, basis))
    except (OrientationConflict, Deadlock) as exc:
        raise _StageFailure(Status.DETECTED_FAILURE, type(exc).__name__) from exc
    except (NotACycle, NotSigned) as exc:
        raise _StageFailure(Status.INCONSISTENT, type(exc).__name__) from exc
    result.stage_seconds["orient"] = time.perf_counter() - t0
    result.orientation = sigma

    t0 = time.perf_counter()
    try:
        result.configuration = tree_layout(graph, sigma, l_g)
        result.status = Status.EXACT_SUCCESS
        result.residual = Fraction(0)
    except InconsistentLengths:
        positions, residual = least_squares_layout(graph, sigma, l_g)
        result.configuration = positions
        result.residual = residual
        if residual <= graph.m:
            result.status = Status.COMBINATORIAL_SUCCESS
        else:
            result.status = Status.INCONSISTENT
            result.reason = f"least-squares residual {float(residual):.3g} exceeds m"
    result.stage_seconds["layout"] = time.perf_counter() - t0
    return result


def reconstruct_unlabeled(
    l: list[int],
    delta: Fraction = Fraction(3, 4),
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ReconstructionResult:
    """Recover graph and positions from lengths alone (3-connected setting)."""
    result = ReconstructionResult(status=Status.DETECTED_FAILURE, undetected_risk=True)
    try:
        t0 = time.perf_counter()
        try:
            basis = compute_relations(l, delta)
        except NoMediumVectors as exc:
            raise _StageFailure(Status.DETECTED_FAILURE, "NoMediumVectors") from exc
        result.stage_seconds["relations"] = time.perf_counter() - t0
        result.relation_count = basis.c
        return _realize_then_finish(basis, l, result)
    except _StageFailure as fail:
        result.status = fail.status
        result.reason = fail.reason
        return result


def _realize_then_finish(basis, l, result: ReconstructionResult) -> ReconstructionResult:
    t0 = time.perf_counter()
    try:
        realized = realize_graph(basis)
    except NotGraphic as exc:
        raise _StageFailure(Status.NOT_GRAPHIC, str(exc)) from exc
    result.stage_seconds["realize"] = time.perf_counter() - t0
    result.graph = realized.graph
    result.coord_edges = realized.coord_edges
    result.three_connected = realized.three_connected
    basis_g, l_g = _permute_to_graph(basis, l, realized.coord_edges, realized.graph)
    return _orient_and_lay_out(realized.graph, basis_g, l_g, result)


def reconstruct_kbasis(
    l: list[int], k: int, max_vertices: int = DEFAULT_MAX_VERTICES
) -> ReconstructionResult:
    """Unlabeled reconstruction using short-support enumeration instead of LLL."""
    result = ReconstructionResult(status=Status.DETECTED_FAILURE, undetected_risk=True)
    try:
        t0 = time.perf_counter()
        try:
            basis = kbasis_relations(l, k)
        except NoRelationsFound as exc:
            raise _StageFailure(Status.DETECTED_FAILURE, "NoRelationsFound") from exc
        result.stage_seconds["relations"] = time.perf_counter() - t0
        result.relation_count = basis.c
        return _realize_then_finish(basis, l, result)
    except _StageFailure as fail:
        result.status = fail.status
        result.reason = fail.reason
        return result


def reconstruct_labeled(
    g: Graph, l: list[int], delta: Fraction = Fraction(3, 4)
) -> ReconstructionResult:
    """Reconstruction with a known graph: skips realization.

    Knowing the graph fixes the cycle-space dimension c = m - n + 1, so a
    relation count other than c is detected immediately.
    """
    if g.m != len(l):
        raise ValueError("length vector does not match the graph's edge count")
    result = ReconstructionResult(status=Status.DETECTED_FAILURE)
    result.graph = g
    result.coord_edges = g.edges
    try:
        t0 = time.perf_counter()
        try:
            basis = compute_relations(l, delta)
        except NoMediumVectors as exc:
            raise _StageFailure(Status.DETECTED_FAILURE, "NoMediumVectors") from exc
        result.stage_seconds["relations"] = time.perf_counter() - t0
        result.relation_count = basis.c
        expected_c = g.m - g.n + 1
        if basis.c != expected_c:
            raise _StageFailure(
                Status.DETECTED_FAILURE,
                f"MediumVectorCountMismatch: found {basis.c}, expected {expected_c}",
            )
        return _orient_and_lay_out(g, basis, list(l), result)
    except _StageFailure as fail:
        result.status = fail.status
        result.reason = fail.reason
        return result


def reconstruct_labeled_percycle(
    g: Graph, l: list[int], delta: Fraction = Fraction(3, 4)
) -> ReconstructionResult:
    """Labeled reconstruction running one small lattice per fundamental cycle.

    Each fundamental cycle is treated as a single-cycle graph whose relation
    fixes the cycle's signs; the assembled rows span the full relation space.
    """
    if g.m != len(l):
        raise ValueError("length vector does not match the graph's edge count")
    result = ReconstructionResult(status=Status.DETECTED_FAILURE)
    result.graph = g
    result.coord_edges = g.edges
    idx = g.edge_index()
    try:
        t0 = time.perf_counter()
        _, cycles = fundamental_cycle_basis(g)
        rows = []
        for cycle in cycles:
            coords = sorted(
                idx[(min(u, v), max(u, v))]
                for u, v in zip(cycle, cycle[1:] + cycle[:1])
            )
            sub = [l[e] for e in coords]
            try:
                sub_basis = compute_relations(sub, delta)
            except NoMediumVectors as exc:
                raise _StageFailure(
                    Status.DETECTED_FAILURE, f"NoMediumVectors on cycle {cycle}"
                ) from exc
            if sub_basis.c != 1 or any(x not in (-1, 1) for x in sub_basis.rows[0]):
                raise _StageFailure(
                    Status.DETECTED_FAILURE,
                    f"MediumVectorCountMismatch on cycle {cycle}",
                )
            row = [0] * g.m
            for value, e in zip(sub_basis.rows[0], coords):
                row[e] = value
            rows.append(tuple(row))
        result.stage_seconds["relations"] = time.perf_counter() - t0
        result.relation_count = len(rows)
        basis = CycleSpaceBasis(m=g.m, rows=tuple(rows), pre_truncation=())
        return _orient_and_lay_out(g, basis, list(l), result)
    except _StageFailure as fail:
        result.status = fail.status
        result.reason = fail.reason
        return result


def round_real_lengths(l_real) -> list[int]:
    """Round real measurements to integers, ties to even.

    The result is a {-1,0,1}-noisy version of the lengths of the rounded
    configuration, so the noisy integer pipeline applies unchanged.
    """
    if any(v < 0 for v in l_real):
        raise ValueError("lengths must be non-negative")
    return [round(v) for v in l_real]


def verify_result(result: ReconstructionResult, l, noise_bound: int) -> bool:
    """Check the output's measured lengths against the input, per coordinate."""
    if not result.ok or result.graph is None or result.configuration is None:
        return False
    measured = measure(result.graph, result.configuration)
    idx = result.graph.edge_index()
    for k, edge in enumerate(result.coord_edges):
        if abs(measured[idx[edge]] - l[k]) > noise_bound:
            return False
    return True
