"""scikit-learn style estimators wrapping the reconstruction pipeline.

``fit`` consumes one measurement vector (the m edge lengths) and exposes the
recovered graph, orientation and positions as fitted attributes, so the
reconstructors compose with ``sklearn.base.clone``, ``get_params`` and
friends.  The heavy lifting lives in the functional modules.
"""

from fractions import Fraction

from sklearn.base import BaseEstimator

from .pipeline import (
    ReconstructionResult,
    reconstruct_kbasis,
    reconstruct_labeled,
    reconstruct_labeled_percycle,
    reconstruct_unlabeled,
)
from .realize import DEFAULT_MAX_VERTICES
from .validation import check_graph, check_length_vector


class _ReconstructorMixin:
    def _store(self, result: ReconstructionResult):
        self.result_ = result
        self.status_ = result.status
        self.reason_ = result.reason
        self.graph_ = result.graph
        self.orientation_ = result.orientation
        self.positions_ = result.configuration
        self.residual_ = result.residual
        if result.graph is not None:
            self.n_ = result.graph.n
            self.m_ = result.graph.m
        return self

    def score(self, lengths, y=None) -> float:
        """1.0 when the fitted model reproduces these lengths within the noise bound."""
        from .pipeline import verify_result

        lengths = check_length_vector(lengths)
        return float(verify_result(self.result_, lengths, noise_bound=1))


class UnlabeledReconstructor(BaseEstimator, _ReconstructorMixin):
    """Recover an unknown 3-connected graph and its 1D layout from lengths.

    Parameters
    ----------
    delta : Fraction, default 3/4
        LLL reduction parameter, 1/4 < delta < 1.
    max_vertices : int, default 16
        Bound on the realization enumeration (3^(n-1) assignments).
    method : {"lll", "kbasis"}, default "lll"
        Relation recovery strategy; "kbasis" needs ``k``.
    k : int, default 3
        Maximum cycle length for the "kbasis" method.
    """

    def __init__(
        self,
        delta: Fraction = Fraction(3, 4),
        max_vertices: int = DEFAULT_MAX_VERTICES,
        method: str = "lll",
        k: int = 3,
    ):
        self.delta = delta
        self.max_vertices = max_vertices
        self.method = method
        self.k = k

    def fit(self, lengths, y=None):
        lengths = check_length_vector(lengths)
        if self.method == "lll":
            result = reconstruct_unlabeled(
                lengths, delta=Fraction(self.delta), max_vertices=self.max_vertices
            )
        elif self.method == "kbasis":
            result = reconstruct_kbasis(lengths, self.k, max_vertices=self.max_vertices)
        else:
            raise ValueError(f"unknown method {self.method!r}")
        return self._store(result)


class LabeledReconstructor(BaseEstimator, _ReconstructorMixin):
    """Recover positions when the (2-connected) graph is already known.

    Parameters
    ----------
    graph : Graph
        The measured graph; coordinate k of the lengths is its k-th edge.
    per_cycle : bool, default False
        Run one small lattice reduction per fundamental cycle instead of a
        single reduction over all edges.
    delta : Fraction, default 3/4
        LLL reduction parameter.
    """

    def __init__(self, graph=None, per_cycle: bool = False, delta: Fraction = Fraction(3, 4)):
        self.graph = graph
        self.per_cycle = per_cycle
        self.delta = delta

    def fit(self, lengths, y=None):
        graph = check_graph(self.graph)
        lengths = check_length_vector(lengths)
        if self.per_cycle:
            result = reconstruct_labeled_percycle(graph, lengths, delta=Fraction(self.delta))
        else:
            result = reconstruct_labeled(graph, lengths, delta=Fraction(self.delta))
        return self._store(result)
