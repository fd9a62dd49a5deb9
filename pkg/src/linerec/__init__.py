"""Reconstruct a graph and its 1D point layout from unlabeled edge lengths."""

from .estimators import LabeledReconstructor, UnlabeledReconstructor
from .graphs import Graph, make_graph, generate_graph, measure, sample_configuration
from .pipeline import (
    NoiseModel,
    ReconstructionResult,
    Status,
    reconstruct_kbasis,
    reconstruct_labeled,
    reconstruct_labeled_percycle,
    reconstruct_unlabeled,
    round_real_lengths,
    verify_result,
)
from .relations import CycleSpaceBasis, compute_relations, kbasis_relations

__all__ = [
    "CycleSpaceBasis",
    "Graph",
    "LabeledReconstructor",
    "NoiseModel",
    "ReconstructionResult",
    "Status",
    "UnlabeledReconstructor",
    "compute_relations",
    "generate_graph",
    "kbasis_relations",
    "make_graph",
    "measure",
    "reconstruct_kbasis",
    "reconstruct_labeled",
    "reconstruct_labeled_percycle",
    "reconstruct_unlabeled",
    "round_real_lengths",
    "sample_configuration",
    "verify_result",
]

__version__ = "0.1.0"
