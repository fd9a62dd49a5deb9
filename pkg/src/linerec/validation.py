"""Input validation helpers for the estimator API.

The measurements are arbitrary-precision integers (hundreds of bits for
theory-scale instances), so these helpers deliberately avoid any float
coercion; a float64 round-trip would silently corrupt values above 2^53.
"""

from numbers import Integral

from .graphs import Graph


def check_length_vector(values) -> list[int]:
    """Coerce to a non-empty list of Python ints, rejecting non-integral input."""
    try:
        seq = list(values)
    except TypeError as exc:
        raise TypeError("lengths must be an iterable of integers") from exc
    if not seq:
        raise ValueError("lengths must be non-empty")
    out = []
    for i, v in enumerate(seq):
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise TypeError(f"length {i} is {v!r}, expected an integer")
        out.append(int(v))
    return out


def check_graph(g) -> Graph:
    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    return g
