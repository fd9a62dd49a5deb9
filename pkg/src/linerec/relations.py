"""Recovering the signed cycle space from a noisy length vector.

``compute_relations`` reduces the lattice spanned by [I_m; l^T], keeps the
output vectors under the medium-size threshold sqrt(2m) * 2^(m/2), drops the
appended coordinate, and returns a canonical basis of their span.  On the
success event this span is exactly the signed cycle space of the measured
graph.  ``kbasis_relations`` is the enumeration alternative for graphs whose
cycle basis uses only short cycles.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .exact import canonical_integer_row_basis, rank
from .lll import build_lattice, lll_reduce, norm_sq


class NoMediumVectors(ValueError):
    """No reduced vector passed the medium-size threshold."""


class NoRelationsFound(ValueError):
    """The short-support enumeration found no relation."""


@dataclass(frozen=True)
class CycleSpaceBasis:
    """Integer basis of the recovered relation space.

    ``rows`` is the canonicalized basis (primitive integer rows, leading
    entry positive).  ``pre_truncation`` keeps the accepted vectors with the
    appended coordinate for diagnostics.
    """

    m: int
    rows: tuple[tuple[int, ...], ...]
    pre_truncation: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.rows)


def medium_norm_sq_bound(m: int) -> int:
    """Squared medium-vector threshold (2m) * 2^m; kept integral for exact ties."""
    return 2 * m * (1 << m)


def count_medium_vectors(reduced_basis, m: int) -> int:
    """How many vectors of an LLL output pass the medium-size threshold."""
    bound = medium_norm_sq_bound(m)
    return sum(1 for vec in reduced_basis if norm_sq(vec) <= bound)


def compute_relations(l: list[int], delta: Fraction = Fraction(3, 4)) -> CycleSpaceBasis:
    """Algorithm: reduce Lat(l), threshold, truncate, canonicalize the span."""
    m = len(l)
    if m < 1:
        raise ValueError("length vector must be non-empty")
    reduced = lll_reduce(build_lattice(l), delta)
    bound = medium_norm_sq_bound(m)
    kept = [vec for vec in reduced if norm_sq(vec) <= bound]
    if not kept:
        raise NoMediumVectors(
            f"no reduced vector has squared norm <= {bound}; "
            "the instance likely has too few edges or bits"
        )
    rows = canonical_integer_row_basis([vec[:m] for vec in kept])
    return CycleSpaceBasis(
        m=m,
        rows=tuple(tuple(r) for r in rows),
        pre_truncation=tuple(tuple(v) for v in kept),
    )


def kbasis_relations(l: list[int], k: int, noise_bound: int | None = None) -> CycleSpaceBasis:
    """Find relations supported on at most k coordinates with entries in {-1,0,1}.

    Keeps sign patterns v with |v . l| <= noise_bound (default k, the tight
    allowance for per-coordinate errors in {-1,0,1}); returns a maximal
    linearly independent subset in enumeration order.  Succeeds whenever the
    measured graph has a cycle basis of cycles with at most k edges.
    """
    m = len(l)
    if k < 3:
        raise ValueError("k must be >= 3")
    if noise_bound is None:
        noise_bound = k
    kept: list[list[int]] = []
    reduced: list[list[Fraction]] = []  # row-reduced copies of kept rows

    def try_keep(vec: list[int]) -> None:
        row = [Fraction(x) for x in vec]
        for red in reduced:
            lead = next(i for i, x in enumerate(red) if x != 0)
            if row[lead] != 0:
                f = row[lead] / red[lead]
                row = [a - f * b for a, b in zip(row, red)]
        if any(x != 0 for x in row):
            reduced.append(row)
            kept.append(vec)

    for size in range(1, min(k, m) + 1):
        for support in combinations(range(m), size):
            for signs in product((1, -1), repeat=size - 1):
                dot = l[support[0]]
                for s, coord in zip(signs, support[1:]):
                    dot += s * l[coord]
                if abs(dot) <= noise_bound:
                    vec = [0] * m
                    vec[support[0]] = 1
                    for s, coord in zip(signs, support[1:]):
                        vec[coord] = s
                    try_keep(vec)
    if not kept:
        raise NoRelationsFound(f"no {{-1,0,1}} relation on <= {k} coordinates")
    pre = tuple(tuple(v) + (sum(x * y for x, y in zip(v, l)),) for v in kept)
    return CycleSpaceBasis(m=m, rows=tuple(tuple(v) for v in kept), pre_truncation=pre)


def spans_rows(basis: CycleSpaceBasis, expected_rows) -> bool:
    """True iff the recovered row space equals the span of ``expected_rows``."""
    if basis.c != rank(expected_rows):
        return False
    stacked = [list(r) for r in basis.rows] + [list(r) for r in expected_rows]
    return rank(stacked) == basis.c
