"""Exact rational linear algebra on arbitrary-precision scalars.

All routines work on matrices given as lists of rows.  Entries may be ints
or fractions; everything is promoted to ``Fraction`` internally so results
are exact regardless of operand size.  Inputs are never mutated.
"""

from fractions import Fraction
from math import gcd, lcm

Row = list[Fraction]
Matrix = list[Row]


def to_fractions(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(k: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def transpose(rows) -> Matrix:
    if not rows:
        return []
    return [[Fraction(row[j]) for row in rows] for j in range(len(rows[0]))]


def matmul(a, b) -> Matrix:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(rows, vec) -> Row:
    return [sum(Fraction(x) * Fraction(v) for x, v in zip(row, vec)) for row in rows]


def _eliminate(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Forward elimination with leftmost-column / topmost-row pivoting.

    Returns the echelon matrix and the list of pivot columns.
    """
    m = [row[:] for row in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(r + 1, n_rows):
            f = m[i][col]
            if f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows) -> int:
    _, pivots = _eliminate(to_fractions(rows))
    return len(pivots)


def _rref_with_pivots(rows) -> tuple[Matrix, list[int]]:
    m, pivots = _eliminate(to_fractions(rows))
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        for i in range(r):
            f = m[i][col]
            if f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
    return m, pivots


def rref(rows) -> Matrix:
    """Reduced row-echelon form with unit pivots; zero rows kept at the bottom."""
    return _rref_with_pivots(rows)[0]


def right_kernel_basis(rows) -> Matrix:
    """Basis of {x : M x = 0}, one row per free column of rref(M).

    The basis vector for free column f has a 1 at coordinate f and zeros at
    every other free coordinate, which makes the output deterministic.
    """
    frac = to_fractions(rows)
    if not frac:
        return []
    n_cols = len(frac[0])
    red, pivots = _rref_with_pivots(frac)
    pivot_set = set(pivots)
    free = [j for j in range(n_cols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis.append(vec)
    return basis


def determinant(rows) -> Fraction:
    m = to_fractions(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


def solve_row_combination(rows, target) -> Row | None:
    """Coefficients c with sum_i c_i rows[i] == target, or None if unsolvable.

    Free coefficients (when rows are dependent) are set to zero.
    """
    if not rows:
        return [] if all(Fraction(t) == 0 for t in target) else None
    aug = transpose(rows)
    tgt = [Fraction(t) for t in target]
    for r, row in enumerate(aug):
        row.append(tgt[r])
    red, pivots = _eliminate(aug)
    k = len(rows)
    if k in pivots:
        return None  # pivot in the augmented column: inconsistent
    # back-substitute on the reduced system
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        for i in range(r):
            f = red[i][col]
            if f != 0:
                red[i] = [x - f * y for x, y in zip(red[i], red[r])]
    coeffs = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        coeffs[col] = red[r][k]
    return coeffs


def in_row_space(rows, vector) -> bool:
    return solve_row_combination(rows, vector) is not None


def same_row_space(a, b) -> bool:
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    stacked = to_fractions(a) + to_fractions(b)
    return rank(stacked) == ra


def primitive_integer_row(row) -> list[int]:
    """Scale a rational row to coprime integers with positive leading entry."""
    frac = [Fraction(x) for x in row]
    mult = lcm(*(x.denominator for x in frac)) if frac else 1
    ints = [int(x * mult) for x in frac]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def canonical_integer_row_basis(rows) -> list[list[int]]:
    """Canonical basis of the row space: RREF rows scaled to primitive integers."""
    red = rref(rows)
    out = []
    for row in red:
        if any(x != 0 for x in row):
            out.append(primitive_integer_row(row))
    return out
