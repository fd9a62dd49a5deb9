"""Exact LLL lattice basis reduction over the integers.

The reduction keeps the Gram-Schmidt data in the integral lambda/d form
(de Weger / Cohen Algorithm 2.6.3): with d_0 = 1 and d_i the Gram
determinant of the first i basis vectors, every mu_{i,j} equals
lam[i][j] / d_{j+1} exactly.  This is plain rational Gram-Schmidt with the
denominators factored out, so the computation is exact end to end; no
floating point is involved anywhere.
"""

from fractions import Fraction


class DependentInput(ValueError):
    """The input vectors are linearly dependent."""


def build_lattice(r: list[int]) -> list[list[int]]:
    """Basis of Lat(r) in Z^{m+1}: vector k is the unit e_k with r_k appended.

    A vector [x; f] lies in this lattice iff f = r . x.
    """
    m = len(r)
    basis = []
    for k in range(m):
        vec = [0] * (m + 1)
        vec[k] = 1
        vec[m] = int(r[k])
        basis.append(vec)
    return basis


def lll_reduce(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce an independent integer basis; returns a new list of vectors.

    The output spans the same lattice, is size-reduced (|mu_{i,j}| <= 1/2)
    and satisfies the Lovasz condition with parameter ``delta``.  Ties in the
    size-reduction rounding go up (q = floor(mu + 1/2)).
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must satisfy 1/4 < delta < 1")
    d = len(basis)
    if d == 0:
        return []
    width = len(basis[0])
    if any(len(v) != width for v in basis):
        raise ValueError("basis vectors must share a dimension")
    b = [[int(x) for x in vec] for vec in basis]

    # integral Gram-Schmidt bookkeeping
    dd = [1] * (d + 1)  # dd[i] = det Gram(b_0..b_{i-1})
    lam = [[0] * d for _ in range(d)]
    for i in range(d):
        bi = b[i]
        for j in range(i + 1):
            u = sum(x * y for x, y in zip(bi, b[j]))
            lj = lam[j]
            li = lam[i]
            for k in range(j):
                u = (dd[k + 1] * u - li[k] * lj[k]) // dd[k]
            if j < i:
                li[j] = u
            else:
                if u <= 0:
                    raise DependentInput("input vectors are linearly dependent")
                dd[i + 1] = u

    p, q = delta.numerator, delta.denominator

    def size_reduce(k: int, l: int) -> None:
        dl = dd[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            qq = (2 * lam[k][l] + dl) // (2 * dl)
            bk, bl = b[k], b[l]
            for t in range(width):
                bk[t] -= qq * bl[t]
            lk, ll = lam[k], lam[l]
            lk[l] -= qq * dl
            for j in range(l):
                lk[j] -= qq * ll[j]

    k = 1
    while k < d:
        size_reduce(k, k - 1)
        lam_k = lam[k][k - 1]
        if q * dd[k + 1] * dd[k - 1] < p * dd[k] * dd[k] - q * lam_k * lam_k:
            # swap b_{k-1} and b_k, updating the integral GS data in place
            b[k - 1], b[k] = b[k], b[k - 1]
            lk, lk1 = lam[k], lam[k - 1]
            for j in range(k - 1):
                lk[j], lk1[j] = lk1[j], lk[j]
            big_b = (dd[k - 1] * dd[k + 1] + lam_k * lam_k) // dd[k]
            dk, dk1 = dd[k], dd[k + 1]
            for i in range(k + 1, d):
                li = lam[i]
                t = li[k]
                li[k] = (dk1 * li[k - 1] - lam_k * t) // dk
                li[k - 1] = (big_b * t + lam_k * li[k]) // dk1
            dd[k] = big_b
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return b


def gram_schmidt(rows) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Exact Gram-Schmidt: returns (orthogonal vectors, mu coefficients)."""
    ortho: list[list[Fraction]] = []
    mus: list[list[Fraction]] = []
    for row in rows:
        vec = [Fraction(x) for x in row]
        mu_row = []
        for prev in ortho:
            denom = sum(x * x for x in prev)
            coeff = (
                sum(x * y for x, y in zip(vec, prev)) / denom
                if denom
                else Fraction(0)
            )
            mu_row.append(coeff)
            vec = [x - coeff * y for x, y in zip(vec, prev)]
        ortho.append(vec)
        mus.append(mu_row)
    return ortho, mus


def is_lll_reduced(basis, delta: Fraction = Fraction(3, 4)) -> bool:
    """Exact check of the size-reduction and Lovasz conditions."""
    delta = Fraction(delta)
    ortho, mus = gram_schmidt(basis)
    norms = [sum(x * x for x in vec) for vec in ortho]
    for i, mu_row in enumerate(mus):
        for mu in mu_row:
            if abs(mu) > Fraction(1, 2):
                return False
        if i > 0:
            mu = mus[i][i - 1]
            if norms[i] < (delta - mu * mu) * norms[i - 1]:
                return False
    return True


def norm_sq(vec) -> int:
    return sum(int(x) * int(x) for x in vec)
