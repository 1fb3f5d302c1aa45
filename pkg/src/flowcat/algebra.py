"""Exact integer linear algebra for cochain complexes of flow categories.

Everything here runs over Python's arbitrary-precision integers (or
:class:`fractions.Fraction` for rank computations), so results are exact:
no floating point, no modular shortcuts for the integral answers.
"""

from __future__ import annotations

from fractions import Fraction

from .model import Category

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with g = gcd(a, b) = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_invariant_factors(mat: Matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Classic elimination: pick the entry of least absolute value in the
    working submatrix as pivot, clear its row and column with floor
    division (swapping in a remainder whenever one appears), then enforce
    that the pivot divides the rest of the submatrix before moving on.
    """
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors: list[int] = []
    top = 0
    while top < rows and top < cols:
        # locate the smallest nonzero entry in the submatrix m[top:][top:]
        pr = pc = -1
        best = 0
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best == 0 or v < best):
                    best, pr, pc = v, i, j
        if pr < 0:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]

        while True:
            # clear the pivot column
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top] == 0:
                    continue
                q = m[i][top] // m[top][top]
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
                if m[i][top] != 0:
                    # remainder smaller than the pivot: promote it
                    m[top], m[i] = m[i], m[top]
                    dirty = True
            # clear the pivot row
            for j in range(top + 1, cols):
                if m[top][j] == 0:
                    continue
                q = m[top][j] // m[top][top]
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
                if m[top][j] != 0:
                    for i in range(top, rows):
                        m[i][top], m[i][j] = m[i][j], m[i][top]
                    dirty = True
            if dirty:
                continue
            # divisibility: the pivot must divide every remaining entry
            offender = None
            for i in range(top + 1, rows):
                for j in range(top + 1, cols):
                    if m[i][j] % m[top][top] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(top, cols):
                m[top][j] += m[offender][j]
        factors.append(abs(m[top][top]))
        top += 1
    return factors


def rank_over_q(mat: Matrix) -> int:
    """Rank of an integer matrix over the rationals (exact, via Fractions)."""
    m = [[Fraction(v) for v in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(mat: Matrix, p: int) -> int:
    """Rank of an integer matrix over the prime field F_p."""
    m = [[v % p for v in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p) if p > 2 else m[rank][col]
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col]:
                factor = m[i][col]
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def differential_matrix(cat: Category, degree: int) -> Matrix:
    """Matrix of the signed-count differential out of the given degree.

    Rows are the objects of ``degree + 1`` and columns the objects of
    ``degree``, both in sorted id order; the entry is the signed point
    count of the moduli space between them.
    """
    srcs = cat.objects_at(degree)
    dsts = cat.objects_at(degree + 1)
    return [[cat.signed_count(d, s) for s in srcs] for d in dsts]


def integral_cohomology(cat: Category) -> dict[int, tuple[int, tuple[int, ...]]]:
    """Integral cohomology of the category's cochain complex.

    Returns ``{degree: (free rank, torsion invariant factors)}`` for every
    degree from the minimum to the maximum object degree inclusive.  The
    torsion factors are the invariant factors greater than one of the
    incoming differential, listed in divisibility order.
    """
    if not cat.objects:
        return {}
    degrees = cat.degrees()
    lo, hi = degrees[0], degrees[-1]
    out: dict[int, tuple[int, tuple[int, ...]]] = {}
    mats: dict[int, Matrix] = {}
    ranks: dict[int, int] = {}
    for deg in range(lo - 1, hi + 1):
        mat = differential_matrix(cat, deg)
        mats[deg] = mat
        ranks[deg] = rank_over_q(mat) if mat and mat[0] else 0
    for deg in range(lo, hi + 1):
        n = len(cat.objects_at(deg))
        free = n - ranks[deg] - ranks[deg - 1]
        below = mats[deg - 1]
        torsion = tuple(
            f for f in smith_invariant_factors(below) if f > 1
        ) if below and below[0] else ()
        out[deg] = (free, torsion)
    return out


def mod2_cohomology(cat: Category) -> dict[int, int]:
    """Dimensions of cohomology with Z/2 coefficients per degree."""
    if not cat.objects:
        return {}
    degrees = cat.degrees()
    lo, hi = degrees[0], degrees[-1]
    ranks: dict[int, int] = {}
    for deg in range(lo - 1, hi + 1):
        mat = differential_matrix(cat, deg)
        ranks[deg] = rank_mod_p(mat, 2) if mat and mat[0] else 0
    return {
        deg: len(cat.objects_at(deg)) - ranks[deg] - ranks[deg - 1]
        for deg in range(lo, hi + 1)
    }


def group_string(rank: int, torsion: tuple[int, ...]) -> str:
    """Human-readable abelian group: ``0``, ``Z``, ``Z^2 (+) Z/2`` etc."""
    parts: list[str] = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    for t in torsion:
        parts.append(f"Z/{t}")
    return " (+) ".join(parts) if parts else "0"


def mod2_string(dim: int) -> str:
    if dim == 0:
        return "0"
    if dim == 1:
        return "Z/2"
    return f"(Z/2)^{dim}"
