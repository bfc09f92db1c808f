"""Exact dense linear algebra over Q(i) or Q(i)(t).

Matrices are plain lists of rows.  Entries may be ints, Fractions,
``GaussianRational`` or ``RationalFunction``; ints and Fractions are coerced
to ``GaussianRational`` up front so that ``/`` never produces a float.
Vectors are row vectors (lists); the kernel is the right kernel ``M v = 0``.
"""

from __future__ import annotations

import math

from .scalars import ONE, ZERO, GaussianRational, as_scalar, _coerce


class ContainmentError(ValueError):
    """A subspace was expected to lie inside another and does not."""


class SingularMatrixError(ArithmeticError):
    pass


def _c(x):
    g = _coerce(x)
    return x if g is None else g


def to_matrix(rows) -> list[list]:
    return [[_c(x) for x in row] for row in rows]


def rref(M):
    """Reduced row-echelon form.

    Returns ``(R, rank, pivots)``; ``R`` keeps the shape of ``M`` with zero
    rows at the bottom, and ``pivots`` lists the pivot column of each nonzero row.
    """
    R = to_matrix(M)
    if not R:
        return R, 0, []
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(R):
            break
        p = next((k for k in range(r, len(R)) if R[k][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        if piv != 1:
            inv = ONE / piv
            R[r] = [x * inv if x else x for x in R[r]]
        prow = R[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for k in range(len(R)):
            if k == r:
                continue
            f = R[k][c]
            if not f:
                continue
            row = R[k]
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M) -> int:
    """Rank via fraction-free elimination over the Gaussian integers."""
    if not M:
        return 0
    rows = []
    for row in M:
        row = [_c(x) for x in row]
        if not any(row):
            continue
        if not all(isinstance(x, GaussianRational) for x in row):
            return rref(M)[1]
        # clear denominators: x = (a + b i)/d, scale the row by the lcm of the d's
        den = 1
        for x in row:
            den = den * x._d // math.gcd(den, x._d)
        rows.append([(x._a * (den // x._d), x._b * (den // x._d)) for x in row])
    if all(b == 0 for row in rows for _, b in row):
        return _bareiss_rank_int([[a for a, _ in row] for row in rows])
    return _bareiss_rank(rows)


def _bareiss_rank_int(rows) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        for k in range(r + 1, len(rows)):
            row = rows[k]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
            elif piv != prev:
                for j in range(c + 1, ncols):
                    row[j] = piv * row[j] // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def _bareiss_rank(rows) -> int:
    # entries are pairs (re, im); Bareiss keeps every entry a Gaussian integer
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = (1, 0)
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((k for k in range(r, len(rows)) if rows[k][c] != (0, 0)), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pa, pb = rows[r][c]
        qa, qb = prev
        nq = qa * qa + qb * qb
        prow = rows[r]
        for k in range(r + 1, len(rows)):
            row = rows[k]
            fa, fb = row[c]
            for j in range(c + 1, ncols):
                xa, xb = row[j]
                ya, yb = prow[j]
                # (piv * x - f * y) / prev, exact
                na = pa * xa - pb * xb - (fa * ya - fb * yb)
                nb = pa * xb + pb * xa - (fa * yb + fb * ya)
                if qb == 0 and qa == 1:
                    row[j] = (na, nb)
                else:
                    row[j] = ((na * qa + nb * qb) // nq, (nb * qa - na * qb) // nq)
            row[c] = (0, 0)
        prev = (pa, pb)
        r += 1
    return r


def kernel_basis(M, ncols: int | None = None) -> list[list]:
    """Basis of ``{v : M v = 0}``, one vector per free column of the RREF.

    ``ncols`` is needed only when ``M`` has no rows.
    """
    if not M:
        if ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        return [[ONE if j == k else ZERO for j in range(ncols)] for k in range(ncols)]
    ncols = len(M[0])
    R, r, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def row_space(vectors) -> list[list]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    if not vectors:
        return []
    R, r, _ = rref(vectors)
    return R[:r]


def span_dim(vectors) -> int:
    return rank(vectors) if vectors else 0


def in_span(v, vectors) -> bool:
    if not any(_c(x) for x in v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [v]) == rank(vectors)


def quotient_complement(sub, space) -> list[list]:
    """Vectors extending a basis of span(sub) to a basis of span(space).

    The candidates are the RREF rows of ``space`` taken in order, so the
    output is deterministic.  Raises ``ContainmentError`` unless
    span(sub) is contained in span(space).
    """
    space_basis = row_space(space)
    sub_basis = row_space(sub)
    if sub_basis and rank(space_basis + sub_basis) != len(space_basis):
        raise ContainmentError("sub is not contained in span(space)")
    chosen = []
    current = list(sub_basis)
    r = len(current)
    for v in space_basis:
        trial = current + [v]
        if rank(trial) > r:
            current = trial
            chosen.append(v)
            r += 1
    return chosen


def coordinates(v, basis):
    """Coefficients ``a`` with ``v = sum a_k basis[k]``; ``None`` if v is outside the span."""
    n = len(v)
    if not basis:
        return [] if not any(_c(x) for x in v) else None
    # columns are basis vectors, augmented with v
    aug = [[basis[k][j] for k in range(len(basis))] + [v[j]] for j in range(n)]
    R, r, pivots = rref(aug)
    m = len(basis)
    if m in pivots:
        return None
    if r < m:
        raise ValueError("basis vectors are linearly dependent")
    sol = [ZERO] * m
    for row, pc in zip(R, pivots):
        sol[pc] = row[m]
    return sol


def solve(A, b):
    """One solution ``x`` of ``A x = b`` or ``None`` if the system is inconsistent."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def identity(n: int) -> list[list]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def inverse(M):
    n = len(M)
    aug = [list(row) + e for row, e in zip(to_matrix(M), identity(n))]
    R, r, pivots = rref(aug)
    if r < n or pivots[n - 1] != n - 1:
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in R]


def determinant(M):
    """Determinant by fraction-based elimination (works over any of our fields)."""
    A = to_matrix(M)
    n = len(A)
    det = ONE
    for c in range(n):
        p = next((k for k in range(c, n) if A[k][c]), None)
        if p is None:
            return ZERO
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        piv = A[c][c]
        det = det * piv
        for k in range(c + 1, n):
            f = A[k][c]
            if f:
                f = f / piv
                A[k] = [x - f * y for x, y in zip(A[k], A[c])]
    return det


def matmul(A, B):
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def matvec(A, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in A]


def vecmat(v, A):
    """Row vector times matrix."""
    n = len(A[0]) if A else 0
    out = [ZERO] * n
    for x, row in zip(v, A):
        if not x:
            continue
        for j, y in enumerate(row):
            if y:
                out[j] = out[j] + x * y
    return out


def is_zero_matrix(A) -> bool:
    return not any(x for row in A for x in row)


__all__ = [
    "ContainmentError",
    "SingularMatrixError",
    "as_scalar",
    "coordinates",
    "determinant",
    "identity",
    "in_span",
    "inverse",
    "is_zero_matrix",
    "kernel_basis",
    "matmul",
    "matvec",
    "quotient_complement",
    "rank",
    "rref",
    "row_space",
    "solve",
    "span_dim",
    "to_matrix",
    "transpose",
    "vecmat",
]
