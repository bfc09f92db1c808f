"""Finite-dimensional algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j`` (0-based indices
internally, 1-based in every text format).  Entries are ``GaussianRational``
or, for parametrized bases, ``RationalFunction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .scalars import ONE, ZERO, GaussianRational, RationalFunction, as_scalar


class AlgebraError(ValueError):
    pass


class NotACentralExtension(AlgebraError):
    """Raised when an algebra with zero annihilator is passed where Ann(A) != 0 is required."""


def _entry(x):
    if isinstance(x, RationalFunction):
        return x.constant_value() if x.is_constant() else x
    return as_scalar(x)


@dataclass(frozen=True, eq=False)
class Algebra:
    """Structure-constant presentation of an ``n``-dimensional algebra."""

    n: int
    c: tuple
    label: str = ""
    params: tuple = field(default=())

    def __post_init__(self):
        n = self.n
        c = self.c
        if len(c) != n or any(len(row) != n for row in c) or any(len(cell) != n for row in c for cell in row):
            raise AlgebraError(f"structure tensor must have shape {n}x{n}x{n}")
        frozen = tuple(tuple(tuple(_entry(x) for x in cell) for cell in row) for row in c)
        object.__setattr__(self, "c", frozen)
        object.__setattr__(self, "params", tuple(self.params))

    @classmethod
    def from_products(cls, n: int, products: dict, label: str = "", params=()) -> "Algebra":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices."""
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), rhs in products.items():
            for k, coeff in rhs.items():
                c[i - 1][j - 1][k - 1] = coeff
        return cls(n, c, label, params)

    @classmethod
    def zero(cls, n: int) -> "Algebra":
        return cls(n, [[[ZERO] * n for _ in range(n)] for _ in range(n)], f"zero{n}")

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        return f"Algebra(n={self.n}, label={self.label!r})"

    def nonzero_products(self):
        """Yield ``(i, j, vector)`` for each nonzero basis product, 0-based."""
        for i in range(self.n):
            for j in range(self.n):
                v = self.c[i][j]
                if any(v):
                    yield i, j, list(v)

    def relabel(self, label: str) -> "Algebra":
        return Algebra(self.n, self.c, label, self.params)

    def is_constant(self) -> bool:
        return not any(isinstance(x, RationalFunction) for row in self.c for cell in row for x in cell)


def basis_vector(n: int, i: int) -> list:
    return [ONE if k == i else ZERO for k in range(n)]


def multiply(A: Algebra, x, y) -> list:
    """Bilinear product of two coordinate vectors."""
    n = A.n
    if len(x) != n or len(y) != n:
        raise AlgebraError(f"vectors must have length {n}")
    out = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, ck in enumerate(A.c[i][j]):
                if ck:
                    out[k] = out[k] + s * ck
    return out


def _is_zero(v) -> bool:
    return not any(v)


@dataclass(frozen=True)
class IdentityViolation:
    """A basis triple on which an identity fails, with both sides."""

    triple: tuple
    lhs: tuple
    rhs: tuple

    def __str__(self):
        i, j, k = (x + 1 for x in self.triple)
        return f"(e{i},e{j},e{k}): lhs={[str(x) for x in self.lhs]} rhs={[str(x) for x in self.rhs]}"


def _prod_table(A: Algebra):
    n = A.n
    return [[list(A.c[i][j]) for j in range(n)] for i in range(n)]


def _left_mul_vec(A, i, v):
    """e_i * v"""
    return multiply(A, basis_vector(A.n, i), v)


def _right_mul_vec(A, v, k):
    """v * e_k"""
    return multiply(A, v, basis_vector(A.n, k))


def check_left_symmetric(A: Algebra):
    """``None`` when (xy)z - x(yz) = (yx)z - y(xz) on all basis triples, else the first violation."""
    n = A.n
    P = _prod_table(A)
    for i, j, k in product(range(n), repeat=3):
        lhs = [a - b for a, b in zip(_right_mul_vec(A, P[i][j], k), _left_mul_vec(A, i, P[j][k]))]
        rhs = [a - b for a, b in zip(_right_mul_vec(A, P[j][i], k), _left_mul_vec(A, j, P[i][k]))]
        if lhs != rhs:
            return IdentityViolation((i, j, k), tuple(lhs), tuple(rhs))
    return None


def check_novikov(A: Algebra):
    """``None`` when (xy)z = (xz)y on all basis triples, else the first violation.

    Only right-commutativity is tested; Novikov membership also needs
    ``check_left_symmetric``.
    """
    n = A.n
    P = _prod_table(A)
    for i, j, k in product(range(n), repeat=3):
        lhs = _right_mul_vec(A, P[i][j], k)
        rhs = _right_mul_vec(A, P[i][k], j)
        if lhs != rhs:
            return IdentityViolation((i, j, k), tuple(lhs), tuple(rhs))
    return None


def is_left_symmetric(A: Algebra) -> bool:
    return check_left_symmetric(A) is None


def is_novikov(A: Algebra) -> bool:
    return check_left_symmetric(A) is None and check_novikov(A) is None


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of an ``n``-dimensional coordinate space, kept as an RREF basis."""

    n: int
    basis: tuple

    def __post_init__(self):
        rows = linalg.row_space([list(v) for v in self.basis]) if self.basis else []
        object.__setattr__(self, "basis", tuple(tuple(v) for v in rows))

    @classmethod
    def span(cls, n, vectors) -> "Subspace":
        return cls(n, tuple(tuple(v) for v in vectors))

    @classmethod
    def full(cls, n) -> "Subspace":
        return cls(n, tuple(tuple(basis_vector(n, i)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list:
        return [list(v) for v in self.basis]

    def contains(self, v) -> bool:
        return linalg.in_span(list(v), self.vectors())

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.n, self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace(self.n, ())
        # a.x = b.y  <=> kernel of [A^T | -B^T]
        a, b = self.vectors(), other.vectors()
        cols = a + [[-x for x in v] for v in b]
        M = linalg.transpose(cols)
        ker = linalg.kernel_basis(M)
        vecs = [linalg.vecmat(k[: len(a)], a) for k in ker]
        return Subspace.span(self.n, vecs)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


def _stacked_kernel(n, rows_fn):
    rows = rows_fn()
    if not rows:
        return Subspace.full(n)
    return Subspace.span(n, linalg.kernel_basis(rows, n))


def left_annihilator(A: Algebra) -> Subspace:
    """{x : x A = 0}"""
    n = A.n
    # coefficient of e_k in x * e_j is sum_i x_i c[i][j][k]
    return _stacked_kernel(n, lambda: [[A.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)])


def right_annihilator(A: Algebra) -> Subspace:
    """{x : A x = 0}"""
    n = A.n
    return _stacked_kernel(n, lambda: [[A.c[j][i][k] for i in range(n)] for j in range(n) for k in range(n)])


def annihilator(A: Algebra) -> Subspace:
    """Ann(A) = {x : xA + Ax = 0}, the kernel of the stacked left and right multiplication maps."""
    n = A.n
    rows = [[A.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    rows += [[A.c[j][i][k] for i in range(n)] for j in range(n) for k in range(n)]
    return _stacked_kernel(n, lambda: rows)


def subspace_product(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    vecs = [multiply(A, list(u), list(v)) for u in U.basis for v in V.basis]
    return Subspace.span(A.n, [w for w in vecs if not _is_zero(w)])


def power_chain(A: Algebra) -> list:
    """[A^<1>, A^<2>, ...] with A^<k> = sum_{p+q=k} A^<p> A^<q>, all bracketings.

    The chain is non-increasing but may repeat a term before dropping (in
    L4_19, A^<4> = A^<5> = <e4> and A^<6> = 0), so equal neighbours do not
    mean it has stabilised.  For a nilpotent algebra it is computed until it
    reaches 0, which happens by k = 2^r where r is the length of the upper
    annihilator series.  Otherwise it is cut at k = 2^n + 1 and trailing
    repeats are dropped.
    """
    nil = is_nilpotent(A)
    cap = 2 ** A.n + 1
    chain = [Subspace.full(A.n)]
    while chain[-1].dim > 0 and len(chain) < cap:
        k = len(chain) + 1
        nxt = Subspace(A.n, ())
        for p in range(1, k):
            nxt = nxt + subspace_product(A, chain[p - 1], chain[k - p - 1])
        chain.append(nxt)
    if not nil:
        while len(chain) > 1 and chain[-1] == chain[-2]:
            chain.pop()
    return chain


def upper_annihilator_series(A: Algebra) -> list:
    """Dimensions of Ann(A), Ann(A/Ann(A)), ... until the quotient is 0 or has zero annihilator."""
    dims = []
    current = A
    while current.n > 0:
        m = annihilator(current).dim
        if m == 0:
            break
        dims.append(m)
        current = quotient_by_annihilator(current).quotient
    return dims


def is_nilpotent(A: Algebra) -> bool:
    """Nilpotent iff the upper annihilator series exhausts A.

    If it does in r steps, every product with 2^r factors vanishes, since
    multiplying drops the series level of the deeper factor by one.
    """
    return sum(upper_annihilator_series(A)) == A.n


def square(A: Algebra) -> Subspace:
    """A*A"""
    return Subspace.span(A.n, [v for _, _, v in A.nonzero_products()])


def derivation_equations(A: Algebra) -> list:
    """Rows of the linear system D(e_i e_j) = D(e_i) e_j + e_i D(e_j).

    Unknown ``d[a][b]`` (flattened as ``a*n + b``) is the coefficient of
    ``e_b`` in ``D(e_a)``.
    """
    n = A.n
    c = A.c
    rows = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [ZERO] * (n * n)
                # D(e_i e_j)_l = sum_k c[i][j][k] d[k][l]
                for k in range(n):
                    if c[i][j][k]:
                        row[k * n + l] = row[k * n + l] + c[i][j][k]
                # - (D(e_i) e_j)_l = - sum_p d[i][p] c[p][j][l]
                for p in range(n):
                    if c[p][j][l]:
                        row[i * n + p] = row[i * n + p] - c[p][j][l]
                    if c[i][p][l]:
                        row[j * n + p] = row[j * n + p] - c[i][p][l]
                if any(row):
                    rows.append(row)
    return rows


def derivation_basis(A: Algebra) -> list:
    """Basis of Der(A); each element is an n x n matrix ``d`` with D(e_a) = sum_b d[a][b] e_b."""
    n = A.n
    rows = derivation_equations(A)
    ker = linalg.kernel_basis(rows, n * n) if rows else linalg.kernel_basis([], n * n)
    return [[v[a * n:(a + 1) * n] for a in range(n)] for v in ker]


def derivation_dimension(A: Algebra) -> int:
    n = A.n
    rows = derivation_equations(A)
    return n * n - (linalg.rank(rows) if rows else 0)


def change_basis(A: Algebra, P, label: str | None = None) -> Algebra:
    """Structure constants of ``A`` in the basis whose i-th vector is row ``P[i]``.

    Works over scalars and rational functions alike.
    """
    n = A.n
    P = linalg.to_matrix(P)
    Pinv = linalg.inverse(P)
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = multiply(A, P[i], P[j])
            c[i][j] = linalg.vecmat(prod, Pinv)
    return Algebra(n, c, A.label if label is None else label, A.params)


def apply_linear_map(phi, v) -> list:
    """Image of ``v`` under the map whose j-th column is the image of e_j."""
    return linalg.matvec(linalg.to_matrix(phi), v)


def is_homomorphism(A: Algebra, B: Algebra, phi):
    """``None`` if phi(e_i e_j) = phi(e_i) phi(e_j) for all basis pairs; otherwise the first bad pair."""
    phi = linalg.to_matrix(phi)
    n = A.n
    images = [[row[j] for row in phi] for j in range(n)]
    for i in range(n):
        for j in range(n):
            left = linalg.matvec(phi, list(A.c[i][j]))
            right = multiply(B, images[i], images[j])
            if left != right:
                return (i, j, left, right)
    return None


@dataclass
class AnnihilatorQuotient:
    """Output of :func:`quotient_by_annihilator`.

    ``adapted_basis`` rows: the chosen complement vectors first, then the
    annihilator basis; ``A`` written in that basis equals the central
    extension of ``quotient`` by ``thetas``.
    """

    quotient: Algebra
    thetas: list
    complement: list
    annihilator: Subspace
    adapted_basis: list


def quotient_by_annihilator(A: Algebra) -> AnnihilatorQuotient:
    """Split ``A`` as a central extension of A/Ann(A).

    The complement of Ann(A) is the lexicographically first set of standard
    basis vectors completing the RREF basis of Ann(A).
    """
    ann = annihilator(A)
    m = ann.dim
    if m == 0:
        raise NotACentralExtension(f"{A.label or 'algebra'} has zero annihilator")
    n = A.n
    current = ann.vectors()
    complement = []
    for i in range(n):
        e = basis_vector(n, i)
        if linalg.rank(current + [e]) > len(current):
            current = current + [e]
            complement.append(e)
    adapted = complement + ann.vectors()
    B = change_basis(A, adapted)
    q = n - m
    quot_c = [[[B.c[i][j][k] for k in range(q)] for j in range(q)] for i in range(q)]
    thetas = [[[B.c[i][j][q + s] for j in range(q)] for i in range(q)] for s in range(m)]
    label = f"{A.label}/Ann" if A.label else ""
    return AnnihilatorQuotient(Algebra(q, quot_c, label), thetas, complement, ann, adapted)


def random_invertible(n: int, rng, low: int = -3, high: int = 3) -> list:
    """Random integer matrix with entries in [low, high] and nonzero determinant."""
    while True:
        M = [[as_scalar(rng.randint(low, high)) for _ in range(n)] for _ in range(n)]
        if linalg.determinant(M):
            return M


__all__ = [
    "Algebra",
    "AlgebraError",
    "AnnihilatorQuotient",
    "GaussianRational",
    "IdentityViolation",
    "NotACentralExtension",
    "Subspace",
    "annihilator",
    "apply_linear_map",
    "basis_vector",
    "change_basis",
    "check_left_symmetric",
    "check_novikov",
    "derivation_basis",
    "derivation_dimension",
    "derivation_equations",
    "is_homomorphism",
    "is_left_symmetric",
    "is_nilpotent",
    "is_novikov",
    "left_annihilator",
    "multiply",
    "power_chain",
    "quotient_by_annihilator",
    "random_invertible",
    "right_annihilator",
    "square",
    "subspace_product",
]
