"""Second cohomology with trivial one-dimensional coefficients.

A cocycle is an ``n x n`` matrix ``m`` with ``theta(e_i, e_j) = m[i][j]``, i.e.
``theta = sum m[i][j] Delta_ij``; rows index the first argument.  Internally
matrices are flattened row-major into vectors of length ``n*n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .algebra import Algebra, Subspace
from .expressions import ExpressionError, evaluate
from .scalars import ZERO, GaussianRational, as_scalar, format_scalar


def flatten(m) -> list:
    return [as_scalar(x) for row in m for x in row]


def unflatten(v, n: int) -> list:
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


def delta(i: int, j: int, n: int) -> list:
    """The form Delta_ij (1-based) as a matrix."""
    m = [[ZERO] * n for _ in range(n)]
    m[i - 1][j - 1] = as_scalar(1)
    return m


def _z2_rows(A: Algebra) -> list:
    # theta(xy,z) - theta(x,yz) - theta(yx,z) + theta(y,xz) = 0 on basis triples (a,b,d)
    n, c = A.n, A.c
    rows = []
    for a, b, d in product(range(n), repeat=3):
        row = [ZERO] * (n * n)
        for k in range(n):
            if c[a][b][k]:
                row[k * n + d] += c[a][b][k]
            if c[b][d][k]:
                row[a * n + k] -= c[b][d][k]
            if c[b][a][k]:
                row[k * n + d] -= c[b][a][k]
            if c[a][d][k]:
                row[b * n + k] += c[a][d][k]
        if any(row):
            rows.append(row)
    return rows


def _novikov_rows(A: Algebra) -> list:
    # theta(xy,z) - theta(xz,y) = 0
    n, c = A.n, A.c
    rows = []
    for a, b, d in product(range(n), repeat=3):
        row = [ZERO] * (n * n)
        for k in range(n):
            if c[a][b][k]:
                row[k * n + d] += c[a][b][k]
            if c[a][d][k]:
                row[k * n + b] -= c[a][d][k]
        if any(row):
            rows.append(row)
    return rows


def _kernel(rows, dim):
    return linalg.kernel_basis(rows, dim) if rows else linalg.kernel_basis([], dim)


def z2_constraint_matrix(A: Algebra) -> list:
    """The nonzero rows of the n^3 x n^2 cocycle constraint system."""
    return _z2_rows(A)


def is_cocycle(A: Algebra, m) -> bool:
    v = flatten(m)
    return all(not sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in _z2_rows(A))


def is_novikov_cocycle(A: Algebra, m) -> bool:
    """theta in Z^2 and theta(xy,z) = theta(xz,y)."""
    v = flatten(m)
    rows = _z2_rows(A) + _novikov_rows(A)
    return all(not sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in rows)


def z2_basis(A: Algebra) -> list:
    n = A.n
    return [unflatten(v, n) for v in _kernel(_z2_rows(A), n * n)]


def z2n_basis(A: Algebra) -> list:
    """Basis of the Novikov cocycles Z^2_N."""
    n = A.n
    return [unflatten(v, n) for v in _kernel(_z2_rows(A) + _novikov_rows(A), n * n)]


def b2_basis(A: Algebra) -> list:
    """Basis of the coboundaries: span of the slices (c[i][j][k])_{ij}, one per k."""
    n = A.n
    slices = [[A.c[i][j][k] for i in range(n) for j in range(n)] for k in range(n)]
    slices = [s for s in slices if any(s)]
    return [unflatten(v, n) for v in linalg.row_space(slices)]


@dataclass
class CohomologySpace:
    """Z^2, B^2 and deterministic coset representatives for H^2_N and H^2_L.

    ``h2_reps`` starts with ``h2N_reps`` and continues with a complement of
    Z^2_N inside Z^2.
    """

    n: int
    z2: list
    b2: list
    z2n: list
    h2_reps: list
    h2N_reps: list
    labels: list = field(default_factory=list)

    @property
    def dim_z2(self):
        return len(self.z2)

    @property
    def dim_b2(self):
        return len(self.b2)

    @property
    def dim_h2(self):
        return len(self.h2_reps)

    @property
    def dim_h2n(self):
        return len(self.h2N_reps)

    def class_coordinates(self, m) -> list:
        """Coordinates of [theta] in the ``h2_reps`` basis (raises if theta is not a cocycle)."""
        return class_coordinates(m, self.h2_reps, self.b2)

    def summary(self) -> dict:
        return {
            "dim_Z2": self.dim_z2,
            "dim_B2": self.dim_b2,
            "dim_H2N": self.dim_h2n,
            "dim_H2L": self.dim_h2,
            "H2N_reps": [format_cocycle(m) for m in self.h2N_reps],
            "H2L_extra_reps": [format_cocycle(m) for m in self.h2_reps[self.dim_h2n:]],
        }


def h2(A: Algebra) -> CohomologySpace:
    n = A.n
    z2 = z2_basis(A)
    b2 = b2_basis(A)
    z2n = z2n_basis(A)
    fb2 = [flatten(m) for m in b2]
    fz2n = [flatten(m) for m in z2n]
    fz2 = [flatten(m) for m in z2]
    reps_n = linalg.quotient_complement(fb2, fz2n)
    reps_extra = linalg.quotient_complement(fb2 + reps_n, fz2)
    h2n = [unflatten(v, n) for v in reps_n]
    h2l = h2n + [unflatten(v, n) for v in reps_extra]
    labels = [f"nabla{k + 1}" for k in range(len(h2l))]
    return CohomologySpace(n, z2, b2, z2n, h2l, h2n, labels)


class NotACocycle(ValueError):
    pass


def class_coordinates(m, nablas, b2) -> list:
    """Write ``m = sum a_k nablas[k] + (coboundary)`` and return ``a``.

    ``nablas`` together with ``b2`` must be independent.
    """
    basis = [flatten(x) for x in nablas] + [flatten(x) for x in b2]
    coords = linalg.coordinates(flatten(m), basis)
    if coords is None:
        raise NotACocycle("form is not in the span of the given classes and coboundaries")
    return coords[: len(nablas)]


def in_coboundaries(A: Algebra, m) -> bool:
    return linalg.in_span(flatten(m), [flatten(b) for b in b2_basis(A)])


def cocycle_annihilator(A: Algebra, thetas) -> Subspace:
    """Ann(theta) = intersection of {x : theta_i(x, A) = theta_i(A, x) = 0}."""
    n = A.n
    rows = []
    for m in thetas:
        m = [[as_scalar(x) for x in row] for row in m]
        rows += [[m[i][j] for i in range(n)] for j in range(n)]  # theta(x, e_j)
        rows += [[m[j][i] for i in range(n)] for j in range(n)]  # theta(e_j, x)
    rows = [r for r in rows if any(r)]
    if not rows:
        return Subspace.full(n)
    return Subspace.span(n, linalg.kernel_basis(rows, n))


def format_cocycle(m) -> str:
    """Render as a Delta-combination, e.g. ``D12+D31-2*D13``."""
    terms = []
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            x = as_scalar(x)
            if not x:
                continue
            sym = f"D{i + 1}{j + 1}"
            if x == 1:
                terms.append(sym)
            elif x == -1:
                terms.append("-" + sym)
            else:
                s = format_scalar(x)
                if not x.is_real() and x.re != 0:
                    s = f"({s})"
                terms.append(f"{s}*{sym}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def parse_cocycle(text: str, n: int, names: dict | None = None) -> list:
    """Parse a Delta-expression such as ``D12 + D31`` or ``Δ23 - 2*Δ13``.

    ``names`` may bind scalars or forms wrapped by ``form_value``.
    """
    env = dict(names or {})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            env[f"D{i}{j}"] = _Form(delta(i, j, n))
    value = evaluate(text.replace("Δ", "D"), env)
    if isinstance(value, GaussianRational) and not value:
        return [[ZERO] * n for _ in range(n)]
    if not isinstance(value, _Form):
        raise ExpressionError(f"{text!r} is not a combination of Delta_ij")
    return value.m


def form_value(m):
    """Wrap a matrix so it can be bound as a name inside ``parse_cocycle``."""
    return _Form([[as_scalar(x) for x in row] for row in m])


class _Form:
    """Bilinear-form value inside a Delta-expression."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __add__(self, other):
        if isinstance(other, _Form):
            return _Form([[x + y for x, y in zip(r, s)] for r, s in zip(self.m, other.m)])
        if not other:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return _Form([[-x for x in r] for r in self.m])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if isinstance(k, _Form):
            return NotImplemented
        k = as_scalar(k)
        return _Form([[x * k for x in r] for r in self.m])

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, _Form):
            return NotImplemented
        return self * (1 / as_scalar(k))


def h2_report(rows) -> dict:
    """Table of (label, dim Z2, dim B2, dim H2N, dim H2L) for ``[(label, Algebra), ...]``."""
    out = []
    for label, A in rows:
        H = h2(A)
        out.append({
            "label": label,
            "dim_Z2": H.dim_z2,
            "dim_B2": H.dim_b2,
            "dim_H2N": H.dim_h2n,
            "dim_H2L": H.dim_h2,
        })
    return {"rows": out}


def h2_report_text(report: dict) -> str:
    lines = [f"{'algebra':<16}{'Z2':>4}{'B2':>4}{'H2N':>5}{'H2L':>5}"]
    for r in report["rows"]:
        lines.append(f"{r['label']:<16}{r['dim_Z2']:>4}{r['dim_B2']:>4}{r['dim_H2N']:>5}{r['dim_H2L']:>5}")
    return "\n".join(lines)


def h2_report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
