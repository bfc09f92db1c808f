"""Degeneration certificates, necessary conditions and component dimensions.

A witness is a basis E_i(t) = sum_j a_ij(t) e_j over rational functions of t,
optionally with a path ``param -> f(t)`` for family parameters.  Writing the
products of A(f(t)) in that basis gives constants c_ij^k(t); if all have a
finite limit at t = 0 and the limit is B, then A degenerates to B.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    Algebra,
    annihilator,
    change_basis,
    derivation_dimension,
    is_left_symmetric,
    square,
)
from .catalog import CATALOG, instantiate, normalize_label
from .expressions import ExpressionError, parse_tscalar
from .scalars import PoleAtZero, RationalFunction, limit_at_zero


class WitnessError(ValueError):
    pass


class StratificationWarning(UserWarning):
    """Derivation dimension varies across the sampled parameters."""


@dataclass
class DegenerationWitness:
    basis: list  # rows are the new basis vectors in old coordinates
    param_index: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.basis)

    def determinant(self):
        return linalg.determinant(self.basis)


def parse_witness(text: str) -> DegenerationWitness:
    """Parse a witness file.

    One basis vector per line, entries separated by commas (or whitespace
    when the line has no comma), plus optional ``param <name> = <expr>``
    lines.  ``#`` starts a comment.
    """
    rows = []
    params = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^param\s+(\w+)\s*=\s*(.+)$", line)
        try:
            if m:
                params[m.group(1)] = parse_tscalar(m.group(2))
                continue
            cells = line.split(",") if "," in line else line.split()
            rows.append([parse_tscalar(c) for c in cells])
        except ExpressionError as exc:
            raise WitnessError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise WitnessError("witness has no basis rows")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise WitnessError(f"basis must be square; got {n} rows of lengths {[len(r) for r in rows]}")
    return DegenerationWitness(rows, params)


def format_witness(w: DegenerationWitness) -> str:
    lines = [", ".join(str(x) for x in row) for row in w.basis]
    lines += [f"param {k} = {v}" for k, v in w.param_index.items()]
    return "\n".join(lines) + "\n"


def _source(A, witness: DegenerationWitness) -> Algebra:
    if isinstance(A, Algebra):
        if witness.param_index:
            raise WitnessError("a parametrized index needs a catalog family, not a fixed algebra")
        return A
    return instantiate(A, dict(witness.param_index))


def transported_constants(A, witness: DegenerationWitness) -> Algebra:
    """A (a fixed algebra, or a family label evaluated along the witness path) in the basis E(t)."""
    src = _source(A, witness)
    if witness.n != src.n:
        raise WitnessError(f"witness is {witness.n}x{witness.n} but the algebra has dimension {src.n}")
    if not witness.determinant():
        raise WitnessError("witness basis is singular as a matrix over Q(i)(t)")
    return change_basis(src, witness.basis, label=f"{src.label}[E(t)]")


@dataclass
class DegenerationResult:
    ok: bool
    entry: tuple | None = None  # (i, j, k), 1-based
    value: object = None
    expected: object = None
    reason: str = ""
    limit: Algebra | None = None

    def __str__(self):
        if self.ok:
            return "pass"
        if self.entry is None:
            return f"fail: {self.reason}"
        i, j, k = self.entry
        return f"fail at c[{i}][{j}][{k}] (coefficient of E{k} in E{i}E{j}): {self.reason}, value {self.value}"


def limit_algebra(T: Algebra) -> tuple:
    """``(limit Algebra, None)``, or ``(None, (i, j, k, value))`` at the first pole."""
    n = T.n
    c = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x = T.c[i][j][k]
                try:
                    c[i][j][k] = limit_at_zero(x)
                except PoleAtZero:
                    return None, (i + 1, j + 1, k + 1, x)
    return Algebra(n, c, f"lim {T.label}"), None


def verify_degeneration(A, witness: DegenerationWitness, B: Algebra) -> DegenerationResult:
    """Pass iff every transported constant has a limit at t=0 and the limit tensor equals B's."""
    try:
        T = transported_constants(A, witness)
    except WitnessError as exc:
        return DegenerationResult(False, reason=str(exc))
    if T.n != B.n:
        return DegenerationResult(False, reason=f"dimension {T.n} vs {B.n}")
    L, pole = limit_algebra(T)
    if pole is not None:
        i, j, k, x = pole
        return DegenerationResult(False, (i, j, k), x, reason="pole at t=0")
    n = B.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if L.c[i][j][k] != B.c[i][j][k]:
                    return DegenerationResult(False, (i + 1, j + 1, k + 1), L.c[i][j][k], B.c[i][j][k],
                                              reason=f"limit differs from target ({B.c[i][j][k]})", limit=L)
    return DegenerationResult(True, limit=L)


def evaluate_at(T: Algebra, t0) -> Algebra:
    """Specialise a rational-function tensor at t = t0."""
    n = T.n
    c = [[[x(t0) if isinstance(x, RationalFunction) else x for x in row] for row in plane] for plane in T.c]
    return Algebra(n, c, f"{T.label}|t={t0}")


@dataclass
class NecessaryCheck:
    ok: bool
    violated: list = field(default_factory=list)
    note: str = ""
    der: tuple = ()
    sq: tuple = ()
    ann: tuple = ()


def necessary_conditions(A: Algebra, B: Algebra) -> NecessaryCheck:
    """Conditions a proper degeneration A -> B must meet; any violation rules it out.

    dim Der(A) < dim Der(B), dim A*A >= dim B*B, dim Ann(A) <= dim Ann(B).
    """
    if A.n != B.n:
        return NecessaryCheck(False, ["dimension"])
    der = (derivation_dimension(A), derivation_dimension(B))
    sq = (square(A).dim, square(B).dim)
    ann = (annihilator(A).dim, annihilator(B).dim)
    if A == B:
        return NecessaryCheck(True, [], "self-comparison: conditions apply only to A not isomorphic to B",
                              der, sq, ann)
    bad = []
    if not der[0] < der[1]:
        bad.append(f"Der: {der[0]} is not < {der[1]}")
    if not sq[0] >= sq[1]:
        bad.append(f"square: {sq[0]} is not >= {sq[1]}")
    if not ann[0] <= ann[1]:
        bad.append(f"annihilator: {ann[0]} is not <= {ann[1]}")
    return NecessaryCheck(not bad, bad, "", der, sq, ann)


@dataclass
class OrbitDimensionReport:
    label: str
    n: int
    dim_der: int
    param_count: int
    orbit_dim: int
    component_dim: int
    der_by_sample: list = field(default_factory=list)
    special_strata: list = field(default_factory=list)
    warning: str = ""


def free_parameters(label: str) -> tuple:
    """Family parameters that can vary; ``mu`` is pinned by its radical constraint."""
    key = normalize_label(label)
    if key.startswith("zero"):
        return ()
    return tuple(p for p in CATALOG[key].params if p != "mu")


def component_dimension(label: str, samples: list | None = None) -> OrbitDimensionReport:
    """n^2 - dim Der + #params, with Der taken at generic samples.

    When Der varies over the given samples the smallest value (the generic
    one) is used and a ``StratificationWarning`` is raised.  With default
    samples, the family's named special values are reported separately.
    """
    key = normalize_label(label)
    specials = []
    if samples is None:
        if key.startswith("zero"):
            samples = [{}]
        else:
            entry = CATALOG[key]
            samples = entry.default_samples(include_special=False)
            specials = [s for s in entry.default_samples() if s not in samples]
    ders = []
    for s in samples:
        A = instantiate(key, s)
        ders.append((_fmt(s), derivation_dimension(A)))
    values = sorted({d for _, d in ders})
    warning = ""
    if len(values) > 1:
        warning = f"{key}: Der dimension varies over samples {values}; using the generic value {values[0]}"
        warnings.warn(warning, StratificationWarning, stacklevel=2)
    dim_der = values[0]
    n = instantiate(key, samples[0]).n
    special_rows = []
    for s in specials:
        d = derivation_dimension(instantiate(key, s))
        if d != dim_der:
            special_rows.append((_fmt(s), d))
    k = len(free_parameters(key))
    return OrbitDimensionReport(key, n, dim_der, k, n * n - dim_der, n * n - dim_der + k, ders, special_rows, warning)


def _fmt(s: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in s.items())


def check_limit_is_left_symmetric(result: DegenerationResult) -> bool:
    return result.ok and is_left_symmetric(result.limit)
