"""Central extensions, the automorphism action on cocycles, and representative checks."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import linalg
from .algebra import Algebra, annihilator, is_homomorphism, is_novikov
from .cohomology import (
    b2_basis,
    cocycle_annihilator,
    flatten,
    is_cocycle,
    is_novikov_cocycle,
)
from .scalars import ZERO, as_scalar


class InvalidCocycle(ValueError):
    pass


class NotAnAutomorphism(ValueError):
    pass


class NotNovikov(ValueError):
    pass


class SplitExtensionWarning(UserWarning):
    """The extension has an annihilator component (classes dependent mod B^2, or Ann(theta) meets Ann(A))."""


def _as_form(m):
    return [[as_scalar(x) for x in row] for row in m]


@dataclass
class ExtensionSpec:
    base: Algebra
    thetas: list

    @property
    def s(self) -> int:
        return len(self.thetas)

    def issues(self) -> list:
        """Human-readable reasons the spec is not a non-split extension by cocycles (empty if fine)."""
        out = []
        A = self.base
        for k, m in enumerate(self.thetas):
            if not is_cocycle(A, m):
                out.append(f"theta_{k + 1} is not a cocycle")
        if out:
            return out
        b2 = [flatten(b) for b in b2_basis(A)]
        th = [flatten(m) for m in self.thetas]
        if linalg.span_dim(b2 + th) != linalg.span_dim(b2) + len(th):
            out.append("classes [theta_i] are linearly dependent in H^2")
        meet = cocycle_annihilator(A, self.thetas).intersect(annihilator(A))
        if meet.dim:
            out.append(f"Ann(theta) and Ann(A) intersect in dimension {meet.dim}")
        return out


def central_extension(base: Algebra, thetas, label: str = "", check: bool = True) -> Algebra:
    """``base`` plus ``len(thetas)`` central coordinates appended after the base basis.

    e_i e_j = (base product) + sum_k theta_k(e_i, e_j) e_{m+k}.  Raises
    ``InvalidCocycle`` if some theta is not a cocycle; a split extension is
    still built but triggers ``SplitExtensionWarning``.
    """
    thetas = [_as_form(m) for m in thetas]
    m, s = base.n, len(thetas)
    for k, th in enumerate(thetas):
        if len(th) != m or any(len(r) != m for r in th):
            raise ValueError(f"theta_{k + 1} must be {m}x{m}")
    if check:
        issues = ExtensionSpec(base, thetas).issues()
        bad = [x for x in issues if "not a cocycle" in x]
        if bad:
            raise InvalidCocycle("; ".join(bad))
        if issues:
            warnings.warn("split extension: " + "; ".join(issues), SplitExtensionWarning, stacklevel=2)
    n = m + s
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                c[i][j][k] = base.c[i][j][k]
            for k, th in enumerate(thetas):
                c[i][j][m + k] = th[i][j]
    return Algebra(n, c, label)


@dataclass(frozen=True)
class AutomorphismViolation:
    reason: str
    pair: tuple = ()
    lhs: tuple = ()
    rhs: tuple = ()

    def __str__(self):
        if not self.pair:
            return self.reason
        i, j = (x + 1 for x in self.pair)
        return f"{self.reason} at (e{i},e{j}): phi(e{i}e{j})={[str(x) for x in self.lhs]} vs {[str(x) for x in self.rhs]}"


def aut_verify(A: Algebra, phi):
    """``None`` if ``phi`` (columns = images of e_j) is an automorphism of A, else the reason."""
    phi = linalg.to_matrix(phi)
    if len(phi) != A.n or any(len(r) != A.n for r in phi):
        return AutomorphismViolation(f"matrix must be {A.n}x{A.n}")
    if not linalg.determinant(phi):
        return AutomorphismViolation("matrix is singular")
    bad = is_homomorphism(A, A, phi)
    if bad is not None:
        i, j, left, right = bad
        return AutomorphismViolation("not multiplicative", (i, j), tuple(left), tuple(right))
    return None


def aut_action_on_cocycle(A: Algebra, phi, theta, check: bool = True):
    """(phi theta)(x, y) = theta(phi x, phi y), i.e. the congruence phi^T M phi."""
    phi = linalg.to_matrix(phi)
    if check:
        bad = aut_verify(A, phi)
        if bad is not None:
            raise NotAnAutomorphism(str(bad))
    M = _as_form(theta)
    return linalg.matmul(linalg.matmul(linalg.transpose(phi), M), phi)


def verify_orbit_representative(base: Algebra, rep, claimed: Algebra):
    """Compare the extension of ``base`` by ``rep`` with ``claimed`` on the nose.

    Returns ``None`` on exact equality, otherwise a list of
    ``(i, j, k, built, claimed)`` mismatches with 1-based indices.
    """
    reps = rep if rep and isinstance(rep[0][0], list) else [rep]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SplitExtensionWarning)
        built = central_extension(base, reps)
    if built.n != claimed.n:
        return [("dimension", built.n, claimed.n)]
    diff = []
    n = built.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if built.c[i][j][k] != claimed.c[i][j][k]:
                    diff.append((i + 1, j + 1, k + 1, built.c[i][j][k], claimed.c[i][j][k]))
    return diff or None


IN_ZN = "in_ZN"
NOT_IN_ZN = "not_in_ZN"


def novikov_cocycle_filter(base: Algebra, theta) -> str:
    """Whether extending the Novikov algebra ``base`` by ``theta`` stays Novikov."""
    if not is_novikov(base):
        raise NotNovikov(f"{base.label or 'base'} is not a Novikov algebra")
    return IN_ZN if is_novikov_cocycle(base, theta) else NOT_IN_ZN
