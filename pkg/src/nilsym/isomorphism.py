"""Isomorphism invariants, non-isomorphism certificates and a bounded isomorphism search.

Outcomes are three-valued: two algebras are certified non-isomorphic by a
differing invariant, certified isomorphic by an explicit verified matrix,
or left inconclusive.  Nothing here ever claims isomorphism without a matrix.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, fields

from . import linalg
from .algebra import (
    Algebra,
    Subspace,
    basis_vector,
    derivation_dimension,
    is_homomorphism,
    multiply,
    square,
    subspace_product,
    upper_annihilator_series,
)
from .scalars import ZERO, as_scalar


@dataclass(frozen=True)
class InvariantVector:
    dim_ann: int
    dim_sq: int
    dim_cube: int
    dim_der: int
    left_ann_dim: int
    right_ann_dim: int
    commutative_rank: int

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))


def _nullity(n, rows) -> int:
    rows = [r for r in rows if any(r)]
    return n - (linalg.rank(rows) if rows else 0)


def invariants(A: Algebra) -> InvariantVector:
    """Basis-independent numeric invariants of ``A``."""
    n = A.n
    c = A.c
    # x -> (x e_j) and x -> (e_j x), coordinate by coordinate
    left = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    right = [[c[j][i][k] for i in range(n)] for j in range(n) for k in range(n)]
    sq = square(A)
    full = Subspace.full(n)
    cube = subspace_product(A, sq, full) + subspace_product(A, full, sq)
    # span of the commutators [e_i, e_j]
    comm = [[A.c[i][j][k] - A.c[j][i][k] for k in range(n)] for i in range(n) for j in range(i + 1, n)]
    comm = [v for v in comm if any(v)]
    return InvariantVector(
        dim_ann=_nullity(n, left + right),
        dim_sq=sq.dim,
        dim_cube=cube.dim,
        dim_der=derivation_dimension(A),
        left_ann_dim=_nullity(n, left),
        right_ann_dim=_nullity(n, right),
        commutative_rank=linalg.rank(comm) if comm else 0,
    )


NON_ISOMORPHIC = "non_isomorphic"
INCONCLUSIVE = "inconclusive"
ISOMORPHIC = "isomorphic"


@dataclass(frozen=True)
class Distinction:
    outcome: str
    witness: str = ""
    left: int | None = None
    right: int | None = None

    def __str__(self):
        if self.outcome == NON_ISOMORPHIC:
            return f"{self.outcome} ({self.witness}: {self.left} vs {self.right})"
        return self.outcome


def distinguish(A: Algebra, B: Algebra, inv_a: InvariantVector | None = None,
                inv_b: InvariantVector | None = None) -> Distinction:
    """Certify non-isomorphism by the first differing invariant, or report inconclusive.

    After the invariant vector, the upper annihilator series is compared
    (A/Ann(A) is determined by A up to isomorphism, so the series is too).
    """
    if A.n != B.n:
        return Distinction(NON_ISOMORPHIC, "dim", A.n, B.n)
    inv_a = inv_a or invariants(A)
    inv_b = inv_b or invariants(B)
    for f in fields(InvariantVector):
        x, y = getattr(inv_a, f.name), getattr(inv_b, f.name)
        if x != y:
            return Distinction(NON_ISOMORPHIC, f.name, x, y)
    sa, sb = upper_annihilator_series(A), upper_annihilator_series(B)
    if sa != sb:
        return Distinction(NON_ISOMORPHIC, "annihilator_series", sa, sb)
    return Distinction(INCONCLUSIVE)


def generators(A: Algebra) -> list:
    """Standard basis vectors completing a basis of A*A, lexicographically first.

    They generate A when A is nilpotent; otherwise the full standard basis is returned.
    """
    n = A.n
    current = square(A).vectors()
    gens = []
    for i in range(n):
        e = basis_vector(n, i)
        if linalg.rank(current + [e]) > len(current):
            current.append(e)
            gens.append(e)
    if _close(A, A, gens, gens) is None:
        return [basis_vector(n, i) for i in range(n)]
    return gens


def _close(A: Algebra, B: Algebra, gens, images):
    """Extend g -> image multiplicatively; the matrix of the map, or ``None`` if inconsistent or not spanning."""
    n = A.n
    src, dst = [], []

    def add(a, b) -> bool:
        if not any(a):
            return not any(b)
        coords = linalg.coordinates(a, src) if src else None
        if coords is None:
            src.append(a)
            dst.append(b)
            return True
        predicted = [sum((c * v[k] for c, v in zip(coords, dst)), ZERO) for k in range(n)]
        return predicted == b

    queue = []
    for g, w in zip(gens, images):
        before = len(src)
        if not add(list(g), list(w)):
            return None
        if len(src) == before:
            return None  # generators must stay independent
        queue.append(len(src) - 1)
    while queue and len(src) < n:
        p = queue.pop(0)
        for q in range(len(src)):
            for x, y in ((p, q), (q, p)):
                before = len(src)
                if not add(multiply(A, src[x], src[y]), multiply(B, dst[x], dst[y])):
                    return None
                if len(src) > before:
                    queue.append(len(src) - 1)
    if len(src) < n:
        return None
    # phi * S = D where S, D have the pairs as columns
    S = linalg.transpose(src)
    D = linalg.transpose(dst)
    return linalg.matmul(D, linalg.inverse(S))


_MONOMIAL_SCALARS = [as_scalar(x) for x in (1, -1, 2, -2, "1/2", "-1/2", "i", "-i")]


def _monomial_candidates(n, s):
    for cols in itertools.permutations(range(n), s):
        for scal in itertools.product(_MONOMIAL_SCALARS, repeat=s):
            yield [[scal[k] if r == cols[k] else ZERO for r in range(n)] for k in range(s)]


def _small_candidates(n, s):
    vals = [as_scalar(x) for x in (0, 1, -1)]
    vecs = [list(v) for v in itertools.product(vals, repeat=n) if any(v)]
    vecs.sort(key=lambda v: (sum(1 for x in v if x), [(-1 if x == 1 else (1 if x else 0)) for x in v]))
    yield from itertools.product(vecs, repeat=s)


def _random_candidates(n, s, rng):
    while True:
        yield [[as_scalar(rng.randint(-3, 3)) for _ in range(n)] for _ in range(s)]


@dataclass
class SearchResult:
    phi: list | None
    candidates: int
    phase: str = ""

    @property
    def found(self) -> bool:
        return self.phi is not None


def find_isomorphism(A: Algebra, B: Algebra, budget: int = 10 ** 5, seed: int = 0) -> SearchResult:
    """Search for phi: A -> B (columns = images of e_j) with phi(xy) = phi(x)phi(y).

    Generator images are tried in phases: scaled standard vectors, small
    {0, 1, -1} combinations, then seeded random integers in [-3, 3].  Each
    assignment is extended multiplicatively and the result is verified
    exactly.  ``phi is None`` means nothing was found within ``budget``
    candidates and proves nothing.
    """
    if A.n != B.n:
        return SearchResult(None, 0, "dimension mismatch")
    if distinguish(A, B).outcome == NON_ISOMORPHIC:
        return SearchResult(None, 0, "invariants differ")
    n = A.n
    gens = generators(A)
    s = len(gens)
    rng = random.Random(seed)
    count = 0
    phases = [
        ("monomial", _monomial_candidates(n, s)),
        ("small", _small_candidates(n, s)),
        ("random", _random_candidates(n, s, rng)),
    ]
    for name, cands in phases:
        for images in cands:
            if count >= budget:
                return SearchResult(None, count, name)
            count += 1
            phi = _close(A, B, gens, [list(w) for w in images])
            if phi is None or not linalg.determinant(phi):
                continue
            if is_homomorphism(A, B, phi) is None:
                return SearchResult(phi, count, name)
    return SearchResult(None, count, "exhausted")


@dataclass
class PairOutcome:
    a: str
    b: str
    outcome: str
    witness: str = ""
    phi: list | None = None


def distinctness_report(algebras: list, search_budget: int = 0, seed: int = 0) -> dict:
    """Pairwise outcomes over ``[(label, Algebra), ...]``.

    Pairs that invariants cannot separate are searched for an explicit
    isomorphism when ``search_budget > 0``; a find is reported as
    ``isomorphic`` together with the matrix.
    """
    invs = {label: invariants(A) for label, A in algebras}
    pairs = []
    for (la, A), (lb, B) in itertools.combinations(algebras, 2):
        d = distinguish(A, B, invs[la], invs[lb])
        if d.outcome == NON_ISOMORPHIC:
            pairs.append(PairOutcome(la, lb, d.outcome, f"{d.witness}: {d.left} vs {d.right}"))
            continue
        res = find_isomorphism(A, B, search_budget, seed) if search_budget else SearchResult(None, 0)
        if res.found:
            pairs.append(PairOutcome(la, lb, ISOMORPHIC, "explicit matrix",
                                     [[str(x) for x in row] for row in res.phi]))
        else:
            pairs.append(PairOutcome(la, lb, INCONCLUSIVE))
    return {
        "invariants": {label: asdict(v) for label, v in invs.items()},
        "pairs": [asdict(p) for p in pairs],
        "counts": {
            k: sum(1 for p in pairs if p.outcome == k) for k in (NON_ISOMORPHIC, INCONCLUSIVE, ISOMORPHIC)
        },
    }


def distinctness_text(report: dict) -> str:
    lines = []
    for p in report["pairs"]:
        tail = f"  [{p['witness']}]" if p["witness"] else ""
        lines.append(f"{p['a']:<12} {p['b']:<12} {p['outcome']}{tail}")
    c = report["counts"]
    lines.append(f"{c[NON_ISOMORPHIC]} separated, {c[INCONCLUSIVE]} inconclusive, {c[ISOMORPHIC]} isomorphic")
    return "\n".join(lines)


def distinctness_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
