"""Construction data for the 4-dimensional classification.

For each 3-dimensional base this records the chosen classes nabla_k spanning
H^2 (the Novikov ones first), the matrix shape of its automorphism group,
the induced action on the nabla-coordinates, and the orbit representatives
that produce each 4-dimensional family.  Everything here is data plus thin
evaluators; the checks live in ``check_action`` and ``build_family``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import Algebra
from .catalog import CATALOG, instantiate
from .cohomology import b2_basis, class_coordinates, form_value, parse_cocycle
from .expressions import evaluate
from .extensions import aut_action_on_cocycle, aut_verify, central_extension
from .scalars import as_scalar


@dataclass(frozen=True)
class AutShape:
    """Automorphism matrix template; columns are the images of e_1, e_2, e_3."""

    entries: tuple
    variables: tuple

    def matrix(self, values: dict) -> list:
        return [[evaluate(x, values) for x in row] for row in self.entries]


@dataclass(frozen=True)
class BaseConstruction:
    base: str
    nablas: tuple
    novikov_count: int
    shapes: tuple
    alpha_star: tuple = ()
    excluded: tuple = ()  # base parameter values the shape/formulas do not cover

    def base_algebra(self, lam=None) -> Algebra:
        params = {} if lam is None else {"lam": lam}
        return instantiate(self.base, params)

    def nabla_forms(self, lam=None) -> list:
        names = {} if lam is None else {"lam": as_scalar(lam)}
        return [parse_cocycle(x, 3, names) for x in self.nablas]

    @property
    def has_param(self) -> bool:
        return bool(CATALOG[self.base].params)


_X3 = ("x", "y", "z", "u", "t")

CONSTRUCTIONS = {
    "L3_01": BaseConstruction(
        "L3_01",
        ("D12", "D13", "D21", "D31", "D33", "D23"),
        5,
        (AutShape((("x", "0", "0"), ("y", "x^2", "u"), ("z", "0", "t")), _X3),),
        (
            "a1*x^3",
            "a1*x*u + a2*x*t + a5*z*t + a6*y*t",
            "a3*x^3 + a6*x^2*z",
            "a3*x*u + a4*x*t + a5*z*t + a6*z*u",
            "a5*t^2 + a6*t*u",
            "a6*x^2*t",
        ),
    ),
    "L3_02": BaseConstruction(
        "L3_02",
        ("D12", "D21", "D22", "D31", "D32"),
        3,
        (
            AutShape((("x", "-y", "0"), ("y", "x", "0"), ("z", "t", "x^2+y^2")), ("x", "y", "z", "t")),
            AutShape((("x", "y", "0"), ("y", "-x", "0"), ("z", "t", "x^2+y^2")), ("x", "y", "z", "t")),
        ),
        (
            "a1*x^2 - a2*y^2 + a3*x*y - a4*y*z + a5*x*z",
            "-a1*y^2 + a2*x^2 + a3*x*y + a4*x*t + a5*y*t",
            "-2*a1*x*y - 2*a2*x*y + a3*(x^2-y^2) - a4*(x*z+y*t) - a5*(y*z-x*t)",
            "(a4*x + a5*y)*(x^2+y^2)",
            "(-a4*y + a5*x)*(x^2+y^2)",
        ),
    ),
    "L3_03": BaseConstruction(
        "L3_03",
        ("D11", "D21", "D22", "D31-2*D13", "D32-2*D23"),
        3,
        (AutShape((("x", "u", "0"), ("y", "v", "0"), ("z", "t", "x*v-y*u")), ("x", "y", "z", "u", "v", "t")),),
        (
            "a1*x^2 + a2*x*y + a3*y^2 - a4*x*z - a5*y*z",
            "2*a1*x*u + a2*(x*v+y*u) + 2*a3*y*v - a4*(x*t+z*u) - a5*(y*t+z*v)",
            "a1*u^2 + a2*u*v + a3*v^2 - a4*u*t - a5*v*t",
            "(a4*x + a5*y)*(x*v-y*u)",
            "(a4*u + a5*v)*(x*v-y*u)",
        ),
    ),
    "L3_04": BaseConstruction(
        "L3_04",
        ("D12", "D21", "D22", "D13-D31-D32", "D23+lam*D31"),
        3,
        (AutShape((("x", "y", "0"), ("-lam*y", "x-y", "0"), ("z", "t", "x^2-x*y+lam*y^2")), ("x", "y", "z", "t")),),
        (
            "a1*(x^2-x*y) - a2*lam*y^2 - a3*(lam*x*y-lam*y^2) + a4*(x*t-x*z) + a5*(lam*y*z-lam*y*t)",
            "a1*(x*y-lam*y^2) + a2*x^2 - a3*lam*x*y + a4*(lam*y*t-x*t) + a5*lam*x*t",
            "a1*(2*x*y-y^2) + a2*(2*x*y-y^2) + a3*((x-y)^2-lam*y^2) + a4*(y*t-x*t-y*z)"
            " + a5*(lam*y*t+x*t-y*t-x*z+y*z)",
            "(a4*x - a5*lam*y)*(x^2-x*y+lam*y^2)",
            "(a4*y + a5*(x-y))*(x^2-x*y+lam*y^2)",
        ),
        excluded=(0,),
    ),
    "L3_05": BaseConstruction(
        "L3_05",
        ("D12", "D13-D31", "D22+D31", "D23"),
        2,
        (AutShape((("x", "0", "0"), ("y", "x^2", "0"), ("z", "x*y", "x^3")), ("x", "y", "z")),),
        (
            "a1*x^3 + (a2+a3)*x^2*y + a4*x*y^2",
            "a2*x^4 + a4*x^3*y",
            "a3*x^4 + a4*x^3*y",
            "a4*x^5",
        ),
    ),
    "L3_06": BaseConstruction(
        "L3_06",
        ("D21", "(2-lam)*D13+lam*D22+lam*D31", "D22+D13-D31"),
        2,
        (AutShape((("x", "0", "0"), ("y", "x^2", "0"), ("z", "x*y*(1+lam)", "x^3")), ("x", "y", "z")),),
        (
            "a1*x^3 + (a2*(lam^3-lam^2) - a3*(lam^2+3*lam))*x^2*y",
            "a2*x^4",
            "a3*x^4",
        ),
    ),
}


@dataclass(frozen=True)
class Representative:
    family: str
    base: str
    cocycle: str  # combination of n1, n2, ... (the nabla classes)
    base_lam: str | None = None  # expression for the base parameter in the family's parameters


REPRESENTATIVES = {r.family: r for r in [
    Representative("L4_01", "L3_01", "n1+n4+n6"),
    Representative("L4_02", "L3_01", "n4+n6"),
    Representative("L4_03", "L3_01", "n1+n6"),
    Representative("L4_04", "L3_01", "n6"),
    Representative("L4_05", "L3_02", "n4"),
    Representative("L4_06", "L3_02", "n1+n4"),
    Representative("L4_07", "L3_02", "n4+i*n5"),
    Representative("L4_08", "L3_02", "n1+n4+i*n5"),
    Representative("L4_09", "L3_03", "n4"),
    Representative("L4_10", "L3_03", "n3+n4"),
    Representative("L4_11", "L3_04", "n5", "lam"),
    Representative("L4_12", "L3_04", "n1+n5", "lam"),
    Representative("L4_13", "L3_04", "2*lam*n4+(1-mu)*n5", "lam"),
    Representative("L4_14", "L3_04", "n3+2*lam*n4+(1-mu)*n5", "lam"),
    Representative("L4_15", "L3_04", "2*lam*n4+(1+mu)*n5", "lam"),
    Representative("L4_16", "L3_04", "n3+2*lam*n4+(1+mu)*n5", "lam"),
    Representative("L4_17", "L3_05", "alpha*n2+n3"),
    Representative("L4_18", "L3_05", "n1-n2+n3"),
    Representative("L4_19", "L3_05", "n4"),
    Representative("L4_20", "L3_05", "n2+n4"),
    Representative("L4_21", "L3_05", "n1+alpha*n2+n4"),
    Representative("L4_22", "L3_06", "n1+alpha*n2+n3", "0"),
    Representative("L4_23", "L3_06", "alpha*n2+n3", "lam"),
    Representative("L4_24", "L3_06", "n1+(lam+3)*n2+lam*(lam-1)*n3", "lam"),
    # the Novikov component family built the same way
    Representative("N4_22", "L3_06", "n2", "lam"),
]}


def representative_cocycle(family: str, params: dict | None = None):
    """``(base algebra, cocycle matrix)`` for the listed representative at ``params``."""
    rep = REPRESENTATIVES[family]
    values = {k: as_scalar(v) for k, v in (params or {}).items()}
    con = CONSTRUCTIONS[rep.base]
    lam = evaluate(rep.base_lam, values) if rep.base_lam is not None else None
    base = con.base_algebra(lam)
    names = dict(values)
    for k, m in enumerate(con.nabla_forms(lam), 1):
        names[f"n{k}"] = form_value(m)
    return base, parse_cocycle(rep.cocycle, 3, names)


def build_family(family: str, params: dict | None = None) -> Algebra:
    """Central extension of the base by the listed representative."""
    base, theta = representative_cocycle(family, params)
    A = central_extension(base, [theta])
    return Algebra(A.n, A.c, f"ext[{family}]")


def random_rational(rng: random.Random, size: int = 9) -> Fraction:
    """Nonzero rational with small numerator and denominator."""
    while True:
        q = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if q:
            return q


@dataclass
class ActionCheck:
    base: str
    shape_index: int
    values: dict
    alphas: list
    aut_ok: bool
    computed: list | None
    expected: list | None

    @property
    def ok(self) -> bool:
        return self.aut_ok and self.computed == self.expected


def check_action(base: str, values: dict, alphas: list, shape_index: int = 0) -> ActionCheck:
    """Compare phi^T M phi reduced mod B^2 with the alpha* formulas at one point.

    ``values`` binds the shape variables (and ``lam`` for parametric bases).
    """
    con = CONSTRUCTIONS[base]
    shape = con.shapes[shape_index]
    env = {k: as_scalar(v) for k, v in values.items()}
    lam = env.get("lam")
    A = con.base_algebra(lam)
    phi = shape.matrix(env)
    if aut_verify(A, phi) is not None:
        return ActionCheck(base, shape_index, values, alphas, False, None, None)
    nablas = con.nabla_forms(lam)
    alphas = [as_scalar(a) for a in alphas]
    M = [[sum((a * m[i][j] for a, m in zip(alphas, nablas)), as_scalar(0)) for j in range(3)] for i in range(3)]
    image = aut_action_on_cocycle(A, phi, M, check=False)
    computed = class_coordinates(image, nablas, b2_basis(A))
    expected = None
    if shape_index == 0 and con.alpha_star:
        env.update({f"a{k}": a for k, a in enumerate(alphas, 1)})
        expected = [evaluate(f, env) for f in con.alpha_star]
    return ActionCheck(base, shape_index, values, alphas, True, computed, expected)


def sample_action_points(base: str, count: int, seed: int = 0, shape_index: int = 0) -> list:
    """``count`` random (values, alphas) points giving an invertible automorphism."""
    rng = random.Random(f"{base}:{shape_index}:{seed}")
    con = CONSTRUCTIONS[base]
    shape = con.shapes[shape_index]
    out = []
    while len(out) < count:
        values = {v: random_rational(rng) for v in shape.variables}
        if con.has_param:
            lam = random_rational(rng)
            if lam in con.excluded:
                continue
            values["lam"] = lam
        env = {k: as_scalar(v) for k, v in values.items()}
        if not linalg.determinant(shape.matrix(env)):
            continue
        alphas = [random_rational(rng) for _ in con.nablas]
        out.append((values, alphas))
    return out


@dataclass(frozen=True)
class TableRow:
    """One row of the second-cohomology table for the 3-dimensional bases."""

    base: str
    params: tuple  # parameter sample sets; () for a fixed algebra
    dim_h2n: int
    dim_h2l: int
    novikov_gens: tuple
    extra_gens: tuple


_GENERIC = tuple({"lam": s} for s in (2, 3, Fraction(5, 2), -1, Fraction(7, 3)))

H2_TABLE = [
    TableRow("L3_01", (), 5, 6, ("D12", "D13", "D21", "D31", "D33"), ("D23",)),
    TableRow("L3_02", (), 3, 5, ("D12", "D21", "D22"), ("D31", "D32")),
    TableRow("L3_03", (), 3, 5, ("D11", "D21", "D22"), ("D31-2*D13", "D32-2*D23")),
    TableRow("L3_04", _GENERIC, 3, 5, ("D11", "D12", "D21"), ("D13-D31-D32", "D23+lam*D31")),
    TableRow("L3_04", ({"lam": 0},), 5, 5, ("D11", "D12", "D21", "D13-D31-D32", "D23"), ()),
    TableRow("L3_05", (), 2, 4, ("D12", "D13-D31"), ("D22+D31", "D23")),
    TableRow("L3_06", _GENERIC, 2, 3, ("D21", "(2-lam)*D13+lam*(D22+D31)"), ("D22+D13-D31",)),
]
