"""Named verification suites over the catalog.

Each suite returns a ``SuiteReport`` of named checks.  Reports contain no
timings or other run-dependent data, so identical options give identical
JSON.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    Algebra,
    Subspace,
    annihilator,
    change_basis,
    check_left_symmetric,
    derivation_dimension,
    is_left_symmetric,
    is_nilpotent,
    is_novikov,
    quotient_by_annihilator,
    random_invertible,
)
from .catalog import (
    CATALOG,
    COMPONENT_FAMILIES,
    N4_22_AS_PRINTED,
    NOVIKOV_COMPONENTS,
    FOUR_DIM_FAMILIES,
    THREE_DIM,
    instantiate,
)
from .cohomology import (
    b2_basis,
    class_coordinates,
    cocycle_annihilator,
    flatten,
    h2,
    is_cocycle,
    is_novikov_cocycle,
    parse_cocycle,
    z2_basis,
    z2n_basis,
)
from .constructions import (
    CONSTRUCTIONS,
    H2_TABLE,
    REPRESENTATIVES,
    AutShape,
    check_action,
    representative_cocycle,
    sample_action_points,
)
from .degeneration import (
    DegenerationWitness,
    component_dimension,
    necessary_conditions,
    parse_witness,
    verify_degeneration,
)
from .extensions import (
    SplitExtensionWarning,
    aut_verify,
    central_extension,
    verify_orbit_representative,
)
from .isomorphism import (
    INCONCLUSIVE,
    ISOMORPHIC,
    distinctness_report,
    distinguish,
    find_isomorphism,
    invariants,
)
from .presentation import parse_presentation
from .scalars import ONE, ZERO, RationalFunction


class UnknownSuite(KeyError):
    pass


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    options: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_dict(self) -> dict:
        failed = sum(1 for c in self.checks if not c.passed)
        return {
            "suite": self.suite,
            "options": self.options,
            "passed": self.passed,
            "summary": {"total": len(self.checks), "passed": len(self.checks) - failed, "failed": failed},
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, quiet: bool = False) -> str:
        lines = []
        for c in self.checks:
            if quiet and c.passed:
                continue
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}{tail}")
        s = self.to_dict()["summary"]
        lines.append(f"{self.suite}: {s['passed']}/{s['total']} checks passed")
        return "\n".join(lines)


def family_samples(label: str, limit: int | None = None) -> list:
    """Default generic samples (at most ``limit``) followed by the family's special values."""
    entry = CATALOG[label]
    generic = entry.default_samples(include_special=False)
    special = [s for s in entry.default_samples() if s not in generic]
    if limit is not None:
        generic = generic[:limit]
    return generic + special


def _instances(label: str, limit: int | None = None) -> list:
    return [instantiate(label, s) for s in family_samples(label, limit)]


# identities -----------------------------------------------------------------

def suite_identities(samples: int | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("identities", options={"samples": samples})
    for label in FOUR_DIM_FAMILIES:
        for A in _instances(label, samples):
            bad = []
            if not is_left_symmetric(A):
                bad.append("not left-symmetric")
            if is_novikov(A):
                bad.append("is Novikov")
            if not is_nilpotent(A):
                bad.append("not nilpotent")
            ann = annihilator(A).dim
            if ann < 1:
                bad.append("zero annihilator")
            rep.add(f"{A.label}: left-symmetric, non-Novikov, nilpotent, Ann != 0", not bad,
                    "; ".join(bad) or f"dim Ann = {ann}")
    for label in ["L2_01"] + THREE_DIM + NOVIKOV_COMPONENTS:
        for A in _instances(label, samples):
            ok = is_left_symmetric(A) and is_novikov(A) and is_nilpotent(A)
            rep.add(f"{A.label}: left-symmetric and Novikov", ok)
    printed = parse_presentation(N4_22_AS_PRINTED, {"lam": ONE * 2}, "N4_22 as printed")
    v = check_left_symmetric(printed)
    rep.add("N4_22 printed row (e2*e1 = lam*e4) is not left-symmetric", v is not None,
            str(v) if v else "unexpectedly left-symmetric")
    return rep


# h2-table -------------------------------------------------------------------

def _table_row_check(row, values: dict) -> list:
    A = instantiate(row.base, values)
    H = h2(A)
    names = {k: ONE * v for k, v in values.items()}
    nov = [parse_cocycle(g, 3, names) for g in row.novikov_gens]
    extra = [parse_cocycle(g, 3, names) for g in row.extra_gens]
    b2 = [flatten(b) for b in H.b2]
    gens = [flatten(g) for g in nov + extra]
    bad = []
    if (H.dim_h2n, H.dim_h2) != (row.dim_h2n, row.dim_h2l):
        bad.append(f"dims (H2N, H2L) = ({H.dim_h2n}, {H.dim_h2}), expected ({row.dim_h2n}, {row.dim_h2l})")
    if H.dim_h2 != H.dim_z2 - H.dim_b2:
        bad.append("complement count differs from dim Z2 - dim B2")
    if not all(is_cocycle(A, g) for g in nov + extra):
        bad.append("a listed generator is not a cocycle")
    elif linalg.span_dim(b2 + gens) != len(b2) + len(gens):
        bad.append("listed generators are dependent modulo B2")
    if not all(is_novikov_cocycle(A, g) for g in nov):
        bad.append("a listed Novikov generator violates the Novikov constraint")
    if any(is_novikov_cocycle(A, g) for g in extra):
        bad.append("a listed non-Novikov generator satisfies the Novikov constraint")
    if len(nov) + len(extra) != row.dim_h2l:
        bad.append("listed generator count differs from dim H2L")
    return bad, (H.dim_z2, H.dim_b2, H.dim_h2n, H.dim_h2)


def suite_h2_table(samples: int | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("h2-table", options={"samples": samples})
    for row in H2_TABLE:
        points = list(row.params) or [{}]
        if samples is not None and row.params and len(points) > 1:
            points = points[:max(samples, 3)]
        problems, dims = [], None
        for values in points:
            bad, dims = _table_row_check(row, values)
            tag = ",".join(f"{k}={v}" for k, v in values.items())
            problems += [f"[{tag}] {b}" if tag else b for b in bad]
        name = row.base
        if row.params and len(points) == 1:
            name += "(" + ",".join(f"{k}={v}" for k, v in points[0].items()) + ")"
        elif row.params:
            name += f"(lam) at {len(points)} samples"
        detail = "; ".join(problems) or f"Z2={dims[0]} B2={dims[1]} H2N={dims[2]} H2L={dims[3]}"
        rep.add(f"{name}: (H2N, H2L) = ({row.dim_h2n}, {row.dim_h2l})", not problems, detail)
    return rep


# extensions -----------------------------------------------------------------

def _round_trip(claimed: Algebra, base: Algebra, theta) -> list:
    bad = []
    q = quotient_by_annihilator(claimed)
    if q.annihilator.dim != 1:
        bad.append(f"dim Ann = {q.annihilator.dim}")
        return bad
    if q.quotient != base:
        bad.append("quotient differs from the base")
        return bad
    b2 = b2_basis(base)
    H = h2(base)
    if class_coordinates(q.thetas[0], H.h2_reps, b2) != class_coordinates(theta, H.h2_reps, b2):
        bad.append("recovered cocycle class differs")
    return bad


def suite_extensions(samples: int | None = None, seed: int = 0, action_samples: int = 12) -> SuiteReport:
    rep = SuiteReport("extensions", options={"samples": samples, "seed": seed, "action_samples": action_samples})
    for family, r in REPRESENTATIVES.items():
        problems = []
        pts = family_samples(family, samples)
        for values in pts:
            base, theta = representative_cocycle(family, values)
            claimed = instantiate(family, values)
            diff = verify_orbit_representative(base, theta, claimed)
            if diff:
                problems.append(f"{claimed.label}: {len(diff)} entries differ, first {diff[0]}")
                continue
            problems += [f"{claimed.label}: {b}" for b in _round_trip(claimed, base, theta)]
        rep.add(f"{family} = extension of {r.base} by <{r.cocycle}>, and back", not problems,
                "; ".join(problems) or f"{len(pts)} parameter points")

    for base, con in CONSTRUCTIONS.items():
        results = [check_action(base, v, a) for v, a in sample_action_points(base, action_samples, seed)]
        bad = [r for r in results if not r.ok]
        rep.add(f"{base}: automorphism shape and alpha* formulas", not bad,
                f"{len(results)} samples" if not bad else f"{len(bad)} mismatches, first at {bad[0].values}")
        for k in range(1, len(con.shapes)):
            res = [check_action(base, v, a, k) for v, a in sample_action_points(base, action_samples, seed, k)]
            rep.add(f"{base}: automorphism shape {k + 1}", all(r.aut_ok for r in res), f"{len(res)} samples")

    # a wrong shape must be rejected
    con = CONSTRUCTIONS["L3_01"]
    wrong = AutShape((("x", "0", "0"), ("y", "x^3", "u"), ("z", "0", "t")), con.shapes[0].variables)
    phi = wrong.matrix({k: ONE * v for k, v in dict(x=2, y=1, z=3, u=5, t=7).items()})
    v = aut_verify(instantiate("L3_01"), phi)
    rep.add("L3_01 shape with x^3 in place of x^2 is rejected", v is not None, str(v))

    base, theta = representative_cocycle("L4_04")
    diff = verify_orbit_representative(base, theta, instantiate("L4_01"))
    rep.add("<n6> over L3_01 does not give L4_01", diff is not None, f"{len(diff or [])} differing entries")

    # Novikov filter: H2N classes keep the extension Novikov, the rest leave
    problems = []
    for label in THREE_DIM:
        for A in _instances(label, samples):
            H = h2(A)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", SplitExtensionWarning)
                for k, m in enumerate(H.h2_reps):
                    E = central_extension(A, [m])
                    if not is_left_symmetric(E):
                        problems.append(f"{A.label} rep {k + 1}: not left-symmetric")
                    if is_novikov(E) != (k < H.dim_h2n):
                        problems.append(f"{A.label} rep {k + 1}: Novikov status wrong")
    rep.add("extensions by H2 representatives: Novikov iff the class is in H2N", not problems,
            "; ".join(problems[:3]))

    # Ann(A_theta) = (Ann(theta) cap Ann(A)) + new coordinate
    problems = []
    for family in REPRESENTATIVES:
        values = family_samples(family, 1)[0]
        base, theta = representative_cocycle(family, values)
        E = central_extension(base, [theta])
        lhs = annihilator(E)
        meet = cocycle_annihilator(base, [theta]).intersect(annihilator(base))
        expected = [v + [ZERO] for v in meet.vectors()] + [[ZERO] * 3 + [ONE]]
        if lhs != Subspace.span(4, expected):
            problems.append(family)
    rep.add("annihilator of each extension = (Ann(theta) & Ann(A)) + new coordinate", not problems,
            ", ".join(problems))

    # quotient-then-extend round trip for every 4-dimensional catalog algebra
    problems = []
    count = 0
    for label in FOUR_DIM_FAMILIES + NOVIKOV_COMPONENTS:
        for A in _instances(label, samples):
            count += 1
            q = quotient_by_annihilator(A)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", SplitExtensionWarning)
                rebuilt = central_extension(q.quotient, q.thetas)
            if change_basis(A, q.adapted_basis) != rebuilt:
                problems.append(A.label)
    rep.add("quotient by Ann then extend reproduces every 4-dim catalog algebra", not problems,
            ", ".join(problems) or f"{count} algebras")
    return rep


# invariants -----------------------------------------------------------------

def suite_invariants(samples: int | None = None, seed: int = 0, trials: int = 1000,
                     search_budget: int = 200) -> SuiteReport:
    rep = SuiteReport("invariants", options={"samples": samples, "seed": seed, "trials": trials,
                                             "search_budget": search_budget})
    pool = []
    for label in FOUR_DIM_FAMILIES + NOVIKOV_COMPONENTS:
        pool += _instances(label, 1 if samples is None else samples)
    rng = random.Random(seed)
    base_inv = {A.label: invariants(A) for A in pool}
    bad = []
    for k in range(trials):
        A = pool[k % len(pool)]
        B = change_basis(A, random_invertible(A.n, rng))
        inv = invariants(B)
        if inv != base_inv[A.label] or distinguish(A, B, base_inv[A.label], inv).outcome != INCONCLUSIVE:
            bad.append(A.label)
    rep.add(f"{trials} random conjugates: invariants unchanged, never separated", not bad,
            ", ".join(sorted(set(bad))) or f"over {len(pool)} algebras")

    A = instantiate("L4_04")
    P = [[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]]
    res = find_isomorphism(A, change_basis(A, P), budget=10 ** 4, seed=seed)
    rep.add("L4_04 against a permuted copy: isomorphism found and verified", res.found,
            f"{res.candidates} candidates ({res.phase})")

    fixed = [(label, instantiate(label)) for label in FOUR_DIM_FAMILIES if not CATALOG[label].params]
    report = distinctness_report(fixed, search_budget=search_budget, seed=seed)
    inconclusive = [f"{p['a']}/{p['b']}" for p in report["pairs"] if p["outcome"] == INCONCLUSIVE]
    iso = [f"{p['a']}/{p['b']}" for p in report["pairs"] if p["outcome"] == ISOMORPHIC]
    c = report["counts"]
    rep.add("distinctness of the fixed 4-dim families (no isomorphic pair)", not iso,
            f"{c['non_isomorphic']} separated, {c['inconclusive']} inconclusive"
            + (f" ({', '.join(inconclusive)})" if inconclusive else "") + (f"; isomorphic: {iso}" if iso else ""))

    problems = []
    for label in ["L2_01"] + THREE_DIM:
        for A in _instances(label, samples):
            z2 = [flatten(m) for m in z2_basis(A)]
            z2n = [flatten(m) for m in z2n_basis(A)]
            b2 = [flatten(m) for m in b2_basis(A)]
            if not all(linalg.in_span(v, z2n) for v in b2) or not all(linalg.in_span(v, z2) for v in z2n):
                problems.append(A.label)
    rep.add("B2 <= Z2N <= Z2 for every Novikov base", not problems, ", ".join(problems))
    return rep


# degenerations --------------------------------------------------------------

def identity_witness(n: int) -> DegenerationWitness:
    return DegenerationWitness([[RationalFunction(1 if i == j else 0) for j in range(n)] for i in range(n)])


def suite_degenerations(samples: int | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("degenerations", options={"samples": samples})
    w = parse_witness("t, 0, 0, 0\n0, t^2, 0, 0\n0, 0, 1, 0\n0, 0, 0, t^2\n")
    A, B = instantiate("L4_03"), instantiate("L4_04")
    res = verify_degeneration(A, w, B)
    ok = res.ok and is_left_symmetric(res.limit)
    nec = necessary_conditions(A, B)
    rep.add("L4_03 -> L4_04 via E = (t e1, t^2 e2, e3, t^2 e4)", ok, str(res))
    rep.add("L4_03 -> L4_04 respects the Der condition", nec.ok or not any("Der" in v for v in nec.violated),
            f"Der {nec.der[0]} < {nec.der[1]}")

    zero2 = Algebra.zero(2)
    L2 = instantiate("L2_01")
    bad = verify_degeneration(L2, parse_witness("t 0\n0 t^2"), zero2)
    rep.add("L2_01 -> 0 via (t e1, t^2 e2) fails at a located entry", not bad.ok and bad.entry == (1, 1, 2),
            str(bad))
    good = verify_degeneration(L2, parse_witness("t 0\n0 1"), zero2)
    rep.add("L2_01 -> 0 via (t e1, e2)", good.ok and is_left_symmetric(good.limit), str(good))
    pole = verify_degeneration(L2, parse_witness("1/t 0\n0 1"), zero2)
    rep.add("a witness with a pole at t=0 is rejected", not pole.ok and "pole" in pole.reason, str(pole))

    nec = necessary_conditions(zero2, L2)
    rep.add("0 -> L2_01 is ruled out by the necessary conditions", not nec.ok, "; ".join(nec.violated))

    problems, count = [], 0
    for label in ["L2_01"] + THREE_DIM + FOUR_DIM_FAMILIES + NOVIKOV_COMPONENTS:
        for A in _instances(label, samples):
            count += 1
            r = verify_degeneration(A, identity_witness(A.n), A)
            if not (r.ok and is_left_symmetric(r.limit)):
                problems.append(A.label)
    rep.add("identity witness certifies A -> A for every catalog algebra", not problems,
            ", ".join(problems) or f"{count} algebras")

    w = parse_witness("1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\nparam lam = 2 + t\nparam alpha = 3*t\n")
    r = verify_degeneration("L4_23", w, instantiate("L4_23", lam=2, alpha=0))
    rep.add("parametrized index: L4_23(2+t, 3t) -> L4_23(2, 0)", r.ok, str(r))
    return rep


# theorem-b ------------------------------------------------------------------

EXPECTED_DER = {"L4_12": 2, "L4_21": 2, "L4_23": 3}


def suite_theorem_b(samples: int | None = None, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("theorem-b", options={"samples": samples})
    dims = []
    for label in COMPONENT_FAMILIES:
        pts = CATALOG[label].default_samples(include_special=False)
        if samples is not None:
            pts = pts[:max(samples, 5)]
        ders = [derivation_dimension(instantiate(label, s)) for s in pts]
        rep.add(f"{label}: dim Der = {EXPECTED_DER[label]} at {len(pts)} generic samples",
                all(d == EXPECTED_DER[label] for d in ders), f"values {ders}")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = component_dimension(label, pts)
        dims.append(report.component_dim)
        special = ""
        if label == "L4_23":
            sp = [(s, derivation_dimension(instantiate(label, s))) for s in CATALOG[label].special]
            special = "; special values: " + ", ".join(
                f"({','.join(str(v) for v in s.values())}) Der {d}" for s, d in sp)
        rep.add(f"{label}: component dimension 15", report.component_dim == 15,
                f"16 - {report.dim_der} + {report.param_count} = {report.component_dim}{special}")
    rep.add("three component families of equal dimension 15", len(dims) == 3 and set(dims) == {15},
            f"dimensions {dims}")
    for label in NOVIKOV_COMPONENTS:
        insts = _instances(label, samples)
        ok = all(is_left_symmetric(A) and is_novikov(A) for A in insts)
        rep.add(f"{label}: left-symmetric and Novikov at every sample", ok, f"{len(insts)} samples")
    return rep


SUITES = {
    "identities": suite_identities,
    "h2-table": suite_h2_table,
    "extensions": suite_extensions,
    "invariants": suite_invariants,
    "degenerations": suite_degenerations,
    "theorem-b": suite_theorem_b,
}


def run_suite(name: str, samples: int | None = None, seed: int = 0, **options) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](samples=samples, seed=seed, **options)
