import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from nilsym import linalg
from nilsym.algebra import Algebra, annihilator, is_left_symmetric, is_novikov
from nilsym.catalog import THREE_DIM, instantiate
from nilsym.cohomology import delta, flatten, h2, parse_cocycle
from nilsym.constructions import CONSTRUCTIONS, random_rational
from nilsym.extensions import (
    IN_ZN,
    NOT_IN_ZN,
    ExtensionSpec,
    InvalidCocycle,
    NotAnAutomorphism,
    NotNovikov,
    SplitExtensionWarning,
    aut_action_on_cocycle,
    aut_verify,
    central_extension,
    novikov_cocycle_filter,
    verify_orbit_representative,
)
from nilsym.scalars import as_scalar
from nilsym.suites import family_samples

SHAPE_BASES = [b for b in CONSTRUCTIONS if not CONSTRUCTIONS[b].has_param] + ["L3_04", "L3_06"]


def shape_point(base, rng):
    con = CONSTRUCTIONS[base]
    while True:
        env = {v: as_scalar(random_rational(rng)) for v in con.shapes[0].variables}
        lam = None
        if con.has_param:
            lam = as_scalar(random_rational(rng))
            env["lam"] = lam
        phi = con.shapes[0].matrix(env)
        if linalg.determinant(phi):
            return con.base_algebra(lam), phi


def test_l3_01_plus_d23_is_l4_04():
    E = central_extension(instantiate("L3_01"), [parse_cocycle("D23", 3)])
    assert E == instantiate("L4_04")
    assert not is_novikov(E)


def test_non_cocycle_raises():
    with pytest.raises(InvalidCocycle, match="not a cocycle"):
        central_extension(instantiate("L3_01"), [parse_cocycle("D32", 3)])
    assert central_extension(instantiate("L3_01"), [parse_cocycle("D32", 3)], check=False).n == 4


def test_split_extension_warnings():
    A = instantiate("L3_01")
    with pytest.warns(SplitExtensionWarning, match="dependent"):
        central_extension(A, [parse_cocycle("D23", 3), parse_cocycle("2*D23", 3)])
    with pytest.warns(SplitExtensionWarning, match="dependent"):
        central_extension(A, [parse_cocycle("D11", 3)])  # a coboundary
    # D12 misses e3, which is in Ann(L3_01)
    assert any("intersect" in s for s in ExtensionSpec(A, [parse_cocycle("D12", 3)]).issues())
    assert ExtensionSpec(A, [parse_cocycle("D23", 3)]).issues() == []


def test_wrong_size_theta():
    with pytest.raises(ValueError):
        central_extension(instantiate("L3_01"), [delta(1, 2, 2)])


def test_new_coordinates_come_last():
    E = central_extension(Algebra.zero(2), [delta(1, 2, 2), delta(2, 1, 2)])
    assert E.n == 4
    assert E.c[0][1] == (0, 0, 1, 0) and E.c[1][0] == (0, 0, 0, 1)
    assert annihilator(E).dim == 2


def test_alpha6_example():
    # x=2, t=3, alpha6=1, everything else 0: alpha6* = alpha6 x^2 t = 12
    con = CONSTRUCTIONS["L3_01"]
    A = instantiate("L3_01")
    phi = con.shapes[0].matrix({k: as_scalar(v) for k, v in dict(x=2, y=0, z=0, u=0, t=3).items()})
    image = aut_action_on_cocycle(A, phi, parse_cocycle("D23", 3))
    assert image[1][2] == 12
    assert sum(1 for row in image for x in row if x) == 1


def test_aut_verify_reasons():
    A = instantiate("L3_01")
    assert "singular" in str(aut_verify(A, [[1, 0, 0], [0, 0, 0], [0, 0, 1]]))
    assert "must be" in str(aut_verify(A, [[1, 0], [0, 1]]))
    v = aut_verify(A, [[2, 0, 0], [0, 2, 0], [0, 0, 1]])
    assert v.reason == "not multiplicative" and v.pair == (0, 0)
    with pytest.raises(NotAnAutomorphism):
        aut_action_on_cocycle(A, [[2, 0, 0], [0, 2, 0], [0, 0, 1]], delta(2, 3, 3))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SHAPE_BASES), st.integers(0, 10 ** 6))
def test_action_is_a_right_action(base, seed):
    rng = random.Random(seed)
    A, phi = shape_point(base, rng)
    con = CONSTRUCTIONS[base]
    # second automorphism for the same base algebra
    while True:
        env = {v: as_scalar(random_rational(rng)) for v in con.shapes[0].variables}
        if con.has_param:
            env["lam"] = as_scalar(A.params[0][1]) if A.params else None
        psi = con.shapes[0].matrix(env)
        if linalg.determinant(psi):
            break
    theta = h2(A).h2_reps[-1]
    once = aut_action_on_cocycle(A, linalg.matmul(phi, psi), theta)
    twice = aut_action_on_cocycle(A, psi, aut_action_on_cocycle(A, phi, theta))
    assert once == twice


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SHAPE_BASES), st.integers(0, 10 ** 6))
def test_action_preserves_cocycles_and_coboundaries(base, seed):
    A, phi = shape_point(base, random.Random(seed))
    H = h2(A)
    b2 = [flatten(b) for b in H.b2]
    z2 = [flatten(z) for z in H.z2]
    z2n = [flatten(z) for z in H.z2n]
    for b in H.b2:
        assert linalg.in_span(flatten(aut_action_on_cocycle(A, phi, b)), b2)
    for z in H.z2:
        assert linalg.in_span(flatten(aut_action_on_cocycle(A, phi, z)), z2)
    for z in H.z2n:
        assert linalg.in_span(flatten(aut_action_on_cocycle(A, phi, z)), z2n)


@pytest.mark.parametrize("label", THREE_DIM)
def test_novikov_filter(label):
    for values in family_samples(label, 2):
        A = instantiate(label, values)
        H = h2(A)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SplitExtensionWarning)
            for k, m in enumerate(H.h2_reps):
                status = novikov_cocycle_filter(A, m)
                assert status == (IN_ZN if k < H.dim_h2n else NOT_IN_ZN)
                E = central_extension(A, [m])
                assert is_left_symmetric(E)
                assert is_novikov(E) == (status == IN_ZN)


def test_filter_needs_novikov_base():
    with pytest.raises(NotNovikov):
        novikov_cocycle_filter(instantiate("L4_04"), [[0] * 4] * 4)


def test_verify_orbit_representative_reports_mismatch():
    A = instantiate("L3_01")
    assert verify_orbit_representative(A, parse_cocycle("D23", 3), instantiate("L4_04")) is None
    diff = verify_orbit_representative(A, parse_cocycle("D23", 3), instantiate("L4_01"))
    assert {d[:3] for d in diff} == {(1, 2, 4), (3, 1, 4)}
    assert verify_orbit_representative(A, [parse_cocycle("D23", 3)], instantiate("L4_04")) is None
