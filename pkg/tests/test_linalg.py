from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from nilsym import linalg
from nilsym.cohomology import b2_basis, flatten, z2_basis, z2_constraint_matrix
from nilsym.catalog import instantiate
from nilsym.scalars import GaussianRational as G, I

entries = st.builds(G, st.integers(-4, 4), st.sampled_from([0, 0, 0, 1, -1]))
real_entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(elements, max_side=6):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_identity_rref():
    R, r, piv = linalg.rref([[1, 0], [0, 1]])
    assert r == 2 and piv == [0, 1] and R == [[1, 0], [0, 1]]


def test_complex_rank_one():
    R, r, _ = linalg.rref([[1, I], [I, -1]])
    assert r == 1
    assert R == [[1, I], [0, 0]]


def test_kernel_examples():
    assert len(linalg.kernel_basis([[0] * 3] * 3)) == 3
    assert linalg.kernel_basis([[1, 0], [0, 1]]) == []
    (v,) = linalg.kernel_basis([[1, 1]])
    assert v == [-1, 1]


def test_cocycle_constraint_rank_l3_01():
    # 27 x 9 system; independent sympy set-up gives rank 2 (so dim Z2 = 7)
    rows = z2_constraint_matrix(instantiate("L3_01"))
    assert linalg.rank(rows) == 2


def test_quotient_complement_examples():
    e1, e2 = [1, 0], [0, 1]
    out = linalg.quotient_complement([], [e1, e2])
    assert linalg.span_dim(out) == 2
    assert linalg.quotient_complement([e1, e2], [e1, e2]) == []
    with pytest.raises(linalg.ContainmentError):
        linalg.quotient_complement([[1, 0, 0]], [[0, 1, 0]])


def test_quotient_complement_h2_l3_05():
    A = instantiate("L3_05")
    reps = linalg.quotient_complement([flatten(m) for m in b2_basis(A)], [flatten(m) for m in z2_basis(A)])
    assert len(reps) == 4


@settings(max_examples=60, deadline=None)
@given(matrices(entries))
def test_rank_nullity_and_kernel(M):
    ker = linalg.kernel_basis(M)
    assert linalg.rank(M) + len(ker) == len(M[0])
    for v in ker:
        assert all(not x for x in linalg.matvec(M, v))


@settings(max_examples=60, deadline=None)
@given(matrices(entries))
def test_rref_idempotent(M):
    R, r, _ = linalg.rref(M)
    assert linalg.rref(R)[0] == R
    assert linalg.rref(M)[1] == linalg.rank(M)


@settings(max_examples=60, deadline=None)
@given(matrices(real_entries))
def test_rank_matches_sympy(M):
    assert linalg.rank(M) == sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in M]).rank()


@settings(max_examples=40, deadline=None)
@given(matrices(entries, 5), matrices(entries, 5))
def test_quotient_complement_counts(S, V):
    if len(S[0]) != len(V[0]):
        return
    space = S + V
    reps = linalg.quotient_complement(S, space)
    assert len(reps) == linalg.span_dim(space) - linalg.span_dim(S)
    assert linalg.span_dim(S + reps) == linalg.span_dim(space)


def test_inverse_and_solve():
    M = [[2, 1], [1, I]]
    Minv = linalg.inverse(M)
    assert linalg.matmul(M, Minv) == linalg.identity(2)
    x = linalg.solve(M, [3, 1 + I])
    assert linalg.matvec(M, x) == [3, 1 + I]
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse([[1, 2], [2, 4]])


def test_determinant():
    assert linalg.determinant([[1, 2], [3, 4]]) == -2
    assert linalg.determinant([[Fraction(1, 2), 0], [0, I]]) == I / 2


def test_coordinates():
    assert linalg.coordinates([2, 3], [[1, 0], [0, 1]]) == [2, 3]
    assert linalg.coordinates([0, 0, 1], [[1, 0, 0], [0, 1, 0]]) is None
