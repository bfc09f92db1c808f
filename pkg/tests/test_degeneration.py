import warnings

import pytest
from hypothesis import given, settings, strategies as st

from nilsym.algebra import Algebra, change_basis, is_left_symmetric
from nilsym.catalog import FOUR_DIM_FAMILIES, instantiate
from nilsym.degeneration import (
    DegenerationWitness,
    StratificationWarning,
    WitnessError,
    check_limit_is_left_symmetric,
    component_dimension,
    evaluate_at,
    format_witness,
    free_parameters,
    necessary_conditions,
    parse_witness,
    transported_constants,
    verify_degeneration,
)
from nilsym.scalars import GaussianRational as G, RationalFunction, T
from nilsym.suites import family_samples, identity_witness

GOOD = "t, 0, 0, 0\n0, t^2, 0, 0\n0, 0, 1, 0\n0, 0, 0, t^2\n"


def test_l4_03_to_l4_04():
    res = verify_degeneration(instantiate("L4_03"), parse_witness(GOOD), instantiate("L4_04"))
    assert res.ok and str(res) == "pass"
    assert check_limit_is_left_symmetric(res)


def test_transported_constants_l4_03():
    # E1E2 = t E4 and every other constant is independent of t
    Tc = transported_constants(instantiate("L4_03"), parse_witness(GOOD))
    assert Tc.c[0][1][3] == T
    for i in range(4):
        for j in range(4):
            for k in range(4):
                if (i, j, k) != (0, 1, 3):
                    x = Tc.c[i][j][k]
                    assert not isinstance(x, RationalFunction) or x.is_constant()


def test_wrong_witness_locates_entry():
    bad = GOOD.replace("0, 0, 0, t^2", "0, 0, 0, t^3")
    res = verify_degeneration(instantiate("L4_03"), parse_witness(bad), instantiate("L4_04"))
    assert not res.ok and res.entry == (2, 3, 4)
    assert str(res).startswith("fail at c[2][3][4] (coefficient of E4 in E2E3): pole at t=0")


def test_limit_mismatch_reports_expected():
    w = parse_witness("t 0\n0 t^2")
    res = verify_degeneration(instantiate("L2_01"), w, Algebra.zero(2))
    assert not res.ok and res.entry == (1, 1, 2) and res.value == 1 and res.expected == 0


def test_witness_errors():
    with pytest.raises(WitnessError):
        parse_witness("")
    with pytest.raises(WitnessError):
        parse_witness("1, 0\n0")
    with pytest.raises(WitnessError, match="line 1"):
        parse_witness("1, x\n0, 1")
    r = verify_degeneration(instantiate("L2_01"), parse_witness("1 1\n1 1"), Algebra.zero(2))
    assert not r.ok and "singular" in r.reason
    r = verify_degeneration(instantiate("L2_01"), identity_witness(3), Algebra.zero(3))
    assert not r.ok
    w = parse_witness("1 0\n0 1\nparam lam = t")
    r = verify_degeneration(instantiate("L2_01"), w, instantiate("L2_01"))
    assert not r.ok and "catalog family" in r.reason


def test_witness_format_roundtrip():
    w = parse_witness("# comment\nt, 0\n1/2*t^2, 1 + t  # second\nparam lam = 2 + t\n")
    again = parse_witness(format_witness(w))
    assert again.basis == w.basis and again.param_index == w.param_index


def test_parametrized_index():
    w = parse_witness("1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\nparam lam = 2 + t\nparam alpha = 3*t\n")
    assert verify_degeneration("L4_23", w, instantiate("L4_23", lam=2, alpha=0)).ok


@pytest.mark.parametrize("label", ["L2_01", "L3_05"] + FOUR_DIM_FAMILIES)
def test_identity_witness(label):
    for values in family_samples(label, 2):
        A = instantiate(label, values)
        r = verify_degeneration(A, identity_witness(A.n), A)
        assert r.ok and is_left_symmetric(r.limit)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FOUR_DIM_FAMILIES), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_evaluation_at_one_is_conjugate(label, powers):
    # diagonal witness t^k: at t=1 the transported algebra is A itself
    A = instantiate(label, family_samples(label, 1)[0])
    w = DegenerationWitness([[T ** powers[i] if i == j else RationalFunction(0) for j in range(4)]
                             for i in range(4)])
    Tc = transported_constants(A, w)
    assert evaluate_at(Tc, G(1)).c == A.c
    # and at t=2 it is the change of basis by diag(2^k)
    P = [[G(2) ** powers[i] if i == j else G(0) for j in range(4)] for i in range(4)]
    assert evaluate_at(Tc, G(2)).c == change_basis(A, P).c


def test_necessary_conditions():
    nec = necessary_conditions(instantiate("L4_23", lam=2, alpha=1), instantiate("L4_04"))
    assert nec.ok and nec.der == (3, 4) and nec.sq == (3, 2) and nec.ann == (1, 1)
    bad = necessary_conditions(Algebra.zero(2), instantiate("L2_01"))
    assert not bad.ok and any("Der" in v for v in bad.violated)
    same = necessary_conditions(instantiate("L4_04"), instantiate("L4_04"))
    assert same.ok and "self-comparison" in same.note


@pytest.mark.parametrize("label", ["L4_12", "L4_21", "L4_23"])
def test_component_dimension(label):
    with warnings.catch_warnings():
        warnings.simplefilter("error", StratificationWarning)
        rep = component_dimension(label)
    assert rep.component_dim == 15 and rep.param_count == (2 if label == "L4_23" else 1)


def test_l4_23_special_stratum():
    rep = component_dimension("L4_23")
    assert ("lam=0,alpha=2", 4) in rep.special_strata


def test_stratification_warning():
    with pytest.warns(StratificationWarning):
        rep = component_dimension("L4_23", [{"lam": 2, "alpha": 3}, {"lam": 0, "alpha": 2}])
    assert rep.dim_der == 3


def test_free_parameters_skip_mu():
    assert free_parameters("L4_13") == ("lam",)
    assert free_parameters("L4_04") == ()
