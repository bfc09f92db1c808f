from fractions import Fraction

import pytest

from nilsym.algebra import check_left_symmetric, is_left_symmetric
from nilsym.catalog import (
    CATALOG,
    COMPONENT_FAMILIES,
    N4_22_AS_PRINTED,
    NOVIKOV_COMPONENTS,
    RADICAL_SAMPLES,
    FOUR_DIM_FAMILIES,
    THREE_DIM,
    CatalogError,
    DomainError,
    catalog_listing,
    instantiate,
    normalize_label,
)
from nilsym.presentation import PresentationError, emit_presentation, parse_presentation
from nilsym.scalars import GaussianRational as G, I
from nilsym.suites import family_samples


def test_completeness():
    dims = [e.dim for e in CATALOG.values()]
    assert dims.count(2) == 1 and dims.count(3) == 6
    assert len(FOUR_DIM_FAMILIES) == 24 and all(label in CATALOG for label in FOUR_DIM_FAMILIES)
    assert NOVIKOV_COMPONENTS == ["N4_20", "N4_22"]
    assert set(COMPONENT_FAMILIES) <= set(FOUR_DIM_FAMILIES)
    assert len(catalog_listing()) == len(CATALOG) == 33


@pytest.mark.parametrize("text, key", [("L4_13", "L4_13"), ("l4_13", "L4_13"), ("L4_13(lam)", "L4_13"),
                                       ("L4_3", "L4_03"), ("zero4", "zero4"), ("N4_22", "N4_22")])
def test_normalize_label(text, key):
    assert normalize_label(text) == key


@pytest.mark.parametrize("bad", ["L4_99", "foo", "X4_01", "L4"])
def test_unknown_label(bad):
    with pytest.raises(CatalogError):
        normalize_label(bad)


def test_l4_17_alpha_two():
    A = instantiate("L4_17", alpha=2)
    assert A.c[2][0] == (0, 0, 0, -1)
    assert A.c[0][2] == (0, 0, 0, 2)


def test_l4_13_radical_sample():
    A = instantiate("L4_13", lam=Fraction(3, 16), mu=Fraction(1, 2))
    assert A.c[1][2] == (0, 0, 0, Fraction(1, 2))
    assert A.c[2][1] == (0, 0, 0, Fraction(-3, 8))
    assert A.label == "L4_13(3/16)"


def test_radical_samples_satisfy_constraint():
    for s in RADICAL_SAMPLES:
        assert G(s["mu"]) ** 2 == 1 - 4 * G(s["lam"])


def test_domain_errors():
    with pytest.raises(DomainError):
        instantiate("L4_11", lam=0)
    with pytest.raises(DomainError):
        instantiate("L4_24", lam=1)
    with pytest.raises(DomainError):
        instantiate("L4_13", lam=Fraction(3, 16), mu=1)
    with pytest.raises(CatalogError):
        instantiate("L4_12")
    with pytest.raises(CatalogError):
        instantiate("L4_04", lam=1)


def test_greek_parameter_names():
    assert instantiate("L4_12", {"λ": 2}) == instantiate("L4_12", lam=2)
    assert instantiate("L4_21", α="1/3") == instantiate("L4_21", alpha=Fraction(1, 3))


def test_complex_parameter():
    A = instantiate("L4_23", lam=I, alpha=1)
    assert is_left_symmetric(A)


def test_default_samples_respect_domain():
    assert {"lam": 0} not in CATALOG["L4_11"].default_samples()
    assert CATALOG["L4_23"].default_samples(include_special=False) != CATALOG["L4_23"].default_samples()
    assert len(CATALOG["L4_13"].default_samples()) == len(RADICAL_SAMPLES)


def test_printed_n4_22_is_not_left_symmetric():
    A = parse_presentation(N4_22_AS_PRINTED, {"lam": G(2)})
    v = check_left_symmetric(A)
    assert v is not None
    assert is_left_symmetric(instantiate("N4_22", lam=2))


@pytest.mark.parametrize("label", ["L2_01"] + THREE_DIM + FOUR_DIM_FAMILIES + NOVIKOV_COMPONENTS)
def test_presentation_roundtrip(label):
    for values in family_samples(label):
        A = instantiate(label, values)
        assert parse_presentation(emit_presentation(A)) == A


def test_presentation_grammar():
    A = parse_presentation("# comment\ndim 3\ne1*e1 = e2   # square\ne1 * e2 = 1/2*e3 - i*e3\n\n")
    assert A.c[0][0] == (0, 1, 0)
    assert A.c[0][1] == (0, 0, G(Fraction(1, 2), -1))
    assert emit_presentation(parse_presentation("dim 2\n")) == "dim 2\n"


@pytest.mark.parametrize("text", [
    "e1*e1 = e2",
    "dim 2\ne1*e1 = e3",
    "dim 2\ne1*e1 = e2\ne1*e1 = e2",
    "dim 2\ne1*e1 = 2",
    "dim 2\ne1*e1 = e2 +",
    "dim 2\ndim 2",
    "dim 2\ne3*e1 = e2",
    "dim 2\nproduct e1 e1",
    "dim 2\ne1*e1 = e2*e2",
])
def test_presentation_errors(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)
