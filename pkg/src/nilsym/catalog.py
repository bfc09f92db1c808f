"""Catalog of the small nilpotent left-symmetric algebras.

Every entry is transcribed as product-list text with symbolic parameters
(``lam``, ``alpha``, ``mu``), so instantiation is just parsing with a
binding.  Parameter values may be scalars or rational functions of ``t``;
the latter is how a parametrized index enters a degeneration witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra
from .expressions import evaluate, parse_tscalar
from .presentation import parse_presentation
from .scalars import I, RationalFunction, as_scalar


class CatalogError(ValueError):
    pass


class DomainError(CatalogError):
    pass


GREEK = {"λ": "lam", "α": "alpha", "μ": "mu", "lambda": "lam"}

DEFAULT_SAMPLES = [Fraction(2), Fraction(3), Fraction(5, 2), Fraction(-1), Fraction(7, 3)]

# (lam, mu) with mu^2 = 1 - 4*lam; the 2i row exercises a non-real radical
RADICAL_SAMPLES = [
    {"lam": Fraction(3, 16), "mu": Fraction(1, 2)},
    {"lam": Fraction(-2), "mu": Fraction(3)},
    {"lam": Fraction(2, 9), "mu": Fraction(1, 3)},
    {"lam": Fraction(5, 4), "mu": 2 * I},
    {"lam": Fraction(-4, 9), "mu": Fraction(5, 3)},
]


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    dim: int
    products: str
    params: tuple = ()
    excluded: dict = field(default_factory=dict)
    radicals: tuple = ()
    kind: str = "L"  # "L": left-symmetric non-Novikov, "N": Novikov
    provenance: str = ""
    special: tuple = ()
    samples_override: tuple = ()

    @property
    def display(self) -> str:
        if not self.params:
            return self.label
        return f"{self.label}({','.join(p for p in self.params if p != 'mu')})"

    def text(self) -> str:
        return f"dim {self.dim}\n{self.products.strip()}\n"

    def check_domain(self, values: dict):
        for name, bad in self.excluded.items():
            v = values[name]
            for b in bad:
                if v == b:
                    raise DomainError(f"{self.label}: parameter {name} must avoid {list(map(str, bad))}")
        for lhs, rhs in self.radicals:
            if evaluate(lhs, values) != evaluate(rhs, values):
                raise DomainError(f"{self.label}: radical constraint {lhs} = {rhs} not satisfied")

    def default_samples(self, include_special: bool = True) -> list:
        """Generic samples (domain-filtered), then the special values named for this family."""
        if not self.params:
            return [{}]
        if self.samples_override:
            out = [dict(s) for s in self.samples_override]
        elif len(self.params) == 1:
            out = [{self.params[0]: s} for s in DEFAULT_SAMPLES]
        else:
            rot = DEFAULT_SAMPLES[1:] + DEFAULT_SAMPLES[:1]
            out = [dict(zip(self.params, pair)) for pair in zip(DEFAULT_SAMPLES, rot)]
        if include_special:
            out += [dict(s) for s in self.special]
        ok = []
        for s in out:
            try:
                self.check_domain({k: as_scalar(v) for k, v in s.items()})
            except DomainError:
                continue
            ok.append(s)
        return ok


def _e(label, dim, products, **kw):
    return CatalogEntry(label, dim, products, **kw)


_RAD = (("mu^2", "1-4*lam"),)

_ENTRIES = [
    _e("L2_01", 2, "e1*e1 = e2", kind="N", provenance="2-dim catalog"),
    _e("L3_01", 3, "e1*e1 = e2", kind="N",
       provenance="inferred: 3-dim extension of L2_01 by a zero line; never displayed in the 3-dim list but used as a base"),
    _e("L3_02", 3, "e1*e1 = e3\ne2*e2 = e3", kind="N", provenance="3-dim catalog"),
    _e("L3_03", 3, "e1*e2 = e3\ne2*e1 = -e3", kind="N", provenance="3-dim catalog"),
    _e("L3_04", 3, "e1*e1 = lam*e3\ne2*e1 = e3\ne2*e2 = e3", params=("lam",), kind="N",
       provenance="3-dim catalog", special=({"lam": 0},)),
    _e("L3_05", 3, "e1*e1 = e2\ne2*e1 = e3", kind="N", provenance="3-dim catalog"),
    _e("L3_06", 3, "e1*e1 = e2\ne1*e2 = e3\ne2*e1 = lam*e3", params=("lam",), kind="N",
       provenance="3-dim catalog", special=({"lam": 0}, {"lam": 1})),
    _e("L4_01", 4, "e1*e1 = e2\ne1*e2 = e4\ne2*e3 = e4\ne3*e1 = e4", provenance="extension of L3_01"),
    _e("L4_02", 4, "e1*e1 = e2\ne2*e3 = e4\ne3*e1 = e4", provenance="extension of L3_01"),
    _e("L4_03", 4, "e1*e1 = e2\ne1*e2 = e4\ne2*e3 = e4", provenance="extension of L3_01"),
    _e("L4_04", 4, "e1*e1 = e2\ne2*e3 = e4", provenance="extension of L3_01"),
    _e("L4_05", 4, "e1*e1 = e3\ne2*e2 = e3\ne3*e1 = e4", provenance="extension of L3_02"),
    _e("L4_06", 4, "e1*e1 = e3\ne1*e2 = e4\ne2*e2 = e3\ne3*e1 = e4", provenance="extension of L3_02"),
    _e("L4_07", 4, "e1*e1 = e3\ne2*e2 = e3\ne3*e1 = e4\ne3*e2 = i*e4", provenance="extension of L3_02"),
    _e("L4_08", 4, "e1*e1 = e3\ne1*e2 = e4\ne2*e2 = e3\ne3*e1 = e4\ne3*e2 = i*e4",
       provenance="extension of L3_02"),
    _e("L4_09", 4, "e1*e2 = e3\ne1*e3 = -2*e4\ne2*e1 = -e3\ne3*e1 = e4", provenance="extension of L3_03"),
    _e("L4_10", 4, "e1*e2 = e3\ne1*e3 = -2*e4\ne2*e1 = -e3\ne2*e2 = e4\ne3*e1 = e4",
       provenance="extension of L3_03"),
    _e("L4_11", 4, "e1*e1 = lam*e3\ne2*e1 = e3\ne2*e2 = e3\ne2*e3 = e4\ne3*e1 = lam*e4",
       params=("lam",), excluded={"lam": (0,)}, provenance="extension of L3_04(lam), lam != 0"),
    _e("L4_12", 4, "e1*e1 = lam*e3\ne1*e2 = e4\ne2*e1 = e3\ne2*e2 = e3\ne2*e3 = e4\ne3*e1 = lam*e4",
       params=("lam",), excluded={"lam": (0,)}, provenance="extension of L3_04(lam), lam != 0"),
    _e("L4_13", 4,
       "e1*e1 = lam*e3\ne1*e3 = 2*lam*e4\ne2*e1 = e3\ne2*e2 = e3\ne2*e3 = (1-mu)*e4\n"
       "e3*e1 = -lam*(1+mu)*e4\ne3*e2 = -2*lam*e4",
       params=("lam", "mu"), excluded={"lam": (0,)}, radicals=_RAD, samples_override=tuple(RADICAL_SAMPLES),
       provenance="extension of L3_04(lam); mu stands for sqrt(1-4*lam)"),
    _e("L4_14", 4,
       "e1*e1 = lam*e3\ne1*e3 = 2*lam*e4\ne2*e1 = e3\ne2*e2 = e3 + e4\ne2*e3 = (1-mu)*e4\n"
       "e3*e1 = -lam*(1+mu)*e4\ne3*e2 = -2*lam*e4",
       params=("lam", "mu"), excluded={"lam": (0,)}, radicals=_RAD, samples_override=tuple(RADICAL_SAMPLES),
       provenance="extension of L3_04(lam); mu stands for sqrt(1-4*lam)"),
    _e("L4_15", 4,
       "e1*e1 = lam*e3\ne1*e3 = 2*lam*e4\ne2*e1 = e3\ne2*e2 = e3\ne2*e3 = (1+mu)*e4\n"
       "e3*e1 = -lam*(1-mu)*e4\ne3*e2 = -2*lam*e4",
       params=("lam", "mu"), excluded={"lam": (0,)}, radicals=_RAD, samples_override=tuple(RADICAL_SAMPLES),
       provenance="extension of L3_04(lam); mu stands for sqrt(1-4*lam)"),
    _e("L4_16", 4,
       "e1*e1 = lam*e3\ne1*e3 = 2*lam*e4\ne2*e1 = e3\ne2*e2 = e3 + e4\ne2*e3 = (1+mu)*e4\n"
       "e3*e1 = -lam*(1-mu)*e4\ne3*e2 = -2*lam*e4",
       params=("lam", "mu"), excluded={"lam": (0,)}, radicals=_RAD, samples_override=tuple(RADICAL_SAMPLES),
       provenance="extension of L3_04(lam); mu stands for sqrt(1-4*lam)"),
    _e("L4_17", 4, "e1*e1 = e2\ne1*e3 = alpha*e4\ne2*e1 = e3\ne2*e2 = e4\ne3*e1 = (1-alpha)*e4",
       params=("alpha",), provenance="extension of L3_05"),
    _e("L4_18", 4, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = -e4\ne2*e1 = e3\ne2*e2 = e4\ne3*e1 = 2*e4",
       provenance="extension of L3_05"),
    _e("L4_19", 4, "e1*e1 = e2\ne2*e1 = e3\ne2*e3 = e4", provenance="extension of L3_05"),
    _e("L4_20", 4, "e1*e1 = e2\ne1*e3 = e4\ne2*e1 = e3\ne2*e3 = e4\ne3*e1 = -e4", provenance="extension of L3_05"),
    _e("L4_21", 4, "e1*e1 = e2\ne1*e2 = e4\ne1*e3 = alpha*e4\ne2*e1 = e3\ne2*e3 = e4\ne3*e1 = -alpha*e4",
       params=("alpha",), provenance="extension of L3_05; generic component family"),
    _e("L4_22", 4, "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = (2*alpha+1)*e4\ne2*e1 = e4\ne2*e2 = e4\ne3*e1 = -e4",
       params=("alpha",), provenance="extension of L3_06(0)"),
    _e("L4_23", 4,
       "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = ((2-lam)*alpha+1)*e4\ne2*e1 = lam*e3\n"
       "e2*e2 = (lam*alpha+1)*e4\ne3*e1 = (lam*alpha-1)*e4",
       params=("lam", "alpha"), special=({"lam": 0, "alpha": 2}, {"lam": 1, "alpha": 2}),
       provenance="extension of L3_06(lam); generic component family; lam unrestricted in the list"),
    _e("L4_24", 4,
       "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = 2*(3-lam)*e4\ne2*e1 = lam*e3 + e4\n"
       "e2*e2 = 2*lam*(lam+1)*e4\ne3*e1 = 4*lam*e4",
       params=("lam",), excluded={"lam": (0, 1)}, provenance="extension of L3_06(lam), lam not in {0,1}"),
    _e("N4_20", 4, "e1*e1 = alpha*e4\ne1*e2 = e3\ne1*e3 = e4\ne2*e2 = e4\ne2*e3 = e4\ne3*e2 = -e4",
       params=("alpha",), kind="N", provenance="Novikov component family, cited classification"),
    _e("N4_22", 4,
       "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = (2-lam)*e4\ne2*e1 = lam*e3\ne2*e2 = lam*e4\ne3*e1 = lam*e4",
       params=("lam",), kind="N",
       provenance="Novikov component family, cited classification; e2*e1 = lam*e3 (the printed lam*e4 is "
                  "not left-symmetric, see N4_22_AS_PRINTED); equals the extension of L3_06(lam) by its "
                  "Novikov class (2-lam)D13+lam*D22+lam*D31"),
]

# Literal transcription of the printed table row; fails left-symmetry at (e1, e2, e1).
N4_22_AS_PRINTED = "dim 4\ne1*e1 = e2\ne1*e2 = e3\ne1*e3 = (2-lam)*e4\ne2*e1 = lam*e4\ne2*e2 = lam*e4\ne3*e1 = lam*e4\n"

CATALOG: dict[str, CatalogEntry] = {e.label: e for e in _ENTRIES}

FOUR_DIM_FAMILIES = [f"L4_{k:02d}" for k in range(1, 25)]
THREE_DIM = [f"L3_{k:02d}" for k in range(1, 7)]
NOVIKOV_COMPONENTS = ["N4_20", "N4_22"]
COMPONENT_FAMILIES = ["L4_12", "L4_21", "L4_23"]


def normalize_label(label: str) -> str:
    """Accept ``L4_13``, ``l4_13``, ``L4_13(lam)`` and zero-padding variants."""
    base = label.split("(")[0].strip()
    if base.lower().startswith("zero"):
        return base.lower()
    if "_" not in base or not base[:1].upper() in "LN":
        raise CatalogError(f"unknown label {label!r}")
    head, num = base.split("_", 1)
    key = f"{head[0].upper()}{head[1:]}_{int(num):02d}"
    if key not in CATALOG:
        raise CatalogError(f"unknown label {label!r}")
    return key


def _coerce_param(v):
    if isinstance(v, RationalFunction):
        return v.constant_value() if v.is_constant() else v
    if isinstance(v, str):
        return parse_tscalar(v)
    return as_scalar(v)


def instantiate(label: str, params: dict | None = None, **kwargs) -> Algebra:
    """Exact presentation of a catalog family at the given parameter values."""
    key = normalize_label(label)
    if key.startswith("zero"):
        return Algebra.zero(int(key[4:]))
    entry = CATALOG[key]
    values = {}
    for k, v in {**(params or {}), **kwargs}.items():
        values[GREEK.get(k, k)] = _coerce_param(v)
    missing = [p for p in entry.params if p not in values]
    if missing:
        raise CatalogError(f"{key}: missing parameter(s) {missing}")
    extra = [k for k in values if k not in entry.params]
    if extra:
        raise CatalogError(f"{key}: unexpected parameter(s) {extra}")
    entry.check_domain(values)
    shown = ",".join(str(values[p]) for p in entry.params if p != "mu")
    name = f"{key}({shown})" if shown else key
    A = parse_presentation(entry.text(), values, label=name)
    return Algebra(A.n, A.c, name, tuple(sorted((k, str(v)) for k, v in values.items())))


def entries(kind: str | None = None) -> list:
    return [e for e in _ENTRIES if kind is None or e.kind == kind]


def catalog_listing() -> list:
    """One record per family, ordered by label."""
    out = []
    for e in sorted(_ENTRIES, key=lambda e: e.label):
        out.append({
            "label": e.label,
            "dim": e.dim,
            "params": list(e.params),
            "kind": "Novikov" if e.kind == "N" else "left-symmetric",
            "excluded": {k: [str(x) for x in v] for k, v in e.excluded.items()},
            "radicals": [f"{a} = {b}" for a, b in e.radicals],
            "products": e.products.strip().splitlines(),
            "provenance": e.provenance,
        })
    return out
