"""Exact computations for small nilpotent left-symmetric algebras.

Structure-constant algebras over the Gaussian rationals, identity checks,
second cohomology, central extensions, invariants and degeneration
certificates, plus a catalog of the 2-, 3- and 4-dimensional families.
"""

from .algebra import (
    Algebra,
    Subspace,
    annihilator,
    check_left_symmetric,
    check_novikov,
    derivation_dimension,
    is_nilpotent,
    multiply,
    power_chain,
    quotient_by_annihilator,
)
from .catalog import CATALOG, instantiate
from .cohomology import h2
from .degeneration import DegenerationWitness, component_dimension, verify_degeneration
from .extensions import aut_action_on_cocycle, aut_verify, central_extension, verify_orbit_representative
from .isomorphism import distinguish, find_isomorphism, invariants
from .presentation import emit_presentation, parse_presentation
from .scalars import GaussianRational, RationalFunction
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "CATALOG",
    "DegenerationWitness",
    "GaussianRational",
    "RationalFunction",
    "Subspace",
    "annihilator",
    "aut_action_on_cocycle",
    "aut_verify",
    "central_extension",
    "check_left_symmetric",
    "check_novikov",
    "component_dimension",
    "derivation_dimension",
    "distinguish",
    "emit_presentation",
    "find_isomorphism",
    "h2",
    "instantiate",
    "invariants",
    "is_nilpotent",
    "multiply",
    "parse_presentation",
    "power_chain",
    "quotient_by_annihilator",
    "run_suite",
    "verify_degeneration",
    "verify_orbit_representative",
]
