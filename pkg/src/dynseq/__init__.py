"""Dynamical sequences over exact fields and automatic proofs of their identities."""
from .errors import *  # noqa: F401,F403
from .fields import QQ, AlgebraicField, FunctionField, field_from_description
from .poly import LEX, DEGREVLEX, Poly, PolyRing, monomial_order
from .ratmap import RatFunc, RatMap, ratmap_compose, iterate_map
from .groebner import Ideal, GroebnerBasis, groebner_basis, normal_form, ideal_equal
from .parser import parse_expression, parse_constant, parse_polynomial
from .sequences import *  # noqa: F401,F403
from .prover import (
    ProverOptions,
    ProofCertificate,
    ProvedEqual,
    Refuted,
    Aborted,
    build_difference_system,
    prove_zero,
    prove_equal,
    certificate_render,
)
from .documents import catalog_system, catalog_identity, system_from_document, system_to_document

__version__ = "0.1.0"
