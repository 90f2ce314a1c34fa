"""Exact-arithmetic Lyndon combinatorics, dual cobrackets, and bar-element lifts."""

__version__ = "0.1.0"

from .words import is_lyndon, lyndon_words, standard_factorization  # noqa: F401
from .freelie import alpha_table, expand, lie_bracket, rewrite_in_lyndon  # noqa: F401
from .ihara import beta_gamma_tables, ihara_bracket, special_derivation  # noqa: F401
from .colie import ab_tables, change_basis, co_jacobi_defect, cobracket  # noqa: F401
from .dgcore import (  # noqa: F401
    cobar_colie,
    koszul_sign,
    model_a1,
    model_point,
    model_x,
)
from .lifts import (  # noqa: F401
    adjunction_unit,
    audit_adjunction_unit,
    closed_lift_oracle,
    enumerate_trees,
    lift_LB,
    verify_EDQX,
    verify_geom_basis,
)
from .verify import run_suites  # noqa: F401
