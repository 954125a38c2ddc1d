"""Exact dimension counts for families of determinantal schemes.

The formula layer (degrees, resolutions, hilbert, dimension, verdicts)
works in exact integer arithmetic; the oracle layer rebuilds the same
invariants from actual ideals of minors over a finite field so the two
can be played against each other.
"""

from .degrees import (CharError, DegreeData, SizeError, SortError, binom,
                      degree_matrix, is_nonempty, is_prime, validate)
from .dimension import (DimensionReport, InternalInconsistency, aut_dimension,
                        dim_upper_bound, dimension_report, ell,
                        equal_degree_conjecture, is_stable, k_values,
                        lambda_value, m_value, scroll_dimension)
from .hilbert import (ConsistencyError, EmptyLocusError, HilbertSummary,
                      check_codim, hilbert_function, hilbert_polynomial)
from .matrices import (DEFAULT_PRIME, EmptyError, PolyMatrix, VariableError,
                       generic_matrix, witness_matrix)
from .oracle import (GradedIdeal, GuardError, OracleReport, expand_minors,
                     generators_for, hilbert_check, ideal_hilbert_function,
                     syzygies_in_degree, tangent_dimension)
from .resolutions import (GradedComplex, GradedFreeModule, eagon_northcott,
                          euler_char, k_term_resolution,
                          symmetric_power_resolution, term_dimension)
from .verdicts import (Check, Verdict, classify, condition_i, condition_j,
                       depth_condition)

__version__ = "0.1.0"

__all__ = [
    "CharError", "Check", "ConsistencyError", "DEFAULT_PRIME", "DegreeData",
    "DimensionReport", "EmptyError", "EmptyLocusError", "GradedComplex",
    "GradedFreeModule", "GradedIdeal", "GuardError", "HilbertSummary",
    "InternalInconsistency", "OracleReport", "PolyMatrix", "SizeError",
    "SortError", "VariableError", "Verdict", "aut_dimension", "binom",
    "check_codim", "classify", "condition_i", "condition_j",
    "degree_matrix", "depth_condition", "dim_upper_bound",
    "dimension_report", "eagon_northcott", "ell", "equal_degree_conjecture",
    "euler_char", "expand_minors", "generators_for", "generic_matrix",
    "hilbert_check",
    "hilbert_function", "hilbert_polynomial", "ideal_hilbert_function",
    "is_nonempty", "is_prime", "is_stable", "k_term_resolution", "k_values",
    "lambda_value", "m_value", "scroll_dimension",
    "symmetric_power_resolution", "syzygies_in_degree", "tangent_dimension",
    "term_dimension", "validate", "witness_matrix",
]
