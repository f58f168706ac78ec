"""Multiplicities of Schubert varieties Y_w at the most singular point X_{w0}.

>>> from schubertmult import Permutation, multiplicity
>>> multiplicity(Permutation.from_word("2143")).multiplicity
2
"""

from .combinatorics import (
    Permutation, RankMatrix, bruhat_geq, contains_pattern, enumerate_perms, identity,
    inverse, is_pattern_smooth, length, longest, make_permutation, rank_matrix,
)
from .groebner import (
    GroebnerBasis, MonomialIdeal, buchberger, certify, eliminate_t, lead_term_ideal,
    normal_form, s_polynomial,
)
from .hilbert import DimDegree, HilbertNumerator, dim_degree, numerator, standard_monomial_count
from .pipeline import (
    ConsistencyError, MultiplicityRecord, expected_table, multiplicity,
    multiplicity_with_trace, table, verify,
)
from .polyring import GREVLEX, LEX, PolyMatrix, PolyRing, Polynomial, TermOrder, determinant
from .schubert_ideal import GeneratorSet, generate, generic_matrix, minimize_generators

__version__ = "0.1.0"

__all__ = [
    "Permutation", "RankMatrix", "bruhat_geq", "contains_pattern", "enumerate_perms",
    "identity", "inverse", "is_pattern_smooth", "length", "longest", "make_permutation",
    "rank_matrix",
    "GroebnerBasis", "MonomialIdeal", "buchberger", "certify", "eliminate_t",
    "lead_term_ideal", "normal_form", "s_polynomial",
    "DimDegree", "HilbertNumerator", "dim_degree", "numerator", "standard_monomial_count",
    "ConsistencyError", "MultiplicityRecord", "expected_table", "multiplicity",
    "multiplicity_with_trace", "table", "verify",
    "GREVLEX", "LEX", "PolyMatrix", "PolyRing", "Polynomial", "TermOrder", "determinant",
    "GeneratorSet", "generate", "generic_matrix", "minimize_generators",
]
