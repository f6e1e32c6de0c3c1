"""Vanishing ideals, Hilbert functions and evaluation codes of point
sets parameterized by disjoint unions of odd cycles over small finite
fields, with every closed form cross-checked against brute force."""

from .codes import (
    CodeParams,
    EvaluationMatrix,
    build_evaluation_matrix,
    code_dimension,
    code_params,
    matrix_rank,
    min_distance,
    monomial_basis,
    rank_table,
    singleton_check,
)
from .cyclegraph import (
    CycleFamilySpec,
    ToricSet,
    cardinality_formula,
    enumerate_toric_set,
    enumerated_cardinality,
    gamma_of,
    is_affine_torus,
    parse_spec_string,
    theta_map,
)
from .errors import (
    BudgetExceeded,
    CheckFailure,
    CycleCodesError,
    DegreeTooSmall,
    DimensionMismatch,
    DivisionByZero,
    NonIntegerBeta,
    OddityError,
    ParseError,
    SingularSystem,
    SupportsNotDisjoint,
    UnsupportedField,
    UnsupportedSpec,
    ZeroCoordinate,
    ZeroDivisor,
    ZeroPolynomial,
)
from .gf import Field, field_new
from .hilbert import (
    BetaDecomposition,
    HilbertTable,
    count_box_degree,
    degenerate_torus_hilbert,
    footprint_table,
    hilbert_footprint,
    hilbert_footprint_slow,
    hilbert_union_formula,
    regularity_bruteforce,
    regularity_formula,
    solve_betas,
    union_table,
)
from .ideal import (
    GeneratorSet,
    build_generators,
    iter_disjoint_binomials,
    reduce_mod_torus,
    square_point_property,
    vanishing_membership,
    verify_vanishing,
)
from .poly import (
    Binomial,
    Monomial,
    Polynomial,
    buchberger_is_groebner,
    grlex_cmp,
    grlex_key,
    multivariate_divide,
    order_h_cmp,
    order_h_key,
    parse_polynomial,
    s_polynomial,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
