"""Exact lattice-point counting and Ehrhart quasi-polynomial tooling.

The package constructs rational polytope families with prescribed
coefficient-period behaviour, counts lattice points in their integer
dilates exactly, reconstructs the dilate-count quasi-polynomials, and
verifies period sequences, face-index bounds and the algebraic
identities relating the families. All arithmetic is exact rational.
"""

from .counting import CountFunction, count, count_convex, count_series, count_union, kernel_name
from .errors import (
    BadApex,
    BudgetExceeded,
    DimensionCapExceeded,
    DimensionMismatch,
    EhrhartError,
    Infeasible,
    MissingIntersection,
    NonterminatingNumerator,
    NoSolution,
    NotAvailable,
    RejectedSolution,
    SizeMismatch,
    UnverifiedSolution,
    VerificationFailed,
)
from .indices import IndexSequence, McMullenReport, chain_check, index_sequence, mcmullen_check
from .linalg import (
    AffineSubspace,
    Rational,
    min_dilate_with_lattice_point,
    smith_normal_form,
    solve_rational,
)
from .polytope import (
    ConvexPolytope,
    Face,
    PolytopalUnion,
    denominator,
    embed_product,
    faces,
    from_vertices,
    is_integral,
    product,
    pyramid,
)
from .pte import PteSolution, elem_sym, power_sum, product_identity_check, table_lookup
from .quasipoly import (
    QuasiPolynomial,
    add,
    coefficient_period,
    equivalent,
    fit,
    multiply_by_polynomial,
    negate,
    period_sequence,
    prefix_sum,
    scale,
)
from .series import EhrhartSeries, from_quasipolynomial, pyramid_transform, series_equivalent

__version__ = "0.1.0"
