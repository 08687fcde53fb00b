"""skewbrace: exact enumeration of skew braces of squarefree order.

Classify the groups of a squarefree order n, evaluate the closed-form count
b(M, A) of skew braces with multiplicative group M and additive group A, and
verify it independently by brute-force enumeration of regular subgroups of
the holomorph, orbit counting, and explicit brace construction.
"""

from .counting import (
    CountMatrix,
    PairContext,
    corollary_cases,
    count_matrix,
    count_skew_braces,
    pair_context,
    pq_closed_form,
    three_prime_closed_form,
)
from .errors import (
    BoundExceeded,
    CongruenceFails,
    GammaNotDividing,
    InvalidTriple,
    NonIntegral,
    NotAGroup,
    NotCoprime,
    NotRegular,
    NotSquarefree,
    OrderMismatch,
    OwnerMismatch,
    ShapeError,
    SkewbraceError,
)
from .groups import (
    GroupDescriptor,
    GroupElement,
    StructureParams,
    aut_group_order,
    canonicalize,
    enumerate_groups,
    group_mul,
    structure_params,
)
from .holomorph import (
    Automorphism,
    HolElement,
    aut_apply,
    aut_compose,
    conjugate_by_aut,
    hol_act,
    hol_mul,
    y_power,
)
from .kernels import BACKEND
from .numtheory import factor_squarefree, geometric_sum, multiplicative_order, t_sum

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Automorphism",
    "BoundExceeded",
    "CongruenceFails",
    "CountMatrix",
    "GammaNotDividing",
    "GroupDescriptor",
    "GroupElement",
    "HolElement",
    "InvalidTriple",
    "NonIntegral",
    "NotAGroup",
    "NotCoprime",
    "NotRegular",
    "NotSquarefree",
    "OrderMismatch",
    "OwnerMismatch",
    "PairContext",
    "ShapeError",
    "SkewbraceError",
    "StructureParams",
    "aut_apply",
    "aut_compose",
    "aut_group_order",
    "canonicalize",
    "conjugate_by_aut",
    "corollary_cases",
    "count_matrix",
    "count_skew_braces",
    "enumerate_groups",
    "factor_squarefree",
    "geometric_sum",
    "group_mul",
    "hol_act",
    "hol_mul",
    "multiplicative_order",
    "pair_context",
    "pq_closed_form",
    "structure_params",
    "t_sum",
    "three_prime_closed_form",
    "y_power",
]
