"""Exact toolkit for AS-bundles on (generalized) Brauer-Severi varieties."""

from .astype import ASType, as_type_period_equals_index, compute_as_type, same_as_type
from .brauer import (
    INF,
    AbstractBrauerClass,
    GlobalBrauerClass,
    Place,
    TorsionFraction,
    ValidationReport,
    index,
    opposite,
    period,
    period_of_power,
    power,
    same_cyclic_subgroup,
    tensor,
    validate_index_sequence,
)
from .bundles import (
    AsAtom,
    BsContext,
    BundleExpr,
    SplitBundle,
    descend,
    dual,
    krull_schmidt_normalize,
    pullback,
    rank,
    schur_descent_rank,
    tensor_bundles,
)
from .cohomology import (
    CohAtom,
    CohomologyTable,
    NotSplit,
    Split,
    bott_pn,
    bwb_cohomology,
    cohomology_of_expr,
    cotangent_atom,
    criterion_bs,
    criterion_grass,
    line_atom,
)
from .symbols import class_from_invariants, hilbert_symbol, quaternion_class
from .weights import pieri_fold, weyl_dim

__version__ = "0.1.0"
