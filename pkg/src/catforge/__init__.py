"""Enumeration and verification engine for finite two-object categories
whose endomorphism monoids are a group extended by a chain of idempotents.
"""

from ._kernels import IMPL as kernel_implementation
from .bimodules import (
    Bimodule,
    OrbitReport,
    UnigenCertificate,
    enumerate_bimodules,
    enumerate_bimodules_labeled,
    group_orbit,
    regular_bimodule,
    strongly_unigen_check,
    unigen_analyze,
    validate_bimodule,
)
from .categories import (
    IMaxReport,
    SemiCategoryView,
    TwoObjectCategory,
    check_idempotent_lemmas,
    check_orbit_laws,
    compute_imax,
    extract_groupoid,
    extract_groupoidlike,
    is_reduced,
    submonoid_embedding_check,
    two_by_two_submatrices,
    validate_category,
)
from .engine import (
    ConstructionSpec,
    CountReport,
    construct,
    count_categories,
    search_completions,
    verify_goal_theorem,
)
from .grouplike import (
    GrouplikeStructure,
    build_grouplike,
    detect_grouplike,
    verify_ord,
)
from .monoids import (
    IsoClassKey,
    Monoid,
    MulTable,
    canonical_form,
    center,
    cyclic_group,
    enumerate_monoids,
    is_group,
    monoid_from_rows,
    trivial_monoid,
    validate_monoid,
)

__version__ = "0.1.0"

__all__ = [
    "Bimodule",
    "ConstructionSpec",
    "CountReport",
    "GrouplikeStructure",
    "IMaxReport",
    "IsoClassKey",
    "Monoid",
    "MulTable",
    "OrbitReport",
    "SemiCategoryView",
    "TwoObjectCategory",
    "UnigenCertificate",
    "build_grouplike",
    "canonical_form",
    "center",
    "check_idempotent_lemmas",
    "check_orbit_laws",
    "compute_imax",
    "construct",
    "count_categories",
    "cyclic_group",
    "detect_grouplike",
    "enumerate_bimodules",
    "enumerate_bimodules_labeled",
    "enumerate_monoids",
    "extract_groupoid",
    "extract_groupoidlike",
    "group_orbit",
    "is_group",
    "is_reduced",
    "kernel_implementation",
    "monoid_from_rows",
    "regular_bimodule",
    "search_completions",
    "strongly_unigen_check",
    "submonoid_embedding_check",
    "trivial_monoid",
    "two_by_two_submatrices",
    "unigen_analyze",
    "validate_bimodule",
    "validate_category",
    "validate_monoid",
    "verify_goal_theorem",
    "verify_ord",
]
