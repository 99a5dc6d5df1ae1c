"""Exact verdicts on which nilpotent orbit closures are complete intersections.

Root systems and fundamental degrees are rebuilt from the Cartan matrices by
root-string closure; Richardson orbits come from marked Dynkin diagrams;
the verdict pipeline combines the generator-degree budget, a
singular-codimension bound, representation-dimension counting, and Levi
sub-diagram reduction, every step in integer or rational arithmetic.
"""

from .ci import (
    VERDICT_CONE,
    VERDICT_NOT_CI,
    VERDICT_UNDETERMINED,
    CIReport,
    DegreeBudget,
    Reason,
    RepBudget,
    ci_verdict,
    ci_verdict_str,
    degree_budget,
    exceptional_filter,
    product_verdict,
    report_from_dict,
    report_to_dict,
    rep_divisibility_check,
    sp6_sym2_decomposition,
    sym2_containment_check,
)
from .dynkin import (
    LeviReduction,
    MarkedDiagram,
    beta_candidates,
    enumerate_markings,
    levi_reduce,
    parse_marking,
    render_marking,
    select_beta,
    single_black,
)
from .errors import (
    FullWhiteMarking,
    InvalidPartition,
    InvalidRank,
    NotClassical,
    OrbitCIError,
    ParseError,
)
from .euler import EulerPoly, chi_ci, verify_lemma
from .orbits import (
    OrbitDescriptor,
    Partition,
    boundary_codim_A,
    dominates,
    partition_dim,
    partitions_of,
    richardson_dim,
    richardson_partition_A,
    validate_partition,
)
from .rootsys import (
    LieType,
    RootSystem,
    all_simple_types,
    build_root_system,
    cartan_matrix,
    fundamental_degrees,
    weyl_order,
)

__version__ = "0.1.0"

__all__ = [
    "VERDICT_CONE",
    "VERDICT_NOT_CI",
    "VERDICT_UNDETERMINED",
    "CIReport",
    "DegreeBudget",
    "EulerPoly",
    "FullWhiteMarking",
    "InvalidPartition",
    "InvalidRank",
    "LeviReduction",
    "LieType",
    "MarkedDiagram",
    "NotClassical",
    "OrbitCIError",
    "OrbitDescriptor",
    "ParseError",
    "Partition",
    "Reason",
    "RepBudget",
    "RootSystem",
    "all_simple_types",
    "beta_candidates",
    "boundary_codim_A",
    "build_root_system",
    "cartan_matrix",
    "chi_ci",
    "ci_verdict",
    "ci_verdict_str",
    "degree_budget",
    "dominates",
    "enumerate_markings",
    "exceptional_filter",
    "fundamental_degrees",
    "levi_reduce",
    "parse_marking",
    "partition_dim",
    "partitions_of",
    "product_verdict",
    "render_marking",
    "rep_divisibility_check",
    "report_from_dict",
    "report_to_dict",
    "richardson_dim",
    "richardson_partition_A",
    "select_beta",
    "single_black",
    "sp6_sym2_decomposition",
    "sym2_containment_check",
    "validate_partition",
    "verify_lemma",
    "weyl_order",
]
