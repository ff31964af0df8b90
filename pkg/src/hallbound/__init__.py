"""Finite permutation groups: invariants and Hall-subgroup height bounds.

The package computes structural invariants of finite permutation groups --
radicals, the generalized Fitting series, p-length, the p-kernel series and
the non-p-soluble length -- searches for Hall subgroups, and machine-checks
the inequalities relating the non-p-soluble length of a group to the
generalized Fitting height and 2-length of its Hall subgroups.
"""

from .errors import (
    CapExceeded,
    DegreeMismatch,
    GroupError,
    PreconditionError,
    SubgroupError,
)
from .perm import Permutation, compose, format_cycles, parse_cycles
from .group import (
    PermGroup,
    StabChain,
    action_kernel,
    block_action_kernel,
    block_systems,
    center,
    centralizer,
    commutator_subgroup,
    conjugate_subgroup,
    derived_subgroup,
    group_from_generators,
    intersection,
    is_normal,
    minimal_block_system,
    normal_closure,
    pointwise_stabilizer,
    span,
)
from .primes import PrimeSet, factorize, is_prime, prime_divisors
from .quotient import QuotientMap, factor_group, quotient_by
from .structure import (
    SocleDecomposition,
    derived_series,
    is_nilpotent,
    is_simple,
    is_soluble,
    lower_central_series,
    minimal_normal_subgroups,
    socle,
    soluble_radical,
)
from .radicals import (
    HeightCertificate,
    fitting_height,
    fitting_subgroup,
    generalized_fitting_height,
    generalized_fitting_subgroup,
    is_p_soluble,
    layer,
    p_core,
    p_length,
    p_length_value,
    p_prime_core,
    p_soluble_radical,
    pi_core,
    sylow_subgroup,
)
from .length import (
    KernelLemmaReport,
    KernelSeries,
    check_kernel_lemma,
    kernel_series,
    lambda_oracle,
    non_p_soluble_length,
    normal_subgroup_lattice,
    p_kernel,
    p_length_oracle,
)
from .hall import (
    HallSearchResult,
    HeredityReport,
    check_hall_heredity,
    confirm_no_nilpotent_hall_2p,
    find_hall_subgroup,
    is_hall_subgroup,
)
from .corpus import (
    alternating_group,
    closed_form_order,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_file,
    group_from_spec,
    make_named,
    projective_special_linear_group,
    special_linear_group,
    suite_specs,
    symmetric_group,
    wreath_product,
)
from .verify import (
    ChainCheck,
    CorollaryCheck,
    InvariantReport,
    TheoremCheck,
    compute_invariant_report,
    revalidate,
    valid_instances,
    validate_hypotheses,
    verify_corollary,
    verify_proposition_chain,
    verify_theorem,
)

__version__ = "1.0.0"

__all__ = [
    "CapExceeded",
    "ChainCheck",
    "CorollaryCheck",
    "DegreeMismatch",
    "GroupError",
    "HallSearchResult",
    "HeightCertificate",
    "HeredityReport",
    "InvariantReport",
    "KernelLemmaReport",
    "KernelSeries",
    "Permutation",
    "PermGroup",
    "PreconditionError",
    "PrimeSet",
    "QuotientMap",
    "SocleDecomposition",
    "StabChain",
    "SubgroupError",
    "TheoremCheck",
    "action_kernel",
    "alternating_group",
    "block_action_kernel",
    "block_systems",
    "center",
    "centralizer",
    "check_hall_heredity",
    "check_kernel_lemma",
    "closed_form_order",
    "commutator_subgroup",
    "compose",
    "compute_invariant_report",
    "confirm_no_nilpotent_hall_2p",
    "conjugate_subgroup",
    "cyclic_group",
    "derived_series",
    "derived_subgroup",
    "dihedral_group",
    "direct_product",
    "factor_group",
    "factorize",
    "find_hall_subgroup",
    "fitting_height",
    "fitting_subgroup",
    "format_cycles",
    "generalized_fitting_height",
    "generalized_fitting_subgroup",
    "group_from_file",
    "group_from_generators",
    "group_from_spec",
    "intersection",
    "is_hall_subgroup",
    "is_nilpotent",
    "is_normal",
    "is_p_soluble",
    "is_prime",
    "is_simple",
    "is_soluble",
    "kernel_series",
    "lambda_oracle",
    "layer",
    "lower_central_series",
    "make_named",
    "minimal_block_system",
    "minimal_normal_subgroups",
    "non_p_soluble_length",
    "normal_closure",
    "normal_subgroup_lattice",
    "p_core",
    "p_kernel",
    "p_length",
    "p_length_oracle",
    "p_length_value",
    "p_prime_core",
    "p_soluble_radical",
    "parse_cycles",
    "pi_core",
    "pointwise_stabilizer",
    "prime_divisors",
    "projective_special_linear_group",
    "quotient_by",
    "revalidate",
    "socle",
    "soluble_radical",
    "span",
    "special_linear_group",
    "suite_specs",
    "sylow_subgroup",
    "symmetric_group",
    "valid_instances",
    "validate_hypotheses",
    "verify_corollary",
    "verify_proposition_chain",
    "verify_theorem",
    "wreath_product",
]
