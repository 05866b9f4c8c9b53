"""groupcent: centralizer structure of finite groups.

Dense-table finite groups, the builders for the families the check suite
needs, centralizer profiles and the predicates on them, and a catalog-driven
suite of named checks with a search mode for centralizer-count questions.
"""

from .analytics import (
    BoundReport,
    CentralizerProfile,
    ConjugateTypeReport,
    PartitionReport,
    bounds,
    cent_count,
    central_partition,
    central_quotient,
    conjugate_type,
    exp_bound_holds,
    gcd_condition,
    is_CA_group,
    is_F_group,
    is_I_group,
    is_extraspecial,
    is_semi_extraspecial,
    is_ultraspecial,
    nonabelian_centralizer_check,
    perfect_quotient_check,
    profile,
    quotient_centralizer_sandwich,
)
from .checks import (
    CatalogEntry,
    CheckResult,
    CheckSettings,
    SearchHit,
    SearchQuery,
    SuiteReport,
    check_ids,
    default_catalog,
    run_check,
    run_suite,
    search,
)
from .constructions import (
    ActionSpec,
    alternating,
    central_product,
    cyclic,
    dihedral,
    elementary_abelian,
    extraspecial2,
    frobenius_cq_cn,
    from_permutations,
    heisenberg,
    quaternion8,
    semidirect,
    smallest_frobenius_unit,
    symmetric,
)
from .core import (
    FiniteGroup,
    QuotientResult,
    Subgroup,
    center,
    centralizer,
    derived_subgroup,
    direct_product,
    exponent,
    from_table,
    generated_subgroup,
    is_abelian,
    is_cyclic,
    is_elementary_abelian,
    is_nilpotent,
    is_normal,
    is_perfect,
    is_prime,
    isomorphic,
    largest_prime_divisor,
    prime_power,
    quotient,
    renamed,
    subgroup_as_group,
)
from .fields import FiniteField, gf
from .specs import build_group, load_cayley, load_permutations, parse_spec, save_cayley

__version__ = "0.1.0"
