"""Fuzzy group theory over finite Cayley-table groups, in exact arithmetic.

The package builds fuzzy maps, homomorphisms and automorphisms between
finite groups, constructs the inner automorphisms induced by a normal pointed
membership function, and mechanically verifies the laws these objects obey
(see :mod:`fuzzaut.harness` for the catalog).
"""

from .errors import FuzzautError
from .grades import Grade, GRADE_ONE, GRADE_ZERO, format_grade, grade, parse_grade
from .groups import (
    ElementSubset,
    FiniteGroup,
    builtin_group,
    center,
    conjugacy_classes,
    crisp_automorphisms,
    is_group_isomorphism,
    is_normal_subgroup,
    make_group,
    quotient_group,
)
from .subsets import (
    FuzzySubset,
    chain_strategy,
    class_strategy,
    fuzzy_subset,
    gen_mu_chain,
    gen_mu_class,
    is_fuzzy_subgroup,
    is_normal_fuzzy_subgroup,
    is_pointed,
    level_set,
)
from .maps import (
    FuzzyMap,
    FuzzyRelation,
    compose,
    compose_maps,
    crisp_map,
    equiv,
    fuzzy_image,
    identity_map,
    inverse_map,
    is_one_one,
    is_onto,
    make_fuzzy_map,
    pointwise_equal,
    skeleton,
)
from .homs import (
    HomCheckReport,
    check_theorem_2_1,
    check_theorem_2_2,
    is_fuzzy_homomorphism,
    kernel,
    lift_hom,
)
from .automorphisms import (
    AutClass,
    FuzzyAutomorphism,
    build_aut_class_group,
    compose_aut,
    conjugate_aut,
    identity_aut,
    inverse_aut,
    is_class_preserving,
    is_inner,
    make_automorphism,
)
from .induced import (
    InducedInner,
    InnGroup,
    build_inn_group,
    compose_induced,
    identity_induced,
    inverse_induced,
    make_induced,
    theta,
    zeta,
)
from .harness import (
    Campaign,
    SuiteResult,
    STATEMENTS,
    ablation,
    campaign_report,
    default_campaign,
    run_campaign,
)

__version__ = "0.1.0"
