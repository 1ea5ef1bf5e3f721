"""Finite left semi-braces: validation, structure theory, and Yang-Baxter maps."""

from .core import FiniteLeftSemibrace, MapTable, validate
from .subsets import (
    EIdealReport,
    IdealVerdict,
    add_subgroup_gen,
    additive_commutator,
    annihilator,
    center_mul,
    dot_set,
    e_ideal_report,
    generalized_socle,
    is_ideal_def17,
    is_ideal_prop,
    is_ideal_thm,
    is_left_ideal,
    mul_subgroup_gen,
    socle,
    sumset,
)
from .series import (
    NilpotencyProfile,
    SeriesReport,
    ann_series,
    analyze_series,
    classify,
    element_left_powers,
    element_right_powers,
    has_z_series,
    left_series,
    quotient_right_nilpotent_lift,
    right_series,
    soc_series,
    strong_series,
    upper_central_report,
    zoc_series,
)
from .constructions import (
    direct_product,
    from_idempotent_endomorphism,
    quotient,
    semidirect_product,
    skew_brace_embed,
    sub_semibrace,
    trivial_semibrace,
)
from .ybe import (
    SolutionMap,
    SolutionProperties,
    check_braid,
    flip_map,
    properties,
    restrict_to_E,
    solution_of,
)
from .enumeration import (
    EnumerationResult,
    IsoCertificate,
    SearchReport,
    are_isomorphic,
    enumerate_semibraces,
    search_counterexample,
)
from .groups import GroupTable, group_catalog, named_group

__all__ = [name for name in dir() if not name.startswith("_")]
