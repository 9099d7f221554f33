"""Exact representation theory of the symmetric-group conjugation action on
nilpotent partial transformations, through labeled rooted forests.

Core layers, bottom to top: partitions, transformations, forests,
characters, symfunc, forest_reps.  The service subpackage exposes
everything over HTTP and the cli module is a thin client for it.
"""

__version__ = "0.1.0"

from .partitions import (
    Partition,
    binomial,
    conjugate,
    partitions_of,
    partitions_with_parts,
    stirling2,
    z_of,
)
from .transformations import (
    PartialTransformation,
    compose,
    conjugate_action,
    count_by_image_size,
    count_nilpotent,
    count_nilpotent_total,
    cycle_type,
    enumerate_nilpotent,
    is_nilpotent,
)
from .forests import (
    LabeledForest,
    Odun,
    chain_odun,
    count_blossoming,
    count_rooted_trees,
    enumerate_oduns,
    forest_of,
    hook_length_value,
    is_blossoming,
    maximal_terminal_branches,
    natural_labelings_count,
    odun_of,
    transformation_of,
)
from .characters import (
    ClassFunction,
    IntegrityError,
    IrredDecomposition,
    decompose,
    fixed_point_character,
    inner_product,
    irreducible_character,
)
from .symfunc import (
    SymFunc,
    frobenius_ch,
    inverse_frobenius,
    kostka,
    plethysm,
    plethysm_product_rule,
    plethysm_sum_rule,
    schur,
    to_monomial,
    to_schur,
)
from .forest_reps import (
    analyze_odun,
    character_of_stratum,
    decompose_stratum,
    dimension_of_odun,
    frobenius_of_odun,
    proposition_check_C1n,
    rook_frobenius,
    rook_sign_count,
    sign_in_top_stratum,
    sign_multiplicity,
    total_sign_multiplicity,
)
from .verify import run_verify

__all__ = [
    "Partition", "binomial", "conjugate", "partitions_of", "partitions_with_parts",
    "stirling2", "z_of",
    "PartialTransformation", "compose", "conjugate_action", "count_by_image_size",
    "count_nilpotent", "count_nilpotent_total", "cycle_type", "enumerate_nilpotent",
    "is_nilpotent",
    "LabeledForest", "Odun", "chain_odun", "count_blossoming", "count_rooted_trees",
    "enumerate_oduns", "forest_of", "hook_length_value", "is_blossoming",
    "maximal_terminal_branches", "natural_labelings_count", "odun_of",
    "transformation_of",
    "ClassFunction", "IntegrityError", "IrredDecomposition", "decompose",
    "fixed_point_character", "inner_product", "irreducible_character",
    "SymFunc", "frobenius_ch", "inverse_frobenius", "kostka", "plethysm",
    "plethysm_product_rule", "plethysm_sum_rule", "schur", "to_monomial", "to_schur",
    "analyze_odun", "character_of_stratum", "decompose_stratum", "dimension_of_odun",
    "frobenius_of_odun", "proposition_check_C1n", "rook_frobenius", "rook_sign_count",
    "sign_in_top_stratum", "sign_multiplicity", "total_sign_multiplicity",
    "run_verify",
    "__version__",
]
