from .faces import (
    descriptors,
    face_contains,
    face_dimension,
    fanpos_sparser,
    flats_closure,
    flats_partition,
    instr_subset,
    interior_witness,
    is_extreme,
    is_polymatroid,
    is_submodular,
    minkowski_check,
    normal_fan_coarsens,
    partition_classes,
    partition_equivalence,
    refines_enpart,
    refines_tistr,
    standardize,
    subgraph_rel,
    submodular_reflect,
    theorem_report,
)
from .games import (
    basis_game,
    binomial_game,
    ci_structure,
    ci_via_tightness,
    core_contains,
    core_vertices,
    delta,
    elementary_imset,
    elementary_triplets,
    exactness_check,
    fiber_of,
    is_modular,
    is_supermodular,
    is_supermodular_pairwise,
    marginal_vector,
    modular_game,
    realize_poset_based,
    require_supermodular,
    square_game,
    tightness_class,
    unanimity_game,
    vertex_poset,
    zero_game,
)
from .harness import HarnessSummary, TrialResult, run_theorem_harness
from .random_games import make_rng, random_supermodular
from .rays import extreme_ray_vectors, extreme_rays

__all__ = [
    "HarnessSummary",
    "TrialResult",
    "basis_game",
    "binomial_game",
    "ci_structure",
    "ci_via_tightness",
    "core_contains",
    "core_vertices",
    "delta",
    "descriptors",
    "elementary_imset",
    "elementary_triplets",
    "exactness_check",
    "extreme_ray_vectors",
    "extreme_rays",
    "face_contains",
    "face_dimension",
    "fanpos_sparser",
    "fiber_of",
    "flats_closure",
    "flats_partition",
    "instr_subset",
    "interior_witness",
    "is_extreme",
    "is_modular",
    "is_polymatroid",
    "is_submodular",
    "is_supermodular",
    "is_supermodular_pairwise",
    "make_rng",
    "marginal_vector",
    "minkowski_check",
    "modular_game",
    "normal_fan_coarsens",
    "partition_classes",
    "partition_equivalence",
    "random_supermodular",
    "realize_poset_based",
    "refines_enpart",
    "refines_tistr",
    "require_supermodular",
    "run_theorem_harness",
    "square_game",
    "standardize",
    "subgraph_rel",
    "submodular_reflect",
    "theorem_report",
    "tightness_class",
    "unanimity_game",
    "vertex_poset",
    "zero_game",
]
