from .permutograph import (
    adjacency_label,
    all_enumerations,
    bfs_distance,
    closer_set,
    covering_of_set,
    diameter,
    face_enumerations,
    geodesics,
    halfspace_set,
    inversions_between,
    inversions_in_set,
    is_between,
    is_geodetically_convex,
    ordered_partitions,
    permutohedral_graph,
    rank_vector,
    to_dot,
    transpose_action,
)
from .relations import (
    RelationCounts,
    RelationFlags,
    classify,
    count_posets,
    count_preposets,
    count_relation_classes,
    count_total_preposets,
    enumerate_relations,
    galois_enums_to_relation,
    hasse,
    height_of,
    is_contraction,
    is_poset_based,
    linear_extensions,
    poset_dimension,
    precedes_closure,
    preposet_closure,
    toset_of,
    transitive_closure,
)
from .setsystems import (
    chains_union,
    count_linear_extensions,
    count_topologies,
    distinguishes_points,
    downsets_of,
    enumerate_topologies,
    enums_of_system,
    is_chain_lattice_member,
    is_reduction,
    is_topology,
    max_chain,
    power_set,
    relation_of_system,
)

__all__ = [
    "RelationCounts",
    "RelationFlags",
    "adjacency_label",
    "all_enumerations",
    "bfs_distance",
    "chains_union",
    "classify",
    "closer_set",
    "count_linear_extensions",
    "count_posets",
    "count_preposets",
    "count_relation_classes",
    "count_topologies",
    "count_total_preposets",
    "covering_of_set",
    "diameter",
    "distinguishes_points",
    "downsets_of",
    "enumerate_relations",
    "enumerate_topologies",
    "enums_of_system",
    "face_enumerations",
    "galois_enums_to_relation",
    "geodesics",
    "halfspace_set",
    "hasse",
    "height_of",
    "inversions_between",
    "inversions_in_set",
    "is_between",
    "is_chain_lattice_member",
    "is_contraction",
    "is_geodetically_convex",
    "is_poset_based",
    "is_reduction",
    "is_topology",
    "linear_extensions",
    "max_chain",
    "ordered_partitions",
    "permutohedral_graph",
    "poset_dimension",
    "power_set",
    "precedes_closure",
    "preposet_closure",
    "rank_vector",
    "relation_of_system",
    "to_dot",
    "toset_of",
    "transitive_closure",
    "transpose_action",
]
