from .cones import (
    ConicCertificate,
    chamber_union_cone,
    cone_contains,
    cone_generators,
    cone_intersection,
    cone_of,
    cone_subset,
    is_face_of,
    is_full_dimensional,
    nonnegative_combination,
    weyl_chamber,
)
from .exact_linalg import independent_rows, primitive_integer_vector, rational_inverse, rational_rank

__all__ = [
    "ConicCertificate",
    "chamber_union_cone",
    "cone_contains",
    "cone_generators",
    "cone_intersection",
    "cone_of",
    "cone_subset",
    "independent_rows",
    "is_face_of",
    "is_full_dimensional",
    "nonnegative_combination",
    "primitive_integer_vector",
    "rational_inverse",
    "rational_rank",
    "weyl_chamber",
]
