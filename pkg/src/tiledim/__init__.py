"""Proper axis-parallel box tilings of [-1,+1]^d and realizers of their complexes."""
from .errors import GenerationError, IntegrityError, PreconditionError, TilingError, UsageError
from .generate import FIXTURES, GenSpec, fixture, random_proper
from .geometry import (
    Box,
    Interval,
    Side,
    box_dimension,
    corners_of,
    intersect_boxes,
    sides_of,
    touch_dimensions,
)
from .order import (
    Digraph,
    Realizer,
    SimplicialComplex,
    build_complex,
    build_digraph,
    collapse_corner,
    construct_realizer,
    dm_dimension,
    is_acyclic,
    verify_realizer,
)
from .properness import check_families, check_pairwise, max_depth, touch_witness
from .separations import (
    Separation,
    compute_separations,
    coplanar_pairs,
    perturb_general_position,
    separation_is_box,
)
from .tiling import (
    ExtendedTiling,
    Tiling,
    coordinate_set,
    cut_tiling,
    is_generic,
    make_exterior,
    slice_tiling,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "box_dimension",
    "build_complex",
    "build_digraph",
    "check_families",
    "check_pairwise",
    "collapse_corner",
    "compute_separations",
    "construct_realizer",
    "coordinate_set",
    "coplanar_pairs",
    "corners_of",
    "cut_tiling",
    "Digraph",
    "dm_dimension",
    "ExtendedTiling",
    "fixture",
    "FIXTURES",
    "GenerationError",
    "GenSpec",
    "IntegrityError",
    "intersect_boxes",
    "Interval",
    "is_acyclic",
    "is_generic",
    "make_exterior",
    "max_depth",
    "perturb_general_position",
    "PreconditionError",
    "random_proper",
    "Realizer",
    "Separation",
    "separation_is_box",
    "Side",
    "sides_of",
    "SimplicialComplex",
    "slice_tiling",
    "Tiling",
    "TilingError",
    "touch_dimensions",
    "touch_witness",
    "UsageError",
    "validate",
    "verify_realizer",
]
