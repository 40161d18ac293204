"""Bijective rotation-sort transform toolkit.

Transforms and inverses, the induced macro scheme, repetitiveness measures,
rotation optimization with per-rotation factorization sizes, and reachability
between equal-content strings.
"""

from .macro import (
    Literal,
    MacroScheme,
    Reference,
    SchemeFormatError,
    SchemeStructureError,
    ValidationReport,
    decode_bms,
    induce_bms,
    scheme_from_text,
    scheme_to_text,
    validate_bms,
)
from .measures import (
    Lz77Factorization,
    LzFactor,
    MeasureReport,
    SeparationRow,
    fibonacci_separation_table,
    fibonacci_word,
    lz77_factorize,
    measure_report,
)
from .reachability import (
    AlreadyMinimalError,
    DescentConditionError,
    NotANecklaceError,
    OpPath,
    OrbitBudgetError,
    OrbitReport,
    ParikhVector,
    ReachabilityCounterexample,
    UnsupportedAlphabetError,
    canonical_smallest,
    class_size,
    descent_step,
    find_path,
    normalize_steps,
    orbit_connected,
    parikh,
    parse_path,
    transform_to_smallest,
)
from .rotation import (
    BestRotation,
    LyndonTree,
    RotationSizes,
    TreeNode,
    all_rotation_factorization_sizes,
    best_rotation,
    left_lyndon_tree,
    right_lyndon_tree,
)
from .strings import (
    LyndonFactorization,
    as_text,
    is_lyndon,
    is_primitive,
    lyndon_factorize,
    omega_compare,
    rot,
    smallest_rotation,
)
from .transforms import (
    INF,
    TransformResult,
    bbwt,
    bbwt_inverse,
    bwt,
    bwt_inverse_multiset,
    count_runs,
    lf_map,
    omega_lcp_array,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyMinimalError",
    "BestRotation",
    "DescentConditionError",
    "INF",
    "Literal",
    "Lz77Factorization",
    "LzFactor",
    "LyndonFactorization",
    "LyndonTree",
    "MacroScheme",
    "MeasureReport",
    "NotANecklaceError",
    "OpPath",
    "OrbitBudgetError",
    "OrbitReport",
    "ParikhVector",
    "ReachabilityCounterexample",
    "Reference",
    "RotationSizes",
    "SchemeFormatError",
    "SchemeStructureError",
    "SeparationRow",
    "TransformResult",
    "TreeNode",
    "UnsupportedAlphabetError",
    "ValidationReport",
    "all_rotation_factorization_sizes",
    "as_text",
    "bbwt",
    "bbwt_inverse",
    "best_rotation",
    "bwt",
    "bwt_inverse_multiset",
    "canonical_smallest",
    "class_size",
    "count_runs",
    "decode_bms",
    "descent_step",
    "fibonacci_separation_table",
    "fibonacci_word",
    "find_path",
    "induce_bms",
    "is_lyndon",
    "is_primitive",
    "left_lyndon_tree",
    "lf_map",
    "lyndon_factorize",
    "lz77_factorize",
    "measure_report",
    "normalize_steps",
    "omega_compare",
    "omega_lcp_array",
    "orbit_connected",
    "parikh",
    "parse_path",
    "right_lyndon_tree",
    "rot",
    "scheme_from_text",
    "scheme_to_text",
    "smallest_rotation",
    "transform_to_smallest",
    "validate_bms",
]
