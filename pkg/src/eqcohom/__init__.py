"""Module structures of generalized torus-equivariant cohomology, computed exactly.

Pipeline: root data -> fixed-point tangent combinatorics -> one-parameter
stratification -> per-stratum Euler classes (ordinary cohomology, K-theory,
or truncated complex cobordism) -> free-module decomposition; plus the
fixed-point enumeration and direct-limit bookkeeping for loop Grassmannian
valuation levels.

Every value is immutable after construction and every operation is pure, so
the whole API is safe for concurrent use.
"""

from .bb import (
    FixedPointData,
    RelativeFreenessReport,
    VarietyModel,
    bb_stratify,
    check_relative_freeness,
    generic_coweight,
    module_structure,
)
from .errors import EqcohomError
from .flags import FlagSpec, flag_fixed_points, flag_model, flag_tangent_weights
from .grassmannian import (
    GrFixedPoint,
    GrSpec,
    LimitModulePresentation,
    default_alpha,
    gr_filtration_check,
    gr_fixed_points,
    gr_level_count,
    gr_limit_module,
    val_coweight,
)
from .rings import (
    FGLTruncation,
    IntPolynomial,
    LaurentPolynomial,
    RingElement,
    TruncatedMUElement,
    euler_H,
    euler_K,
    euler_MU,
    euler_class,
    fgl_inverse,
    fgl_multiple,
    fgl_sum,
    is_nonzero_divisor,
    specialize_fgl,
)
from .root_system import (
    Coweight,
    RootDatum,
    RootSystemSpec,
    Weight,
    WeylElement,
    WeylGroup,
    bruhat_leq,
    build_root_datum,
    coset_representatives,
    dominant_representative,
    generate_weyl,
    is_dominant_coweight,
    longest_element,
    pairing,
    weyl_act_coweight,
    weyl_act_weight,
    word_label,
)
from .stratification import (
    GradedModuleDecomposition,
    Generator,
    StratumData,
    StratumPoset,
    assemble_module,
    check_stratification,
    is_open,
    linear_extension,
    poincare_series,
    render_poincare,
)

__version__ = "0.1.0"

__all__ = [
    "Coweight",
    "EqcohomError",
    "FGLTruncation",
    "FixedPointData",
    "FlagSpec",
    "Generator",
    "GrFixedPoint",
    "GrSpec",
    "GradedModuleDecomposition",
    "IntPolynomial",
    "LaurentPolynomial",
    "LimitModulePresentation",
    "RelativeFreenessReport",
    "RingElement",
    "RootDatum",
    "RootSystemSpec",
    "StratumData",
    "StratumPoset",
    "TruncatedMUElement",
    "VarietyModel",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "assemble_module",
    "bb_stratify",
    "bruhat_leq",
    "build_root_datum",
    "check_relative_freeness",
    "check_stratification",
    "coset_representatives",
    "default_alpha",
    "dominant_representative",
    "euler_H",
    "euler_K",
    "euler_MU",
    "euler_class",
    "fgl_inverse",
    "fgl_multiple",
    "fgl_sum",
    "flag_fixed_points",
    "flag_model",
    "flag_tangent_weights",
    "generate_weyl",
    "generic_coweight",
    "gr_filtration_check",
    "gr_fixed_points",
    "gr_level_count",
    "gr_limit_module",
    "is_dominant_coweight",
    "is_nonzero_divisor",
    "is_open",
    "linear_extension",
    "longest_element",
    "module_structure",
    "pairing",
    "poincare_series",
    "render_poincare",
    "specialize_fgl",
    "val_coweight",
    "weyl_act_coweight",
    "weyl_act_weight",
    "word_label",
]
