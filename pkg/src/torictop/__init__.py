"""Topology of smooth hypersurfaces in projective toric manifolds.

Fans, their integer cohomology rings, characteristic numbers of hypersurfaces
Y_d, exact lattice splitting, and the handle counts s_d with
Y_d = Y' # s_d (S^n x S^n).  All arithmetic is exact.
"""

from .charnum import (
    HypersurfaceInvariants,
    bernoulli,
    bn_hypersurface,
    chi_polynomial,
    degree,
    euler_char_hypersurface,
    hypersurface_invariants,
    l_class,
    middle_form_gram,
    signature_hypersurface,
    signature_polynomial,
    total_chern,
)
from .cohomology import (
    CohomologyClass,
    CohomologyRing,
    betti,
    build_ring,
    divisor_class,
    evaluate,
    multiply,
)
from .errors import (
    FanFormatError,
    HypothesisError,
    InternalConsistencyError,
    NotAmpleError,
    NotCompleteError,
    NotSmoothError,
    SearchExhaustedError,
    TorictopError,
)
from .fan import (
    DivisorClass,
    Fan,
    WallCurve,
    is_ample,
    is_projective,
    load_fan,
    parse_fan,
    preset_fan,
    product_fan,
    projective_space_fan,
    resolve_fan,
    validate_complete,
    validate_smooth,
    wall_curves,
)
from .handles import (
    HandleReport,
    SweepResult,
    SweepSummary,
    even_report,
    limit_constants,
    odd_report,
    report,
    sweep,
)
from .lattice import (
    IntSymForm,
    QuadraticSpaceZ2,
    SplitResult,
    Sublattice,
    arf,
    find_isotropic,
    hyperbolic_pair,
    is_even,
    is_unimodular,
    load_gram,
    normalize_quadratic_basis,
    orthogonal_complement,
    parse_gram,
    psi_eval,
    signature,
    split_decomposition,
    symplectic_basis,
)

__version__ = "0.1.0"

__all__ = [
    "Fan",
    "DivisorClass",
    "WallCurve",
    "parse_fan",
    "load_fan",
    "resolve_fan",
    "preset_fan",
    "projective_space_fan",
    "product_fan",
    "validate_smooth",
    "validate_complete",
    "wall_curves",
    "is_ample",
    "is_projective",
    "CohomologyRing",
    "CohomologyClass",
    "build_ring",
    "betti",
    "divisor_class",
    "multiply",
    "evaluate",
    "bernoulli",
    "total_chern",
    "l_class",
    "degree",
    "chi_polynomial",
    "euler_char_hypersurface",
    "bn_hypersurface",
    "signature_polynomial",
    "signature_hypersurface",
    "hypersurface_invariants",
    "HypersurfaceInvariants",
    "middle_form_gram",
    "IntSymForm",
    "Sublattice",
    "SplitResult",
    "QuadraticSpaceZ2",
    "signature",
    "is_even",
    "is_unimodular",
    "parse_gram",
    "load_gram",
    "orthogonal_complement",
    "find_isotropic",
    "hyperbolic_pair",
    "split_decomposition",
    "psi_eval",
    "symplectic_basis",
    "arf",
    "normalize_quadratic_basis",
    "HandleReport",
    "SweepResult",
    "SweepSummary",
    "even_report",
    "odd_report",
    "report",
    "sweep",
    "limit_constants",
    "TorictopError",
    "FanFormatError",
    "NotSmoothError",
    "NotCompleteError",
    "NotAmpleError",
    "HypothesisError",
    "InternalConsistencyError",
    "SearchExhaustedError",
]
