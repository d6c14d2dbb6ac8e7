"""Real-linear maps on C^n, unitary-quotient canonical forms, and lattices.

The package is organized around a few small value types (matrix
representations of real-linear maps, Gram forms, lattice bases, torus
points) plus free functions acting on them.  Everything takes an optional
Tolerance; defaults are rel=1e-9, abs=1e-12.
"""

from .errors import (
    AmbiguousIntegrality,
    CxlatError,
    DeterminantNotOne,
    DimensionMismatch,
    DimensionTooLarge,
    FirstBlockSingular,
    HeightTooLarge,
    InternalCheckError,
    LatticeMismatch,
    MajorizationFails,
    NonIntegralEntry,
    NotInSL,
    NotInSplitClass,
    NotPositiveDefinite,
    NotSelfAdjoint,
    RadiusBudgetExceeded,
    RankDeficient,
    SingularM,
    SingularMatrix,
)
from .kernel import (
    DEFAULT_TOL,
    Tolerance,
    adjoint,
    det,
    hermitian_eig,
    inverse,
    invertibility_margin,
    matmul,
    operator_norm,
    singular_values,
    solve,
)
from .realmaps import (
    BlockForm,
    ConjugatePairForm,
    NormalizedForm,
    RealLinearMap,
    SplitForm,
    apply,
    contraction_check,
    convert,
    domination_ratio,
    is_invertible,
    kind_of,
    majorizes,
    normalize_post_composition,
    realify,
)
from .polar import (
    GramForm,
    GroupMembership,
    classify,
    gram,
    polar,
    sl_normalize,
    spd_sqrt,
    su_sl_canonical,
    unitarily_equivalent,
)
from .lattices import (
    GaussianUnimodular,
    LatticeBasis,
    PeriodMatrix,
    covolume,
    from_generators,
    gaussian_lattice,
    normalize_to_Lstarstar,
    permute_to_L1,
    rank_margin,
    same_lattice,
    sigma_membership,
    standard_lattice,
    to_split_form,
)
from .equivalence import (
    EquivalenceVerdict,
    ShortVectorSpectrum,
    lattice_equivalent,
    short_vectors,
    sigma_candidates,
    sigma_orbit_equal,
)
from .torus import TorusPoint, reduce, torus_add, torus_eq, torus_neg
from .dim1 import ScalarForms, evaluate, from_ab, is_invertible_1d, to_thetamu

__all__ = [
    "AmbiguousIntegrality",
    "CxlatError",
    "DeterminantNotOne",
    "DimensionMismatch",
    "DimensionTooLarge",
    "FirstBlockSingular",
    "HeightTooLarge",
    "InternalCheckError",
    "LatticeMismatch",
    "MajorizationFails",
    "NonIntegralEntry",
    "NotInSL",
    "NotInSplitClass",
    "NotPositiveDefinite",
    "NotSelfAdjoint",
    "RadiusBudgetExceeded",
    "RankDeficient",
    "SingularM",
    "SingularMatrix",
    "DEFAULT_TOL",
    "Tolerance",
    "adjoint",
    "det",
    "hermitian_eig",
    "inverse",
    "invertibility_margin",
    "matmul",
    "operator_norm",
    "singular_values",
    "solve",
    "BlockForm",
    "ConjugatePairForm",
    "NormalizedForm",
    "RealLinearMap",
    "SplitForm",
    "apply",
    "contraction_check",
    "convert",
    "domination_ratio",
    "is_invertible",
    "kind_of",
    "majorizes",
    "normalize_post_composition",
    "realify",
    "GramForm",
    "GroupMembership",
    "classify",
    "gram",
    "polar",
    "sl_normalize",
    "spd_sqrt",
    "su_sl_canonical",
    "unitarily_equivalent",
    "GaussianUnimodular",
    "LatticeBasis",
    "PeriodMatrix",
    "covolume",
    "from_generators",
    "gaussian_lattice",
    "normalize_to_Lstarstar",
    "permute_to_L1",
    "rank_margin",
    "same_lattice",
    "sigma_membership",
    "standard_lattice",
    "to_split_form",
    "EquivalenceVerdict",
    "ShortVectorSpectrum",
    "lattice_equivalent",
    "short_vectors",
    "sigma_candidates",
    "sigma_orbit_equal",
    "TorusPoint",
    "reduce",
    "torus_add",
    "torus_eq",
    "torus_neg",
    "ScalarForms",
    "evaluate",
    "from_ab",
    "is_invertible_1d",
    "to_thetamu",
]

__version__ = "0.1.0"
