"""Exact Chow, K-theory and motive computations on products of projective spaces."""
from .chow import (
    ChowClass, Projection, Variety, VarietyMismatchError, degree, diagonal, parse_class,
    product_variety, pullback, pushforward,
)
from .correspondence import (
    ChowCorrespondence, CompositionError, KCorrespondence, compose_chow, compose_k,
    fm_action, parse_correspondence,
)
from .graded import NotNilpotentError, NotUnipotentError, ProfileMismatchError, SparsePoly
from .kernels import BACKEND
from .ktheory import (
    KClass, ch, ch_inverse, dual, euler_characteristic, euler_pairing, grr_pushforward,
    parse_kclass, pullback_k, tensor, todd,
)
from .motives import (
    Motive, MotiveError, MotiveMorphism, MotiveSum, SumMorphism, UnsupportedObjectError,
    compose, decompose, decompose_projective, hom_dimension, hom_space, identity,
    parse_motive, parse_motive_sum, tate_decompose,
)
from .ncmot import NCMotive, beilinson_collection, euler_matrix, nm_iso, nm_object
from .nu import check_nu_functorial, k_identity, nu_hom, nu_inverse_hom
from .orbit import (
    LAURENT, TATE, GradedMorphism, LaurentCategory, OrbitError, TateTwistCategory,
    orbit_compose, orbit_identity, orbit_iso_tate, tate_sum_class,
)
from .textform import ParseError

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "beilinson_collection",
    "ch",
    "ch_inverse",
    "check_nu_functorial",
    "ChowClass",
    "ChowCorrespondence",
    "compose",
    "compose_chow",
    "compose_k",
    "CompositionError",
    "decompose",
    "decompose_projective",
    "degree",
    "diagonal",
    "dual",
    "euler_characteristic",
    "euler_matrix",
    "euler_pairing",
    "fm_action",
    "GradedMorphism",
    "grr_pushforward",
    "hom_dimension",
    "hom_space",
    "identity",
    "k_identity",
    "KClass",
    "KCorrespondence",
    "LAURENT",
    "LaurentCategory",
    "Motive",
    "MotiveError",
    "MotiveMorphism",
    "MotiveSum",
    "NCMotive",
    "nm_iso",
    "nm_object",
    "NotNilpotentError",
    "NotUnipotentError",
    "nu_hom",
    "nu_inverse_hom",
    "orbit_compose",
    "orbit_identity",
    "orbit_iso_tate",
    "OrbitError",
    "parse_class",
    "parse_correspondence",
    "parse_kclass",
    "parse_motive",
    "parse_motive_sum",
    "ParseError",
    "product_variety",
    "ProfileMismatchError",
    "Projection",
    "pullback",
    "pullback_k",
    "pushforward",
    "SparsePoly",
    "SumMorphism",
    "TATE",
    "tate_decompose",
    "tate_sum_class",
    "TateTwistCategory",
    "tensor",
    "todd",
    "UnsupportedObjectError",
    "Variety",
    "VarietyMismatchError",
]
