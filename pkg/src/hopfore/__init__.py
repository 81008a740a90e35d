"""hopfore: exact symbolic checks for Hopf algebra structures on skew
polynomial (Ore) extensions."""

from .freealg import FreeAlgebra, NCPoly, Scalar
from .hoe import (
    DeltaXForm,
    HOEData,
    NormalizationState,
    build_hoe,
    check_thm1,
    compute_alpha_beta,
    decompose_delta_x,
    eliminate_v,
    identity_suite,
    normalize,
    resolve_sign,
)
from .hopf import (
    GenMap,
    HopfAlg,
    character,
    hopf_axiom_suite,
    is_grouplike,
    is_skew_primitive,
    winding,
)
from .ore import Derivation, OreElem, OreExt, change_var, ore_normal_form, validate_ore
from .parser import assemble, parse_presentation, print_source
from .report import Check, Report
from .rewrite import AlgebraElem, Presentation, RewriteRule, check_confluence
from .tensor import TensorElem, merge_slots, slot_map, t_flatten, tensor_of

__all__ = [
    "AlgebraElem",
    "Check",
    "DeltaXForm",
    "Derivation",
    "FreeAlgebra",
    "GenMap",
    "HOEData",
    "HopfAlg",
    "NCPoly",
    "NormalizationState",
    "OreElem",
    "OreExt",
    "Presentation",
    "Report",
    "RewriteRule",
    "Scalar",
    "TensorElem",
    "assemble",
    "build_hoe",
    "change_var",
    "character",
    "check_confluence",
    "check_thm1",
    "compute_alpha_beta",
    "decompose_delta_x",
    "eliminate_v",
    "hopf_axiom_suite",
    "identity_suite",
    "is_grouplike",
    "is_skew_primitive",
    "merge_slots",
    "normalize",
    "ore_normal_form",
    "parse_presentation",
    "print_source",
    "resolve_sign",
    "slot_map",
    "t_flatten",
    "tensor_of",
    "validate_ore",
    "winding",
]

__version__ = "0.1.0"
