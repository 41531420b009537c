"""Fuzzy cognitive map engines over three number families.

Crisp maps iterate real activations through a logistic function. Interval
maps carry [lo, hi] uncertainty through endpoint arithmetic. General grey
maps reduce multi-interval uncertainty to kernel/greyness pairs and evolve
the two components separately. The package adds trajectory classification
(fixed point / limit cycle / chaotic), sufficient convergence criteria for
each family, a built-in seven-node benchmark corpus, and a CLI.
"""

from .cogmap import (
    FAMILIES,
    Model,
    Trajectory,
    fcm_step,
    fgcm_step,
    fggcm_step,
    simulate,
)
from .convergence import (
    AT_LEAST_ONE,
    INCONCLUSIVE,
    UNIQUE,
    Corollary3Result,
    FggcmReport,
    Verdict,
    check_fcm,
    check_fgcm,
    check_fggcm,
    corollary3_check,
    frobenius_norm,
    grey_condition_matrix,
    w_star,
)
from .corpus import VARIANTS, CorpusVariant, build, export_variant, inject_greyness
from .dynamics import (
    Classification,
    classify,
    ggn_metric,
    state_distance,
    successive_distances,
)
from .errors import (
    DegenerateRowError,
    DimensionError,
    GreycogError,
    InsufficientDataError,
    InvalidParameterError,
    MalformedInputError,
    MixedSignWeightError,
    ValidationError,
)
from .grey_num import (
    DomainMeasure,
    Ggn,
    GreyUnion,
    ggn_from_union,
    ggn_row_update,
    ggn_sigmoid,
)
from .interval_num import Ign, ign_add, ign_dot_row, ign_mul, ign_sigmoid
from ._modelio import load_model, model_to_doc, parse_model, save_doc

__version__ = "0.1.0"

__all__ = [
    "AT_LEAST_ONE",
    "Classification",
    "Corollary3Result",
    "CorpusVariant",
    "DegenerateRowError",
    "DimensionError",
    "DomainMeasure",
    "FAMILIES",
    "FggcmReport",
    "Ggn",
    "GreyUnion",
    "GreycogError",
    "INCONCLUSIVE",
    "Ign",
    "InsufficientDataError",
    "InvalidParameterError",
    "MalformedInputError",
    "MixedSignWeightError",
    "Model",
    "Trajectory",
    "UNIQUE",
    "VARIANTS",
    "ValidationError",
    "Verdict",
    "build",
    "check_fcm",
    "check_fgcm",
    "check_fggcm",
    "classify",
    "corollary3_check",
    "export_variant",
    "fcm_step",
    "fgcm_step",
    "fggcm_step",
    "frobenius_norm",
    "ggn_from_union",
    "ggn_metric",
    "ggn_row_update",
    "ggn_sigmoid",
    "grey_condition_matrix",
    "ign_add",
    "ign_dot_row",
    "ign_mul",
    "ign_sigmoid",
    "inject_greyness",
    "load_model",
    "model_to_doc",
    "parse_model",
    "save_doc",
    "simulate",
    "state_distance",
    "successive_distances",
    "w_star",
]
