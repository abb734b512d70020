"""Uninorms, fuzzy negations and (U,N)-implications, with tools for deciding
whether an implication's (U,N) representation is unique."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    EvaluationError,
    InvalidArgument,
    InvalidSpec,
    NoInverseError,
    NotFound,
    PreconditionViolation,
)
from .numerics import Grid, PropertyReport, Tolerances, UnitFunction, uniform_grid  # noqa: E402
from .negations import Negation, classify_negation, modified_pseudo_inverse  # noqa: E402
from .uninorms import (  # noqa: E402
    BinaryOperator,
    check_uninorm_axioms,
    power_band_uninorm,
    representable_uninorm,
    logit_generator,
)
from .implications import un_implication, check_implication_axioms, check_property  # noqa: E402
from .representations import extract_representation, operators_equal, scan_cuts, uniqueness_verdict  # noqa: E402
from .catalog import catalog_instance, verify_instance, INSTANCE_NAMES  # noqa: E402

__all__ = [
    "__version__",
    "BinaryOperator", "Grid", "INSTANCE_NAMES", "Negation", "PropertyReport", "Tolerances", "UnitFunction",
    "EvaluationError", "InvalidArgument", "InvalidSpec", "NoInverseError", "NotFound", "PreconditionViolation",
    "catalog_instance", "check_implication_axioms", "check_property", "check_uninorm_axioms",
    "classify_negation", "extract_representation", "logit_generator", "modified_pseudo_inverse",
    "operators_equal", "power_band_uninorm", "representable_uninorm", "scan_cuts", "un_implication",
    "uniform_grid", "uniqueness_verdict", "verify_instance",
]
