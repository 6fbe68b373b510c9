"""Enriched spin curves on curves with two smooth components."""

from .chi import StratumPoint, chi_inverse, chi_map, transported_action
from .curve import TwoComponentCurve, support_name
from .labels import (
    EnrichedCount,
    EnrichedSpinLabel,
    LabelGroupElement,
    act,
    enriched_count,
    enriched_stable_directions,
    enumerate_labels,
    label_group,
    label_group_generators,
    stratum_label_count,
)
from .strata import StratificationReport, StratumRow, stratification_report
from .twisters import TwisterData, canonical_twisters, check_twister_tuple, degree_condition
from .verification import (
    base_square_roots,
    hyperplane_identity,
    line_limit_cross_check,
    predicted_points,
    verify_torsor_bijection,
)

__all__ = [
    "EnrichedCount",
    "EnrichedSpinLabel",
    "LabelGroupElement",
    "StratificationReport",
    "StratumPoint",
    "StratumRow",
    "TwisterData",
    "TwoComponentCurve",
    "act",
    "base_square_roots",
    "canonical_twisters",
    "check_twister_tuple",
    "chi_inverse",
    "chi_map",
    "degree_condition",
    "enriched_count",
    "enriched_stable_directions",
    "enumerate_labels",
    "hyperplane_identity",
    "label_group",
    "label_group_generators",
    "line_limit_cross_check",
    "predicted_points",
    "stratification_report",
    "stratum_label_count",
    "support_name",
    "transported_action",
    "verify_torsor_bijection",
]
