"""Local model of the spin moduli space at its singular points and its blow-up."""

from .charts import (
    Chart,
    blowup_charts,
    build_chart,
    chart_residuals,
    chart_substitution,
    check_chart_smoothness,
    quotient_consistency,
)
from .exceptional import (
    ExceptionalSpace,
    check_deck_action,
    deck_act,
    deck_group,
    evaluate,
    incidence,
    incidence_mask,
    line_limit,
    normalize_point,
    phi_fiber,
    phi_map,
    projective_points,
    projective_size,
    stratum_size,
)
from .ideal import (
    IdealPresentation,
    LocalRing,
    Poly,
    codimension,
    dx_ideal,
    invariant_presentation_check,
    jacobian_rank_at_origin,
    linear_ideal,
    local_ring,
)

__all__ = [
    "Chart",
    "ExceptionalSpace",
    "IdealPresentation",
    "LocalRing",
    "Poly",
    "blowup_charts",
    "build_chart",
    "chart_residuals",
    "chart_substitution",
    "check_chart_smoothness",
    "check_deck_action",
    "codimension",
    "deck_act",
    "deck_group",
    "dx_ideal",
    "evaluate",
    "incidence",
    "incidence_mask",
    "invariant_presentation_check",
    "jacobian_rank_at_origin",
    "line_limit",
    "linear_ideal",
    "local_ring",
    "normalize_point",
    "phi_fiber",
    "phi_map",
    "projective_points",
    "projective_size",
    "quotient_consistency",
    "stratum_size",
]
