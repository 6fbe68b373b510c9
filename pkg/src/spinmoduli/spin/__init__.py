"""Supports, root counts and multiplicities of spin curves on nodal curves."""

from .enumeration import (
    SpinSupport,
    SpinTable,
    automorphism_order,
    check_degree_identity,
    check_parity_closure,
    multiplicity,
    per_component_degrees,
    root_count,
    singular_spin_count,
    spin_table,
    support_parity_ok,
    valid_supports,
    weighted_total,
)

__all__ = [
    "SpinSupport",
    "SpinTable",
    "automorphism_order",
    "check_degree_identity",
    "check_parity_closure",
    "multiplicity",
    "per_component_degrees",
    "root_count",
    "singular_spin_count",
    "spin_table",
    "support_parity_ok",
    "valid_supports",
    "weighted_total",
]
