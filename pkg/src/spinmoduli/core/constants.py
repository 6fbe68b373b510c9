"""
Constants for spin-curve enumeration and verification.

This module defines all constant values used throughout the toolkit,
including the report schema tag, enumeration caps, prime bounds and the
default bounds of the acceptance run.
"""

# ============================================================================
# Report Schema
# ============================================================================

# Top-level "schema" key of every JSON report
# ⚠️ CRITICAL: Bump only together with the golden files under tests/data
SCHEMA_VERSION = "spin-moduli/1"

# ============================================================================
# Enumeration Caps
# ============================================================================

# Support enumeration iterates all 2^δ node subsets
MAX_SUPPORT_NODES = 20

# Strata reports list all 2^δ - 1 proper node subsets
MAX_STRATA_NODES = 20

# Symbolic charts work in a ring with δ + C(δ+1,2) + δ(δ-1) variables
MAX_SYMBOLIC_NODES = 8

# Exhaustive torsor checks enumerate every label of a stratum
MAX_TORSOR_NODES = 6

# Largest odd prime accepted for finite-field runs
MAX_PRIME = 101

# Exhaustive enumeration of P^{δ-1}(F_q) is only done below this many points
MAX_PROJECTIVE_POINTS = 500_000

# ============================================================================
# Acceptance Bounds (spin all)
# ============================================================================

ACCEPTANCE_PRIMES = (5, 13)

DEFAULT_MAX_DELTA = 6
DEFAULT_MAX_GENUS = 3

# Torsor bijections are exhausted for δ up to this value
DEFAULT_TORSOR_MAX_DELTA = 4

# Degree bound for the invariant-ring presentation check
DEFAULT_DEGREE_BOUND = 6
DEFAULT_PRESENTATION_MAX_DELTA = 4

# line_limit / chi_map cross-oracle
CROSS_ORACLE_MAX_DELTA = 3
CROSS_ORACLE_PRIME = 5

# Hyperplane stratification is also counted point by point below this size
HYPERPLANE_EXHAUSTIVE_POINTS = 50_000

# Random connected multigraphs for the general degree identity
DEFAULT_RANDOM_GRAPHS = 100
DEFAULT_SEED = 0
RANDOM_GRAPH_MAX_VERTICES = 4
RANDOM_GRAPH_MAX_EDGES = 6

# ============================================================================
# Reference Curve (two elliptic components meeting in three nodes)
# ============================================================================

REFERENCE_CURVE = (1, 1, 3)

# |Delta| -> (number of supports, roots per support, multiplicity)
# ⚠️ CRITICAL: These are fixed expectations, never recomputed from the code under test
REFERENCE_SUPPORTS = {1: (3, 32, 2), 3: (1, 16, 4)}
REFERENCE_WEIGHTED_TOTAL = 256
REFERENCE_STRATA_DIMENSIONS = (2, 1, 1, 1, 0, 0, 0)
REFERENCE_SINGULAR_COUNT = 16

# ============================================================================
# Report Notes
# ============================================================================

AUT_HYPOTHESIS_NOTE = "Aut(C) = {id} is assumed; it cannot be checked from (g1, g2, delta)"

GEOMETRIC_ACTION_NOTE = (
    "torsor structure is verified on labels and transported through chi; "
    "the action on geometric points is left open"
)

# ============================================================================
# Exit Codes
# ============================================================================

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

# ============================================================================
# Output
# ============================================================================

OUTPUT_FORMATS = ("json", "text")

COMMANDS = ("supports", "local", "strata", "verify", "all")
