"""
Type definitions shared across the enumeration and verification pipelines.

This module provides the run configuration and the report containers used by
every verification operation. Reports never raise on a failed check: they carry
pass/fail per item and a witness for the first counterexample.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from sympy import isprime

from .constants import (
    ACCEPTANCE_PRIMES,
    COMMANDS,
    DEFAULT_MAX_DELTA,
    DEFAULT_MAX_GENUS,
    DEFAULT_RANDOM_GRAPHS,
    DEFAULT_SEED,
    DEFAULT_TORSOR_MAX_DELTA,
    MAX_PRIME,
    MAX_STRATA_NODES,
    MAX_SUPPORT_NODES,
    OUTPUT_FORMATS,
)


def validate_prime(q: int) -> int:
    """
    Check that q is an odd prime within MAX_PRIME.

    Raises:
        ValueError: With a distinct message for even, composite and oversized q
    """
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got {q}")
    if not isprime(q):
        raise ValueError(f"q must be prime, got composite {q}")
    if q > MAX_PRIME:
        raise ValueError(f"q={q} exceeds the configured bound {MAX_PRIME}")
    return q


@dataclass
class CheckResult:
    """
    Outcome of one verification item.

    Attributes:
        name: Short identifier of the check (e.g. "degree-identity")
        passed: Whether the check held
        detail: Human-readable summary
        witness: First counterexample when the check failed (JSON-able)
        data: Additional JSON-able figures (cardinalities, counts)
    """
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[Any] = None
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }
        if self.data:
            out["data"] = self.data
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    """
    Ordered collection of CheckResult items with an aggregate verdict.

    Attributes:
        title: Report title (e.g. "torsor-bijection")
        checks: Check results in canonical order
        notes: Modeling hypotheses and known limitations
    """
    title: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        for check in self.checks:
            if not check.passed:
                return check
        return None

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass
class VerifyBounds:
    """
    Bounds of the full acceptance run (spin all).

    Attributes:
        max_delta: Largest node count for two-component degree identities
        max_genus: Largest component genus
        torsor_max_delta: Largest δ for exhaustive torsor bijections
        primes: Odd primes used for finite-field checks
        random_graphs: Number of seeded random multigraphs
        seed: Seed of the random multigraph sampler
    """
    max_delta: int = DEFAULT_MAX_DELTA
    max_genus: int = DEFAULT_MAX_GENUS
    torsor_max_delta: int = DEFAULT_TORSOR_MAX_DELTA
    primes: Tuple[int, ...] = ACCEPTANCE_PRIMES
    random_graphs: int = DEFAULT_RANDOM_GRAPHS
    seed: int = DEFAULT_SEED

    def validate(self) -> "VerifyBounds":
        if not 1 <= self.max_delta <= MAX_SUPPORT_NODES:
            raise ValueError(f"max_delta must lie in [1, {MAX_SUPPORT_NODES}], got {self.max_delta}")
        if self.max_genus < 1:
            raise ValueError(f"max_genus must be at least 1, got {self.max_genus}")
        if self.torsor_max_delta < 1:
            raise ValueError(f"torsor_max_delta must be at least 1, got {self.torsor_max_delta}")
        if self.random_graphs < 0:
            raise ValueError(f"random_graphs must be non-negative, got {self.random_graphs}")
        for q in self.primes:
            validate_prime(q)
        return self


@dataclass
class RunConfig:
    """
    Configuration of one CLI invocation.

    Attributes:
        command: One of supports, local, strata, verify, all
        input_path: Curve spec JSON (supports)
        g1: Genus of the first component (strata, verify)
        g2: Genus of the second component (strata, verify)
        delta: Number of nodes (local, strata, verify)
        q: Odd prime for finite-field runs
        output_format: "json" or "text"
        jobs: Worker count (1 = inline)
        seed: Seed for random-graph sampling
        bounds: Bounds of the acceptance run
        debug: Enable debug logging
        log_file: Optional log file path
    """
    command: str
    input_path: Optional[Path] = None
    g1: Optional[int] = None
    g2: Optional[int] = None
    delta: Optional[int] = None
    q: Optional[int] = None
    output_format: str = "json"
    jobs: int = 1
    seed: int = DEFAULT_SEED
    bounds: VerifyBounds = field(default_factory=VerifyBounds)
    debug: bool = False
    log_file: Optional[Path] = None

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")
        if self.delta is not None and self.delta < 1:
            raise ValueError(f"delta must be at least 1, got {self.delta}")
        if self.q is not None:
            validate_prime(self.q)
        if self.command == "supports" and self.input_path is None:
            raise ValueError("supports requires a curve spec file")
        if self.command in ("strata", "verify"):
            if self.g1 is None or self.g2 is None or self.delta is None:
                raise ValueError(f"{self.command} requires --g1, --g2 and --delta")
        if self.command == "strata" and self.delta > MAX_STRATA_NODES:
            raise ValueError(f"delta={self.delta} out of bounds: strata are listed for delta <= {MAX_STRATA_NODES}")
        if self.command == "verify" and self.q is None:
            raise ValueError("verify requires --q")
        if self.command == "local" and self.delta is None:
            raise ValueError("local requires --delta")
        self.bounds.validate()
        return self
