"""Typer-based CLI for spinmoduli."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from .core.constants import (
    DEFAULT_MAX_DELTA,
    DEFAULT_MAX_GENUS,
    DEFAULT_RANDOM_GRAPHS,
    DEFAULT_SEED,
    DEFAULT_TORSOR_MAX_DELTA,
)
from .core.types import RunConfig, VerifyBounds
from .pipeline.orchestrator import run

app = typer.Typer(add_completion=False, help="Spin curves on nodal curves: enumeration and verification CLI.")

FORMAT_OPTION = typer.Option("json", "--format", help="Output format: json|text")
JOBS_OPTION = typer.Option(1, "--jobs", help="Worker count")


def _finish(config: RunConfig) -> None:
    code = run(config)
    if code:
        raise typer.Exit(code)


@app.command("supports")
def supports_cmd(
    curve_file: Path = typer.Argument(..., help="Curve spec JSON"),
    output_format: str = FORMAT_OPTION,
    jobs: int = JOBS_OPTION,
    debug: bool = typer.Option(False, help="Enable debug logging"),
) -> None:
    """Valid supports, root counts and multiplicities of a curve."""
    _finish(RunConfig(
        command="supports",
        input_path=curve_file,
        output_format=output_format,
        jobs=jobs,
        debug=debug,
    ))


@app.command("local")
def local_cmd(
    delta: int = typer.Option(..., "--delta", help="Number of nodes"),
    output_format: str = FORMAT_OPTION,
    jobs: int = JOBS_OPTION,
    debug: bool = typer.Option(False, help="Enable debug logging"),
) -> None:
    """Equations, blow-up charts and Jacobian rank of the local model."""
    _finish(RunConfig(command="local", delta=delta, output_format=output_format, jobs=jobs, debug=debug))


@app.command("strata")
def strata_cmd(
    g1: int = typer.Option(..., "--g1", help="Genus of C_1"),
    g2: int = typer.Option(..., "--g2", help="Genus of C_2"),
    delta: int = typer.Option(..., "--delta", help="Number of nodes"),
    q: Optional[int] = typer.Option(None, "--q", help="Odd prime for label counts"),
    output_format: str = FORMAT_OPTION,
    jobs: int = JOBS_OPTION,
) -> None:
    """Stratification of the enriched spin curves of a two-component curve."""
    _finish(RunConfig(
        command="strata", g1=g1, g2=g2, delta=delta, q=q, output_format=output_format, jobs=jobs,
    ))


@app.command("verify")
def verify_cmd(
    g1: int = typer.Option(..., "--g1", help="Genus of C_1"),
    g2: int = typer.Option(..., "--g2", help="Genus of C_2"),
    delta: int = typer.Option(..., "--delta", help="Number of nodes"),
    q: int = typer.Option(..., "--q", help="Odd prime"),
    output_format: str = FORMAT_OPTION,
    jobs: int = JOBS_OPTION,
    debug: bool = typer.Option(False, help="Enable debug logging"),
) -> None:
    """Exhaustive torsor bijections of every stratum over F_q."""
    _finish(RunConfig(
        command="verify", g1=g1, g2=g2, delta=delta, q=q,
        output_format=output_format, jobs=jobs, debug=debug,
    ))


@app.command("all")
def all_cmd(
    output_format: str = FORMAT_OPTION,
    jobs: int = JOBS_OPTION,
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed of the random-graph sampler"),
    max_delta: int = typer.Option(DEFAULT_MAX_DELTA, "--max-delta", help="Largest node count"),
    max_genus: int = typer.Option(DEFAULT_MAX_GENUS, "--max-genus", help="Largest component genus"),
    torsor_max_delta: int = typer.Option(
        DEFAULT_TORSOR_MAX_DELTA, "--torsor-max-delta", help="Largest node count for torsor bijections"
    ),
    random_graphs: int = typer.Option(
        DEFAULT_RANDOM_GRAPHS, "--random-graphs", help="Number of random multigraphs"
    ),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Write a run log"),
    debug: bool = typer.Option(False, help="Enable debug logging"),
) -> None:
    """Run the full acceptance suite."""
    bounds = VerifyBounds(
        max_delta=max_delta,
        max_genus=max_genus,
        torsor_max_delta=torsor_max_delta,
        random_graphs=random_graphs,
        seed=seed,
    )
    _finish(RunConfig(
        command="all",
        output_format=output_format,
        jobs=jobs,
        seed=seed,
        bounds=bounds,
        debug=debug,
        log_file=log_file,
    ))


if __name__ == "__main__":
    app()
