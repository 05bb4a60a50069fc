"""
Command-line entry point.

    python -m src.cli verify --suite roundtrip
    python -m src.cli experiment --name kappa --samples 100000 --seed 1 --out report.json

Exit codes: 0 success, 1 usage or input errors, 2 failed verification or
acceptance, 3 censoring threshold exceeded.
"""

import inspect
import logging
import logging.config
import sys
from pathlib import Path
from typing import List, Optional

import click
import pandas as pd
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from src.busemann.increments import WindowParams, profile_batch
from src.config import (
    DEFAULT_CENSORING_THRESHOLD,
    DEFAULT_INITIAL_WINDOW,
    DEFAULT_MAX_WINDOW,
    DEFAULT_PROBES,
    load_settings,
)
from src.distances.dp import distance_field
from src.enumeration.suites import SUITES, run_suite
from src.errors import BipolarMapError, CensoringThresholdError, FormatError
from src.experiments.catalog import REGISTRY
from src.formats import (
    SampleTable,
    read_map,
    read_walk,
    write_map,
    write_profiles,
    write_report,
    write_samples,
    write_walk,
)
from src.kmsw.builder import build
from src.kmsw.inverse import invert
from src.logging_config import LOGGING_CONFIG
from src.models.distances import NO_PATH, Mode
from src.models.experiments import ExperimentReport, SuiteResult, Verdict
from src.samplers.boltzmann import sample_boltzmann_marked, sample_boltzmann_right
from src.samplers.cells import sample_cell, sample_uibhbot_window, sample_uiqbot_window
from src.samplers.channeled import sample_boundary_channeled

logger = logging.getLogger("cli_logger")
console = Console(stderr=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_CENSORED = 3

SAMPLE_MODELS = ("cell", "uiqbot", "boltzmann", "boltzmann-marked", "channeled", "uibhbot")


def configure_logging(level: Optional[str] = None) -> None:
    """File and OpenTelemetry handlers from LOGGING_CONFIG plus a rich console."""
    logging.config.dictConfig(LOGGING_CONFIG)
    handler = RichHandler(console=console, show_path=False)
    handler.setLevel(level or load_settings().log_level)
    logging.getLogger().addHandler(handler)


def _mode_option(required: bool = True):
    return click.option(
        "--mode",
        type=click.Choice(["ldp", "sdp"], case_sensitive=False),
        required=required,
        help="Directed distance: longest (ldp) or shortest (sdp).",
    )


def _window_options(func):
    for option in reversed(
        [
            click.option("--initial-window", type=int, default=DEFAULT_INITIAL_WINDOW),
            click.option("--max-window", type=int, default=DEFAULT_MAX_WINDOW),
            click.option("--probes", type=int, default=DEFAULT_PROBES),
        ]
    ):
        func = option(func)
    return func


def _estimates_table(report: ExperimentReport) -> Table:
    table = Table(title=f"{report.name} ({report.mode or 'all modes'})")
    for column in ("estimate", "value", "se", "rule", "verdict"):
        table.add_column(column)
    styles = {Verdict.PASS: "green", Verdict.FAIL: "red", Verdict.INFO: "dim"}
    for estimate in report.estimates:
        table.add_row(
            estimate.name,
            f"{estimate.value:.6g}",
            "" if estimate.se is None else f"{estimate.se:.3g}",
            estimate.acceptance.kind,
            f"[{styles[estimate.verdict]}]{estimate.verdict.value}[/]",
        )
    return table


def _emit_json(text_writer, payload, out: Optional[Path]) -> None:
    if out is None:
        click.echo(payload.model_dump_json(indent=2))
    else:
        text_writer(out, payload)


@click.group()
@click.option("--log-level", default=None, help="Console log level (default BIPOLAR_LOG_LEVEL).")
def cli(log_level: Optional[str]):
    """Bipolar-oriented triangulations: KMSW bijection, samplers, directed
    distances, Busemann functions and experiments."""
    configure_logging(log_level.upper() if log_level else None)


@cli.command()
@click.option("--model", type=click.Choice(SAMPLE_MODELS), required=True)
@click.option("--size", type=int, required=True, help="Steps, r, or n by model.")
@click.option("--boundary", type=int, default=1, help="l for channeled, segments for uibhbot.")
@click.option("--seed", type=int, required=True)
@click.option("--out", type=click.Path(path_type=Path), required=True)
@click.option("--canonical", is_flag=True, help="Store the canonical relabeling.")
def sample(model: str, size: int, boundary: int, seed: int, out: Path, canonical: bool):
    """Sample a map from one of the random map models."""
    if model == "cell":
        map_ = sample_cell(size, seed)
    elif model == "uiqbot":
        map_ = sample_uiqbot_window(size, seed)
    elif model == "boltzmann":
        map_ = sample_boltzmann_right(size, seed)
    elif model == "boltzmann-marked":
        map_, mark = sample_boltzmann_marked(size, seed)
        click.echo(f"marked vertex {mark}")
    elif model == "channeled":
        map_ = sample_boundary_channeled(boundary, size, seed)
    else:
        map_ = sample_uibhbot_window(boundary, size, seed).map
    write_map(out, map_, canonical=canonical)
    logger.info(f"Sampled {model} map with {map_.edge_count} edges to {out}")
    return EXIT_OK


@cli.group()
def kmsw():
    """Build maps from walks and invert them."""


@kmsw.command("build")
@click.option("--in", "in_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--out", type=click.Path(path_type=Path), required=True)
def kmsw_build(in_path: Path, out: Path):
    map_ = build(read_walk(in_path))
    write_map(out, map_)
    click.echo(f"{map_.edge_count} edges, {map_.vertex_count} vertices")
    return EXIT_OK


@kmsw.command("invert")
@click.option("--in", "in_path", type=click.Path(exists=True, path_type=Path), required=True)
@click.option("--out", type=click.Path(path_type=Path), required=True)
def kmsw_invert(in_path: Path, out: Path):
    walk = invert(read_map(in_path))
    write_walk(out, walk)
    click.echo(f"walk of length {walk.length}")
    return EXIT_OK


@cli.command()
@click.option("--map", "map_path", type=click.Path(exists=True, path_type=Path), required=True)
@_mode_option()
@click.option("--src", type=int, required=True)
@click.option("--dst", type=int, default=None, help="Omit for all targets.")
@click.option("--out", type=click.Path(path_type=Path), default=None)
def distance(map_path: Path, mode: str, src: int, dst: Optional[int], out: Optional[Path]):
    """Directed distances from --src as CSV rows (src, dst, mode, value)."""
    map_ = read_map(map_path)
    for name, vertex in (("src", src), ("dst", dst)):
        if vertex is not None and not 0 <= vertex < map_.vertex_count:
            raise click.BadParameter(f"no vertex {vertex}", param_hint=f"--{name}")
    field = distance_field(map_, Mode.parse(mode), src)
    targets = range(map_.vertex_count) if dst is None else [dst]
    frame = pd.DataFrame(
        [
            {
                "src": src,
                "dst": v,
                "mode": mode.lower(),
                "value": "UNREACHABLE" if field.values[v] == NO_PATH else int(field.values[v]),
            }
            for v in targets
        ]
    )
    if out is None:
        click.echo(frame.to_csv(index=False, lineterminator="\n"), nl=False)
    else:
        frame.to_csv(out, index=False, lineterminator="\n")
    return EXIT_OK


@cli.command()
@_mode_option()
@click.option("--K", "K", type=int, required=True)
@click.option("--samples", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--model", type=click.Choice(["uibot", "uibhbot"]), default="uibot")
@click.option("--workers", type=int, default=None)
@click.option("--out", type=click.Path(path_type=Path), required=True)
@_window_options
def busemann(mode, K, samples, seed, model, workers, out, initial_window, max_window, probes):
    """Busemann profiles X(-K..K), one CSV row per replica and k."""
    profiles, censoring = profile_batch(
        Mode.parse(mode),
        K,
        samples,
        seed,
        WindowParams(initial_window, max_window, probes),
        model,
        workers or load_settings().workers,
        progress=True,
    )
    write_profiles(out, profiles, K)
    click.echo(f"{censoring.total - censoring.censored} stabilized, {censoring.censored} censored")
    return EXIT_OK


@cli.command()
@click.option("--name", type=click.Choice(REGISTRY.names()), required=True)
@_mode_option(required=False)
@click.option("--samples", type=int, default=None)
@click.option("--seed", type=int, required=True)
@click.option("--workers", type=int, default=None)
@click.option("--censoring-threshold", type=float, default=DEFAULT_CENSORING_THRESHOLD)
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.option(
    "--dump-samples",
    type=click.Path(path_type=Path),
    default=None,
    help="Write the paired increments as samples CSV.",
)
@_window_options
def experiment(
    name,
    mode,
    samples,
    seed,
    workers,
    censoring_threshold,
    out,
    dump_samples,
    initial_window,
    max_window,
    probes,
):
    """Run an experiment and write its JSON report."""
    accepted = inspect.signature(REGISTRY.get(name).function).parameters
    offered = {
        "mode": mode.lower() if mode else None,
        "samples": samples,
        "seed": seed,
        "workers": workers or load_settings().workers,
        "censoring_threshold": censoring_threshold,
        "window": WindowParams(initial_window, max_window, probes),
        "progress": True,
    }
    if dump_samples is not None:
        sample_mode = Mode.parse(offered["mode"] or accepted["mode"].default or "ldp")

        def on_samples(sample):
            columns = {
                "negative_increment": sample.negative,
                "positive_increment": sample.positive,
            }
            write_samples(dump_samples, SampleTable(sample_mode, columns))

        offered["on_samples"] = on_samples
    parameters = {
        key: value
        for key, value in offered.items()
        if key in accepted and value is not None
    }
    report = REGISTRY.execute(name, **parameters)
    console.print(_estimates_table(report))
    _emit_json(write_report, report, out)
    return EXIT_OK if report.passed else EXIT_FAILED


@cli.command()
@click.option("--suite", "suite_name", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--seed", type=int, default=None, help="Seed for randomized suites.")
@click.option("--out", type=click.Path(path_type=Path), default=None)
def verify(suite_name: str, seed: Optional[int], out: Optional[Path]):
    """Run an exact verification suite."""
    accepted = inspect.signature(SUITES[suite_name]).parameters
    parameters = {"seed": seed} if seed is not None and "seed" in accepted else {}
    result: SuiteResult = run_suite(suite_name, **parameters)
    status = "[green]passed[/]" if result.passed else "[red]FAILED[/]"
    console.print(f"suite {result.suite}: {status} ({result.checked} checked)")
    for failure in result.failures[:10]:
        console.print(f"  {failure}")
    _emit_json(write_report, result, out)
    return EXIT_OK if result.passed else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    try:
        code = cli.main(args=argv, prog_name="bipolar-kmsw", standalone_mode=False)
    except click.UsageError as exc:
        console.print(f"[red]usage error:[/] {exc.format_message()}")
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except CensoringThresholdError as exc:
        logger.error(f"Censoring threshold exceeded: {exc}")
        console.print(f"[red]censoring:[/] {exc} ({exc.censored}/{exc.total})")
        return EXIT_CENSORED
    except FormatError as exc:
        logger.error(f"Malformed input, field '{exc.field}': {exc}")
        console.print(f"[red]format error[/] in field '{exc.field}': {exc}")
        return EXIT_USAGE
    except (ValueError, BipolarMapError) as exc:
        logger.error(f"Invalid input: {exc}")
        console.print(f"[red]error:[/] {exc}")
        return EXIT_USAGE
    return EXIT_OK if code is None else int(code)


if __name__ == "__main__":
    sys.exit(main())
