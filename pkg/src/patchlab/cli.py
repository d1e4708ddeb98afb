"""Command-line interface for patchlab."""

from __future__ import annotations

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import TYPE_CHECKING, Optional

import click
import structlog
from pydantic import BaseModel
from safir.logging import configure_logging

from patchlab.antenna.models import Frequency
from patchlab.antenna.specfile import read_antenna_spec
from patchlab.antenna.units import Unit, normalize_quantity
from patchlab.config import LogLevel, config
from patchlab.exceptions import InputError, NumericalError, PatchlabError
from patchlab.farfield import Plane, pattern_cut, sample_pattern
from patchlab.reports.metrics import (
    compare_specs,
    compute_metrics,
    write_cut_csv,
)
from patchlab.reports.models import DesignDocument
from patchlab.synthesis import patch_length

if TYPE_CHECKING:
    from typing import Union

__all__ = ["main", "help", "synth", "analyze", "pattern", "compare"]

EXIT_INPUT_ERROR = 2
"""Exit status for unusable input."""

EXIT_NUMERICAL_ERROR = 3
"""Exit status for input that cannot be evaluated."""

logger = structlog.get_logger(config.logger_name)


class CommandError(click.ClickException):
    """A handled failure, reported as ``Error: <message>`` on stderr."""

    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


@contextmanager
def _handle_errors(command: str) -> Iterator[None]:
    logger.info("Running command", command=command)
    try:
        yield
    except InputError as e:
        logger.warning("Command failed", command=command, error=str(e))
        raise CommandError(str(e), EXIT_INPUT_ERROR) from e
    except NumericalError as e:
        logger.warning("Command failed", command=command, error=str(e))
        raise CommandError(str(e), EXIT_NUMERICAL_ERROR) from e
    except PatchlabError as e:
        logger.warning("Command failed", command=command, error=str(e))
        raise CommandError(str(e), EXIT_INPUT_ERROR) from e
    logger.info("Finished command", command=command)


def _emit(document: BaseModel, out: Optional[Path]) -> None:
    text = document.json(indent=2) + "\n"
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        out.write_text(text)
    except OSError as e:
        raise InputError(f"Cannot write {out}: {e.strerror}") from e


_spec_argument_type = click.Path(dir_okay=False, path_type=Path)

_out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None,
    help="Write the document to this file instead of standard output.",
)

_ntheta_option = click.option(
    "--ntheta",
    type=click.IntRange(min=2),
    default=181,
    show_default=True,
    help="Polar samples of the pattern quadrature.",
)

_nphi_option = click.option(
    "--nphi",
    type=click.IntRange(min=1),
    default=360,
    show_default=True,
    help="Azimuth samples of the pattern quadrature.",
)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(message="%(version)s")
@click.option(
    "--log-level",
    type=click.Choice(
        [level.value for level in LogLevel], case_sensitive=False
    ),
    default=None,
    help="Log level. Overrides PATCHLAB_LOG_LEVEL.",
)
def main(log_level: Optional[str]) -> None:
    """patchlab.

    Synthesize and analyse rectangular microstrip patch antennas.
    """
    configure_logging(
        profile=config.profile.value,
        log_level=(log_level or config.log_level.value).upper(),
        name=config.logger_name,
    )
    # Standard output carries the documents.
    for handler in logging.getLogger(config.logger_name).handlers:
        if isinstance(handler, logging.StreamHandler):
            handler.setStream(sys.stderr)


@main.command()
@click.argument("topic", default=None, required=False, nargs=1)
@click.pass_context
def help(ctx: click.Context, topic: Union[None, str]) -> None:
    """Show help for any command."""
    # The help command implementation is taken from
    # https://www.burgundywall.com/post/having-click-help-subcommand
    if topic:
        if topic in main.commands:
            click.echo(main.commands[topic].get_help(ctx))
        else:
            raise click.UsageError(f"Unknown help topic {topic}", ctx)
    else:
        assert ctx.parent
        click.echo(ctx.parent.get_help())


@main.command()
@click.argument("freq_ghz", type=float)
@click.argument("er", type=float)
@click.argument("h_mm", type=float)
def synth(freq_ghz: float, er: float, h_mm: float) -> None:
    """Synthesize a patch for FREQ_GHZ on a substrate of dielectric
    constant ER and thickness H_MM.
    """
    with _handle_errors("synth"):
        height = normalize_quantity(h_mm, Unit.mm)
        result = patch_length(Frequency.from_ghz(freq_ghz), er, height)
        _emit(DesignDocument.from_design_result(result, er, height), None)


@main.command()
@click.argument("spec", type=_spec_argument_type)
@_ntheta_option
@_nphi_option
@_out_option
def analyze(spec: Path, ntheta: int, nphi: int, out: Optional[Path]) -> None:
    """Compute the figures of merit of the antenna in SPEC."""
    with _handle_errors("analyze"):
        metrics = compute_metrics(read_antenna_spec(spec), ntheta, nphi)
        _emit(metrics, out)


@main.command()
@click.argument("spec", type=_spec_argument_type)
@click.option(
    "--plane",
    type=click.Choice(["e", "h"], case_sensitive=False),
    required=True,
    help="Principal plane of the cut.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    required=True,
    help="CSV file to write.",
)
@_ntheta_option
@_nphi_option
def pattern(
    spec: Path, plane: str, out: Path, ntheta: int, nphi: int
) -> None:
    """Export the realized-gain cut of SPEC as CSV."""
    with _handle_errors("pattern"):
        antenna = read_antenna_spec(spec)
        cut = pattern_cut(
            antenna,
            Plane(plane.upper()),
            pattern=sample_pattern(antenna, ntheta, nphi),
        )
        write_cut_csv(cut, out)


@main.command()
@click.argument("spec_a", type=_spec_argument_type)
@click.argument("spec_b", type=_spec_argument_type)
@_ntheta_option
@_nphi_option
@_out_option
def compare(
    spec_a: Path, spec_b: Path, ntheta: int, nphi: int, out: Optional[Path]
) -> None:
    """Compare the antennas in SPEC_A and SPEC_B."""
    with _handle_errors("compare"):
        report = compare_specs(
            read_antenna_spec(spec_a),
            read_antenna_spec(spec_b),
            ntheta,
            nphi,
        )
        _emit(report, out)
