from __future__ import annotations

import logging
import sys
from typing import Sequence

from src.application.bootstrap import build_app_container
from src.application.contracts import OutputFormat
from src.application.ports import ReportWriterPort
from src.domain.errors import CapacityError, SpinDomainError
from src.infrastructure import ConfigError, StateFileError
from .controller import (
    EXIT_CAPACITY,
    EXIT_INVALID_INPUT,
    CliController,
    CommandOutcome,
)
from .parser import build_parser

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger().setLevel(level)


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        container = build_app_container(args.config)
        outcome = CliController(container).dispatch(args)
        output_format = OutputFormat(args.format) if args.format else container.settings.output.format
        _emit(container.report_writer, outcome, output_format, args.out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SpinDomainError, StateFileError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    if outcome.diagnostic:
        print(f"error: {outcome.diagnostic}", file=sys.stderr)
    return outcome.exit_code


def _emit(
    writer: ReportWriterPort,
    outcome: CommandOutcome,
    output_format: OutputFormat,
    out: str | None,
) -> None:
    if not outcome.write_output:
        return
    if out is None:
        sys.stdout.write(writer.render(outcome.report, output_format))
        return
    path = writer.write(outcome.report, out, output_format)
    logger.debug("Wrote %s report to %s", output_format, path)
