import logging
from typing import Any

import click
from pydantic import ValidationError

from app.runner import EXIT_INVALID_INPUT, run
from app.schemas.cli_schema import CliConfig
from config.settings import settings


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def output_options(func):
    func = click.option("--verbose", is_flag=True, help="Log every peel and classification step.")(func)
    func = click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text.")(func)
    return func


def input_options(func):
    func = click.option("--edges", default=None, help="Edge list file, or '-' for stdin.")(func)
    func = click.option("--degseq", default=None, help="Degree sequence text, e.g. '16^3,12^4,9^5'.")(func)
    return func


def execute(as_json: bool = False, verbose: bool = False, **fields: Any) -> None:
    """Validates the request, runs it, prints the result and exits with its code."""
    ctx = click.get_current_context()
    if verbose:
        configure_logging(verbose=True)
    fields["output_format"] = "json" if as_json else settings.output_format
    try:
        config = CliConfig(**fields)
    except ValidationError as e:
        message = e.errors()[0].get("msg", str(e))
        click.echo(f"invalid input: {message}", err=True)
        ctx.exit(EXIT_INVALID_INPUT)
    result = run(config, progress=lambda line: click.echo(line, err=True))
    if result.output:
        click.echo(result.output)
    if result.error:
        click.echo(result.error, err=True)
    ctx.exit(result.exit_code)
