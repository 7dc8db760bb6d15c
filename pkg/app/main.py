import click

from app.commands.analysis_commands import classify, decompose, dist, iso
from app.commands.common import configure_logging
from app.commands.oracle_commands import oracle
from app.commands.tool_commands import bench, gen


@click.group()
@click.option("--verbose", is_flag=True, help="Debug logging for every command.")
def cli(verbose):
    """unidist: distinguishing numbers of unigraphs from their degree sequences."""
    configure_logging(verbose)


cli.add_command(dist)
cli.add_command(decompose)
cli.add_command(classify)
cli.add_command(iso)
cli.add_command(gen)
cli.add_command(oracle)
cli.add_command(bench)


if __name__ == "__main__":
    cli(prog_name="unidist")
