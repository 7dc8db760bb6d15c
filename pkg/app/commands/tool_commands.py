import click

from app.commands.common import execute, output_options
from core.degseq import RelativeTag


def _sizes(ctx, param, value):
    if not value:
        return []
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers, e.g. 100000,200000")


@click.command()
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@click.option(
    "--relative",
    type=click.Choice([tag.value for tag in RelativeTag]),
    default=RelativeTag.IDENTITY.value,
    help="Relative of the family graph to emit.",
)
@click.option("--seed", type=int, default=None, help="Seed for the random families.")
@output_options
def gen(family, params, relative, seed, as_json, verbose):
    """
    Print an edge list for FAMILY with integer PARAMS.

    Families: c5, mk2 M, u2 M L, u3 M, s P Q, s2 P1 Q1 P2 Q2 ..., s3 P Q1 Q2,
    s4 P Q, complete N, isolated N, random-unigraph COMPONENTS SIZE,
    random-threshold N.
    """
    execute(
        as_json, verbose, command="gen", family=family, params=list(params),
        relative=RelativeTag(relative), seed=seed,
    )


@click.command()
@click.option("--sizes", callback=_sizes, default="", help="Comma-separated vertex counts.")
@click.option("--seed", type=int, default=None)
@click.option("--repeats", type=int, default=None)
@output_options
def bench(sizes, seed, repeats, as_json, verbose):
    """Time the pipeline on random threshold sequences."""
    execute(as_json, verbose, command="bench", sizes=sizes, seed=seed, repeats=repeats)
