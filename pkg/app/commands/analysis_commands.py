import click

from app.commands.common import execute, input_options, output_options


@click.command()
@input_options
@click.option("--threshold", is_flag=True, help="Treat the input as a threshold graph.")
@output_options
def dist(degseq, edges, threshold, as_json, verbose):
    """Distinguishing number of a unigraph."""
    execute(as_json, verbose, command="dist", degseq=degseq, edges=edges, threshold=threshold)


@click.command()
@input_options
@click.option("--compact", is_flag=True, help="Only print the compact decomposition.")
@output_options
def decompose(degseq, edges, compact, as_json, verbose):
    """Canonical and compact decompositions."""
    execute(as_json, verbose, command="decompose", degseq=degseq, edges=edges, compact=compact)


@click.command()
@input_options
@output_options
def classify(degseq, edges, as_json, verbose):
    """Family, relative and distinguishing number of every component."""
    execute(as_json, verbose, command="classify", degseq=degseq, edges=edges)


@click.command()
@input_options
@click.option("--other-degseq", default=None, help="Second degree sequence.")
@click.option("--other-edges", default=None, help="Second edge list file.")
@output_options
def iso(degseq, edges, other_degseq, other_edges, as_json, verbose):
    """Decide whether two unigraphs are isomorphic."""
    execute(
        as_json, verbose, command="iso", degseq=degseq, edges=edges,
        other_degseq=other_degseq, other_edges=other_edges,
    )
