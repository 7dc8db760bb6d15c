import click

from app.commands.common import execute, output_options

edges_option = click.option("--edges", required=True, help="Edge list file, or '-' for stdin.")
cap_option = click.option("--cap", type=int, default=None, help="Vertex cap (default from settings).")


@click.group()
def oracle():
    """Brute-force reference computations on small graphs."""


@oracle.command()
@edges_option
@cap_option
@output_options
def aut(edges, cap, as_json, verbose):
    """List every automorphism."""
    execute(as_json, verbose, command="oracle", action="aut", edges=edges, cap=cap)


@oracle.command(name="dist")
@edges_option
@cap_option
@output_options
def oracle_dist(edges, cap, as_json, verbose):
    """Distinguishing number with a witness labeling."""
    execute(as_json, verbose, command="oracle", action="dist", edges=edges, cap=cap)


@oracle.command()
@edges_option
@click.option("--colors", type=int, required=True, help="Number of available colors.")
@cap_option
@output_options
def count(edges, colors, cap, as_json, verbose):
    """Count inequivalent distinguishing colorings."""
    execute(as_json, verbose, command="oracle", action="count", edges=edges, colors=colors, cap=cap)


@oracle.command()
@edges_option
@cap_option
@output_options
def split(edges, cap, as_json, verbose):
    """Exhaustive split-graph test with a witness partition."""
    execute(as_json, verbose, command="oracle", action="split", edges=edges, cap=cap)


@oracle.command(name="iso")
@edges_option
@click.option("--other-edges", required=True, help="Second edge list file.")
@cap_option
@output_options
def oracle_iso(edges, other_edges, cap, as_json, verbose):
    """Exhaustive isomorphism test."""
    execute(as_json, verbose, command="oracle", action="iso", edges=edges, other_edges=other_edges, cap=cap)
