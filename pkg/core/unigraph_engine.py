import logging
import sys
from pathlib import Path
from typing import Optional, Tuple, Union

from core.decomposition import DecompositionResult, decompose, decompose_compact
from core.degseq import DegreeSequence, PairedDegreeSequence
from core.errors import InvalidInput, NotUnigraph
from core.unigraph import UnigraphReport, find_dist_unigraph, threshold_dist, unigraphs_isomorphic
from graphs.graph_model import Graph, degree_sequence_of
from processing.text_parser import parse_degree_sequence_text, parse_edge_list

logger = logging.getLogger(__name__)


class UnigraphEngine:
    """
    Core engine behind the command line (no output formatting).
    Resolves inputs to degree sequences and runs the analysis pipelines.
    """

    def read_edges(self, source: str) -> Graph:
        """Reads an edge list from a file path, or from stdin when source is '-'."""
        try:
            if source == "-":
                text = sys.stdin.read()
            else:
                path = Path(source)
                if not path.is_file():
                    raise InvalidInput(f"edge list file not found: {source}")
                text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise InvalidInput(f"edge list {source} is not valid UTF-8: {e.reason} at byte {e.start}") from e
        except OSError as e:
            raise InvalidInput(f"cannot read edge list {source}: {e}") from e
        return parse_edge_list(text)

    def resolve_sequence(self, degseq: Optional[str] = None, edges: Optional[str] = None) -> DegreeSequence:
        """
        Turns either inline sequence text or an edge list into a degree sequence.

        A paired input is flattened: the partition does not change the graph.
        """
        if (degseq is None) == (edges is None):
            raise InvalidInput("give exactly one of a degree sequence or an edge list")
        if edges is not None:
            return degree_sequence_of(self.read_edges(edges))
        parsed: Union[DegreeSequence, PairedDegreeSequence] = parse_degree_sequence_text(degseq)
        if isinstance(parsed, PairedDegreeSequence):
            logger.info("flattening paired input %s", parsed)
            return parsed.flatten()
        return parsed

    def decompose(self, seq: DegreeSequence) -> Tuple[DecompositionResult, DecompositionResult]:
        """Canonical and compact decompositions."""
        canonical = decompose(seq)
        compact = decompose_compact(canonical)
        logger.info("decomposed n=%d: %d canonical, %d compact components",
                    seq.n, len(canonical.components), len(compact.components))
        return canonical, compact

    def classify(self, seq: DegreeSequence) -> UnigraphReport:
        report = find_dist_unigraph(seq)
        logger.info("✓ classified %d components, D=%d", len(report.components), report.dist_number)
        return report

    def try_classify(self, seq: DegreeSequence) -> Optional[UnigraphReport]:
        try:
            return self.classify(seq)
        except NotUnigraph as e:
            logger.info("⚠ %s", e)
            return None

    def threshold(self, seq: DegreeSequence) -> int:
        return threshold_dist(seq)

    def isomorphic(self, a: DegreeSequence, b: DegreeSequence) -> bool:
        return unigraphs_isomorphic(a, b)
