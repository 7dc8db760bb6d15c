import re
from typing import List, Tuple, Union

from core.degseq import DegreeSequence, PairedDegreeSequence
from core.errors import InvalidInput, ParseError
from graphs.graph_model import Graph

ParsedSequence = Union[DegreeSequence, PairedDegreeSequence]

TERM = re.compile(r"\s*([0-9]+)(?:\s*\^\s*([0-9]+))?\s*$")
NUMBER = re.compile(r"[0-9]+")
EMPTY_MARKERS = {"-", "−", "∅"}


def _parse_part(text: str, offset: int, allow_empty: bool) -> Tuple[Tuple[int, int], ...]:
    """Parses `d^r,d,...` where offset is the 0-based column of text within the input."""
    stripped = text.strip()
    if stripped in EMPTY_MARKERS:
        if not allow_empty:
            raise ParseError("empty part is only allowed in a paired sequence", position=offset + 1)
        return ()
    if not stripped:
        raise ParseError("missing degree terms", position=offset + 1)

    entries: List[Tuple[int, int]] = []
    column = offset
    for term in text.split(","):
        match = TERM.match(term)
        if not match:
            raise ParseError(f"bad term {term.strip()!r}", position=column + 1)
        degree = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if mult < 1:
            raise ParseError(f"multiplicity must be >= 1 in {term.strip()!r}", position=column + 1)
        if entries and degree >= entries[-1][0]:
            raise ParseError(
                f"degrees must be strictly decreasing, {entries[-1][0]} then {degree}",
                position=column + 1,
            )
        entries.append((degree, mult))
        column += len(term) + 1
    return tuple(entries)


def parse_degree_sequence_text(text: str) -> ParsedSequence:
    """
    Parses the abbreviated text form.

    `16^3,12^4,9^5` is an unpaired sequence, `4^3;2,1^4` a paired one with
    the clique part first, and `-` marks an empty part: `-;0`.

    Raises:
        ParseError: with the 1-based column of the offending term.
    """
    body = text.strip()
    lead = len(text) - len(text.lstrip())
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
        lead += 1
    if body.count(";") > 1:
        raise ParseError("at most one ';' separates the two parts", position=lead + body.rindex(";") + 1)

    try:
        if ";" in body:
            left, right = body.split(";")
            k_part = _parse_part(left, lead, allow_empty=True)
            s_part = _parse_part(right, lead + len(left) + 1, allow_empty=True)
            if not k_part and not s_part:
                raise ParseError("both parts are empty", position=lead + 1)
            return PairedDegreeSequence(k_part, s_part)
        return DegreeSequence(_parse_part(body, lead, allow_empty=False))
    except ParseError:
        raise
    except InvalidInput as e:
        raise ParseError(str(e), position=lead + 1) from e


def parse_edge_list(text: str) -> Graph:
    """
    Parses an edge list: the first data line holds n, every further line
    `u v` with 0 <= u, v < n. `#` starts a comment.

    Raises:
        ParseError: with the 1-based line number.
    """
    n = None
    edges: List[Tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not NUMBER.fullmatch(fields[0]):
                raise ParseError(f"expected vertex count, got {line!r}", line=lineno)
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(NUMBER.fullmatch(f) for f in fields):
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range 0..{n - 1}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line=lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing vertex count", line=1)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
