"""
Canonical decomposition of a degree sequence into indecomposable
components, and its compact form.

Components are listed leftmost first: the graph equals
G_k o ... o G_1 o G_0, where every G_i with i >= 1 is a split graph with
a fixed partition and G_0 is the unpaired tail.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from core.degseq import (
    DegreeSequence,
    PairedDegreeSequence,
    abbreviate,
    expand,
    run_entries,
)
from core.errors import InternalError, InvalidInput

logger = logging.getLogger(__name__)


class GoodPair(NamedTuple):
    p: int
    q: int


class PeelStep(NamedTuple):
    pair: GoodPair
    alpha: int
    beta: int


@dataclass(frozen=True)
class SplitComponent:
    pseq: PairedDegreeSequence

    @property
    def vertex_count(self) -> int:
        return self.pseq.n

    def block_type(self) -> Optional[str]:
        """'K' for a complete block ((m-1)^m;-), 'S' for an isolated block (-;0^m)."""
        k_part, s_part = self.pseq.k_part, self.pseq.s_part
        if not s_part and len(k_part) == 1 and k_part[0][0] == k_part[0][1] - 1:
            return "K"
        if not k_part and len(s_part) == 1 and s_part[0][0] == 0:
            return "S"
        return None

    def __str__(self) -> str:
        return str(self.pseq)


@dataclass(frozen=True)
class TailComponent:
    seq: DegreeSequence

    @property
    def vertex_count(self) -> int:
        return self.seq.n

    def block_type(self) -> Optional[str]:
        return None

    def __str__(self) -> str:
        return str(self.seq)


Component = Union[SplitComponent, TailComponent]


@dataclass(frozen=True)
class DecompositionResult:
    components: Tuple[Component, ...]
    compact: bool = False
    steps: Tuple[PeelStep, ...] = ()

    @cached_property
    def vertex_count(self) -> int:
        return sum(c.vertex_count for c in self.components)


ISOLATED_PAIR = GoodPair(0, 1)
DOMINATING_PAIR = GoodPair(1, 0)

TRIVIAL_K = SplitComponent(PairedDegreeSequence(((0, 1),), ()))
TRIVIAL_S = SplitComponent(PairedDegreeSequence((), ((0, 1),)))
SINGLE_VERTEX = TailComponent(DegreeSequence(((0, 1),)))


@lru_cache(maxsize=4096)
def complete_block(size: int) -> SplitComponent:
    return SplitComponent(PairedDegreeSequence(((size - 1, size),), ()))


@lru_cache(maxsize=4096)
def isolated_block(size: int) -> SplitComponent:
    return SplitComponent(PairedDegreeSequence((), ((0, size),)))


def find_good_pair(degrees: Sequence[int], i: int, j: int, beta: int = 0) -> Optional[GoodPair]:
    """
    Finds the lexicographically minimal good pair of the window degrees[i:j].

    Window degrees are read as degrees[t] - beta. A pair (p, q) is good when
    0 < p + q < m and the first p vertices with the last q vertices form a
    split graph whose clique part is joined to the remaining m - p - q
    vertices.

    Returns:
        The pair, or None when the window is indecomposable.
    """
    m = j - i
    if m < 2:
        return None
    if degrees[j - 1] - beta == 0:
        return ISOLATED_PAIR
    if degrees[i] - beta == m - 1:
        return DOMINATING_PAIR
    p, q = 1, 0
    frontsum = degrees[i] - beta
    backsum = 0
    while p + q < m and frontsum != p * (m - q - 1) + backsum:
        p += 1
        frontsum += degrees[i + p - 1] - beta
        while p + q < m and degrees[j - q - 1] - beta < p:
            q += 1
            backsum += degrees[j - q] - beta
    if p + q < m and frontsum == p * (m - q - 1) + backsum:
        return GoodPair(p, q)
    return None


def _window_entries(degrees: Sequence[int], start: int, stop: int, shift: int):
    return run_entries(d - shift for d in degrees[start:stop])


def decompose(seq: DegreeSequence, record_steps: bool = True) -> DecompositionResult:
    """
    Peels good pairs off the sequence until the tail is indecomposable.

    Args:
        seq: degree sequence of any graph
        record_steps: keep (pair, alpha, beta) for every peel

    Returns:
        Canonical decomposition, leftmost component first
    """
    degrees = expand(seq)
    n = len(degrees)
    i, j, beta = 0, n, 0
    components: List[Component] = []
    steps: List[PeelStep] = []
    while True:
        if j - i == 1:
            components.append(SINGLE_VERTEX)
            break
        # Trivial peels are checked inline; threshold inputs take one per vertex.
        if degrees[j - 1] == beta:
            pair = ISOLATED_PAIR
        elif degrees[i] - beta == j - i - 1:
            pair = DOMINATING_PAIR
        else:
            pair = find_good_pair(degrees, i, j, beta)
        if pair is None:
            components.append(TailComponent(DegreeSequence(_window_entries(degrees, i, j, beta))))
            break
        p, q = pair
        alpha = j - i - p - q
        if pair is ISOLATED_PAIR:
            components.append(TRIVIAL_S)
        elif pair is DOMINATING_PAIR:
            components.append(TRIVIAL_K)
        else:
            components.append(SplitComponent(PairedDegreeSequence(
                _window_entries(degrees, i, i + p, beta + alpha),
                _window_entries(degrees, j - q, j, beta),
            )))
        if record_steps:
            steps.append(PeelStep(pair, alpha, beta))
        i += p
        j -= q
        beta += p
    logger.debug("decomposed n=%d into %d components", n, len(components))
    return DecompositionResult(tuple(components), compact=False, steps=tuple(steps))


def decompose_compact(canonical: DecompositionResult) -> DecompositionResult:
    """
    Merges adjacent complete blocks and adjacent isolated blocks.

    A trailing single-vertex tail joins the trivial component to its left,
    becoming K_2 or two isolated vertices.
    """
    if canonical.compact:
        return canonical
    components = list(canonical.components)
    tail = components[-1]
    rest = components[:-1]

    # Run-length merge from the right.
    merged: List[Component] = []
    run_type: Optional[str] = None
    run_size = 0
    total = 0

    if rest and tail == SINGLE_VERTEX and rest[-1] in (TRIVIAL_K, TRIVIAL_S):
        run_type = "K" if rest[-1] == TRIVIAL_K else "S"
        run_size = total = 2
        rest = rest[:-1]
    else:
        merged.append(tail)
        total = tail.vertex_count

    def flush():
        if run_type == "K":
            merged.append(complete_block(run_size))
        elif run_type == "S":
            merged.append(isolated_block(run_size))

    for comp in reversed(rest):
        if comp is TRIVIAL_K:
            kind, size = "K", 1
        elif comp is TRIVIAL_S:
            kind, size = "S", 1
        else:
            kind, size = comp.block_type(), comp.vertex_count
        total += size
        if kind is not None and kind == run_type:
            run_size += size
            continue
        flush()
        run_type, run_size = None, 0
        if kind is None:
            merged.append(comp)
        else:
            run_type, run_size = kind, size
    flush()

    merged.reverse()
    if sum(c.vertex_count for c in merged) != total:
        raise InternalError("compact decomposition lost vertices")
    return DecompositionResult(tuple(merged), compact=True, steps=canonical.steps)


def is_compact_maximal(result: DecompositionResult) -> bool:
    """True when no two neighboring components could still be merged."""
    components = result.components
    for left, right in zip(components, components[1:]):
        left_type = left.block_type()
        if left_type is None:
            continue
        if right.block_type() == left_type:
            return False
        if right is components[-1] and right == SINGLE_VERTEX:
            return False
    return True


def recompose_sequence(result: DecompositionResult) -> DegreeSequence:
    """
    Rebuilds the degree sequence of the composed graph.

    A clique vertex of component i gains every vertex to its right; any
    vertex gains every clique vertex of the components to its left.
    """
    if not result.components:
        raise InvalidInput("empty decomposition")
    total = result.vertex_count
    degrees: List[int] = []
    seen = 0
    left_clique = 0
    for comp in result.components:
        if isinstance(comp, SplitComponent):
            right = total - seen - comp.vertex_count
            degrees.extend(d + right + left_clique for d in comp.pseq.k_degrees())
            degrees.extend(d + left_clique for d in comp.pseq.s_degrees())
            left_clique += comp.pseq.a
        else:
            degrees.extend(d + left_clique for d in expand(comp.seq))
        seen += comp.vertex_count
    return abbreviate(degrees)
