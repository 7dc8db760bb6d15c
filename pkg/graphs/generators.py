"""
Explicit realizations of the unigraph families and seeded random
generators for unigraphs and threshold graphs.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from core.decomposition import Component, SplitComponent, TailComponent
from core.degseq import DegreeSequence, RelativeTag, abbreviate
from core.errors import InvalidInput
from core.unigraph import (
    C5,
    MK2,
    S,
    S2,
    S3,
    S4,
    U2,
    U3,
    KComplete,
    SIsolated,
    TrivialK,
    TrivialS,
    UnigraphKind,
    family_kinds,
)
from graphs.graph_model import (
    Graph,
    SplitGraphWithPartition,
    complement,
    complement_split,
    compose,
    degree_sequence_of,
    split_inverse,
)

logger = logging.getLogger(__name__)

Realization = Union[Graph, SplitGraphWithPartition]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _star_clique(star_sizes: Sequence[int]) -> Tuple[List[Tuple[int, int]], List[int], List[int]]:
    """Stars K_{1,p} with one center per entry; centers pairwise adjacent."""
    centers = list(range(len(star_sizes)))
    edges = [(u, v) for u in centers for v in centers if u < v]
    leaves: List[int] = []
    nxt = len(centers)
    for center, size in zip(centers, star_sizes):
        for _ in range(size):
            edges.append((center, nxt))
            leaves.append(nxt)
            nxt += 1
    return edges, centers, leaves


def _split(n: int, edges, a_set, b_set) -> SplitGraphWithPartition:
    return SplitGraphWithPartition(Graph.from_edges(n, edges), frozenset(a_set), frozenset(b_set))


def _s3_graph(p: int, q1: int, q2: int):
    edges, centers, leaves = _star_clique([p] * q1 + [p + 1] * q2)
    e = len(centers) + len(leaves)
    edges.extend((c, e) for c in centers[:q1])
    return edges, centers, leaves + [e], e


def make_family(kind: UnigraphKind) -> Realization:
    """
    Builds one graph of the family; split families carry their partition.

    Raises:
        InvalidInput: when the parameters are outside the family's range.
    """
    if not kind.is_valid():
        raise InvalidInput(f"invalid parameters for {kind}")
    if isinstance(kind, C5):
        return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    if isinstance(kind, MK2):
        return Graph.from_edges(2 * kind.m, [(2 * i, 2 * i + 1) for i in range(kind.m)])
    if isinstance(kind, U2):
        edges = [(2 * i, 2 * i + 1) for i in range(kind.m)]
        center = 2 * kind.m
        edges.extend((center, center + 1 + j) for j in range(kind.l))
        return Graph.from_edges(center + 1 + kind.l, edges)
    if isinstance(kind, U3):
        # vertex 0 is the center, then m pairs, then the path x-y-z
        edges = []
        for i in range(kind.m):
            a, b = 1 + 2 * i, 2 + 2 * i
            edges.extend([(a, b), (0, a), (0, b)])
        x = 1 + 2 * kind.m
        edges.extend([(x, x + 1), (x + 1, x + 2), (0, x), (0, x + 2)])
        return Graph.from_edges(x + 3, edges)
    if isinstance(kind, (TrivialK, KComplete)):
        size = 1 if isinstance(kind, TrivialK) else kind.size
        return SplitGraphWithPartition(Graph.complete(size), frozenset(range(size)), frozenset())
    if isinstance(kind, (TrivialS, SIsolated)):
        size = 1 if isinstance(kind, TrivialS) else kind.size
        return SplitGraphWithPartition(Graph.empty(size), frozenset(), frozenset(range(size)))
    if isinstance(kind, S):
        edges, centers, leaves = _star_clique([kind.p] * kind.q)
        return _split(len(centers) + len(leaves), edges, centers, leaves)
    if isinstance(kind, S2):
        sizes = [p for p, q in kind.pairs for _ in range(q)]
        edges, centers, leaves = _star_clique(sizes)
        return _split(len(centers) + len(leaves), edges, centers, leaves)
    if isinstance(kind, S3):
        edges, centers, stable, _ = _s3_graph(kind.p, kind.q1, kind.q2)
        return _split(len(centers) + len(stable), edges, centers, stable)
    if isinstance(kind, S4):
        edges, centers, stable, e = _s3_graph(kind.p, 2, kind.q)
        f = e + 1
        edges.extend((v, f) for v in range(e))
        return _split(f + 1, edges, centers + [f], stable)
    raise InvalidInput(f"unknown family {kind!r}")


def realize_component(kind: UnigraphKind, relative: RelativeTag) -> Realization:
    """The family graph transformed by a relative; each relative is its own inverse."""
    base = make_family(kind)
    if relative == RelativeTag.IDENTITY:
        return base
    if isinstance(base, Graph):
        if relative == RelativeTag.COMPLEMENT:
            return complement(base)
        raise InvalidInput(f"{relative.value} is only defined for split families, not {kind}")
    if relative == RelativeTag.COMPLEMENT:
        return complement_split(base)
    if relative == RelativeTag.INVERSE:
        return split_inverse(base)
    return complement_split(split_inverse(base))


@dataclass(frozen=True)
class UnigraphSample:
    graph: Graph
    components: Tuple[Component, ...]
    kinds: Tuple[Tuple[UnigraphKind, RelativeTag], ...]


@dataclass(frozen=True)
class ThresholdSample:
    graph: Graph
    creation: str


def _choose(rng: np.random.Generator, options: Sequence):
    return options[int(rng.integers(len(options)))]


def _as_graph(realization: Realization) -> Graph:
    return realization.graph if isinstance(realization, SplitGraphWithPartition) else realization


def random_unigraph_sample(seed: int, component_budget: int, size_budget: int) -> UnigraphSample:
    """
    Composes random indecomposable unigraphs G_k o ... o G_1 o G_0.

    Args:
        seed: PCG64 seed
        component_budget: maximum number of components
        size_budget: maximum total vertex count

    Returns:
        The graph with its canonical components, leftmost first
    """
    if component_budget < 1 or size_budget < 1:
        raise InvalidInput("component and size budgets must be >= 1")
    rng = make_rng(seed)
    count = int(rng.integers(1, min(component_budget, size_budget) + 1))

    tail_room = size_budget - (count - 1)
    tail_options: List[Tuple[UnigraphKind, RelativeTag]] = [(TrivialK(), RelativeTag.IDENTITY)]
    for kind in family_kinds(tail_room):
        tags = [RelativeTag.IDENTITY, RelativeTag.COMPLEMENT]
        if kind.split:
            tags = list(RelativeTag)
        tail_options.extend((kind, tag) for tag in tags)
    tail_kind, tail_tag = _choose(rng, tail_options)
    current = _as_graph(realize_component(tail_kind, tail_tag))
    used = current.n
    chosen = [(tail_kind, tail_tag)]
    components: List[Component] = [TailComponent(degree_sequence_of(current))]

    for placed in range(1, count):
        room = size_budget - used - (count - 1 - placed)
        options: List[Tuple[UnigraphKind, RelativeTag]] = [
            (TrivialK(), RelativeTag.IDENTITY),
            (TrivialS(), RelativeTag.IDENTITY),
        ]
        for kind in family_kinds(room, split_only=True):
            options.extend((kind, tag) for tag in RelativeTag)
        kind, tag = _choose(rng, options)
        sg = realize_component(kind, tag)
        current = compose(sg, current)
        used = current.n
        chosen.append((kind, tag))
        components.append(SplitComponent(sg.paired_sequence()))

    components.reverse()
    chosen.reverse()
    logger.debug("random unigraph seed=%d: %s", seed, [str(k) for k, _ in chosen])
    return UnigraphSample(current, tuple(components), tuple(chosen))


def random_unigraph(seed: int, component_budget: int, size_budget: int) -> Graph:
    return random_unigraph_sample(seed, component_budget, size_budget).graph


def random_creation_string(seed: int, n: int) -> str:
    """First letter is the starting vertex; then 'd' adds a dominating, 'i' an isolated vertex."""
    if n < 1:
        raise InvalidInput(f"threshold graph needs n >= 1, got {n}")
    rng = make_rng(seed)
    choices = rng.integers(0, 2, size=n - 1)
    return "i" + "".join("d" if c else "i" for c in choices)


def threshold_sequence_from_creation(creation: str) -> DegreeSequence:
    """
    Degree sequence of the threshold graph built by a creation string,
    without materializing its edges.
    """
    n = len(creation)
    later_dominating = 0
    degrees = [0] * n
    for v in range(n - 1, -1, -1):
        own = v if creation[v] == "d" and v > 0 else 0
        degrees[v] = later_dominating + own
        if creation[v] == "d" and v > 0:
            later_dominating += 1
    return abbreviate(degrees)


def random_threshold_sequence(seed: int, n: int) -> DegreeSequence:
    return threshold_sequence_from_creation(random_creation_string(seed, n))


def random_threshold_sample(seed: int, n: int) -> ThresholdSample:
    creation = random_creation_string(seed, n)
    rows: List[set] = [set() for _ in range(n)]
    for v in range(1, n):
        if creation[v] == "d":
            for u in range(v):
                rows[u].add(v)
                rows[v].add(u)
    graph = Graph(n, tuple(frozenset(row) for row in rows))
    return ThresholdSample(graph, creation)


def random_threshold(seed: int, n: int) -> Graph:
    return random_threshold_sample(seed, n).graph
